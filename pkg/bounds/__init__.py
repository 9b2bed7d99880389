"""
Case elimination for coradical shapes: candidate shapes, exclusion rules and reports.
"""

from .shapes import CoradicalShape, enumerate_shapes, semisimple_branch
from .rules import (
    RULES,
    RULES_BY_ID,
    Rule,
    RuleContext,
    Verdict,
    evaluate_rules,
    no_skew_primitive_certificate,
    p1_lower_bound,
    rule_cor43,
    rule_cor53,
    rule_cor55,
    rule_divisibility,
    rule_prop63,
    rule_simple4_generation,
)
from .reports import (
    ExclusionReport,
    dim14_conclusion,
    dim14_report,
    dim16_report,
    evaluate_shape,
    exclusion_report,
    reports_frame,
    semisimple_shapes,
    verdicts_frame,
)
from .pq import PqOutcome, PqStep, PqVerdict, pq_checker, pq_sweep, semisimple_dimensions

__all__ = [
    'CoradicalShape',
    'enumerate_shapes',
    'semisimple_branch',
    'RULES',
    'RULES_BY_ID',
    'Rule',
    'RuleContext',
    'Verdict',
    'evaluate_rules',
    'no_skew_primitive_certificate',
    'p1_lower_bound',
    'rule_cor43',
    'rule_cor53',
    'rule_cor55',
    'rule_divisibility',
    'rule_prop63',
    'rule_simple4_generation',
    'ExclusionReport',
    'dim14_conclusion',
    'dim14_report',
    'dim16_report',
    'evaluate_shape',
    'exclusion_report',
    'reports_frame',
    'semisimple_shapes',
    'verdicts_frame',
    'PqOutcome',
    'PqStep',
    'PqVerdict',
    'pq_checker',
    'pq_sweep',
    'semisimple_dimensions',
]
