"""
Exclusion reports: every rule applied to every candidate shape of a dimension.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional

import pandas as pd

from bounds.rules import Rule, RuleContext, Verdict, evaluate_rules
from bounds.shapes import CoradicalShape, enumerate_shapes, semisimple_branch
from utils.exceptions import InternalInvariantError
from utils.logger import get_algebra_logger

logger = logging.getLogger(__name__)


@dataclass
class ExclusionReport:
    shape: CoradicalShape
    verdicts: List[Verdict] = dataclass_field(default_factory=list)

    @property
    def reasons(self) -> List[str]:
        return [v.rule_id for v in self.verdicts if v.fires]

    @property
    def excluded(self) -> bool:
        return bool(self.reasons)

    @property
    def open(self) -> bool:
        return not self.excluded

    def to_dict(self) -> Dict[str, Any]:
        return {
            "shape": self.shape.to_dict(),
            "verdicts": [v.to_dict() for v in self.verdicts],
            "excluded": self.excluded,
            "open": self.open,
            "reasons": self.reasons,
        }


def evaluate_shape(shape: CoradicalShape, context: RuleContext = RuleContext(),
                   rules: Optional[List[Rule]] = None) -> ExclusionReport:
    report = ExclusionReport(shape, evaluate_rules(shape, context, rules))
    algebra_logger = get_algebra_logger()
    for verdict in report.verdicts:
        if verdict.applicable:
            algebra_logger.log_rule(verdict.rule_id, verdict.fires, {"shape": shape.to_dict(), **verdict.values})
    return report


def exclusion_report(dim: int, context: RuleContext = RuleContext(),
                     include_pointed: bool = False) -> List[ExclusionReport]:
    reports = [evaluate_shape(shape, context) for shape in enumerate_shapes(dim, include_pointed)]
    logger.info(
        f"dimension {dim}: {sum(r.excluded for r in reports)} of {len(reports)} shapes excluded"
    )
    return reports


def dim14_report(context: RuleContext = RuleContext()) -> List[ExclusionReport]:
    """Every non-cosemisimple coradical of a 14-dimensional Hopf algebra is excluded."""
    reports = exclusion_report(14, context)
    survivors = [r.shape.to_dict() for r in reports if r.open]
    if len(reports) != 8 or survivors:
        raise InternalInvariantError(
            "dimension 14 analysis left shapes open",
            {"shapes": len(reports), "survivors": survivors}
        )
    return reports


def dim14_conclusion() -> str:
    dim14_report()
    return "a 14-dimensional Hopf algebra is a group algebra or the dual of a group algebra"


def dim16_report(context: RuleContext = RuleContext()) -> List[ExclusionReport]:
    """Dimension 16: the shapes the rules decide, the rest reported open."""
    reports = exclusion_report(16, context)
    if all(r.excluded for r in reports):
        raise InternalInvariantError("dimension 16 analysis claims every shape excluded")
    return reports


def semisimple_shapes(dim: int) -> List[Dict[str, Any]]:
    return [{**shape.to_dict(), "branch": "semisimple"} for shape in semisimple_branch(dim)]


def reports_frame(reports: List[ExclusionReport]) -> pd.DataFrame:
    """One row per shape: the coradical, its verdict and the rules that fired."""
    rows = []
    for report in reports:
        rows.append({
            "g": report.shape.g,
            "parts": ",".join(str(n) for n in report.shape.parts) or "-",
            "coradical": report.shape.label(),
            "status": "excluded" if report.excluded else "OPEN",
            "rules": ", ".join(report.reasons),
        })
    return pd.DataFrame(rows, columns=["g", "parts", "coradical", "status", "rules"])


def verdicts_frame(report: ExclusionReport) -> pd.DataFrame:
    rows = [
        {"rule": v.rule_id, "applicable": v.applicable, "fires": v.fires,
         "values": ", ".join(f"{k}={val}" for k, val in v.values.items() if k != "chain")}
        for v in report.verdicts
    ]
    return pd.DataFrame(rows, columns=["rule", "applicable", "fires", "values"])
