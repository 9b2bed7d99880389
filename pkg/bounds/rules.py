"""
Exclusion rules for coradical shapes.

A rule is data: an id, hypotheses on the shape and an inequality producing
(fires, values). The engine in reports.py never special-cases a rule.
"""

import math
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import sympy

from bounds.shapes import CoradicalShape
from utils.exceptions import ValidationError


@dataclass(frozen=True)
class RuleContext:
    """Caller-level switches; assert_no_skew_primitive asserts H has no nontrivial skew-primitive."""

    assert_no_skew_primitive: bool = False


@dataclass
class Verdict:
    rule_id: str
    applicable: bool
    fires: bool = False
    values: Dict[str, Any] = dataclass_field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"rule": self.rule_id, "applicable": self.applicable, "fires": self.fires, "values": self.values}


Hypothesis = Callable[[CoradicalShape, RuleContext], bool]
Inequality = Callable[[CoradicalShape, RuleContext], Tuple[bool, Dict[str, Any]]]


@dataclass(frozen=True)
class Rule:
    rule_id: str
    summary: str
    hypotheses: Tuple[Hypothesis, ...]
    inequality: Inequality

    def evaluate(self, shape: CoradicalShape, context: RuleContext = RuleContext()) -> Verdict:
        if not all(hypothesis(shape, context) for hypothesis in self.hypotheses):
            return Verdict(self.rule_id, applicable=False)
        fires, values = self.inequality(shape, context)
        return Verdict(self.rule_id, True, fires, values)


# -- arithmetic helpers ---------------------------------------------------------------

def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in sympy.factorint(n).values())


def prime_pair(n: int) -> Optional[Tuple[int, int]]:
    """(p, q) with p < q primes and n = pq, else None."""
    factors = sympy.factorint(n)
    if sorted(factors.values()) != [1, 1]:
        return None
    p, q = sorted(factors)
    return p, q


def no_skew_primitive_certificate(shape: CoradicalShape, context: RuleContext) -> Optional[str]:
    """How the absence of nontrivial skew-primitives is known, or None.

    With G trivial a skew-primitive is (1,1)-primitive, which does not exist in
    finite dimension over characteristic zero; squarefree dimensions have none
    either when H is not semisimple.
    """
    if shape.g == 1:
        return "trivial_group"
    if is_squarefree(shape.dim):
        return "squarefree"
    if context.assert_no_skew_primitive:
        return "asserted"
    return None


def round_up(value: int, modulus: int) -> int:
    return -(-value // modulus) * modulus


def p1_lower_bound(shape: CoradicalShape) -> Tuple[int, int, int]:
    """(raw, modulus, rounded) lower bound on dim P_1 without skew-primitives.

    raw = min(n_1², 2 n_1 |G|); |G| divides dim P_1, and so does n when every
    matrix block has the same size n.
    """
    n1 = shape.smallest_part
    raw = min(n1 * n1, 2 * n1 * shape.g)
    modulus = shape.g
    if len(set(shape.parts)) == 1:
        modulus = math.lcm(shape.g, n1)
    return raw, modulus, round_up(raw, modulus)


# -- hypotheses -----------------------------------------------------------------------

def has_blocks(shape: CoradicalShape, context: RuleContext) -> bool:
    return shape.t >= 1


def not_cosemisimple(shape: CoradicalShape, context: RuleContext) -> bool:
    return not shape.cosemisimple


def no_skew_primitive(shape: CoradicalShape, context: RuleContext) -> bool:
    return no_skew_primitive_certificate(shape, context) is not None


def dim_is_prime_pair(shape: CoradicalShape, context: RuleContext) -> bool:
    return prime_pair(shape.dim) is not None


def only_block_sizes(size: int, count: Optional[int] = None, g: Optional[int] = None) -> Hypothesis:
    def hypothesis(shape: CoradicalShape, context: RuleContext) -> bool:
        if not shape.parts or any(n != size for n in shape.parts):
            return False
        if count is not None and shape.t != count:
            return False
        return g is None or shape.g == g
    return hypothesis


def group_is_smaller_prime(shape: CoradicalShape, context: RuleContext) -> bool:
    pair = prime_pair(shape.dim)
    return pair is not None and shape.g == pair[0]


# -- inequalities ---------------------------------------------------------------------

def _divisibility(shape: CoradicalShape, context: RuleContext) -> Tuple[bool, Dict[str, Any]]:
    blocks = shape.block_dims()
    failing = [d for d, dim in blocks.items() if dim % shape.g]
    return bool(failing), {"g": shape.g, "block_dims": {str(d): v for d, v in blocks.items()}, "failing": failing}


def _cor43(shape: CoradicalShape, context: RuleContext) -> Tuple[bool, Dict[str, Any]]:
    raw, modulus, rounded = p1_lower_bound(shape)
    bound = shape.coradical_dim + rounded
    return shape.dim <= bound, {
        "coradical_dim": shape.coradical_dim, "p1_raw": raw, "p1_modulus": modulus, "p1_bound": rounded,
        "bound": bound, "certificate": no_skew_primitive_certificate(shape, context),
    }


def _cor53(shape: CoradicalShape, context: RuleContext) -> Tuple[bool, Dict[str, Any]]:
    n1 = shape.smallest_part
    bound = (1 + 2 * n1) * shape.g + sum(n * n for n in shape.parts)
    return shape.dim <= bound, {
        "n1": n1, "bound": bound, "certificate": no_skew_primitive_certificate(shape, context),
    }


def _cor55_shape(shape: CoradicalShape, context: RuleContext) -> Tuple[bool, Dict[str, Any]]:
    p, q = prime_pair(shape.dim)
    return rule_cor55(p, q, shape.t).fires, cor55_values(p, q, shape.t)


def _simple4_generation(shape: CoradicalShape, context: RuleContext) -> Tuple[bool, Dict[str, Any]]:
    p, q = prime_pair(shape.dim)
    return True, {
        "p": p, "q": q,
        "chain": [
            "the 4-dimensional simple subcoalgebra is S-stable",
            "it generates a Hopf subalgebra, of dimension 1, p, q or pq",
            "a non-semisimple Hopf algebra of squarefree dimension is not generated by it",
        ],
    }


def _prop63(shape: CoradicalShape, context: RuleContext) -> Tuple[bool, Dict[str, Any]]:
    p, q = prime_pair(shape.dim)
    return True, {
        "p": p, "q": q,
        "group_order": 1,
        "dual_group_order": 1,
        "radford_bound": 4,
        "s2_identity": False,
        "s4_identity": True,
        "chain": [
            "|G(H)| = |G(H*)| = 1, so the antipode order divides 4",
            "H is not semisimple, so S² ≠ id and S⁴ = id",
            "the stable-coalgebra construction yields an S-stable 4-dimensional simple subcoalgebra",
            "which the generation rule excludes",
        ],
    }


def _dim16_generation(shape: CoradicalShape, context: RuleContext) -> Tuple[bool, Dict[str, Any]]:
    return True, {
        "chain": [
            "M^c(2) is S-stable and generates a Hopf subalgebra L",
            "L = H gives an extension by a dual group algebra and H* pointed",
            "L of dimension 8 is the unique non-pointed non-cosemisimple one, with the wrong coradical",
        ],
        "recomputed": False,
    }


def _pointed_squarefree(shape: CoradicalShape, context: RuleContext) -> Tuple[bool, Dict[str, Any]]:
    return True, {"dim": shape.dim, "g": shape.g}


def _dim_is(dim: int) -> Hypothesis:
    return lambda shape, context: shape.dim == dim


def _pointed_noncosemisimple(shape: CoradicalShape, context: RuleContext) -> bool:
    return shape.pointed and shape.g < shape.dim


def _squarefree_dim(shape: CoradicalShape, context: RuleContext) -> bool:
    return is_squarefree(shape.dim)


def cor55_values(p: int, q: int, t: int) -> Dict[str, Any]:
    threshold = Fraction(q - 1 - 2 * p, p)
    return {"p": p, "q": q, "t": t, "threshold": str(threshold)}


def rule_cor55(p: int, q: int, t: int) -> Verdict:
    """k[C_p] ⊕ t matrix blocks in dimension pq needs t < (q − 1 − 2p)/p.

    The bound is derived for blocks M(p, k) but every shape it is applied to has
    2×2 blocks, so the shape rule uses 2×2 blocks.
    """
    if not (sympy.isprime(p) and sympy.isprime(q) and p < q):
        raise ValidationError("rule_cor55 needs primes p < q", {"p": p, "q": q})
    if t < 1:
        raise ValidationError("rule_cor55 needs t ≥ 1", {"t": t})
    return Verdict("cor55", True, t >= Fraction(q - 1 - 2 * p, p), cor55_values(p, q, t))


RULES: List[Rule] = [
    Rule("divisibility", "|G| divides dim H_{0,d} for every d", (), _divisibility),
    Rule(
        "cor43", "dim H > |G| + Σ n_i² + dim P_1 with dim P_1 ≥ min(n_1², 2n_1|G|)",
        (has_blocks, not_cosemisimple, no_skew_primitive), _cor43,
    ),
    Rule(
        "cor53", "dim H > (1 + 2n_1)|G| + Σ n_i²",
        (has_blocks, not_cosemisimple, no_skew_primitive), _cor53,
    ),
    Rule(
        "cor55", "k[C_p] ⊕ t M^c(2) in dimension pq needs t < (q − 1 − 2p)/p",
        (dim_is_prime_pair, group_is_smaller_prime, only_block_sizes(2), not_cosemisimple), _cor55_shape,
    ),
    Rule(
        "simple4_generation", "k[G] ⊕ M^c(2) is impossible in dimension pq",
        (dim_is_prime_pair, only_block_sizes(2, count=1), not_cosemisimple), _simple4_generation,
    ),
    Rule(
        "prop63", "k·1 ⊕ M^c(2) ⊕ M^c(2) is impossible in dimension pq",
        (dim_is_prime_pair, only_block_sizes(2, count=2, g=1), not_cosemisimple), _prop63,
    ),
    Rule(
        "dim16_generation", "k·1 ⊕ M^c(2) is impossible in dimension 16",
        (_dim_is(16), only_block_sizes(2, count=1, g=1)), _dim16_generation,
    ),
    Rule(
        "pointed_squarefree", "pointed non-cosemisimple is impossible in squarefree dimension",
        (_pointed_noncosemisimple, _squarefree_dim), _pointed_squarefree,
    ),
]

RULES_BY_ID: Dict[str, Rule] = {rule.rule_id: rule for rule in RULES}


def evaluate_rules(shape: CoradicalShape, context: RuleContext = RuleContext(),
                   rules: Optional[List[Rule]] = None) -> List[Verdict]:
    return [rule.evaluate(shape, context) for rule in (RULES if rules is None else rules)]


def rule_divisibility(shape: CoradicalShape, context: RuleContext = RuleContext()) -> Verdict:
    return RULES_BY_ID["divisibility"].evaluate(shape, context)


def rule_cor43(shape: CoradicalShape, context: RuleContext = RuleContext()) -> Verdict:
    return RULES_BY_ID["cor43"].evaluate(shape, context)


def rule_cor53(shape: CoradicalShape, context: RuleContext = RuleContext()) -> Verdict:
    return RULES_BY_ID["cor53"].evaluate(shape, context)


def rule_simple4_generation(shape: CoradicalShape, context: RuleContext = RuleContext()) -> Verdict:
    return RULES_BY_ID["simple4_generation"].evaluate(shape, context)


def rule_prop63(shape: CoradicalShape, context: RuleContext = RuleContext()) -> Verdict:
    return RULES_BY_ID["prop63"].evaluate(shape, context)
