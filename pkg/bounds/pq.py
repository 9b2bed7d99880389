"""
Semisimplicity of Hopf algebras of odd dimension pq.

When p < q ≤ 1 + 3p and q ≤ 13, every non-semisimple case leads to an
inequality that cannot hold; pq_checker replays each one with its numbers.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Any, Dict, List

import sympy

from utils.exceptions import InternalInvariantError, ValidationError
from utils.logger import get_algebra_logger

logger = logging.getLogger(__name__)

MAX_Q = 13


class PqOutcome(Enum):
    SEMISIMPLE = "semisimple"
    HYPOTHESES_FAIL = "hypotheses_fail"


@dataclass
class PqStep:
    """One branch of the argument: the inequality it needs and whether p, q can meet it."""

    case: str
    requirement: str
    values: Dict[str, Any]
    contradiction: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"case": self.case, "requirement": self.requirement, "values": self.values,
                "contradiction": self.contradiction}


@dataclass
class PqVerdict:
    p: int
    q: int
    outcome: PqOutcome
    hypotheses: Dict[str, bool]
    steps: List[PqStep] = dataclass_field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.p * self.q

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p, "q": self.q, "dim": self.dim, "outcome": self.outcome.value,
            "hypotheses": self.hypotheses, "steps": [s.to_dict() for s in self.steps],
        }


def _check_primes(p: int, q: int) -> None:
    for name, value in (("p", p), ("q", q)):
        if not sympy.isprime(value) or value == 2:
            raise ValidationError(f"{name} must be an odd prime", {name: value})
    if p >= q:
        raise ValidationError("need p < q", {"p": p, "q": q})


def _steps(p: int, q: int) -> List[PqStep]:
    steps = [
        PqStep(
            "structure", "G(H) ≅ C_p, antipode of order 4p, no nontrivial skew-primitive",
            {"group_order": p, "antipode_order": 4 * p, "dim_squarefree": True}, False,
        ),
    ]
    # every n_i ≥ p: pq > (1 + 2p)p + p²
    bound = (1 + 2 * p) * p + p * p
    steps.append(PqStep("blocks_at_least_p", "q > 3p + 1", {"dim": p * q, "bound": bound}, p * q <= bound))
    # p blocks M^c(2) permuted cyclically by S: dim P_1 ≥ 4p²
    bound = 5 * p + 4 * p * p
    steps.append(PqStep("case_i", "q > 5 + 4p", {"dim": p * q, "p1_bound": 4 * p * p, "bound": bound},
                        p * q <= bound))
    # p blocks M^c(2) and t ≥ 1 more with n_1 < p: dim H_0 ≥ 9p, dim P_1 ≥ 4p
    bound = 13 * p
    steps.append(PqStep("case_ii_small", "q > 13", {"dim": p * q, "h0_bound": 9 * p, "p1_bound": 4 * p,
                                                     "bound": bound}, p * q <= bound))
    # p blocks M^c(2) and more with n_1 ≥ p: dim H_0 ≥ 5p + p², dim P_1 ≥ 4p
    bound = 9 * p + p * p
    steps.append(PqStep("case_ii_large", "q > 9 + p",
                        {"dim": p * q, "h0_bound": 5 * p + p * p, "p1_bound": 4 * p, "bound": bound},
                        p * q <= bound))
    # p blocks M^c(n), 2 < n < p: dim H_0 ≥ 10p, dim P_1 ≥ 6p
    bound = 16 * p
    steps.append(PqStep("case_iii", "q > 16", {"dim": p * q, "h0_bound": 10 * p, "p1_bound": 6 * p,
                                                "bound": bound}, p * q <= bound))
    return steps


def pq_checker(p: int, q: int) -> PqVerdict:
    _check_primes(p, q)
    hypotheses = {"q_at_most_1_plus_3p": q <= 1 + 3 * p, "q_at_most_13": q <= MAX_Q}
    if not all(hypotheses.values()):
        return PqVerdict(p, q, PqOutcome.HYPOTHESES_FAIL, hypotheses)
    steps = _steps(p, q)
    open_cases = [s.case for s in steps[1:] if not s.contradiction]
    if open_cases:
        raise InternalInvariantError("a case of the pq argument does not close", {"p": p, "q": q, "cases": open_cases})
    get_algebra_logger().log_computation("pq_checker", p=p, q=q, outcome=PqOutcome.SEMISIMPLE.value)
    return PqVerdict(p, q, PqOutcome.SEMISIMPLE, hypotheses, steps)


def pq_sweep(max_q: int = MAX_Q) -> List[PqVerdict]:
    """Every pair of odd primes p < q ≤ max_q."""
    primes = [n for n in sympy.primerange(3, max_q + 1)]
    verdicts = [pq_checker(p, q) for i, p in enumerate(primes) for q in primes[i + 1:]]
    logger.info(f"pq sweep up to {max_q}: {len(verdicts)} pairs")
    return verdicts


def semisimple_dimensions(max_q: int = MAX_Q) -> List[int]:
    return sorted(v.dim for v in pq_sweep(max_q) if v.outcome is PqOutcome.SEMISIMPLE)
