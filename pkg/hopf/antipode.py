"""
Antipode computation and its order.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from coalgebra.semisimple import DEFAULT_SETTINGS, SplittingSettings, decompose
from coalgebra.coradical import grouplikes
from exactmath.linalg import arrays_equal, identity, mat_mul, mat_vec, solve_sparse, zeros
from exactmath.scalar import Scalar
from hopf.base import HopfAlgebra
from utils.exceptions import InternalInvariantError, NoAntipodeError
from utils.logger import get_algebra_logger

logger = logging.getLogger(__name__)


def _antipode_system(h: HopfAlgebra):
    """Rows of Σ S(x_1)x_2 = ε(x)1 over basis x; unknown s[k, j] (coefficient of b_k in S(b_j)) is variable k·n + j."""
    n = h.dim
    c, a = h.coalgebra, h.algebra
    right_factors: Dict[int, List] = {}
    for k in range(n):
        for q, t, m in a.terms[k]:
            right_factors.setdefault(q, []).append((k, t, m))
    rows: List[Dict[int, Scalar]] = []
    rhs: List[Scalar] = []
    for i in range(n):
        equations: List[Dict[int, Scalar]] = [dict() for _ in range(n)]
        for p, q, x in c.terms[i]:
            for k, t, m in right_factors.get(q, []):
                variable = k * n + p
                equations[t][variable] = equations[t].get(variable, h.field.zero) + x * m
        for t in range(n):
            rows.append(equations[t])
            rhs.append(c.counit[i] * h.unit[t])
    return rows, rhs


def _convolves_to_unit(h: HopfAlgebra, s: np.ndarray, left: bool) -> bool:
    c = h.coalgebra
    for i in range(c.dim):
        total = zeros(c.dim, h.field)
        for p, q, x in c.terms[i]:
            if left:
                term = h.product(s[:, p], h.basis_vector(q))
            else:
                term = h.product(h.basis_vector(p), s[:, q])
            total = total + term * x
        if not arrays_equal(total, h.unit * c.counit[i]):
            return False
    return True


def _assert_anti_morphism(h: HopfAlgebra, s: np.ndarray):
    n, c = h.dim, h.coalgebra
    for i in range(n):
        for j in range(n):
            lhs = mat_vec(s, h.product(h.basis_vector(i), h.basis_vector(j)), h.field)
            rhs = h.product(s[:, j], s[:, i])
            if not arrays_equal(lhs, rhs):
                raise InternalInvariantError("antipode is not an anti-algebra map", {"index": [i, j]})
    for i in range(n):
        lhs = c.delta(s[:, i])
        rhs = zeros((n, n), h.field)
        for p, q, x in c.terms[i]:
            rhs = rhs + np.outer(s[:, q], s[:, p]) * x
        if not arrays_equal(lhs, rhs):
            raise InternalInvariantError("antipode is not an anti-coalgebra map", {"index": i})


def compute_antipode(h: HopfAlgebra) -> np.ndarray:
    """Solve Σ S(x_1)x_2 = ε(x)1 for S, then verify it is a two-sided convolution inverse.

    Stores the result on ``h.antipode`` and returns it.
    """
    n = h.dim
    rows, rhs = _antipode_system(h)
    solution = solve_sparse(rows, rhs, n * n, h.field)
    if solution is None:
        raise NoAntipodeError("antipode system is inconsistent", {"name": h.name, "dim": n})
    s = zeros((n, n), h.field)
    for k in range(n):
        for j in range(n):
            s[k, j] = solution[k * n + j]
    if not _convolves_to_unit(h, s, left=True) or not _convolves_to_unit(h, s, left=False):
        raise NoAntipodeError("identity has a one-sided convolution inverse only", {"name": h.name, "dim": n})
    _assert_anti_morphism(h, s)
    h.antipode = s
    get_algebra_logger().log_computation("antipode", name=h.name, dim=n)
    return s


def antipode_power(h: HopfAlgebra, exponent: int) -> np.ndarray:
    if h.antipode is None:
        compute_antipode(h)
    result = identity(h.dim, h.field)
    for _ in range(exponent):
        result = mat_mul(h.antipode, result, h.field)
    return result


@dataclass
class AntipodeOrder:
    """Order of S together with the grouplike bound 4·lcm(|G(H)|, |G(H*)|)."""

    order: int
    group_order: int
    dual_group_order: int
    certified: bool

    @property
    def bound(self) -> int:
        return 4 * math.lcm(self.group_order, self.dual_group_order)

    @property
    def divides_bound(self) -> bool:
        return self.bound % self.order == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "group_order": self.group_order,
            "dual_group_order": self.dual_group_order,
            "bound": self.bound,
            "divides_bound": self.divides_bound,
            "certified": self.certified
        }


def antipode_order(h: HopfAlgebra, settings: SplittingSettings = DEFAULT_SETTINGS,
                   max_order: Optional[int] = None) -> AntipodeOrder:
    """Least m with S^m = id, checked against the grouplike bound.

    Grouplikes are counted over the field of H. The divisibility is asserted
    only when both H and H* have split coradicals there; otherwise the counts
    may be incomplete and the result is marked uncertified.
    """
    if h.antipode is None:
        compute_antipode(h)
    dual = h.algebra.dual_coalgebra()
    group_order = len(grouplikes(h.coalgebra, settings))
    dual_group_order = len(grouplikes(dual, settings))
    certified = decompose(h.coalgebra, settings).all_split and decompose(dual, settings).all_split
    limit = max_order or max(4 * math.lcm(group_order, dual_group_order), 4 * h.dim * h.dim)
    ident = identity(h.dim, h.field)
    power = h.antipode.copy()
    order = 1
    while not arrays_equal(power, ident):
        if order >= limit:
            raise InternalInvariantError("antipode order exceeds the search limit", {"limit": limit, "name": h.name})
        power = mat_mul(h.antipode, power, h.field)
        order += 1
    result = AntipodeOrder(order, group_order, dual_group_order, certified)
    if certified and not result.divides_bound:
        raise InternalInvariantError("antipode order does not divide the grouplike bound", result.to_dict())
    logger.info(f"antipode of {h.name or 'H'} has order {order} (bound {result.bound})")
    return result
