"""
Searching for a 4-dimensional simple subcoalgebra stable under the antipode.

Given simple subcoalgebras C, D ≅ M^c(2) swapped by S with S⁴ = id, an
S²-adapted matrix basis e_ij of C (S²(e_ij) = (-1)^{i+j} e_ij) yields a matrix
basis f_ji = S(e_ij) of D, and the products

    E_ij = e_ij f_{σ(i)σ(j)},    F_ij = f_ij e_{σ(i)σ(j)}    (σ swaps 1 and 2)

are matrix-like spanning sets of S-stable subcoalgebras. A 4-dimensional one
is the answer; a 2- or 3-dimensional one forces a nontrivial grouplike; if both
collapse to k·1 the element x = e22 f12 is primitive, which no nonzero element
of a finite-dimensional Hopf algebra is.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from coalgebra.base import Coalgebra, SimpleComponent, dual_algebra, subcoalgebra_restriction
from coalgebra.semisimple import minimal_polynomial, split_by_root
from exactmath.linalg import (
    Subspace,
    arrays_equal,
    identity,
    invert,
    is_zero_array,
    kernel,
    mat_vec,
    restrict_map,
    subspace_image,
    subspace_sum,
    tensor_vector,
    zeros,
)
from exactmath.polynomial import roots_in_field, to_text
from hopf.antipode import antipode_power, compute_antipode
from hopf.base import HopfAlgebra
from matrixlike.classifier import MatrixLikeClass, MatrixLikeSpan, classify, validate_span
from utils.exceptions import AxiomViolationError, NoAdaptedBasisError, ValidationError
from utils.logger import get_algebra_logger

logger = logging.getLogger(__name__)

ORDER = [(0, 0), (0, 1), (1, 0), (1, 1)]


def _sign(i: int, j: int) -> int:
    return -1 if (i + j) % 2 else 1


def adapted_basis_from_s2(c: Coalgebra, component: SimpleComponent, s2: np.ndarray) -> List[np.ndarray]:
    """A matrix basis e11, e12, e21, e22 of the component with s2(e_ij) = (-1)^{i+j} e_ij.

    Works in B = C*, where the transpose of s2 is an algebra automorphism θ:
    matrix units of B in the θ-eigenspaces dualize to the wanted basis.
    """
    if component.d != 2:
        raise ValidationError("an S²-adapted basis needs a 4-dimensional simple component", {"d": component.d})
    space = component.subcoalgebra
    if subspace_image(s2, space) != space:
        raise ValidationError("S² does not map the component onto itself", {"component": component.index})
    field = c.field
    r = restrict_map(s2, space, space)
    ident = identity(4, field)
    plus = kernel(r - ident, field)
    minus = kernel(r + ident, field)
    eigen = {"plus_dim": plus.dim, "minus_dim": minus.dim}
    if arrays_equal(r, ident):
        raise NoAdaptedBasisError("pattern unsatisfiable, S² = id on the component", eigen)
    if plus.dim != 2 or minus.dim != 2:
        raise NoAdaptedBasisError("S² on the component is not of the adapted sign pattern", eigen)

    sub = subcoalgebra_restriction(c, space)
    b = dual_algebra(sub)
    theta = r.T.copy()
    fixed = kernel(theta - ident, field)
    unit = b.unit
    y = next(v for v in fixed.vectors() if not Subspace.span([unit], 4, field).contains(v))
    m = minimal_polynomial(y, unit, b.product, field)
    roots = roots_in_field(m, field)
    e11 = split_by_root(y, m, roots, unit, b.product) if roots else None
    if e11 is None:
        raise NoAdaptedBasisError(
            "fixed subalgebra of θ does not split over the field",
            {**eigen, "polynomial": to_text(m), "conductor": field.conductor}
        )
    e22 = unit - e11
    corner = [b.product(b.product(e11, v), e22) for v in _unit_vectors(4, field)]
    e12 = next((v for v in corner if not is_zero_array(v)), None)
    if e12 is None or not arrays_equal(mat_vec(theta, e12, field), -e12):
        raise NoAdaptedBasisError("off-diagonal matrix unit is not in the (-1)-eigenspace", eigen)
    opposite = [b.product(b.product(e22, v), e11) for v in _unit_vectors(4, field)]
    w = next(v for v in opposite if not is_zero_array(v))
    product = b.product(e12, w)
    scale = next(product[i] / e11[i] for i in range(4) if e11[i] != 0)
    e21 = w * scale.inverse()
    units = [e11, e12, e21, e22]

    pairing = zeros((4, 4), field)
    for row, unit_vector_ in enumerate(units):
        pairing[row, :] = unit_vector_
    dual = invert(pairing, field)
    basis = []
    for k in range(4):
        coords = dual[:, k]
        vector = zeros(c.dim, field)
        for a in range(4):
            if coords[a] != 0:
                vector = vector + space.basis[a] * coords[a]
        basis.append(vector)
    _verify_adapted(c, basis, s2)
    return basis


def _unit_vectors(n: int, field) -> List[np.ndarray]:
    return list(identity(n, field))


def _verify_adapted(c: Coalgebra, basis: List[np.ndarray], s2: np.ndarray) -> None:
    span = MatrixLikeSpan(c, basis)
    report = validate_span(span)
    if not report.ok:
        raise AxiomViolationError("adapted basis fails the comatrix identities", {"violations": report.violations})
    for (i, j), v in zip(ORDER, basis):
        if not arrays_equal(mat_vec(s2, v, c.field), v * _sign(i, j)):
            raise AxiomViolationError("adapted basis fails the S² sign pattern", {"entry": [i + 1, j + 1]})


def s_squared_adapted_basis(h: HopfAlgebra, component: SimpleComponent) -> List[np.ndarray]:
    return adapted_basis_from_s2(h.coalgebra, component, antipode_power(h, 2))


class SearchOutcome(Enum):
    FOUND = "found"
    GROUPLIKE_FORCED = "grouplike_forced"
    CONTRADICTION = "contradiction"


@dataclass
class StableSearchResult:
    outcome: SearchOutcome
    e: List[np.ndarray]
    f: List[np.ndarray]
    big_e: MatrixLikeSpan
    big_f: MatrixLikeSpan
    stable: Optional[Subspace] = None
    classes: Dict[str, MatrixLikeClass] = dataclass_field(default_factory=dict)
    checks: Dict[str, bool] = dataclass_field(default_factory=dict)
    witness: Dict[str, Any] = dataclass_field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "dim_E": self.big_e.space.dim,
            "dim_F": self.big_f.space.dim,
            "stable_dim": self.stable.dim if self.stable is not None else None,
            "classes": {k: v.to_dict() for k, v in self.classes.items()},
            "checks": dict(self.checks),
            "witness": dict(self.witness)
        }


def _check_preconditions(h: HopfAlgebra, c_comp: SimpleComponent, d_comp: SimpleComponent) -> None:
    if c_comp.d != 2 or d_comp.d != 2:
        raise ValidationError("both components must be 4-dimensional", {"d_C": c_comp.d, "d_D": d_comp.d})
    s = h.antipode
    if subspace_image(s, c_comp.subcoalgebra) != d_comp.subcoalgebra:
        raise ValidationError("S(C) ≠ D", {"C": c_comp.index, "D": d_comp.index})
    if subspace_image(s, d_comp.subcoalgebra) != c_comp.subcoalgebra:
        raise ValidationError("S(D) ≠ C", {"C": c_comp.index, "D": d_comp.index})
    s4 = antipode_power(h, 4)
    for v in subspace_sum(c_comp.subcoalgebra, d_comp.subcoalgebra).vectors():
        if not arrays_equal(mat_vec(s4, v, h.field), v):
            raise ValidationError("S⁴ is not the identity on C + D", {"C": c_comp.index, "D": d_comp.index})


def _all_zero(products: List[np.ndarray]) -> bool:
    return all(is_zero_array(p) for p in products)


def stable_coalgebra_search(h: HopfAlgebra, c_comp: SimpleComponent, d_comp: SimpleComponent) -> StableSearchResult:
    """Run the E/F construction for components C, D with S(C) = D, S(D) = C and S⁴ = id."""
    if h.antipode is None:
        compute_antipode(h)
    _check_preconditions(h, c_comp, d_comp)
    s = h.antipode
    mul = h.product
    e = s_squared_adapted_basis(h, c_comp)

    def e_(i: int, j: int) -> np.ndarray:
        return e[2 * i + j]

    # f_ji = S(e_ij)
    f = [mat_vec(s, e_(j, i), h.field) for i, j in ORDER]

    def f_(i: int, j: int) -> np.ndarray:
        return f[2 * i + j]

    checks: Dict[str, bool] = {}
    checks["antipode_on_f"] = all(
        arrays_equal(mat_vec(s, f_(j, i), h.field), e_(i, j) * _sign(i, j)) for i, j in ORDER
    )
    checks["off_diagonal_e"] = _all_zero([
        mul(f_(0, 0), e_(0, 1)) + mul(f_(1, 0), e_(1, 1)),
        mul(e_(0, 0), f_(1, 0)) + mul(e_(0, 1), f_(1, 1)),
        mul(e_(1, 0), f_(0, 0)) + mul(e_(1, 1), f_(0, 1)),
        mul(f_(0, 1), e_(0, 0)) + mul(f_(1, 1), e_(1, 0)),
    ])
    checks["off_diagonal_f"] = _all_zero([
        mul(e_(0, 0), f_(0, 1)) - mul(e_(1, 0), f_(1, 1)),
        mul(f_(0, 1), e_(1, 1)) - mul(f_(0, 0), e_(1, 0)),
        mul(e_(1, 1), f_(1, 0)) - mul(e_(0, 1), f_(0, 0)),
        mul(f_(1, 0), e_(0, 0)) - mul(f_(1, 1), e_(0, 1)),
    ])

    big_e = MatrixLikeSpan(h.coalgebra, [mul(e_(i, j), f_(1 - i, 1 - j)) for i, j in ORDER])
    big_f = MatrixLikeSpan(h.coalgebra, [mul(f_(i, j), e_(1 - i, 1 - j)) for i, j in ORDER])
    e_report, f_report = validate_span(big_e), validate_span(big_f)
    checks["E_comatrix"] = e_report.ok
    checks["F_comatrix"] = f_report.ok
    if not e_report.ok or not f_report.ok:
        raise AxiomViolationError(
            "E or F fails the comatrix identities",
            {"E": e_report.violations, "F": f_report.violations}
        )
    checks["antipode_on_E"] = all(
        arrays_equal(mat_vec(s, big_e.entry(i, j), h.field),
                     big_e.entry(1 - i, 1 - j) if i == j else -big_e.entry(i, j))
        for i, j in ORDER
    )
    result = StableSearchResult(SearchOutcome.CONTRADICTION, e, f, big_e, big_f, checks=checks)

    dims = {"E": big_e.space.dim, "F": big_f.space.dim}
    for label, span in (("E", big_e), ("F", big_f)):
        if dims[label] == 4:
            result.outcome = SearchOutcome.FOUND
            result.stable = span.space
            checks["stable_under_S"] = subspace_image(s, span.space) == span.space
            result.classes[label] = classify(span)
            break
    else:
        if any(d in (2, 3) for d in dims.values()):
            result.outcome = SearchOutcome.GROUPLIKE_FORCED
            for label, span in (("E", big_e), ("F", big_f)):
                if dims[label] in (2, 3):
                    result.classes[label] = classify(span)
        else:
            _collapse_witness(h, result)
    get_algebra_logger().log_computation(
        "stable_coalgebra_search", outcome=result.outcome.value, dim_E=dims["E"], dim_F=dims["F"]
    )
    return result


def _collapse_witness(h: HopfAlgebra, result: StableSearchResult) -> None:
    """E = F = k·1: x = e22 f12 is (1, 1)-primitive."""
    mul, one = h.product, h.unit
    e, f = result.e, result.f

    def e_(i: int, j: int) -> np.ndarray:
        return e[2 * i + j]

    def f_(i: int, j: int) -> np.ndarray:
        return f[2 * i + j]

    checks = result.checks
    checks["E_is_unit"] = result.big_e.space == Subspace.span([one], h.dim, h.field)
    checks["F_is_unit"] = result.big_f.space == Subspace.span([one], h.dim, h.field)
    checks["diagonal_products_are_one"] = all(arrays_equal(p, one) for p in [
        mul(e_(0, 0), f_(1, 1)), mul(f_(1, 1), e_(0, 0)), mul(e_(1, 1), f_(0, 0)), mul(f_(0, 0), e_(1, 1))
    ])
    checks["off_diagonal_products_vanish"] = _all_zero([
        mul(e_(0, 1), f_(1, 0)), mul(f_(1, 0), e_(0, 1)), mul(e_(1, 0), f_(0, 1)), mul(f_(0, 1), e_(1, 0))
    ])
    x = mul(e_(1, 1), f_(0, 1))
    checks["x_forms_agree"] = all(arrays_equal(x, other) for other in [
        mul(e_(0, 0), f_(0, 1)), mul(e_(1, 0), f_(1, 1)), -mul(e_(1, 0), f_(0, 0))
    ])
    delta_x = h.coalgebra.delta(x).reshape(-1)
    primitive = tensor_vector(one, x, h.field) + tensor_vector(x, one, h.field)
    x_is_zero = is_zero_array(x)
    checks["x_primitive"] = arrays_equal(delta_x, primitive)
    result.witness = {
        "x": [v.to_text() for v in x],
        "x_is_zero": x_is_zero,
        "f12_is_zero": is_zero_array(f_(0, 1)),
        "inconsistent": True,
        "reason": (
            "x = 0 forces f12 = 0, but the f_ij are a basis of D" if x_is_zero
            else "nonzero primitive element in a finite-dimensional Hopf algebra"
        )
    }
    logger.info(f"E and F collapse to k·1; witness x is {'zero' if x_is_zero else 'a nonzero primitive'}")
