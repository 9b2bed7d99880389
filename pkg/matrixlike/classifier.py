"""
2×2 matrix-like coalgebras: validation, normal forms and classification.

A matrix-like spanning set is four vectors e11, e12, e21, e22 of a coalgebra
with Δ(e_ij) = Σ_p e_ip⊗e_pj and ε(e_ij) = δ_ij; they need not be linearly
independent. The span is isomorphic to M^c(2), C3, C2(a) or a single
grouplike, decided from which of the e_ij are independent.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from coalgebra.base import AxiomReport, Coalgebra
from exactmath.linalg import Subspace, arrays_equal, rank, solve, zeros
from exactmath.polynomial import scalar_is_square
from exactmath.scalar import QQ, CyclotomicField, Number, Scalar, as_scalar, square_class
from utils.exceptions import InternalInvariantError, ValidationError

logger = logging.getLogger(__name__)

ORDER = [(0, 0), (0, 1), (1, 0), (1, 1)]


class MatrixLikeTag(Enum):
    FULL4 = "Full4"
    C3 = "C3"
    C2 = "C2"
    POINT1 = "Point1"


@dataclass
class MatrixLikeSpan:
    """Spanning elements e11, e12, e21, e22 inside an ambient coalgebra."""

    ambient: Coalgebra
    e: List[np.ndarray]

    def __post_init__(self):
        if len(self.e) != 4:
            raise ValidationError("a 2×2 matrix-like span needs four elements", {"count": len(self.e)})
        self.e = [as_vector(v, self.ambient) for v in self.e]

    def entry(self, i: int, j: int) -> np.ndarray:
        """e_{i+1, j+1}."""
        return self.e[2 * i + j]

    @property
    def space(self) -> Subspace:
        return Subspace.span(self.e, self.ambient.dim, self.ambient.field)


def as_vector(v, c: Coalgebra) -> np.ndarray:
    v = np.asarray(v, dtype=object)
    if v.shape != (c.dim,):
        raise ValidationError("spanning element has the wrong length", {"length": v.shape, "dim": c.dim})
    out = zeros(c.dim, c.field)
    for i, x in enumerate(v):
        out[i] = as_scalar(x, c.field)
    return out


def relabel(span: MatrixLikeSpan) -> MatrixLikeSpan:
    """Relabel e_ij through the transposition (1 2): e'_ij = e_{σ(i)σ(j)}."""
    return MatrixLikeSpan(span.ambient, [span.entry(1 - i, 1 - j) for i, j in ORDER])


def validate_span(span: MatrixLikeSpan) -> AxiomReport:
    report = AxiomReport("matrix_like")
    c = span.ambient
    for i, j in ORDER:
        expected = zeros((c.dim, c.dim), c.field)
        for p in range(2):
            expected = expected + np.outer(span.entry(i, p), span.entry(p, j))
        if not arrays_equal(c.delta(span.entry(i, j)), expected):
            report.violations.append({"entry": [i + 1, j + 1], "identity": "comultiplication"})
        if c.epsilon(span.entry(i, j)) != (1 if i == j else 0):
            report.violations.append({"entry": [i + 1, j + 1], "identity": "counit"})
    return report


# -- normal forms ---------------------------------------------------------------------

def _coalgebra(field: CyclotomicField, deltas: List[Dict], counit: List[Number], names: List[str]) -> Coalgebra:
    n = len(counit)
    comul = zeros((n, n, n), field)
    for i, delta in enumerate(deltas):
        for (j, k), value in delta.items():
            comul[i, j, k] = as_scalar(value, field)
    return Coalgebra(field, comul, np.array([as_scalar(e, field) for e in counit], dtype=object), names)


def normal_form(tag: MatrixLikeTag, a: Optional[Number] = None, field: CyclotomicField = QQ):
    """The normal-form coalgebra for ``tag`` together with its canonical spanning set."""
    tag = MatrixLikeTag(tag)
    if tag is MatrixLikeTag.FULL4:
        deltas = [{(2 * i + p, 2 * p + j): 1 for p in range(2)} for i, j in ORDER]
        c = _coalgebra(field, deltas, [1, 0, 0, 1], ["e11", "e12", "e21", "e22"])
        e = [[1 if t == k else 0 for t in range(4)] for k in range(4)]
    elif tag is MatrixLikeTag.C3:
        deltas = [{(0, 0): 1}, {(1, 1): 1}, {(0, 2): 1, (2, 1): 1}]
        c = _coalgebra(field, deltas, [1, 1, 0], ["g", "h", "u"])
        e = [[1, 0, 0], [0, 0, 1], [0, 0, 0], [0, 1, 0]]
    elif tag is MatrixLikeTag.C2:
        if a is None:
            raise ValidationError("C2 needs its parameter a")
        a = as_scalar(a, field)
        deltas = [{(0, 0): 1, (1, 1): a}, {(0, 1): 1, (1, 0): 1}]
        c = _coalgebra(field, deltas, [1, 0], ["x", "y"])
        e = [[1, 0], [0, 1], [0, a], [1, 0]]
    else:
        c = _coalgebra(field, [{(0, 0): 1}], [1], ["x"])
        e = [[1], [0], [0], [1]]
    return c, MatrixLikeSpan(c, e)


@dataclass
class MatrixLikeClass:
    """Isomorphism class of a matrix-like span.

    ``witness`` has one column per normal-form basis element, giving its image
    in the ambient coalgebra; it is a coalgebra isomorphism onto the span.
    """

    tag: MatrixLikeTag
    witness: np.ndarray
    a: Optional[Scalar] = None
    case: str = ""

    @property
    def label(self) -> str:
        if self.tag is not MatrixLikeTag.C2:
            return self.tag.value
        if self.a != 0 and self.a.is_rational():
            return f"C2({self.a.to_text()}; class {square_class(self.a)})"
        return f"C2({self.a.to_text()})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tag": self.tag.value,
            "a": self.a.to_text() if self.a is not None else None,
            "label": self.label,
            "case": self.case,
            "witness": [[e.to_text() for e in row] for row in self.witness.T]
        }


def _independent(vectors: List[np.ndarray], field: CyclotomicField) -> bool:
    stacked = np.array(vectors, dtype=object)
    return rank(stacked, field) == len(vectors)


def _coordinates(basis: List[np.ndarray], target: np.ndarray, field: CyclotomicField) -> List[Scalar]:
    columns = np.array(basis, dtype=object).T.copy()
    x = solve(columns, target, field)
    if x is None:
        raise InternalInvariantError("element outside the span of the chosen independent set")
    return list(x)


def _columns(vectors: List[np.ndarray]) -> np.ndarray:
    return np.array(vectors, dtype=object).T.copy()


def _classify_dim3(span: MatrixLikeSpan, relabelled: bool = False) -> MatrixLikeClass:
    k = span.ambient.field
    e11, e12, e21, e22 = span.e
    if _independent([e11, e12, e21], k):
        _, b, c = _coordinates([e11, e12, e21], e22, k)
        if b == 0 or b * c != -1:
            raise InternalInvariantError("dimension-3 span violates 1 + bc = 0", {"b": b.to_text(), "c": c.to_text()})
        g = e11 + e12 * b
        h = e11 - e21 * b.inverse()
        return MatrixLikeClass(MatrixLikeTag.C3, _columns([g, h, e12]), case="dim3_case1")
    if _independent([e11, e12, e22], k):
        a, b, _ = _coordinates([e11, e12, e22], e21, k)
        if a != 0 or b != 0:
            raise InternalInvariantError("dimension-3 span with e21 dependent must have e21 = 0")
        return MatrixLikeClass(MatrixLikeTag.C3, _columns([e11, e22, e12]), case="dim3_case2")
    if relabelled:
        raise InternalInvariantError("no independent triple found after relabelling")
    result = _classify_dim3(relabel(span), relabelled=True)
    result.case += "_relabelled"
    return result


def _classify_dim2(span: MatrixLikeSpan, relabelled: bool = False) -> MatrixLikeClass:
    k = span.ambient.field
    e11, e12, e21, e22 = span.e
    if _independent([e11, e12], k):
        _, a = _coordinates([e11, e12], e21, k)
        _, b = _coordinates([e11, e12], e22, k)
        if b == 0:
            return MatrixLikeClass(MatrixLikeTag.C2, _columns([e11, e12]), a=a, case="dim2_case1")
    if _independent([e11, e22], k):
        y = e11 - e22
        x = (e11 + e22) * k(Fraction(1, 2))
        a1, _ = _coordinates([e11, e22], e12, k)
        b1, _ = _coordinates([e11, e22], e21, k)
        a = a1 * b1 + Fraction(1, 4)
        return MatrixLikeClass(MatrixLikeTag.C2, _columns([x, y]), a=a, case="dim2_case2")
    if relabelled:
        raise InternalInvariantError("no independent pair found after relabelling")
    result = _classify_dim2(relabel(span), relabelled=True)
    result.case += "_relabelled"
    return result


def _verify_witness(result: MatrixLikeClass, span: MatrixLikeSpan) -> None:
    c = span.ambient
    nf, _ = normal_form(result.tag, result.a, c.field)
    w = result.witness
    if rank(w.T.copy(), c.field) != nf.dim or Subspace.span(list(w.T), c.dim, c.field) != span.space:
        raise InternalInvariantError("classification witness is not onto the span", {"tag": result.tag.value})
    for i in range(nf.dim):
        expected = zeros((c.dim, c.dim), c.field)
        for j, k_, value in nf.terms[i]:
            expected = expected + np.outer(w[:, j], w[:, k_]) * value
        if not arrays_equal(c.delta(w[:, i]), expected) or c.epsilon(w[:, i]) != nf.counit[i]:
            raise InternalInvariantError(
                "classification witness is not a coalgebra map",
                {"tag": result.tag.value, "basis_index": i}
            )


def classify(span: MatrixLikeSpan) -> MatrixLikeClass:
    """Isomorphism class of the span, with a verified witness map from the normal form."""
    report = validate_span(span)
    if not report.ok:
        raise ValidationError("not a matrix-like spanning set", {"violations": report.violations})
    dim = span.space.dim
    if dim == 4:
        result = MatrixLikeClass(MatrixLikeTag.FULL4, _columns(span.e), case="dim4")
    elif dim == 3:
        result = _classify_dim3(span)
    elif dim == 2:
        result = _classify_dim2(span)
    else:
        result = MatrixLikeClass(MatrixLikeTag.POINT1, _columns([span.e[0]]), case="dim1")
    _verify_witness(result, span)
    logger.info(f"matrix-like span of dim {dim} classified as {result.label} ({result.case})")
    return result


# -- C2(a) ----------------------------------------------------------------------------

@dataclass
class C2Isomorphism:
    """Whether C2(a) ≅ C2(b); when it is, x ↦ x, y ↦ scale·y maps C2(b) onto C2(a)."""

    iso: bool
    scale: Optional[Scalar] = None
    reason: str = ""


def c2_iso(a: Number, b: Number, field: CyclotomicField = QQ) -> C2Isomorphism:
    a, b = as_scalar(a, field), as_scalar(b, field)
    if a == 0 or b == 0:
        # C2(0) has exactly one grouplike, C2(a ≠ 0) has none or two
        if a == b:
            return C2Isomorphism(True, field.one, "both degenerate")
        return C2Isomorphism(False, reason="grouplike counts differ")
    scale = scalar_is_square(a / b)
    if scale is None:
        return C2Isomorphism(False, reason="a/b is not a square")
    source, _ = normal_form(MatrixLikeTag.C2, b, field)
    target, _ = normal_form(MatrixLikeTag.C2, a, field)
    images = [np.array([field.one, field.zero], dtype=object), np.array([field.zero, scale], dtype=object)]
    for i in range(2):
        expected = zeros((2, 2), field)
        for j, k_, value in source.terms[i]:
            expected = expected + np.outer(images[j], images[k_]) * value
        if not arrays_equal(target.delta(images[i]), expected):
            raise InternalInvariantError("C2 isomorphism fails to transport the structure constants")
    return C2Isomorphism(True, scale, "a/b is a square")


@dataclass
class C2Grouplikes:
    """G(C2(a)) as (x, y)-coordinate vectors, and the (x, x)-primitive y when a = 0."""

    grouplikes: List[np.ndarray]
    primitive: Optional[np.ndarray] = None


def c2_grouplikes(a: Number, field: CyclotomicField = QQ) -> C2Grouplikes:
    a = as_scalar(a, field)
    if a == 0:
        return C2Grouplikes([np.array([field.one, field.zero], dtype=object)],
                            np.array([field.zero, field.one], dtype=object))
    root = scalar_is_square(a)
    if root is None:
        return C2Grouplikes([])
    found = [np.array([field.one, root], dtype=object), np.array([field.one, -root], dtype=object)]
    found.sort(key=lambda g: tuple(e.sort_key() for e in g))
    return C2Grouplikes(found)
