"""
Constructors for the example coalgebras and Hopf algebras.

Every builder verifies what it produced: coalgebras against the coalgebra
axioms, Hopf algebras against the bialgebra axioms plus a solved and
two-sided-verified antipode.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from coalgebra.base import AlgebraSC, Coalgebra, check_coalgebra, dual_algebra
from exactmath.linalg import zeros
from exactmath.scalar import CyclotomicField, Scalar, as_scalar, get_field, parse_scalar
from hopf.antipode import compute_antipode
from hopf.base import HopfAlgebra, check_bialgebra, tensor_product
from matrixlike.classifier import MatrixLikeTag, normal_form
from utils.exceptions import AxiomViolationError, ExtendFieldError, ValidationError
from zoo.groups import FiniteGroup, cyclic, dihedral

logger = logging.getLogger(__name__)

Built = Union[Coalgebra, HopfAlgebra]


class ZooFamily(Enum):
    GROUP_ALGEBRA = "group_algebra"
    DUAL_GROUP_ALGEBRA = "dual_group_algebra"
    TAFT = "taft"
    MATRIX_COALGEBRA = "matrix_coalgebra"
    C2 = "c2"
    C3 = "c3"
    DIRECT_SUM = "direct_sum"
    DUAL = "dual"
    POINTED8 = "pointed8"
    NONPOINTED8 = "nonpointed8"
    TENSOR = "tensor"


HOPF_FAMILIES = {
    ZooFamily.GROUP_ALGEBRA, ZooFamily.DUAL_GROUP_ALGEBRA, ZooFamily.TAFT, ZooFamily.DUAL,
    ZooFamily.POINTED8, ZooFamily.NONPOINTED8, ZooFamily.TENSOR,
}

GROUPS: Dict[str, Callable[[int], FiniteGroup]] = {"cyclic": cyclic, "dihedral": dihedral}


@dataclass(frozen=True)
class ZooSpec:
    """A zoo family with its parameters; ``parts`` holds the operands of dual, direct_sum and tensor."""

    family: ZooFamily
    params: Tuple[Tuple[str, Any], ...] = ()
    parts: Tuple["ZooSpec", ...] = ()
    conductor: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "family", ZooFamily(self.family))
        p = self.param_dict
        family = self.family
        if family in (ZooFamily.GROUP_ALGEBRA, ZooFamily.DUAL_GROUP_ALGEBRA):
            if p.get("group") not in GROUPS:
                raise ValidationError("unknown group", {"group": p.get("group"), "known": sorted(GROUPS)})
            n = p.get("n")
            if not isinstance(n, int) or n < (3 if p["group"] == "dihedral" else 1):
                raise ValidationError("invalid group parameter", {"group": p["group"], "n": n})
        elif family is ZooFamily.TAFT and (not isinstance(p.get("n"), int) or p["n"] < 2):
            raise ValidationError("taft needs n ≥ 2", {"n": p.get("n")})
        elif family is ZooFamily.MATRIX_COALGEBRA and (not isinstance(p.get("d"), int) or p["d"] < 1):
            raise ValidationError("matrix coalgebra needs d ≥ 1", {"d": p.get("d")})
        elif family is ZooFamily.C2 and "a" not in p:
            raise ValidationError("c2 needs its parameter a")
        elif family is ZooFamily.DUAL and len(self.parts) != 1:
            raise ValidationError("dual takes exactly one operand", {"parts": len(self.parts)})
        elif family is ZooFamily.TENSOR and len(self.parts) != 2:
            raise ValidationError("tensor takes exactly two operands", {"parts": len(self.parts)})
        elif family is ZooFamily.DIRECT_SUM and not self.parts:
            raise ValidationError("direct_sum needs at least one operand")

    @property
    def param_dict(self) -> Dict[str, Any]:
        return dict(self.params)

    @property
    def label(self) -> str:
        p = self.param_dict
        family = self.family.value
        if self.family in (ZooFamily.GROUP_ALGEBRA, ZooFamily.DUAL_GROUP_ALGEBRA):
            inner = f"{p['group']}({p['n']})"
        elif self.family is ZooFamily.TAFT:
            inner = str(p["n"])
        elif self.family is ZooFamily.MATRIX_COALGEBRA:
            inner = str(p["d"])
        elif self.family is ZooFamily.C2:
            inner = str(p["a"])
        else:
            inner = ", ".join(part.label for part in self.parts)
        return f"{family}({inner})" if inner else family

    def default_conductor(self) -> int:
        if self.conductor is not None:
            return self.conductor
        p = self.param_dict
        if self.family is ZooFamily.TAFT:
            return p["n"] if p["n"] > 2 else 1
        if self.family is ZooFamily.NONPOINTED8:
            return 4
        if self.family is ZooFamily.C2 and isinstance(p["a"], Scalar):
            return p["a"].field.conductor
        conductor = 1
        for part in self.parts:
            conductor = math.lcm(conductor, part.default_conductor())
        return conductor


def spec(family: Union[str, ZooFamily], *parts: ZooSpec, conductor: Optional[int] = None, **params) -> ZooSpec:
    """ZooSpec shorthand: spec("group_algebra", group="dihedral", n=7)."""
    return ZooSpec(ZooFamily(family), tuple(sorted(params.items())), tuple(parts), conductor)


# -- structure-constant helpers -------------------------------------------------------

def _tensor_product_in(a: AlgebraSC, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """(Σ u_pq b_p⊗b_q)(Σ v_rs b_r⊗b_s) in A⊗A, both as n×n matrices."""
    n = a.dim
    by_pair: Dict[Tuple[int, int], List[Tuple[int, Scalar]]] = {}
    for p in range(n):
        for r, k, m in a.terms[p]:
            by_pair.setdefault((p, r), []).append((k, m))
    out = zeros((n, n), a.field)
    left = [(p, q, u[p, q]) for p in range(n) for q in range(n) if u[p, q] != 0]
    right = [(r, s, v[r, s]) for r in range(n) for s in range(n) if v[r, s] != 0]
    for p, q, x in left:
        for r, s, y in right:
            for k, m1 in by_pair.get((p, r), ()):
                for t, m2 in by_pair.get((q, s), ()):
                    out[k, t] = out[k, t] + x * y * m1 * m2
    return out


def _algebra(field: CyclotomicField, n: int, product: Callable[[int, int], Dict[int, Any]],
             unit_index: int, names: List[str]) -> AlgebraSC:
    mul = zeros((n, n, n), field)
    for i in range(n):
        for j in range(n):
            for k, value in product(i, j).items():
                mul[i, j, k] = mul[i, j, k] + as_scalar(value, field)
    unit = zeros(n, field)
    unit[unit_index] = field.one
    return AlgebraSC(field, mul, unit, names)


def _coalgebra_from_generators(a: AlgebraSC, generator_deltas: Dict[str, np.ndarray],
                               words: List[List[str]], counit: List[Any]) -> Coalgebra:
    """Δ on each basis element from the word in generators it equals."""
    n, field = a.dim, a.field
    comul = zeros((n, n, n), field)
    one = np.outer(a.unit, a.unit)
    for i, word in enumerate(words):
        delta = one
        for letter in word:
            delta = _tensor_product_in(a, delta, generator_deltas[letter])
        comul[i] = delta
    return Coalgebra(field, comul, np.array([as_scalar(e, field) for e in counit], dtype=object), list(a.basis_names))


def _delta(n: int, field: CyclotomicField, terms: Sequence[Tuple[int, int, Any]]) -> np.ndarray:
    out = zeros((n, n), field)
    for p, q, value in terms:
        out[p, q] = out[p, q] + as_scalar(value, field)
    return out


def _finish(h: HopfAlgebra) -> HopfAlgebra:
    report = check_bialgebra(h)
    if not report.ok:
        raise AxiomViolationError(f"{h.name} fails the bialgebra axioms", {"violations": report.violations[:20]})
    compute_antipode(h)
    logger.info(f"built {h!r}")
    return h


def _finish_coalgebra(c: Coalgebra, name: str) -> Coalgebra:
    report = check_coalgebra(c)
    if not report.ok:
        raise AxiomViolationError(f"{name} fails the coalgebra axioms", {"violations": report.violations[:20]})
    return c


def _root_of_unity(n: int, field: CyclotomicField) -> Scalar:
    if n <= 2:
        return field(-1 if n == 2 else 1)
    if field.conductor % n:
        raise ExtendFieldError(f"Phi_{n}(x)", field.conductor, f"a primitive {n}-th root of unity")
    return field.zeta(field.conductor // n)


# -- families -------------------------------------------------------------------------

def group_algebra(group: FiniteGroup, field: CyclotomicField) -> HopfAlgebra:
    n = group.order
    a = _algebra(field, n, lambda i, j: {group.multiply(i, j): 1}, group.identity, list(group.labels))
    comul = zeros((n, n, n), field)
    for i in range(n):
        comul[i, i, i] = field.one
    counit = np.array([field.one] * n, dtype=object)
    c = Coalgebra(field, comul, counit, list(group.labels))
    return _finish(HopfAlgebra(c, a, name=f"k[{group.name}]"))


def _star_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else f"{name}*"


def dualize(h: HopfAlgebra) -> HopfAlgebra:
    """H* with Δ and m swapped, ε and 1 swapped, and S transposed."""
    if not isinstance(h, HopfAlgebra):
        raise ValidationError("dualizing needs full Hopf data", {"type": type(h).__name__})
    names = [_star_name(name) for name in h.coalgebra.basis_names]
    coalgebra = h.algebra.dual_coalgebra()
    coalgebra.basis_names = list(names)
    algebra = dual_algebra(h.coalgebra)
    algebra.basis_names = list(names)
    antipode = h.antipode.T.copy() if h.antipode is not None else None
    return HopfAlgebra(coalgebra, algebra, antipode, name=_star_name(h.name or "H"))


def taft(n: int, field: CyclotomicField) -> HopfAlgebra:
    """T_n: g^n = 1, x^n = 0, xg = ζ gx, Δg = g⊗g, Δx = x⊗1 + g⊗x; basis g^a x^b at a·n + b."""
    zeta = _root_of_unity(n, field)
    size = n * n

    def product(i: int, j: int) -> Dict[int, Scalar]:
        a, b = divmod(i, n)
        c, d = divmod(j, n)
        if b + d >= n:
            return {}
        # x^b g^c = ζ^{bc} g^c x^b
        return {((a + c) % n) * n + b + d: zeta ** (b * c)}

    names = [(("g" if a == 1 else f"g^{a}") if a else "") + (("x" if b == 1 else f"x^{b}") if b else "") or "1"
             for a in range(n) for b in range(n)]
    alg = _algebra(field, size, product, 0, names)
    g, x = n, 1
    deltas = {
        "g": _delta(size, field, [(g, g, 1)]),
        "x": _delta(size, field, [(x, 0, 1), (g, x, 1)]),
    }
    words = [["g"] * a + ["x"] * b for a in range(n) for b in range(n)]
    counit = [1 if b == 0 else 0 for a in range(n) for b in range(n)]
    coalgebra = _coalgebra_from_generators(alg, deltas, words, counit)
    return _finish(HopfAlgebra(coalgebra, alg, name="sweedler" if n == 2 else f"taft{n}"))


def pointed8(field: CyclotomicField) -> HopfAlgebra:
    """g⁴ = 1, x² = g² − 1, xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x; basis g^a x^b at 2a + b."""

    def product(i: int, j: int) -> Dict[int, int]:
        a, b = divmod(i, 2)
        c, d = divmod(j, 2)
        sign = -1 if b * c % 2 else 1
        power = (a + c) % 4
        if b + d < 2:
            return {power * 2 + b + d: sign}
        # x² = g² − 1
        return {((power + 2) % 4) * 2: sign, power * 2: -sign}

    names = [(("g" if a == 1 else f"g^{a}") if a else "") + ("x" if b else "") or "1" for a in range(4) for b in range(2)]
    alg = _algebra(field, 8, product, 0, names)
    deltas = {"g": _delta(8, field, [(2, 2, 1)]), "x": _delta(8, field, [(1, 0, 1), (2, 1, 1)])}
    words = [["g"] * a + ["x"] * b for a in range(4) for b in range(2)]
    counit = [1 if b == 0 else 0 for a in range(4) for b in range(2)]
    coalgebra = _coalgebra_from_generators(alg, deltas, words, counit)
    return _finish(HopfAlgebra(coalgebra, alg, name="pointed8"))


def matrix_coalgebra(d: int, field: CyclotomicField) -> Coalgebra:
    """M^c(d) with basis e_ij at i·d + j and Δe_ij = Σ_k e_ik⊗e_kj."""
    n = d * d
    comul = zeros((n, n, n), field)
    counit = zeros(n, field)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                comul[i * d + j, i * d + k, k * d + j] = field.one
            if i == j:
                counit[i * d + j] = field.one
    names = [f"e{i + 1}{j + 1}" for i in range(d) for j in range(d)]
    return _finish_coalgebra(Coalgebra(field, comul, counit, names), f"M^c({d})")


def direct_sum(parts: List[Coalgebra]) -> Coalgebra:
    field = get_field(math.lcm(*[p.field.conductor for p in parts]))
    n = sum(p.dim for p in parts)
    comul = zeros((n, n, n), field)
    counit = zeros(n, field)
    names = []
    offset = 0
    for index, part in enumerate(parts):
        for i, row in enumerate(part.terms):
            for j, k, value in row:
                comul[offset + i, offset + j, offset + k] = as_scalar(value, field)
            counit[offset + i] = as_scalar(part.counit[i], field)
        names.extend(f"{name}_{index}" for name in part.basis_names)
        offset += part.dim
    return _finish_coalgebra(Coalgebra(field, comul, counit, names), "direct sum")


def _scalar_param(value: Any, field: CyclotomicField) -> Scalar:
    if isinstance(value, str):
        return parse_scalar(value, field)
    return as_scalar(value, field)


def build(zoo_spec: ZooSpec) -> Built:
    """Build and verify the object a ZooSpec describes."""
    field = get_field(zoo_spec.default_conductor())
    p = zoo_spec.param_dict
    family = zoo_spec.family

    def sub(part: ZooSpec) -> Built:
        if part.conductor is None:
            part = ZooSpec(part.family, part.params, part.parts, field.conductor)
        return build(part)

    if family is ZooFamily.GROUP_ALGEBRA:
        return group_algebra(GROUPS[p["group"]](p["n"]), field)
    if family is ZooFamily.DUAL_GROUP_ALGEBRA:
        return _finish(dualize(group_algebra(GROUPS[p["group"]](p["n"]), field)))
    if family is ZooFamily.TAFT:
        return taft(p["n"], field)
    if family is ZooFamily.POINTED8:
        return pointed8(field)
    if family is ZooFamily.NONPOINTED8:
        h = _finish(dualize(pointed8(field)))
        h.name = "nonpointed8"
        return h
    if family is ZooFamily.MATRIX_COALGEBRA:
        return matrix_coalgebra(p["d"], field)
    if family is ZooFamily.C2:
        c, _ = normal_form(MatrixLikeTag.C2, _scalar_param(p["a"], field), field)
        return _finish_coalgebra(c, "C2")
    if family is ZooFamily.C3:
        c, _ = normal_form(MatrixLikeTag.C3, field=field)
        return _finish_coalgebra(c, "C3")
    if family is ZooFamily.DIRECT_SUM:
        parts = [sub(part) for part in zoo_spec.parts]
        return direct_sum([part.coalgebra if isinstance(part, HopfAlgebra) else part for part in parts])
    if family is ZooFamily.DUAL:
        return _finish(dualize(sub(zoo_spec.parts[0])))
    if family is ZooFamily.TENSOR:
        left, right = (sub(part) for part in zoo_spec.parts)
        if not isinstance(left, HopfAlgebra) or not isinstance(right, HopfAlgebra):
            raise ValidationError("tensor products are built from Hopf algebras")
        return _finish(tensor_product(left, right))
    raise ValidationError("unknown zoo family", {"family": family.value})


# -- textual specs --------------------------------------------------------------------

ALIASES = {"sweedler": ["taft", "2"]}


def parse_zoo_spec(tokens: List[str]) -> ZooSpec:
    """Parse e.g. ``dual group_algebra dihedral 7`` or ``tensor nonpointed8 group_algebra cyclic 3``."""
    result, rest = _parse(list(tokens))
    if rest:
        raise ValidationError("unexpected trailing zoo arguments", {"rest": rest})
    return result


def _take_int(tokens: List[str], name: str) -> Tuple[int, List[str]]:
    if not tokens:
        raise ValidationError(f"missing zoo parameter {name}")
    try:
        return int(tokens[0]), tokens[1:]
    except ValueError:
        raise ValidationError(f"zoo parameter {name} must be an integer", {"value": tokens[0]})


def _parse(tokens: List[str]) -> Tuple[ZooSpec, List[str]]:
    if not tokens:
        raise ValidationError("missing zoo family")
    head, rest = tokens[0], tokens[1:]
    if head in ALIASES:
        head, rest = ALIASES[head][0], ALIASES[head][1:] + rest
    try:
        family = ZooFamily(head)
    except ValueError:
        raise ValidationError("unknown zoo family", {"family": head, "known": [f.value for f in ZooFamily]})
    if family in (ZooFamily.GROUP_ALGEBRA, ZooFamily.DUAL_GROUP_ALGEBRA):
        if not rest:
            raise ValidationError("missing group name")
        group, rest = rest[0], rest[1:]
        n, rest = _take_int(rest, "n")
        return spec(family, group=group, n=n), rest
    if family is ZooFamily.TAFT:
        n, rest = _take_int(rest, "n")
        return spec(family, n=n), rest
    if family is ZooFamily.MATRIX_COALGEBRA:
        d, rest = _take_int(rest, "d")
        return spec(family, d=d), rest
    if family is ZooFamily.C2:
        if not rest:
            raise ValidationError("missing zoo parameter a")
        return spec(family, a=rest[0]), rest[1:]
    if family is ZooFamily.DUAL:
        inner, rest = _parse(rest)
        return spec(family, inner), rest
    if family is ZooFamily.TENSOR:
        left, rest = _parse(rest)
        right, rest = _parse(rest)
        return spec(family, left, right), rest
    if family is ZooFamily.DIRECT_SUM:
        count, rest = _take_int(rest, "count")
        parts = []
        for _ in range(count):
            part, rest = _parse(rest)
            parts.append(part)
        return spec(family, *parts), rest
    return spec(family), rest
