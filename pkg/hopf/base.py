"""
Hopf algebras by structure constants.

A HopfAlgebra pairs a Coalgebra and an AlgebraSC on the same basis with an
optional antipode matrix (column i holds S(b_i)). Construction does not run
any checks; zoo builders verify, while test fixtures may assemble partial
structures on purpose.
"""

import logging
import math
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from coalgebra.base import AlgebraSC, AxiomReport, Coalgebra, check_algebra, check_coalgebra
from coalgebra.coradical import grouplikes
from coalgebra.semisimple import DEFAULT_SETTINGS, SplittingSettings
from exactmath.linalg import arrays_equal, mat_vec, tensor_map, tensor_vector, unit_vector, zeros
from exactmath.scalar import Scalar, get_field
from utils.exceptions import InternalInvariantError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class HopfAlgebra:
    """Bialgebra data plus an optional antipode."""

    coalgebra: Coalgebra
    algebra: AlgebraSC
    antipode: Optional[np.ndarray] = None
    name: str = ""
    cache: Dict[str, Any] = dataclass_field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if self.coalgebra.dim != self.algebra.dim:
            raise ValidationError(
                "coalgebra and algebra must share a basis",
                {"coalgebra_dim": self.coalgebra.dim, "algebra_dim": self.algebra.dim}
            )
        if self.coalgebra.field != self.algebra.field:
            raise ValidationError(
                "coalgebra and algebra live over different fields",
                {"coalgebra": self.coalgebra.field.conductor, "algebra": self.algebra.field.conductor}
            )
        if self.antipode is not None and self.antipode.shape != (self.dim, self.dim):
            raise ValidationError("antipode must be a dim × dim matrix", {"shape": self.antipode.shape})

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    @property
    def unit(self) -> np.ndarray:
        return self.algebra.unit

    def basis_vector(self, i: int) -> np.ndarray:
        return unit_vector(self.dim, i, self.field)

    def product(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.algebra.product(u, v)

    def apply_antipode(self, v: np.ndarray) -> np.ndarray:
        if self.antipode is None:
            raise ValidationError("antipode has not been computed", {"name": self.name})
        return mat_vec(self.antipode, v, self.field)

    def __repr__(self) -> str:
        label = self.name or "H"
        return f"HopfAlgebra({label}, dim={self.dim}, field={self.field!r})"


@dataclass
class GroupData:
    """G(H) with its multiplication table (indices into ``grouplikes``)."""

    grouplikes: List[np.ndarray]
    table: List[List[int]]
    identity: int

    @property
    def order(self) -> int:
        return len(self.grouplikes)

    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i] for i in range(self.order) for j in range(self.order))


def _index_of(vectors: List[np.ndarray], v: np.ndarray) -> Optional[int]:
    for i, w in enumerate(vectors):
        if arrays_equal(v, w):
            return i
    return None


def group_data(h: HopfAlgebra, settings: SplittingSettings = DEFAULT_SETTINGS) -> GroupData:
    """The grouplikes of H over its field, with multiplication table."""
    key = ("group_data", settings)
    if key in h.cache:
        return h.cache[key]
    elements = grouplikes(h.coalgebra, settings)
    identity = _index_of(elements, h.unit)
    if identity is None:
        raise InternalInvariantError("unit is not among the grouplikes", {"name": h.name})
    table = []
    for g in elements:
        row = []
        for k in elements:
            index = _index_of(elements, h.product(g, k))
            if index is None:
                raise InternalInvariantError("grouplikes are not closed under multiplication", {"name": h.name})
            row.append(index)
        table.append(row)
    for row in table:
        if identity not in row:
            raise InternalInvariantError("grouplike without inverse", {"name": h.name})
    data = GroupData(elements, table, identity)
    logger.info(f"G({h.name or 'H'}) has order {data.order}")
    h.cache[key] = data
    return data


def _delta_product(h: HopfAlgebra, i: int, j: int) -> Dict[Tuple[int, int], Scalar]:
    """Δ(b_i)Δ(b_j) in H⊗H as a sparse dict."""
    c, a = h.coalgebra, h.algebra
    products: Dict[Tuple[int, int], List[Tuple[int, Scalar]]] = {}

    def mul_terms(p: int, q: int) -> List[Tuple[int, Scalar]]:
        if (p, q) not in products:
            products[(p, q)] = [(k, value) for jj, k, value in a.terms[p] if jj == q]
        return products[(p, q)]

    out: Dict[Tuple[int, int], Scalar] = {}
    for p, q, x in c.terms[i]:
        for r, s, y in c.terms[j]:
            for k, m1 in mul_terms(p, r):
                for t, m2 in mul_terms(q, s):
                    out[(k, t)] = out.get((k, t), h.field.zero) + x * y * m1 * m2
    return {key: value for key, value in out.items() if value != 0}


def _product_delta(h: HopfAlgebra, i: int, j: int) -> Dict[Tuple[int, int], Scalar]:
    """Δ(b_i b_j) as a sparse dict."""
    out: Dict[Tuple[int, int], Scalar] = {}
    for jj, k, m in h.algebra.terms[i]:
        if jj != j:
            continue
        for p, q, x in h.coalgebra.terms[k]:
            out[(p, q)] = out.get((p, q), h.field.zero) + m * x
    return {key: value for key, value in out.items() if value != 0}


def check_bialgebra(h: HopfAlgebra) -> AxiomReport:
    """Coalgebra and algebra axioms, then Δ and ε multiplicative and unital."""
    report = check_coalgebra(h.coalgebra).merge(check_algebra(h.algebra))
    report.checked = "bialgebra"
    c, n = h.coalgebra, h.dim
    for i in range(n):
        for j in range(n):
            lhs = _product_delta(h, i, j)
            rhs = _delta_product(h, i, j)
            if lhs != rhs:
                report.violations.append({"axiom": "comultiplicative", "index": [i, j]})
            product = h.product(h.basis_vector(i), h.basis_vector(j))
            if c.epsilon(product) != c.counit[i] * c.counit[j]:
                report.violations.append({"axiom": "counit_multiplicative", "index": [i, j]})
    delta_unit = c.delta(h.unit).reshape(-1)
    if not arrays_equal(delta_unit, tensor_vector(h.unit, h.unit, h.field)):
        report.violations.append({"axiom": "comultiplication_of_unit"})
    if c.epsilon(h.unit) != 1:
        report.violations.append({"axiom": "counit_of_unit", "value": c.epsilon(h.unit).to_text()})
    if report.violations:
        logger.info(f"bialgebra check found {len(report.violations)} violations")
    return report


def tensor_product(h1: HopfAlgebra, h2: HopfAlgebra) -> HopfAlgebra:
    """H1 ⊗ H2 with basis b_i⊗b'_j at index i·dim(H2) + j."""
    k = get_field(math.lcm(h1.field.conductor, h2.field.conductor))
    n1, n2 = h1.dim, h2.dim
    n = n1 * n2
    comul = zeros((n, n, n), k)
    mul = zeros((n, n, n), k)
    for i in range(n1):
        for a, c, x in h1.coalgebra.terms[i]:
            for j in range(n2):
                for b, d, y in h2.coalgebra.terms[j]:
                    comul[i * n2 + j, a * n2 + b, c * n2 + d] = (x * y).lift(k)
        for a, c, x in h1.algebra.terms[i]:
            for j in range(n2):
                for b, d, y in h2.algebra.terms[j]:
                    mul[i * n2 + j, a * n2 + b, c * n2 + d] = (x * y).lift(k)
    counit = tensor_vector(h1.coalgebra.counit, h2.coalgebra.counit, k)
    unit = tensor_vector(h1.unit, h2.unit, k)
    names = [f"{p}⊗{q}" for p in h1.coalgebra.basis_names for q in h2.coalgebra.basis_names]
    antipode = None
    if h1.antipode is not None and h2.antipode is not None:
        antipode = tensor_map(h1.antipode, h2.antipode, k)
    return HopfAlgebra(
        Coalgebra(k, comul, counit, names),
        AlgebraSC(k, mul, unit, list(names)),
        antipode,
        name=f"{h1.name or 'H1'}⊗{h2.name or 'H2'}"
    )
