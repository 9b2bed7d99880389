"""
Coalgebras and algebras given by structure constants.

Both types hold dense ``(n, n, n)`` numpy object arrays of Scalars:
Δ(b_i) = Σ_{j,k} comul[i, j, k] b_j⊗b_k and b_i b_j = Σ_k mul[i, j, k] b_k.
Sparse term lists are cached on construction since almost every operation
walks the nonzero constants.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from exactmath.linalg import Subspace, invert, is_zero_array, mat_mul, tensor_vector, zeros
from exactmath.scalar import CyclotomicField, Scalar
from utils.exceptions import ValidationError

logger = logging.getLogger(__name__)

Term = Tuple[int, int, Scalar]


@dataclass
class AxiomReport:
    """Outcome of an axiom check; ``violations`` names every failing instance."""

    checked: str
    violations: List[Dict[str, Any]] = dataclass_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(f"{self.checked}+{other.checked}", self.violations + other.violations)

    def to_dict(self) -> Dict[str, Any]:
        return {"checked": self.checked, "ok": self.ok, "violations": self.violations}


def _sparse_terms(constants: np.ndarray) -> List[List[Term]]:
    n = constants.shape[0]
    terms: List[List[Term]] = []
    for i in range(n):
        row = []
        for j in range(constants.shape[1]):
            for k in range(constants.shape[2]):
                c = constants[i, j, k]
                if c != 0:
                    row.append((j, k, c))
        terms.append(row)
    return terms


def _default_names(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(n)]


@dataclass(eq=False)
class Coalgebra:
    """A finite-dimensional coalgebra: comultiplication constants and counit."""

    field: CyclotomicField
    comul: np.ndarray
    counit: np.ndarray
    basis_names: List[str] = dataclass_field(default_factory=list)
    cache: Dict[str, Any] = dataclass_field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        n = self.counit.shape[0]
        if self.comul.shape != (n, n, n):
            raise ValidationError(
                "comultiplication constants must have shape (dim, dim, dim)",
                {"shape": self.comul.shape, "dim": n}
            )
        if not self.basis_names:
            self.basis_names = _default_names("b", n)
        if len(self.basis_names) != n:
            raise ValidationError("basis names do not match the dimension", {"names": len(self.basis_names), "dim": n})

    @property
    def dim(self) -> int:
        return self.counit.shape[0]

    @cached_property
    def terms(self) -> List[List[Term]]:
        return _sparse_terms(self.comul)

    @cached_property
    def comul_matrix(self) -> np.ndarray:
        """Δ as an (n², n) matrix, row index j·n + k."""
        n = self.dim
        out = zeros((n * n, n), self.field)
        for i, row in enumerate(self.terms):
            for j, k, c in row:
                out[j * n + k, i] = c
        return out

    def delta(self, v: np.ndarray) -> np.ndarray:
        """Δv as an n×n matrix M with Δv = Σ M[j, k] b_j⊗b_k."""
        n = self.dim
        out = zeros((n, n), self.field)
        for i in range(n):
            a = v[i]
            if a == 0:
                continue
            for j, k, c in self.terms[i]:
                out[j, k] = out[j, k] + a * c
        return out

    def epsilon(self, v: np.ndarray) -> Scalar:
        total = self.field.zero
        for a, e in zip(v, self.counit):
            if a != 0 and e != 0:
                total = total + a * e
        return total

    def is_grouplike(self, g: np.ndarray) -> bool:
        if self.epsilon(g) != 1:
            return False
        return is_zero_array(self.delta(g).reshape(-1) - tensor_vector(g, g, self.field))

    def right_hit_matrix(self, f: np.ndarray) -> np.ndarray:
        """Matrix of x ↦ x ↼ f = Σ f(x_1) x_2."""
        n = self.dim
        out = zeros((n, n), self.field)
        for i, row in enumerate(self.terms):
            for j, k, c in row:
                if f[j] != 0:
                    out[k, i] = out[k, i] + c * f[j]
        return out

    def left_hit_matrix(self, f: np.ndarray) -> np.ndarray:
        """Matrix of x ↦ f ⇀ x = Σ x_1 f(x_2)."""
        n = self.dim
        out = zeros((n, n), self.field)
        for i, row in enumerate(self.terms):
            for j, k, c in row:
                if f[k] != 0:
                    out[j, i] = out[j, i] + c * f[k]
        return out

    def wedge_matrix(self, left_quotient: np.ndarray, right_quotient: np.ndarray) -> np.ndarray:
        """Matrix of x ↦ (q_U ⊗ q_V)Δx, whose kernel is Δ^{-1}(U⊗C + C⊗V)."""
        n = self.dim
        rows_u, rows_v = left_quotient.shape[0], right_quotient.shape[0]
        out = zeros((rows_u * rows_v, n), self.field)
        for i, row in enumerate(self.terms):
            for j, k, c in row:
                left = left_quotient[:, j]
                right = right_quotient[:, k]
                for a in range(rows_u):
                    if left[a] == 0:
                        continue
                    la = left[a] * c
                    for b in range(rows_v):
                        if right[b] != 0:
                            out[a * rows_v + b, i] = out[a * rows_v + b, i] + la * right[b]
        return out

    def dual_algebra(self) -> "AlgebraSC":
        return dual_algebra(self)

    def __repr__(self) -> str:
        return f"Coalgebra(dim={self.dim}, field={self.field!r})"


@dataclass(eq=False)
class AlgebraSC:
    """A finite-dimensional associative unital algebra by structure constants."""

    field: CyclotomicField
    mul: np.ndarray
    unit: np.ndarray
    basis_names: List[str] = dataclass_field(default_factory=list)

    def __post_init__(self):
        n = self.unit.shape[0]
        if self.mul.shape != (n, n, n):
            raise ValidationError(
                "multiplication constants must have shape (dim, dim, dim)",
                {"shape": self.mul.shape, "dim": n}
            )
        if not self.basis_names:
            self.basis_names = _default_names("a", n)

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    @cached_property
    def terms(self) -> List[List[Term]]:
        """terms[i] lists (j, k, m_ijk) with m_ijk ≠ 0."""
        return _sparse_terms(self.mul)

    def product(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = zeros(self.dim, self.field)
        nonzero_v = {j for j in range(self.dim) if v[j] != 0}
        for i in range(self.dim):
            a = u[i]
            if a == 0:
                continue
            for j, k, c in self.terms[i]:
                if j in nonzero_v:
                    out[k] = out[k] + a * v[j] * c
        return out

    def left_mult_matrix(self, u: np.ndarray) -> np.ndarray:
        """Matrix of x ↦ u·x."""
        n = self.dim
        out = zeros((n, n), self.field)
        for i in range(n):
            a = u[i]
            if a == 0:
                continue
            for j, k, c in self.terms[i]:
                out[k, j] = out[k, j] + a * c
        return out

    def right_mult_matrix(self, u: np.ndarray) -> np.ndarray:
        """Matrix of x ↦ x·u."""
        n = self.dim
        out = zeros((n, n), self.field)
        for i in range(n):
            for j, k, c in self.terms[i]:
                if u[j] != 0:
                    out[k, i] = out[k, i] + u[j] * c
        return out

    def power(self, u: np.ndarray, exponent: int) -> np.ndarray:
        result = self.unit.copy()
        for _ in range(exponent):
            result = self.product(result, u)
        return result

    def dual_coalgebra(self) -> Coalgebra:
        n = self.dim
        comul = zeros((n, n, n), self.field)
        for i, row in enumerate(self.terms):
            for j, k, c in row:
                comul[k, i, j] = c
        return Coalgebra(self.field, comul, self.unit.copy(), list(self.basis_names))

    def __repr__(self) -> str:
        return f"AlgebraSC(dim={self.dim}, field={self.field!r})"


@dataclass(eq=False)
class SimpleComponent:
    """A simple subcoalgebra C_τ of dimension d², with a comatrix basis when split."""

    subcoalgebra: Subspace
    d: int
    matrix_basis: Optional[List[np.ndarray]] = None
    index: int = -1
    block_index: int = -1

    @property
    def is_grouplike(self) -> bool:
        return self.d == 1

    @property
    def dim(self) -> int:
        return self.d * self.d

    def unit(self, i: int, j: int) -> np.ndarray:
        """The comatrix element e_ij (0-based indices)."""
        if self.matrix_basis is None:
            raise ValidationError("component has no matrix basis", {"index": self.index})
        return self.matrix_basis[i * self.d + j]

    @property
    def grouplike(self) -> np.ndarray:
        if not self.is_grouplike:
            raise ValidationError("component is not grouplike", {"index": self.index, "d": self.d})
        return self.unit(0, 0)

    def sort_key(self) -> Tuple:
        return (self.d, self.subcoalgebra.canonical_key())

    def __repr__(self) -> str:
        return f"SimpleComponent(index={self.index}, d={self.d})"


@dataclass(eq=False)
class NicholsData:
    """A coalgebra projection π onto C_0 with kernel I, the spaces P_n and the isotypic table of P_1."""

    pi: np.ndarray
    I: Subspace
    coradical: Subspace
    components: List[SimpleComponent]
    central_idempotents: List[np.ndarray]
    P: List[Subspace] = dataclass_field(default_factory=list)
    isotypic: Dict[Tuple[int, int], int] = dataclass_field(default_factory=dict)
    isotypic_spaces: Dict[Tuple[int, int], Subspace] = dataclass_field(default_factory=dict)
    seed: Optional[int] = None

    @property
    def p1(self) -> Subspace:
        if self.P:
            return self.P[0]
        return Subspace.zero(self.I.ambient_dim, self.I.field)


# -- axiom checks ---------------------------------------------------------------------

def _kron_delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def check_coalgebra(c: Coalgebra) -> AxiomReport:
    """Coassociativity and both counit laws, every violated instance listed."""
    report = AxiomReport("coalgebra")
    n = c.dim
    for i in range(n):
        left: Dict[Tuple[int, int, int], Scalar] = {}
        right: Dict[Tuple[int, int, int], Scalar] = {}
        for j, k, a in c.terms[i]:
            for p, q, b in c.terms[j]:
                key = (p, q, k)
                left[key] = left.get(key, c.field.zero) + a * b
            for p, q, b in c.terms[k]:
                key = (j, p, q)
                right[key] = right.get(key, c.field.zero) + a * b
        for key in sorted(set(left) | set(right)):
            lv, rv = left.get(key, c.field.zero), right.get(key, c.field.zero)
            if lv != rv:
                report.violations.append({
                    "axiom": "coassociativity",
                    "index": [i, *key],
                    "left": lv.to_text(),
                    "right": rv.to_text()
                })
        # (ε⊗id)Δ = id and (id⊗ε)Δ = id
        left_counit = zeros(n, c.field)
        right_counit = zeros(n, c.field)
        for j, k, a in c.terms[i]:
            if c.counit[j] != 0:
                left_counit[k] = left_counit[k] + c.counit[j] * a
            if c.counit[k] != 0:
                right_counit[j] = right_counit[j] + c.counit[k] * a
        for t in range(n):
            expected = _kron_delta(i, t)
            if left_counit[t] != expected:
                report.violations.append({"axiom": "left_counit", "index": [i, t], "value": left_counit[t].to_text()})
            if right_counit[t] != expected:
                report.violations.append({"axiom": "right_counit", "index": [i, t], "value": right_counit[t].to_text()})
    if report.violations:
        logger.info(f"coalgebra check found {len(report.violations)} violations")
    return report


def check_algebra(a: AlgebraSC) -> AxiomReport:
    """Associativity and the unit law."""
    report = AxiomReport("algebra")
    n = a.dim
    basis = [np.array([a.field.one if t == i else a.field.zero for t in range(n)], dtype=object) for i in range(n)]
    left_unit = a.left_mult_matrix(a.unit)
    right_unit = a.right_mult_matrix(a.unit)
    for i in range(n):
        for t in range(n):
            expected = _kron_delta(i, t)
            if left_unit[t, i] != expected or right_unit[t, i] != expected:
                report.violations.append({"axiom": "unit", "index": [i, t]})
    for i in range(n):
        for j in range(n):
            ij = a.product(basis[i], basis[j])
            for k in range(n):
                lhs = a.product(ij, basis[k])
                rhs = a.product(basis[i], a.product(basis[j], basis[k]))
                if not is_zero_array(lhs - rhs):
                    report.violations.append({"axiom": "associativity", "index": [i, j, k]})
    return report


def dual_algebra(c: Coalgebra) -> AlgebraSC:
    """C* with m[i][j][k] = c[k][i][j] and unit the counit."""
    n = c.dim
    mul = zeros((n, n, n), c.field)
    for k, row in enumerate(c.terms):
        for i, j, value in row:
            mul[i, j, k] = value
    names = [f"{name}*" for name in c.basis_names]
    return AlgebraSC(c.field, mul, c.counit.copy(), names)


def subcoalgebra_restriction(c: Coalgebra, u: Subspace) -> Coalgebra:
    """The coalgebra structure of a subcoalgebra U in its RREF basis."""
    n, m = c.dim, u.dim
    comul = zeros((m, m, m), c.field)
    counit = zeros(m, c.field)
    for i, x in enumerate(u.vectors()):
        dx = c.delta(x)
        rebuilt = zeros((n, n), c.field)
        for a, pa in enumerate(u.pivots):
            for b, pb in enumerate(u.pivots):
                coefficient = dx[pa, pb]
                if coefficient == 0:
                    continue
                comul[i, a, b] = coefficient
                rebuilt = rebuilt + np.outer(u.basis[a], u.basis[b]) * coefficient
        if not is_zero_array(rebuilt - dx):
            raise ValidationError("subspace is not a subcoalgebra", {"basis_index": i})
        counit[i] = c.epsilon(x)
    names = [f"u{i}" for i in range(m)]
    return Coalgebra(c.field, comul, counit, names)


def transport_coalgebra(c: Coalgebra, p: np.ndarray) -> Coalgebra:
    """The same coalgebra in the basis f_i = Σ_j p[j, i] b_j; vectors move by p⁻¹."""
    n = c.dim
    q = invert(p, c.field)
    comul = zeros((n, n, n), c.field)
    counit = zeros(n, c.field)
    for i in range(n):
        dx = zeros((n, n), c.field)
        for j in range(n):
            if p[j, i] == 0:
                continue
            counit[i] = counit[i] + p[j, i] * c.counit[j]
            for a, b, value in c.terms[j]:
                dx[a, b] = dx[a, b] + p[j, i] * value
        comul[i] = mat_mul(mat_mul(q, dx, c.field), q.T.copy(), c.field)
    return Coalgebra(c.field, comul, counit, [f"f{i}" for i in range(n)])
