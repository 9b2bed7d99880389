"""
Exact linear algebra over Q(ζ_n) on numpy object arrays of Scalars.

Vectors are 1-d object arrays, linear maps are 2-d object arrays acting on
column vectors (shape (codomain, domain)). Subspaces are stored by their
canonical reduced row echelon basis.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from exactmath.scalar import CyclotomicField, Number, Scalar, as_scalar
from utils.exceptions import ValidationError

logger = logging.getLogger(__name__)


# -- array construction ---------------------------------------------------------------

def vector(entries: Iterable[Number], field: CyclotomicField) -> np.ndarray:
    entries = list(entries)
    out = np.empty(len(entries), dtype=object)
    for i, e in enumerate(entries):
        out[i] = as_scalar(e, field)
    return out


def zeros(shape, field: CyclotomicField) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(field.zero)
    return out


def identity(n: int, field: CyclotomicField) -> np.ndarray:
    out = zeros((n, n), field)
    for i in range(n):
        out[i, i] = field.one
    return out


def unit_vector(n: int, i: int, field: CyclotomicField) -> np.ndarray:
    out = zeros(n, field)
    out[i] = field.one
    return out


def matrix(rows: Sequence[Sequence[Number]], field: CyclotomicField, ncols: Optional[int] = None) -> np.ndarray:
    rows = [list(r) for r in rows]
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    out = zeros((len(rows), width), field)
    for i, r in enumerate(rows):
        if len(r) != width:
            raise ValidationError("ragged matrix rows", {"row": i, "length": len(r), "expected": width})
        for j, e in enumerate(r):
            out[i, j] = as_scalar(e, field)
    return out


def normalize(arr: np.ndarray, field: CyclotomicField) -> np.ndarray:
    """Replace stray integer entries (numpy sums of empty ranges) by field elements."""
    out = np.empty(arr.shape, dtype=object)
    flat_in, flat_out = arr.reshape(-1), out.reshape(-1)
    for i, e in enumerate(flat_in):
        flat_out[i] = as_scalar(e, field)
    return out


def is_zero_array(arr: np.ndarray) -> bool:
    return all(e == 0 for e in arr.reshape(-1))


def arrays_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.reshape(-1), b.reshape(-1)))


def mat_vec(m: np.ndarray, v: np.ndarray, field: CyclotomicField) -> np.ndarray:
    """m @ v skipping zero coordinates of v."""
    out = zeros(m.shape[0], field)
    for j in range(v.shape[0]):
        c = v[j]
        if c == 0:
            continue
        column = m[:, j]
        for i in range(m.shape[0]):
            if column[i] != 0:
                out[i] = out[i] + column[i] * c
    return out


def mat_mul(a: np.ndarray, b: np.ndarray, field: CyclotomicField) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValidationError("matrix shapes do not compose", {"left": a.shape, "right": b.shape})
    out = zeros((a.shape[0], b.shape[1]), field)
    for j in range(b.shape[1]):
        out[:, j] = mat_vec(a, b[:, j], field)
    return out


def tensor_vector(u: np.ndarray, v: np.ndarray, field: CyclotomicField) -> np.ndarray:
    """u ⊗ v flattened with index i·dim(v) + j."""
    out = zeros(u.shape[0] * v.shape[0], field)
    width = v.shape[0]
    nonzero_v = [(j, b) for j, b in enumerate(v) if b != 0]
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in nonzero_v:
            out[i * width + j] = a * b
    return out


def tensor_map(f: np.ndarray, g: np.ndarray, field: CyclotomicField) -> np.ndarray:
    """The Kronecker product f ⊗ g as a matrix on flattened tensors."""
    rows_f, cols_f = f.shape
    rows_g, cols_g = g.shape
    out = zeros((rows_f * rows_g, cols_f * cols_g), field)
    for i in range(rows_f):
        for j in range(cols_f):
            a = f[i, j]
            if a == 0:
                continue
            for k in range(rows_g):
                for m in range(cols_g):
                    b = g[k, m]
                    if b != 0:
                        out[i * rows_g + k, j * cols_g + m] = a * b
    return out


# -- row reduction --------------------------------------------------------------------

def rref(rows: np.ndarray, field: CyclotomicField) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form: leftmost pivots, leading ones, zero rows dropped."""
    a = normalize(rows, field) if rows.size else rows.copy()
    if a.ndim != 2:
        raise ValidationError("rref expects a 2-d array", {"shape": a.shape})
    m, n = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[[r, p]] = a[[p, r]]
        inverse = a[r, c].inverse()
        support = [j for j in range(c, n) if a[r, j] != 0]
        for j in support:
            a[r, j] = a[r, j] * inverse
        for i in range(m):
            if i == r:
                continue
            factor = a[i, c]
            if factor == 0:
                continue
            for j in support:
                a[i, j] = a[i, j] - factor * a[r, j]
        pivots.append(c)
        r += 1
    return a[:r].copy(), pivots


@dataclass(eq=False)
class Subspace:
    """A subspace of k^ambient_dim stored by its canonical RREF basis (rows)."""

    ambient_dim: int
    basis: np.ndarray
    field: CyclotomicField
    pivots: Tuple[int, ...] = dataclass_field(default=())

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @classmethod
    def span(cls, vectors: Iterable[np.ndarray], ambient_dim: int, field: CyclotomicField) -> "Subspace":
        rows = [np.asarray(v, dtype=object) for v in vectors]
        if not rows:
            return cls.zero(ambient_dim, field)
        for v in rows:
            if v.shape != (ambient_dim,):
                raise ValidationError(
                    "vector does not live in the ambient space",
                    {"shape": v.shape, "ambient_dim": ambient_dim}
                )
        stacked = np.empty((len(rows), ambient_dim), dtype=object)
        for i, v in enumerate(rows):
            stacked[i, :] = v
        reduced, pivots = rref(stacked, field)
        return cls(ambient_dim, reduced, field, tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int, field: CyclotomicField) -> "Subspace":
        return cls(ambient_dim, np.empty((0, ambient_dim), dtype=object), field, ())

    @classmethod
    def full(cls, ambient_dim: int, field: CyclotomicField) -> "Subspace":
        return cls(ambient_dim, identity(ambient_dim, field), field, tuple(range(ambient_dim)))

    def vectors(self) -> List[np.ndarray]:
        return [self.basis[i].copy() for i in range(self.dim)]

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """v minus its component along the pivot columns; zero iff v lies in the subspace."""
        out = normalize(np.asarray(v, dtype=object), self.field)
        for r, p in enumerate(self.pivots):
            c = out[p]
            if c == 0:
                continue
            row = self.basis[r]
            for j in range(self.ambient_dim):
                if row[j] != 0:
                    out[j] = out[j] - c * row[j]
        return out

    def contains(self, v: np.ndarray) -> bool:
        return is_zero_array(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(self.contains(v) for v in other.vectors())

    def coordinates(self, v: np.ndarray) -> np.ndarray:
        """Coefficients of v (assumed in the subspace) in the RREF basis."""
        return vector([v[p] for p in self.pivots], self.field)

    def non_pivots(self) -> List[int]:
        pivots = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in pivots]

    def quotient_map(self) -> np.ndarray:
        """Matrix of k^n -> k^n / W, coordinates of the reduced vector at non-pivot columns."""
        free = self.non_pivots()
        q = zeros((len(free), self.ambient_dim), self.field)
        for row, j in enumerate(free):
            q[row, j] = self.field.one
            for r, p in enumerate(self.pivots):
                c = self.basis[r, j]
                if c != 0:
                    q[row, p] = -c
        return q

    def complement_basis(self) -> List[np.ndarray]:
        """Unit vectors on the non-pivot columns; together with the basis they span k^n."""
        return [unit_vector(self.ambient_dim, j, self.field) for j in self.non_pivots()]

    def canonical_key(self) -> Tuple:
        return (self.dim, tuple(e.sort_key() for e in self.basis.reshape(-1)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and arrays_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.pivots, tuple(self.basis.reshape(-1))))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise ValidationError(
            "subspaces live in different ambient spaces",
            {"left": u.ambient_dim, "right": v.ambient_dim}
        )


def _check_map(f: np.ndarray, domain: Optional[int] = None, codomain: Optional[int] = None) -> None:
    if f.ndim != 2 or (domain is not None and f.shape[1] != domain) or (codomain is not None and f.shape[0] != codomain):
        raise ValidationError(
            "matrix shape inconsistent with the linear map",
            {"shape": f.shape, "domain": domain, "codomain": codomain}
        )


# -- subspace operations --------------------------------------------------------------

def kernel(f: np.ndarray, field: CyclotomicField) -> Subspace:
    """{x : f x = 0} for f of shape (m, n)."""
    _check_map(f)
    m, n = f.shape
    if m == 0:
        return Subspace.full(n, field)
    reduced, pivots = rref(f, field)
    pivot_set = set(pivots)
    vectors = []
    for free in range(n):
        if free in pivot_set:
            continue
        x = zeros(n, field)
        x[free] = field.one
        for r, p in enumerate(pivots):
            c = reduced[r, free]
            if c != 0:
                x[p] = -c
        vectors.append(x)
    return Subspace.span(vectors, n, field)


def solve(f: np.ndarray, b: np.ndarray, field: CyclotomicField) -> Optional[np.ndarray]:
    """One solution x of f x = b, or None when the system is inconsistent."""
    m, n = f.shape
    augmented = zeros((m, n + 1), field)
    augmented[:, :n] = f
    augmented[:, n] = b
    reduced, pivots = rref(augmented, field)
    if n in pivots:
        return None
    x = zeros(n, field)
    for r, p in enumerate(pivots):
        x[p] = reduced[r, n]
    return x


def rank(rows: np.ndarray, field: CyclotomicField) -> int:
    if rows.size == 0:
        return 0
    return len(rref(rows, field)[1])


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace.span(u.vectors() + v.vectors(), u.ambient_dim, u.field)


def subspace_intersection(u: Subspace, v: Subspace) -> Subspace:
    """Combinations of u's basis killed by the quotient map of v."""
    _check_ambient(u, v)
    if u.dim == 0 or v.dim == v.ambient_dim:
        return u
    if v.dim == 0:
        return Subspace.zero(u.ambient_dim, u.field)
    images = mat_mul(v.quotient_map(), u.basis.T.copy(), u.field)
    coefficients = kernel(images, u.field)
    vectors = [mat_vec(u.basis.T.copy(), alpha, u.field) for alpha in coefficients.vectors()]
    return Subspace.span(vectors, u.ambient_dim, u.field)


def subspace_image(f: np.ndarray, u: Subspace) -> Subspace:
    _check_map(f, domain=u.ambient_dim)
    return Subspace.span([mat_vec(f, v, u.field) for v in u.vectors()], f.shape[0], u.field)


def subspace_preimage(f: np.ndarray, w: Subspace) -> Subspace:
    """{x : f x ∈ W}, the kernel of q_W ∘ f."""
    _check_map(f, codomain=w.ambient_dim)
    if w.dim == w.ambient_dim:
        return Subspace.full(f.shape[1], w.field)
    return kernel(mat_mul(w.quotient_map(), f, w.field), w.field)


def subspace_quotient_map(w: Subspace) -> np.ndarray:
    return w.quotient_map()


def tensor_subspace(u: Subspace, v: Subspace) -> Subspace:
    """U ⊗ V inside k^m ⊗ k^n; the Kronecker rows of RREF bases are already in RREF up to order."""
    vectors = [tensor_vector(a, b, u.field) for a in u.vectors() for b in v.vectors()]
    return Subspace.span(vectors, u.ambient_dim * v.ambient_dim, u.field)


def annihilator(u: Subspace) -> Subspace:
    """{c ∈ (k^n)* : c(u) = 0 for u ∈ U}, in dual coordinates."""
    if u.dim == 0:
        return Subspace.full(u.ambient_dim, u.field)
    return kernel(u.basis, u.field)


def restrict_map(f: np.ndarray, u: Subspace, v: Subspace) -> np.ndarray:
    """Matrix of f|U : U -> V in the RREF bases (f(U) ⊆ V assumed)."""
    out = zeros((v.dim, u.dim), u.field)
    for j, x in enumerate(u.vectors()):
        image = mat_vec(f, x, u.field)
        if not v.contains(image):
            raise ValidationError("map does not send the subspace into the target", {"column": j})
        out[:, j] = v.coordinates(image)
    return out


def invert(m: np.ndarray, field: CyclotomicField) -> np.ndarray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValidationError("only square matrices are invertible", {"shape": m.shape})
    augmented = zeros((n, 2 * n), field)
    augmented[:, :n] = m
    augmented[:, n:] = identity(n, field)
    reduced, pivots = rref(augmented, field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValidationError("matrix is singular", {"rank": len([p for p in pivots if p < n])})
    return reduced[:, n:].copy()


def solve_sparse(
    rows: List[Dict[int, Scalar]],
    rhs: List[Scalar],
    nvars: int,
    field: CyclotomicField,
) -> Optional[List[Scalar]]:
    """Solve a sparse system given as {column: coefficient} rows; free variables are set to 0.

    Each stored pivot row has its pivot at its smallest column, so reducing an
    incoming row in increasing column order terminates.
    """
    pivots: Dict[int, Tuple[Dict[int, Scalar], Scalar]] = {}
    for row, value in zip(rows, rhs):
        current = {c: v for c, v in row.items() if v != 0}
        value = as_scalar(value, field)
        while True:
            hits = [c for c in current if c in pivots]
            if not hits:
                break
            col = min(hits)
            factor = current[col]
            pivot_row, pivot_value = pivots[col]
            for c, v in pivot_row.items():
                updated = current.get(c, field.zero) - factor * v
                if updated == 0:
                    current.pop(c, None)
                else:
                    current[c] = updated
            value = value - factor * pivot_value
        if not current:
            if value != 0:
                return None
            continue
        col = min(current)
        inverse = current[col].inverse()
        pivots[col] = ({c: v * inverse for c, v in current.items()}, value * inverse)
    solution = [field.zero] * nvars
    for col in sorted(pivots, reverse=True):
        pivot_row, value = pivots[col]
        acc = value
        for c, v in pivot_row.items():
            if c != col:
                acc = acc - v * solution[c]
        solution[col] = acc
    return solution
