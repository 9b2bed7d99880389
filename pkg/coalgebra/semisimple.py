"""
Semisimple structure of the dual algebra C*.

The radical comes from the trace form. Working in A/J (elements represented
by their reduction modulo J), the centre is split into primitive central
idempotents using minimal polynomials, each split block gets a full set of
matrix units, and the Wedderburn–Malcev complement lifts those units back
to A so that A = S ⊕ J as algebras.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

import numpy as np

from coalgebra.base import AlgebraSC, Coalgebra, SimpleComponent
from exactmath import polynomial as poly
from exactmath.linalg import (
    Subspace,
    identity,
    invert,
    is_zero_array,
    kernel,
    mat_mul,
    solve,
    zeros,
)
from exactmath.scalar import CyclotomicField
from utils.exceptions import ExtendFieldError, InternalInvariantError

logger = logging.getLogger(__name__)

Vector = np.ndarray


@dataclass(frozen=True)
class SplittingSettings:
    """Randomness and effort limits for idempotent splitting."""

    seed: int = 0
    max_split_attempts: int = 64
    random_coefficient_range: int = 3

    @classmethod
    def from_config(cls, config) -> "SplittingSettings":
        section = config.section("linear_algebra")
        return cls(
            seed=int(section.get("seed", 0)),
            max_split_attempts=int(section.get("max_split_attempts", 64)),
            random_coefficient_range=int(section.get("random_coefficient_range", 3)),
        )


DEFAULT_SETTINGS = SplittingSettings()


@dataclass
class SemisimpleBlock:
    """One simple block e·(A/J); split blocks carry matrix units E_ab (row-major)."""

    idempotent: Vector
    basis: List[Vector]
    d: Optional[int] = None
    units: Optional[List[Vector]] = None
    obstruction: Optional[poly.Poly] = None

    @property
    def split(self) -> bool:
        return self.units is not None

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class SemisimpleDecomposition:
    """A = C*, its radical J and the simple blocks of A/J with dual comatrix data."""

    algebra: AlgebraSC
    radical: Subspace
    blocks: List[SemisimpleBlock]
    dual_vectors: List[List[Vector]]

    @property
    def field(self) -> CyclotomicField:
        return self.algebra.field

    @property
    def all_split(self) -> bool:
        return all(b.split for b in self.blocks)

    def first_obstruction(self) -> Optional[SemisimpleBlock]:
        return next((b for b in self.blocks if not b.split), None)


# -- radical --------------------------------------------------------------------------

def trace_form(a: AlgebraSC) -> np.ndarray:
    """Gram matrix T[i, j] = tr(L_{b_i b_j})."""
    n = a.dim
    traces = [a.field.zero] * n
    for k, row in enumerate(a.terms):
        for j, t, c in row:
            if j == t:
                traces[k] = traces[k] + c
    gram = zeros((n, n), a.field)
    for i, row in enumerate(a.terms):
        for j, k, c in row:
            if traces[k] != 0:
                gram[i, j] = gram[i, j] + c * traces[k]
    return gram


def radical(a: AlgebraSC) -> Subspace:
    """The Jacobson radical, null space of the trace form (characteristic 0)."""
    j = kernel(trace_form(a), a.field)
    logger.debug(f"radical of {a!r}: dim {j.dim}")
    return j


# -- quotient algebra helpers ---------------------------------------------------------

class _Quotient:
    """Arithmetic in A/J on reduced representatives."""

    def __init__(self, a: AlgebraSC, j: Subspace):
        self.algebra = a
        self.radical = j
        self.field = a.field
        self.one = j.reduce(a.unit)
        self.basis = [self.radical.reduce(v) for v in j.complement_basis()]

    def reduce(self, v: Vector) -> Vector:
        return self.radical.reduce(v)

    def mul(self, u: Vector, v: Vector) -> Vector:
        return self.reduce(self.algebra.product(u, v))


def minimal_polynomial(x: Vector, unit: Vector, mul: Callable[[Vector, Vector], Vector], field: CyclotomicField) -> poly.Poly:
    """Monic minimal polynomial of x in an algebra with identity ``unit``."""
    powers = [unit]
    while True:
        nxt = mul(powers[-1], x)
        columns = zeros((x.shape[0], len(powers)), field)
        for i, p in enumerate(powers):
            columns[:, i] = p
        alpha = solve(columns, nxt, field)
        if alpha is not None:
            return [-c for c in alpha] + [field.one]
        powers.append(nxt)
        if len(powers) > x.shape[0] + 1:
            raise InternalInvariantError("minimal polynomial degree exceeds the algebra dimension")


def evaluate_in_algebra(p: poly.Poly, x: Vector, unit: Vector, mul) -> Vector:
    result = unit - unit
    for c in reversed(p):
        result = mul(result, x) + unit * c
    return result


def split_by_root(x: Vector, m: poly.Poly, roots, unit: Vector, mul) -> Optional[Vector]:
    """A proper idempotent polynomial in x from a root λ of its minimal polynomial m.

    With m = (X - λ)^k·r and s·(X - λ)^k + t·r = 1 the idempotent is (t·r)(x),
    the projection onto the generalized λ-eigencomponent. None when x has no
    second eigencomponent.
    """
    for root in roots:
        k = poly.multiplicity(m, root)
        part = poly.power([-root, root.field.one], k)
        r, remainder = poly.divmod_poly(m, part)
        if remainder:
            raise InternalInvariantError("root does not divide the minimal polynomial")
        if poly.degree(r) < 1:
            continue
        _, _, t = poly.extended_gcd(part, r)
        return evaluate_in_algebra(poly.mul(t, r), x, unit, mul)
    return None


def _candidates(basis: List[Vector], rng: np.random.Generator, settings: SplittingSettings, field) -> Iterator[Vector]:
    for v in basis:
        yield v
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield basis[i] + basis[j]
    bound = settings.random_coefficient_range
    for _ in range(settings.max_split_attempts):
        coefficients = rng.integers(-bound, bound + 1, size=len(basis))
        combination = zeros(basis[0].shape[0], field)
        for c, v in zip(coefficients, basis):
            if c:
                combination = combination + v * int(c)
        yield combination


# -- block decomposition --------------------------------------------------------------

def _center(q: _Quotient) -> List[Vector]:
    free = q.radical.non_pivots()
    m, n = len(free), q.algebra.dim
    rows = zeros((m * n, m), q.field)
    for col, f in enumerate(free):
        ef = q.basis[col]
        for k, bk in enumerate(q.basis):
            commutator = q.mul(ef, bk) - q.mul(bk, ef)
            rows[k * n:(k + 1) * n, col] = commutator
    coefficients = kernel(rows, q.field)
    center = []
    for alpha in coefficients.vectors():
        z = zeros(n, q.field)
        for col, f in enumerate(free):
            z[f] = alpha[col]
        center.append(z)
    return center


def _span(vectors: List[Vector], n: int, field) -> Subspace:
    return Subspace.span([v for v in vectors if not is_zero_array(v)], n, field)


def _central_idempotents(q: _Quotient, rng, settings: SplittingSettings) -> List[Tuple[Vector, Optional[poly.Poly]]]:
    center = _center(q)
    n = q.algebra.dim
    done: List[Tuple[Vector, Optional[poly.Poly]]] = []
    queue = [q.one]
    while queue:
        e = queue.pop()
        local = _span([q.mul(e, z) for z in center], n, q.field)
        if local.dim <= 1:
            done.append((e, None))
            continue
        split = None
        obstruction = None
        for candidate in _candidates(local.vectors(), rng, settings, q.field):
            m = minimal_polynomial(candidate, e, q.mul, q.field)
            if poly.degree(m) <= 1:
                continue
            roots = poly.roots_in_field(m, q.field)
            e1 = split_by_root(candidate, m, roots, e, q.mul) if roots else None
            if e1 is not None:
                split = (e1, e - e1)
                break
            if poly.degree(m) == local.dim:
                obstruction = m
                break
        if split is not None:
            queue.extend(split)
        elif obstruction is not None:
            logger.info(f"central block of dim {local.dim} does not split: {poly.to_text(obstruction)}")
            done.append((e, obstruction))
        else:
            raise InternalInvariantError("could not decide whether a central block splits", {"center_dim": local.dim})
    return done


def _primitive_idempotent(q: _Quotient, block: List[Vector], e: Vector, rng, settings) -> Tuple[Optional[Vector], Optional[poly.Poly]]:
    n = q.algebra.dim
    f = e
    last = None
    while True:
        corner = _span([q.mul(q.mul(f, b), f) for b in block], n, q.field)
        if corner.dim == 1:
            return f, None
        found = False
        for candidate in _candidates(corner.vectors(), rng, settings, q.field):
            m = minimal_polynomial(candidate, f, q.mul, q.field)
            if poly.degree(m) <= 1:
                continue
            last = m
            roots = poly.roots_in_field(m, q.field)
            smaller = split_by_root(candidate, m, roots, f, q.mul) if roots else None
            if smaller is not None:
                f = smaller
                found = True
                break
        if not found:
            return None, last


def _scalar_multiple(v: Vector, base: Vector):
    p = next(i for i in range(base.shape[0]) if base[i] != 0)
    return v[p] / base[p]


def _matrix_units(q: _Quotient, block: List[Vector], f: Vector, d: int) -> List[Vector]:
    n = q.algebra.dim
    field = q.field

    def extend(vectors: List[Vector]) -> List[Vector]:
        chosen = [f]
        span = _span(chosen, n, field)
        for v in vectors:
            if len(chosen) == d:
                break
            if not span.contains(v):
                chosen.append(v)
                span = _span(chosen, n, field)
        return chosen

    left = extend([q.mul(b, f) for b in block])
    right = extend([q.mul(f, b) for b in block])
    if len(left) != d or len(right) != d:
        raise InternalInvariantError("minimal one-sided ideals have the wrong dimension", {"d": d})
    gram = zeros((d, d), field)
    for i, v in enumerate(right):
        for j, u in enumerate(left):
            gram[i, j] = _scalar_multiple(q.mul(v, u), f)
    gram_inverse = invert(gram, field)
    dual_right = []
    for i in range(d):
        acc = zeros(n, field)
        for k in range(d):
            if gram_inverse[i, k] != 0:
                acc = acc + right[k] * gram_inverse[i, k]
        dual_right.append(acc)
    return [q.mul(left[i], dual_right[j]) for i in range(d) for j in range(d)]


def decompose(c: Coalgebra, settings: SplittingSettings = DEFAULT_SETTINGS) -> SemisimpleDecomposition:
    """Blocks of C*/J with matrix units where the field allows, cached on ``c``."""
    key = ("semisimple", settings)
    if key in c.cache:
        return c.cache[key]
    a = c.dual_algebra()
    j = radical(a)
    q = _Quotient(a, j)
    rng = np.random.default_rng(settings.seed)
    blocks: List[SemisimpleBlock] = []
    for e, obstruction in _central_idempotents(q, rng, settings):
        basis = _span([q.mul(e, b) for b in q.basis], a.dim, a.field).vectors()
        block = SemisimpleBlock(idempotent=e, basis=basis, obstruction=obstruction)
        if obstruction is None:
            d = math.isqrt(len(basis))
            if d * d != len(basis):
                raise InternalInvariantError("split simple block of non-square dimension", {"dim": len(basis)})
            if d == 1:
                block.d, block.units = 1, [e]
            else:
                f, failure = _primitive_idempotent(q, basis, e, rng, settings)
                if f is None:
                    block.obstruction = failure
                else:
                    block.d, block.units = d, _matrix_units(q, basis, f, d)
        blocks.append(block)

    rows = j.vectors()
    for block in blocks:
        rows.extend(block.units if block.split else block.basis)
    pairing = zeros((a.dim, a.dim), a.field)
    for i, r in enumerate(rows):
        pairing[i, :] = r
    dual = invert(pairing, a.field)
    dual_vectors = []
    offset = j.dim
    for block in blocks:
        size = block.dim
        dual_vectors.append([dual[:, offset + t].copy() for t in range(size)])
        offset += size

    decomposition = SemisimpleDecomposition(a, j, blocks, dual_vectors)
    logger.info(
        f"semisimple decomposition of C* (dim {a.dim}): radical {j.dim}, "
        f"blocks {[b.d if b.split else None for b in blocks]}"
    )
    c.cache[key] = decomposition
    return decomposition


def simple_components(c: Coalgebra, decomposition: SemisimpleDecomposition) -> List[SimpleComponent]:
    """SimpleComponents of the split blocks, sorted by (d, canonical subspace)."""
    components = []
    for position, (block, duals) in enumerate(zip(decomposition.blocks, decomposition.dual_vectors)):
        if not block.split:
            continue
        space = Subspace.span(duals, c.dim, c.field)
        components.append(SimpleComponent(space, block.d, duals, -1, position))
    components.sort(key=lambda comp: comp.sort_key())
    for i, comp in enumerate(components):
        comp.index = i
    return components


def require_split(decomposition: SemisimpleDecomposition, context: str) -> None:
    block = decomposition.first_obstruction()
    if block is not None:
        text = poly.to_text(block.obstruction) if block.obstruction else "unknown"
        raise ExtendFieldError(text, decomposition.field.conductor, context)


# -- Wedderburn–Malcev ----------------------------------------------------------------

def _make_idempotent(x: Vector, mul, limit: int) -> Vector:
    for _ in range(limit):
        square = mul(x, x)
        if is_zero_array(square - x):
            return x
        x = square * 3 - mul(square, x) * 2
    raise InternalInvariantError("idempotent lifting did not converge", {"iterations": limit})


def _nilpotent_inverse(u: Vector, unit: Vector, mul, limit: int) -> Vector:
    """Inverse of u = unit - n with n nilpotent, as a Neumann series."""
    n = unit - u
    result = unit.copy()
    term = unit
    for _ in range(limit):
        term = mul(term, n)
        if is_zero_array(term):
            return result
        result = result + term
    raise InternalInvariantError("radical element is not nilpotent", {"iterations": limit})


def wedderburn_malcev_lift(
    decomposition: SemisimpleDecomposition,
    seed: Optional[int] = None,
    settings: SplittingSettings = DEFAULT_SETTINGS,
) -> List[List[Vector]]:
    """Lift the matrix units of every block to A so that their span is a subalgebra complementing J.

    With ``seed`` set, every lift is perturbed by a random radical element first;
    the result is another valid complement.
    """
    require_split(decomposition, "Wedderburn-Malcev lift")
    a = decomposition.algebra
    j = decomposition.radical
    field = a.field
    mul = a.product
    limit = 2 * a.dim + 8
    rng = np.random.default_rng(seed) if seed is not None else None
    radical_basis = j.vectors()
    bound = settings.random_coefficient_range

    def perturb(x: Vector) -> Vector:
        if rng is None or not radical_basis:
            return x.copy()
        out = x.copy()
        for c, v in zip(rng.integers(-bound, bound + 1, size=len(radical_basis)), radical_basis):
            if c:
                out = out + v * int(c)
        return out

    lifted: List[List[Optional[Vector]]] = [[None] * (b.d * b.d) for b in decomposition.blocks]
    accumulated = zeros(a.dim, field)
    for s, block in enumerate(decomposition.blocks):
        for i in range(block.d):
            complement = a.unit - accumulated
            y = perturb(block.units[i * block.d + i])
            y = mul(mul(complement, y), complement)
            y = _make_idempotent(y, mul, limit)
            lifted[s][i * block.d + i] = y
            accumulated = accumulated + y
    if not is_zero_array(accumulated - a.unit):
        raise InternalInvariantError("lifted primitive idempotents do not sum to 1")

    for s, block in enumerate(decomposition.blocks):
        d = block.d
        e11 = lifted[s][0]
        for t in range(1, d):
            ett = lifted[s][t * d + t]
            x = mul(mul(e11, perturb(block.units[t])), ett)
            y = mul(mul(ett, perturb(block.units[t * d])), e11)
            inverse = _nilpotent_inverse(mul(x, y), e11, mul, limit)
            lifted[s][t] = x
            lifted[s][t * d] = mul(y, inverse)
        for r in range(1, d):
            for t in range(1, d):
                if r != t:
                    lifted[s][r * d + t] = mul(lifted[s][r * d], lifted[s][t])
    logger.debug(f"Wedderburn-Malcev lift done (seed={seed})")
    return lifted


def complement_projection(c: Coalgebra, coradical: Subspace, complement: Subspace) -> np.ndarray:
    """Projection of C onto ``coradical`` along ``complement`` (C = C_0 ⊕ I)."""
    n = c.dim
    columns = coradical.vectors() + complement.vectors()
    if len(columns) != n:
        raise InternalInvariantError("C_0 and I are not complementary", {"dims": [coradical.dim, complement.dim]})
    change = zeros((n, n), c.field)
    for i, v in enumerate(columns):
        change[:, i] = v
    inverse = invert(change, c.field)
    keep = identity(n, c.field)
    for i in range(coradical.dim, n):
        keep[i, i] = c.field.zero
    return mat_mul(mat_mul(change, keep, c.field), inverse, c.field)
