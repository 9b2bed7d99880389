"""
The Nichols projection π: C → C_0, the spaces P_n and the isotypic table of P_1.

π is dual to a Wedderburn–Malcev complement S of the radical J of C*:
C_0 = J^⊥ and I = ker π = S^⊥. With ρ_L = (π⊗id)Δ and ρ_R = (id⊗π)Δ,

    P_1 = {x : Δx = ρ_L(x) + ρ_R(x)}
    P_n = {x : Δx − ρ_L(x) − ρ_R(x) ∈ Σ_{0<i<n} P_i ⊗ P_{n−i}}

and P_n = C_n ∩ I is checked against the coradical filtration.
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

import numpy as np

from coalgebra.base import Coalgebra, NicholsData, SimpleComponent
from coalgebra.coradical import coradical_filtration, wedge
from coalgebra.semisimple import (
    DEFAULT_SETTINGS,
    SplittingSettings,
    complement_projection,
    decompose,
    require_split,
    simple_components,
    wedderburn_malcev_lift,
)
from exactmath.linalg import (
    Subspace,
    annihilator,
    arrays_equal,
    invert,
    is_zero_array,
    kernel,
    mat_mul,
    subspace_image,
    subspace_intersection,
    subspace_sum,
    unit_vector,
    zeros,
)
from utils.exceptions import InternalInvariantError, ValidationError
from utils.logger import get_algebra_logger

logger = logging.getLogger(__name__)


def _basis_deltas(c: Coalgebra) -> List[np.ndarray]:
    key = "basis_deltas"
    if key not in c.cache:
        c.cache[key] = [c.delta(unit_vector(c.dim, i, c.field)) for i in range(c.dim)]
    return c.cache[key]


def _check_projection(c: Coalgebra, pi: np.ndarray, i_space: Subspace) -> None:
    if not arrays_equal(mat_mul(pi, pi, c.field), pi):
        raise InternalInvariantError("π is not idempotent")
    pi_t = pi.T.copy()
    for i, delta in enumerate(_basis_deltas(c)):
        lhs = c.delta(pi[:, i])
        rhs = mat_mul(mat_mul(pi, delta, c.field), pi_t, c.field)
        if not arrays_equal(lhs, rhs):
            raise InternalInvariantError("π is not a coalgebra map", {"basis_index": i})
    for v in i_space.vectors():
        if c.epsilon(v) != 0:
            raise InternalInvariantError("ε does not vanish on I")


def nichols_projection(
    c: Coalgebra,
    seed: Optional[int] = None,
    settings: SplittingSettings = DEFAULT_SETTINGS,
) -> NicholsData:
    """π and I from a Wedderburn–Malcev lift; ``seed`` randomizes the lift."""
    decomposition = decompose(c, settings)
    require_split(decomposition, "Nichols projection")
    components = simple_components(c, decomposition)
    lifted = wedderburn_malcev_lift(decomposition, seed, settings)

    complement = Subspace.span([v for block in lifted for v in block], c.dim, c.field)
    c0 = annihilator(decomposition.radical)
    i_space = annihilator(complement)
    pi = complement_projection(c, c0, i_space)
    _check_projection(c, pi, i_space)

    idempotents = []
    for comp in components:
        units = lifted[comp.block_index]
        total = zeros(c.dim, c.field)
        for i in range(comp.d):
            total = total + units[i * comp.d + i]
        idempotents.append(total)

    logger.info(f"Nichols projection: C_0 dim {c0.dim}, I dim {i_space.dim} (seed={seed})")
    return NicholsData(
        pi=pi,
        I=i_space,
        coradical=c0,
        components=components,
        central_idempotents=idempotents,
        seed=seed,
    )


def _adapted_basis(chain: List[Subspace], i_space: Subspace) -> Tuple[List[np.ndarray], List[int]]:
    """A basis of I extending bases of P_1 ⊆ P_2 ⊆ …; returns it with the cumulative sizes."""
    chosen: List[np.ndarray] = []
    steps: List[int] = []
    span = Subspace.zero(i_space.ambient_dim, i_space.field)
    for space in chain + [i_space]:
        for v in space.vectors():
            if not span.contains(v):
                chosen.append(v)
                span = Subspace.span(chosen, i_space.ambient_dim, i_space.field)
        steps.append(len(chosen))
    return chosen, steps[:-1]


def _next_layer(c: Coalgebra, nd: NicholsData, chain: List[Subspace]) -> Subspace:
    n = c.dim
    c0_basis = nd.coradical.vectors()
    r = len(c0_basis)
    adapted, steps = _adapted_basis(chain, nd.I)
    change = zeros((n, n), c.field)
    for i, v in enumerate(c0_basis + adapted):
        change[:, i] = v
    change_inverse = invert(change, c.field)
    layer = len(chain) + 1

    def allowed(a: int, b: int) -> bool:
        for i in range(1, layer):
            if a < steps[i - 1] and b < steps[layer - i - 1]:
                return True
        return False

    constrained = [(a, b) for a in range(r) for b in range(r)]
    constrained += [
        (r + a, r + b)
        for a in range(n - r) for b in range(n - r)
        if not allowed(a, b)
    ]
    system = zeros((len(constrained), n), c.field)
    inverse_t = change_inverse.T.copy()
    for x, delta in enumerate(_basis_deltas(c)):
        coefficients = mat_mul(mat_mul(change_inverse, delta, c.field), inverse_t, c.field)
        for row, (a, b) in enumerate(constrained):
            system[row, x] = coefficients[a, b]
    return kernel(system, c.field)


def p_spaces(c: Coalgebra, nd: NicholsData, verify: bool = True, max_layers: int = 64) -> NicholsData:
    """Fill in P_1, P_2, … up to P_m = I, checking P_n = C_n ∩ I when ``verify``."""
    chain: List[Subspace] = []
    while nd.I.dim and (not chain or chain[-1].dim < nd.I.dim):
        layer = _next_layer(c, nd, chain)
        if chain and layer == chain[-1] or len(chain) >= max_layers:
            raise InternalInvariantError(
                "P_n recursion stalled below I",
                {"dims": [p.dim for p in chain], "I": nd.I.dim}
            )
        if not nd.I.contains_subspace(layer):
            raise InternalInvariantError("P_n is not contained in I", {"layer": len(chain) + 1})
        chain.append(layer)

    if verify and chain:
        filtration = coradical_filtration(c)
        for k, space in enumerate(chain, start=1):
            expected = subspace_intersection(filtration[min(k, len(filtration) - 1)], nd.I)
            if space != expected:
                raise InternalInvariantError(
                    "P_n differs from C_n ∩ I",
                    {"n": k, "P_n": space.dim, "C_n ∩ I": expected.dim}
                )
    get_algebra_logger().log_computation("p_spaces", dims=[p.dim for p in chain], seed=nd.seed)
    return replace(nd, P=chain)


def isotypic_projections(c: Coalgebra, nd: NicholsData) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    """L_τ: x ↦ Σ E_τ(x_1)x_2 and R_γ: x ↦ Σ x_1 E_γ(x_2) for every component."""
    left = [c.right_hit_matrix(e) for e in nd.central_idempotents]
    right = [c.left_hit_matrix(e) for e in nd.central_idempotents]
    return left, right


def isotypic_table(c: Coalgebra, nd: NicholsData) -> NicholsData:
    """dim P_1^{τ,γ} for every pair with nonzero component; the entries sum to dim P_1."""
    p1 = nd.p1
    table: Dict[Tuple[int, int], int] = {}
    spaces: Dict[Tuple[int, int], Subspace] = {}
    if p1.dim:
        left, right = isotypic_projections(c, nd)
        for tau in range(len(nd.components)):
            left_part = subspace_image(left[tau], p1)
            if left_part.dim == 0:
                continue
            for gamma in range(len(nd.components)):
                part = subspace_image(right[gamma], left_part)
                if part.dim:
                    table[(tau, gamma)] = part.dim
                    spaces[(tau, gamma)] = part
    if sum(table.values()) != p1.dim:
        raise InternalInvariantError(
            "isotypic components do not add up to P_1",
            {"P_1": p1.dim, "table": {str(k): v for k, v in table.items()}}
        )
    return replace(nd, isotypic=table, isotypic_spaces=spaces)


def nichols_data(
    c: Coalgebra,
    seed: Optional[int] = None,
    settings: SplittingSettings = DEFAULT_SETTINGS,
    verify: bool = True,
) -> NicholsData:
    """π, the P_n and the isotypic table in one call."""
    nd = nichols_projection(c, seed, settings)
    nd = p_spaces(c, nd, verify=verify)
    return isotypic_table(c, nd)


# -- P_1 as a comodule ----------------------------------------------------------------

@dataclass
class P1Comatrix:
    """Δx_i = Σ_j x_j⊗A_ji + Σ_k B_ik⊗x_k for a basis x_1..x_m of P_1."""

    a: List[List[np.ndarray]]
    b: List[List[np.ndarray]]
    span_a: Subspace
    span_b: Subspace

    @property
    def size(self) -> int:
        return len(self.a)

    @property
    def both_scalar(self) -> bool:
        """span{A_ij} = span{B_ij} = one grouplike line."""
        return self.span_a.dim == 1 and self.span_a == self.span_b

    @property
    def both_full(self) -> bool:
        return self.span_a.dim == self.size ** 2 and self.span_b.dim == self.size ** 2


def _comatrix_violations(c: Coalgebra, entries: List[List[np.ndarray]]) -> List[Tuple[int, int]]:
    m = len(entries)
    bad = []
    for i in range(m):
        for j in range(m):
            expected = zeros((c.dim, c.dim), c.field)
            for k in range(m):
                expected = expected + np.outer(entries[i][k], entries[k][j])
            counit = c.epsilon(entries[i][j])
            if not arrays_equal(c.delta(entries[i][j]), expected) or counit != (1 if i == j else 0):
                bad.append((i, j))
    return bad


def p1_comatrix(c: Coalgebra, nd: NicholsData) -> P1Comatrix:
    """The comatrix entries of the bicomodule P_1; both families are verified."""
    p1 = nd.p1
    m = p1.dim
    pi_t = nd.pi.T.copy()
    basis = p1.vectors()
    a = [[None] * m for _ in range(m)]
    b = [[None] * m for _ in range(m)]
    for i, x in enumerate(basis):
        delta = c.delta(x)
        rho_right = mat_mul(delta, pi_t, c.field)
        rho_left = mat_mul(nd.pi, delta, c.field)
        rebuilt_right = zeros((c.dim, c.dim), c.field)
        rebuilt_left = zeros((c.dim, c.dim), c.field)
        for j, pj in enumerate(p1.pivots):
            a[j][i] = rho_right[pj, :].copy()
            b[i][j] = rho_left[:, pj].copy()
            rebuilt_right = rebuilt_right + np.outer(basis[j], a[j][i])
            rebuilt_left = rebuilt_left + np.outer(b[i][j], basis[j])
        if not (arrays_equal(rebuilt_right, rho_right) and arrays_equal(rebuilt_left, rho_left)):
            raise InternalInvariantError("P_1 is not a C_0-bicomodule", {"basis_index": i})
        if not is_zero_array((rho_right + rho_left - delta).reshape(-1)):
            raise InternalInvariantError("Δx ≠ ρ_L(x) + ρ_R(x) on P_1", {"basis_index": i})
    for name, entries in (("A", a), ("B", b)):
        bad = _comatrix_violations(c, entries)
        if bad:
            raise InternalInvariantError(f"{name} fails the comatrix identities", {"entries": bad})
    span_a = Subspace.span([v for row in a for v in row], c.dim, c.field)
    span_b = Subspace.span([v for row in b for v in row], c.dim, c.field)
    return P1Comatrix(a, b, span_a, span_b)


# -- wedge identity -------------------------------------------------------------------

@dataclass
class WedgeIdentity:
    """kg ∧ C on the left, kg + C + P_1^{g,C} on the right."""

    lhs: Subspace
    rhs: Subspace

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _component(nd: NicholsData, index: int) -> SimpleComponent:
    if not 0 <= index < len(nd.components):
        raise ValidationError("no simple component with that index", {"index": index, "count": len(nd.components)})
    return nd.components[index]


def wedge_identity(c: Coalgebra, nd: NicholsData, g_index: int, c_index: int) -> WedgeIdentity:
    g = _component(nd, g_index)
    other = _component(nd, c_index)
    if not g.is_grouplike:
        raise ValidationError("the first component must be grouplike", {"index": g_index, "d": g.d})
    lhs = wedge(g.subcoalgebra, other.subcoalgebra, c)
    rhs = subspace_sum(g.subcoalgebra, other.subcoalgebra)
    isotypic = nd.isotypic_spaces.get((g_index, c_index))
    if isotypic is not None:
        rhs = subspace_sum(rhs, isotypic)
    return WedgeIdentity(lhs, rhs)


def nonzero_p1_for_grouplikes(nd: NicholsData) -> Dict[int, List[int]]:
    """For each grouplike component g, the components C with d > 1 and P_1^{g,C} ≠ 0."""
    result: Dict[int, List[int]] = {}
    for g in nd.components:
        if not g.is_grouplike:
            continue
        result[g.index] = [
            comp.index for comp in nd.components
            if comp.d > 1 and nd.isotypic.get((g.index, comp.index), 0) > 0
        ]
    return result
