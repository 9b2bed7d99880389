"""
Coradical, wedge products, the coradical filtration, grouplikes and skew-primitives.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from coalgebra.base import Coalgebra, SimpleComponent
from coalgebra.semisimple import (
    DEFAULT_SETTINGS,
    SplittingSettings,
    decompose,
    radical,
    require_split,
    simple_components,
)
from exactmath.linalg import (
    Subspace,
    annihilator,
    kernel,
    subspace_intersection,
    tensor_vector,
    unit_vector,
    zeros,
)
from utils.exceptions import InternalInvariantError, ValidationError
from utils.logger import get_algebra_logger

logger = logging.getLogger(__name__)


def coradical_space(c: Coalgebra) -> Subspace:
    """C_0 as the annihilator of the radical of C*; no splitting needed."""
    key = "coradical_space"
    if key not in c.cache:
        c.cache[key] = annihilator(radical(c.dual_algebra()))
    return c.cache[key]


def coradical(c: Coalgebra, settings: SplittingSettings = DEFAULT_SETTINGS) -> Tuple[Subspace, List[SimpleComponent]]:
    """C_0 and its simple components; raises ExtendFieldError when C*/J does not split."""
    decomposition = decompose(c, settings)
    require_split(decomposition, "coradical decomposition")
    c0 = annihilator(decomposition.radical)
    components = simple_components(c, decomposition)
    if sum(comp.dim for comp in components) != c0.dim:
        raise InternalInvariantError(
            "simple components do not add up to the coradical",
            {"coradical_dim": c0.dim, "components": [comp.d for comp in components]}
        )
    get_algebra_logger().log_computation(
        "coradical", dim=c.dim, coradical_dim=c0.dim, component_sizes=[comp.d for comp in components]
    )
    return c0, components


def wedge(u: Subspace, v: Subspace, c: Coalgebra) -> Subspace:
    """U ∧ V = Δ^{-1}(U⊗C + C⊗V), the kernel of (q_U ⊗ q_V)Δ."""
    if u.ambient_dim != c.dim or v.ambient_dim != c.dim:
        raise ValidationError(
            "wedge factors must be subspaces of the coalgebra",
            {"dim": c.dim, "left": u.ambient_dim, "right": v.ambient_dim}
        )
    if u.dim == c.dim or v.dim == c.dim:
        return Subspace.full(c.dim, c.field)
    return kernel(c.wedge_matrix(u.quotient_map(), v.quotient_map()), c.field)


def coradical_filtration(c: Coalgebra, max_layers: int = 64) -> List[Subspace]:
    """[C_0, C_1, …] with C_n = C_{n-1} ∧ C_0, ending at C."""
    key = "coradical_filtration"
    if key in c.cache:
        return list(c.cache[key])
    layers = [coradical_space(c)]
    while layers[-1].dim < c.dim:
        nxt = wedge(layers[-1], layers[0], c)
        if nxt.dim == layers[-1].dim or len(layers) > max_layers:
            raise InternalInvariantError(
                "coradical filtration stalled before exhausting the coalgebra",
                {"dims": [layer.dim for layer in layers]}
            )
        layers.append(nxt)
    logger.info(f"coradical filtration dims {[layer.dim for layer in layers]}")
    c.cache[key] = layers
    return list(layers)


def grouplikes(c: Coalgebra, settings: SplittingSettings = DEFAULT_SETTINGS) -> List[np.ndarray]:
    """All grouplike elements over the current field, from the 1-dimensional blocks of C*/J.

    Non-split blocks are skipped: completeness is relative to the field.
    """
    decomposition = decompose(c, settings)
    found = []
    for block, duals in zip(decomposition.blocks, decomposition.dual_vectors):
        if block.split and block.d == 1:
            g = duals[0]
            if not c.is_grouplike(g):
                raise InternalInvariantError("dual of a character is not grouplike")
            found.append(g)
    found.sort(key=lambda g: tuple(e.sort_key() for e in g))
    return found


@dataclass
class SkewPrimitiveSpace:
    """The (g, h)-skew-primitives together with how much of it lies outside span G(C)."""

    space: Subspace
    trivial: Subspace
    nontrivial_dim: int

    @property
    def nontrivial(self) -> bool:
        return self.nontrivial_dim > 0

    @property
    def dim(self) -> int:
        return self.space.dim


def skew_primitives(c: Coalgebra, g: np.ndarray, h: np.ndarray, settings: SplittingSettings = DEFAULT_SETTINGS) -> SkewPrimitiveSpace:
    """Kernel of x ↦ Δx − g⊗x − x⊗h."""
    for name, v in (("g", g), ("h", h)):
        if v.shape != (c.dim,) or not c.is_grouplike(v):
            raise ValidationError(f"{name} is not a grouplike element", {"argument": name})
    n = c.dim
    system = zeros((n * n, n), c.field)
    for i in range(n):
        e = unit_vector(n, i, c.field)
        system[:, i] = c.comul_matrix[:, i] - tensor_vector(g, e, c.field) - tensor_vector(e, h, c.field)
    space = kernel(system, c.field)
    group_span = Subspace.span(grouplikes(c, settings), n, c.field)
    trivial = subspace_intersection(space, group_span)
    return SkewPrimitiveSpace(space, trivial, space.dim - trivial.dim)
