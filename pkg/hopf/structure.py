"""
Structure of a Hopf algebra relative to its coradical: antipode stability of
simple subcoalgebras, generated Hopf subalgebras, and how S and the grouplikes
permute the simple components.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from itertools import product
from typing import Dict, List, Optional

import numpy as np

from bounds.rules import is_squarefree
from coalgebra.base import AxiomReport, NicholsData, SimpleComponent
from coalgebra.coradical import coradical, coradical_filtration, grouplikes, skew_primitives
from coalgebra.semisimple import DEFAULT_SETTINGS, SplittingSettings, radical
from exactmath.linalg import Subspace, mat_vec, subspace_image, zeros
from hopf.antipode import compute_antipode
from hopf.base import HopfAlgebra
from utils.exceptions import InternalInvariantError, ValidationError
from utils.logger import get_algebra_logger

logger = logging.getLogger(__name__)


def _antipode(h: HopfAlgebra) -> np.ndarray:
    if h.antipode is None:
        compute_antipode(h)
    return h.antipode


def s_stable(h: HopfAlgebra, component: SimpleComponent) -> bool:
    """Whether S(C) = C."""
    space = component.subcoalgebra
    return subspace_image(_antipode(h), space) == space


def _subcoalgebra_generated_by(h: HopfAlgebra, v: np.ndarray) -> List[np.ndarray]:
    """Coefficient vectors of (Δ⊗id)Δv; they span the subcoalgebra generated by v."""
    c, n = h.coalgebra, h.dim
    t = zeros((n, n, n), h.field)
    for i in range(n):
        if v[i] == 0:
            continue
        for j, k, x in c.terms[i]:
            for a, b, y in c.terms[j]:
                t[a, b, k] = t[a, b, k] + v[i] * x * y
    return [t[a, :, k].copy() for a in range(n) for k in range(n) if any(e != 0 for e in t[a, :, k])]


def generated_hopf_subalgebra(h: HopfAlgebra, seed: Subspace) -> Subspace:
    """Smallest subspace containing seed and 1 that is a subalgebra, a subcoalgebra and S-stable."""
    if seed.ambient_dim != h.dim:
        raise ValidationError("seed must be a subspace of H", {"dim": h.dim, "ambient_dim": seed.ambient_dim})
    s = _antipode(h)
    current = Subspace.span(seed.vectors() + [h.unit], h.dim, h.field)
    rounds = 0
    while True:
        rounds += 1
        vectors = current.vectors()
        grown = list(vectors)
        for v in vectors:
            grown.extend(_subcoalgebra_generated_by(h, v))
            grown.append(mat_vec(s, v, h.field))
        for v, w in product(vectors, repeat=2):
            grown.append(h.product(v, w))
        nxt = Subspace.span(grown, h.dim, h.field)
        if nxt.dim == current.dim:
            break
        current = nxt
    if h.dim % current.dim:
        raise InternalInvariantError(
            "generated Hopf subalgebra violates Nichols–Zoeller divisibility",
            {"dim": h.dim, "subalgebra_dim": current.dim}
        )
    logger.info(f"Hopf subalgebra generated by a {seed.dim}-dim seed has dim {current.dim} after {rounds} rounds")
    return current


@dataclass
class ComponentAction:
    """Permutations of component indices induced by S and by multiplication with grouplikes."""

    antipode: List[int]
    left: Dict[int, List[int]] = dataclass_field(default_factory=dict)
    right: Dict[int, List[int]] = dataclass_field(default_factory=dict)


def _permutation(matrix: np.ndarray, components: List[SimpleComponent]) -> List[int]:
    lookup = {comp.subcoalgebra: comp.index for comp in components}
    images = []
    for comp in components:
        image = subspace_image(matrix, comp.subcoalgebra)
        if image not in lookup:
            raise InternalInvariantError(
                "image of a simple subcoalgebra is not a simple component",
                {"component": comp.index, "image_dim": image.dim}
            )
        images.append(lookup[image])
    if sorted(images) != list(range(len(components))):
        raise InternalInvariantError("induced map on components is not a permutation", {"images": images})
    return images


def component_action(h: HopfAlgebra, nd: NicholsData) -> ComponentAction:
    action = ComponentAction(_permutation(_antipode(h), nd.components))
    for comp in nd.components:
        if not comp.is_grouplike:
            continue
        g = comp.grouplike
        action.left[comp.index] = _permutation(h.algebra.left_mult_matrix(g), nd.components)
        action.right[comp.index] = _permutation(h.algebra.right_mult_matrix(g), nd.components)
    return action


def isotypic_symmetry_check(h: HopfAlgebra, nd: NicholsData) -> AxiomReport:
    """dim P_1^{τ,γ} = dim P_1^{Sγ,Sτ} = dim P_1^{gτ,gγ} = dim P_1^{τg,γg} for every grouplike g."""
    report = AxiomReport("isotypic_symmetry")
    action = component_action(h, nd)
    size = len(nd.components)
    s = action.antipode

    def dim(tau: int, gamma: int) -> int:
        return nd.isotypic.get((tau, gamma), 0)

    for tau, gamma in product(range(size), repeat=2):
        value = dim(tau, gamma)
        images = {"antipode": dim(s[gamma], s[tau])}
        for g, perm in action.left.items():
            images[f"left_{g}"] = dim(perm[tau], perm[gamma])
        for g, perm in action.right.items():
            images[f"right_{g}"] = dim(perm[tau], perm[gamma])
        for label, other in images.items():
            if other != value:
                report.violations.append({"pair": [tau, gamma], "action": label, "dim": value, "image_dim": other})
    return report


def is_semisimple(h: HopfAlgebra) -> bool:
    return radical(h.algebra).dim == 0


def has_nontrivial_skew_primitive(h: HopfAlgebra, settings: SplittingSettings = DEFAULT_SETTINGS) -> bool:
    group = grouplikes(h.coalgebra, settings)
    return any(
        skew_primitives(h.coalgebra, g, k, settings).nontrivial
        for g, k in product(group, repeat=2)
    )


def group_divisibility_check(h: HopfAlgebra, nd: Optional[NicholsData] = None,
                             settings: SplittingSettings = DEFAULT_SETTINGS) -> AxiomReport:
    """The divisibility and skew-primitive statements tying |G(H)| to the coradical filtration.

    - |G| divides dim H_n and dim H_{0,d};
    - |G| divides dim P_n (when nd carries the P_n);
    - without nontrivial skew-primitives and with all non-trivial simple
      subcoalgebras of one size n², n divides dim P_1;
    - non-semisimple with H = H_1 forces a nontrivial skew-primitive;
    - non-semisimple of squarefree dimension has none.
    """
    report = AxiomReport("group_divisibility")
    c = h.coalgebra
    order = len(grouplikes(c, settings))
    filtration = coradical_filtration(c)
    for n, layer in enumerate(filtration):
        if layer.dim % order:
            report.violations.append({"statement": "filtration", "layer": n, "dim": layer.dim, "group_order": order})
    _, components = coradical(c, settings)
    block_dims = Counter()
    for comp in components:
        block_dims[comp.d] += comp.dim
    for d, total in sorted(block_dims.items()):
        if total % order:
            report.violations.append({"statement": "coradical_block", "d": d, "dim": total, "group_order": order})
    nontrivial_skew = has_nontrivial_skew_primitive(h, settings)
    if nd is not None:
        for n, space in enumerate(nd.P, start=1):
            if space.dim % order:
                report.violations.append({"statement": "P_n", "n": n, "dim": space.dim, "group_order": order})
        sizes = {comp.d for comp in components if comp.d > 1}
        if not nontrivial_skew and len(sizes) == 1:
            size = sizes.pop()
            if nd.p1.dim % size:
                report.violations.append({"statement": "P_1_block_size", "d": size, "dim": nd.p1.dim})
    if not is_semisimple(h):
        if len(filtration) <= 2 and not nontrivial_skew:
            report.violations.append({"statement": "H_equals_H_1", "layers": len(filtration)})
        if is_squarefree(h.dim) and nontrivial_skew:
            report.violations.append({"statement": "squarefree_dimension", "dim": h.dim})
    get_algebra_logger().log_computation(
        "group_divisibility", dim=h.dim, group_order=order, violations=len(report.violations)
    )
    return report
