"""
Hand-built structures for the stable coalgebra search.

Each rigged algebra has basis 1, e11..e22 (a matrix coalgebra C), f11..f22
(its antipode image D) and a small target coalgebra T. Products of e's and
f's land in T following a table that is symmetric under the (1 2) relabelling
and under rescaling of the adapted basis, so the search sees the same E and F
whichever adapted basis it picks. Only the structure the search reads is
filled in; these are not Hopf algebras.
"""

from typing import Dict, Tuple

import numpy as np

from coalgebra import AlgebraSC, Coalgebra, transport_coalgebra
from exactmath import QQ, Subspace, identity, invert, mat_mul, mat_vec, subspace_image, unit_vector, zeros
from hopf import HopfAlgebra
from utils.exceptions import ValidationError

ORDER = [(0, 0), (0, 1), (1, 0), (1, 1)]

# name: (basis, comultiplication, counit, antipode, entries of E = F in ORDER)
TARGETS: Dict[str, tuple] = {
    "full": (
        ["t11", "t12", "t21", "t22"],
        {f"t{i + 1}{j + 1}": [(f"t{i + 1}{k + 1}", f"t{k + 1}{j + 1}", 1) for k in range(2)] for i, j in ORDER},
        {"t11": 1, "t22": 1},
        {"t11": [("t22", 1)], "t22": [("t11", 1)], "t12": [("t12", -1)], "t21": [("t21", -1)]},
        [[("t11", 1)], [("t12", 1)], [("t21", 1)], [("t22", 1)]],
    ),
    "c3": (
        ["g", "h", "u"],
        {"g": [("g", "g", 1)], "h": [("h", "h", 1)], "u": [("g", "u", 1), ("u", "h", 1)]},
        {"g": 1, "h": 1},
        {"g": [("h", 1)], "h": [("g", 1)], "u": [("u", -1)]},
        [[("g", 1)], [("u", 1)], [], [("h", 1)]],
    ),
    "c2": (
        ["x", "y"],
        {"x": [("x", "x", 1), ("y", "y", 1)], "y": [("x", "y", 1), ("y", "x", 1)]},
        {"x": 1},
        {"x": [("x", 1)], "y": [("y", -1)]},
        [[("x", 1)], [("y", 1)], [("y", 1)], [("x", 1)]],
    ),
    "collapse": (
        ["x"],
        {"x": [("x", "1", 1), ("1", "x", 1)]},
        {},
        {"x": [("x", -1)]},
        [[("1", 1)], [], [], [("1", 1)]],
    ),
}

# e_ab · f_cd = ±x when E and F collapse to k·1
COLLAPSE_PRODUCTS = [
    ((1, 1), (0, 1), 1), ((0, 0), (0, 1), 1), ((1, 0), (1, 1), 1), ((1, 0), (0, 0), -1),
    ((0, 0), (1, 0), 1), ((1, 1), (1, 0), 1), ((0, 1), (0, 0), 1), ((0, 1), (1, 1), -1),
]


def component_index(nd, v: np.ndarray) -> int:
    """Index of the coradical component that contains v."""
    return next(comp.index for comp in nd.components if comp.subcoalgebra.contains(v))


def _e_name(i: int, j: int) -> str:
    return f"e{i + 1}{j + 1}"


def _f_name(i: int, j: int) -> str:
    return f"f{i + 1}{j + 1}"


def rigged_search_algebra(kind: str) -> Tuple[HopfAlgebra, Subspace]:
    """The rigged algebra of the given kind and the span of e11..e22."""
    target_names, target_delta, target_counit, target_antipode, entries = TARGETS[kind]
    names = ["1"] + [_e_name(i, j) for i, j in ORDER] + [_f_name(i, j) for i, j in ORDER] + target_names
    index = {name: k for k, name in enumerate(names)}
    n = len(names)

    comul = zeros((n, n, n), QQ)
    counit = zeros(n, QQ)
    comul[0, 0, 0] = QQ(1)
    counit[0] = QQ(1)
    for letter in ("e", "f"):
        for i, j in ORDER:
            a = index[f"{letter}{i + 1}{j + 1}"]
            for k in range(2):
                comul[a, index[f"{letter}{i + 1}{k + 1}"], index[f"{letter}{k + 1}{j + 1}"]] = QQ(1)
            if i == j:
                counit[a] = QQ(1)
    for name, terms in target_delta.items():
        for left, right, value in terms:
            comul[index[name], index[left], index[right]] = QQ(value)
    for name, value in target_counit.items():
        counit[index[name]] = QQ(value)

    antipode = zeros((n, n), QQ)
    antipode[0, 0] = QQ(1)
    for i, j in ORDER:
        # S(e_ij) = f_ji, S(f_ji) = (-1)^(i+j) e_ij
        antipode[index[_f_name(j, i)], index[_e_name(i, j)]] = QQ(1)
        antipode[index[_e_name(i, j)], index[_f_name(j, i)]] = QQ((-1) ** (i + j))
    for name, images in target_antipode.items():
        for image, value in images:
            antipode[index[image], index[name]] = QQ(value)

    mul = zeros((n, n, n), QQ)
    for k in range(n):
        mul[0, k, k] = QQ(1)
        mul[k, 0, k] = QQ(1)
    for (i, j), combination in zip(ORDER, entries):
        for name, value in combination:
            mul[index[_e_name(i, j)], index[_f_name(1 - i, 1 - j)], index[name]] = QQ(value)
            mul[index[_f_name(i, j)], index[_e_name(1 - i, 1 - j)], index[name]] = QQ(value)
    if kind == "collapse":
        for (a, b), (c, d), value in COLLAPSE_PRODUCTS:
            mul[index[_e_name(a, b)], index[_f_name(c, d)], index["x"]] = QQ(value)

    h = HopfAlgebra(
        Coalgebra(QQ, comul, counit, list(names)),
        AlgebraSC(QQ, mul, unit_vector(n, 0, QQ), list(names)),
        antipode,
        name=f"rigged_{kind}",
    )
    c_span = Subspace.span([unit_vector(n, index[_e_name(i, j)], QQ) for i, j in ORDER], n, QQ)
    return h, c_span


def random_base_change(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    while True:
        p = identity(n, QQ)
        for (a, b) in zip(rng.integers(0, n, size=n), rng.integers(0, n, size=n)):
            if a != b:
                p[a, b] = QQ(int(rng.choice([-1, 1, 2])))
        try:
            invert(p, QQ)
        except ValidationError:
            continue
        return p


def transport_hopf(h: HopfAlgebra, c_span: Subspace, p: np.ndarray) -> Tuple[HopfAlgebra, Subspace]:
    """The same structure in the basis f_i = Σ_j p[j, i] b_j."""
    field, n = h.field, h.dim
    q = invert(p, field)
    mul = zeros((n, n, n), field)
    for i in range(n):
        for j in range(n):
            mul[i, j] = mat_vec(q, h.product(p[:, i].copy(), p[:, j].copy()), field)
    coalgebra = transport_coalgebra(h.coalgebra, p)
    algebra = AlgebraSC(field, mul, mat_vec(q, h.unit, field), list(coalgebra.basis_names))
    antipode = mat_mul(q, mat_mul(h.antipode, p, field), field)
    moved = Subspace.span([mat_vec(q, v, field) for v in c_span.vectors()], n, field)
    return HopfAlgebra(coalgebra, algebra, antipode, name=h.name), moved


def search_components(h: HopfAlgebra, c_span: Subspace, components) -> Tuple:
    """(C, D) among the coradical components: C spans the e's and D = S(C)."""
    d_span = subspace_image(h.antipode, c_span)
    c_comp = next(comp for comp in components if comp.subcoalgebra == c_span)
    d_comp = next(comp for comp in components if comp.subcoalgebra == d_span)
    return c_comp, d_comp
