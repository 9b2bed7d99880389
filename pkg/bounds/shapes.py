"""
Coradical shapes k[G] ⊕ M^c(n_1) ⊕ … ⊕ M^c(n_t) of a Hopf algebra of given dimension.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Tuple

import sympy

from utils.exceptions import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoradicalShape:
    dim: int
    g: int
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(self.parts)))
        if self.g < 1:
            raise ValidationError("|G| must be positive", {"g": self.g})
        if any(n < 2 for n in self.parts):
            raise ValidationError("matrix blocks have size at least 2", {"parts": list(self.parts)})
        if self.coradical_dim > self.dim:
            raise ValidationError(
                "coradical larger than the Hopf algebra",
                {"dim": self.dim, "coradical_dim": self.coradical_dim}
            )

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def coradical_dim(self) -> int:
        return self.g + sum(n * n for n in self.parts)

    @property
    def cosemisimple(self) -> bool:
        return self.coradical_dim == self.dim

    @property
    def pointed(self) -> bool:
        return not self.parts

    @property
    def smallest_part(self) -> int:
        return self.parts[0]

    def block_dims(self) -> Dict[int, int]:
        """dim H_{0,d} for every block size d present, d = 1 being k[G]."""
        dims = {1: self.g}
        for d, count in Counter(self.parts).items():
            dims[d] = d * d * count
        return dict(sorted(dims.items()))

    def label(self) -> str:
        blocks = ["k·1" if self.g == 1 else f"k[G], |G|={self.g}"]
        blocks += [f"M^c({n})" for n in self.parts]
        return " ⊕ ".join(blocks)

    def to_dict(self) -> Dict[str, Any]:
        return {"dim": self.dim, "g": self.g, "parts": list(self.parts)}


def _partitions(budget: int, smallest: int) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing tuples of sizes ≥ smallest whose squares sum to at most budget."""
    yield ()
    n = smallest
    while n * n <= budget:
        for rest in _partitions(budget - n * n, n):
            yield (n,) + rest
        n += 1


def enumerate_shapes(dim: int, include_pointed: bool = False) -> List[CoradicalShape]:
    """Non-cosemisimple shapes with g | dim and g + Σ n_i² < dim.

    Divisibility of the larger blocks by g is left to the divisibility rule.
    Pointed shapes (t = 0) need a nontrivial group: a connected Hopf algebra
    of finite dimension in characteristic zero is k.
    """
    if dim < 2:
        raise ValidationError("dimension must be at least 2", {"dim": dim})
    shapes = []
    for g in sympy.divisors(dim):
        for parts in _partitions(dim - g - 1, 2):
            if not parts and not (include_pointed and 1 < g < dim):
                continue
            shapes.append(CoradicalShape(dim, g, parts))
    shapes.sort(key=lambda s: (s.g, s.t, s.parts))
    logger.info(f"dimension {dim}: {len(shapes)} candidate coradical shapes")
    return shapes


def semisimple_branch(dim: int) -> List[CoradicalShape]:
    """Cosemisimple shapes, handled by the semisimple branch and never analysed by the rules."""
    shapes = []
    for g in sympy.divisors(dim):
        for parts in _partitions(dim - g, 2):
            if g + sum(n * n for n in parts) == dim:
                shapes.append(CoradicalShape(dim, g, parts))
    return sorted(shapes, key=lambda s: (s.g, s.t, s.parts))
