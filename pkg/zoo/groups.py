"""
Small finite groups by multiplication table.
"""

from dataclasses import dataclass
from typing import List

from utils.exceptions import ValidationError


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    labels: List[str]
    table: List[List[int]]
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.labels)

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]


def _power_label(symbol: str, k: int) -> str:
    if k == 0:
        return ""
    return symbol if k == 1 else f"{symbol}^{k}"


def cyclic(n: int) -> FiniteGroup:
    """C_n = <g>, element i is g^i."""
    if n < 1:
        raise ValidationError("cyclic group order must be positive", {"n": n})
    labels = [_power_label("g", i) or "1" for i in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(f"C{n}", labels, table)


def dihedral(n: int) -> FiniteGroup:
    """D_n = <r, s | r^n = s^2 = 1, srs = r^-1>, element a·2 + b is r^a s^b."""
    if n < 3:
        raise ValidationError("dihedral groups need n ≥ 3", {"n": n})
    labels = [(_power_label("r", a) + _power_label("s", b)) or "1" for a in range(n) for b in range(2)]
    table = []
    for a in range(n):
        for b in range(2):
            row = []
            for c in range(n):
                for d in range(2):
                    # s^b r^c = r^{(-1)^b c} s^b
                    power = (a + (c if b == 0 else -c)) % n
                    row.append(power * 2 + (b + d) % 2)
            table.append(row)
    return FiniteGroup(f"D{n}", labels, table)
