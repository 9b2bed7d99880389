"""
Exact scalars in cyclotomic fields Q(ζ_n).

An element is stored as its coefficient vector in the power basis
1, ζ, …, ζ^(φ(n)-1); products are reduced with a precomputed table of the
powers ζ^k, 0 <= k < n. Conductor 1 is the rational field.
"""

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from utils.exceptions import ParseError, ValidationError

Number = Union[int, Fraction, "Scalar"]

_CYCLOTOMIC_TEXT = re.compile(r"^\s*\[(?P<coeffs>[^\]]*)\]\s*@\s*(?P<n>\d+)\s*$")


class CyclotomicField:
    """The field Q(ζ_n) with its power-basis reduction table."""

    characteristic = 0

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValidationError("conductor must be a positive integer", {"conductor": conductor})
        self.conductor = conductor
        self.degree = int(sympy.totient(conductor))
        x = sympy.Symbol("x")
        cyclotomic = sympy.Poly(sympy.cyclotomic_poly(conductor, x), x)
        # low -> high, monic of degree φ(n)
        self.modulus: Tuple[Fraction, ...] = tuple(
            Fraction(int(c)) for c in reversed(cyclotomic.all_coeffs())
        )
        self.powers: Tuple[Tuple[Fraction, ...], ...] = self._power_table()
        self.zero = Scalar((Fraction(0),) * self.degree, self)
        self.one = Scalar((Fraction(1),) + (Fraction(0),) * (self.degree - 1), self)

    def _power_table(self) -> Tuple[Tuple[Fraction, ...], ...]:
        d = self.degree
        current = [Fraction(0)] * d
        current[0] = Fraction(1)
        table = []
        for _ in range(self.conductor):
            table.append(tuple(current))
            top = current[-1]
            shifted = [Fraction(0)] + current[:-1]
            if top:
                for i in range(d):
                    shifted[i] -= top * self.modulus[i]
            current = shifted
        return tuple(table)

    def __repr__(self) -> str:
        return "QQ" if self.conductor == 1 else f"QQ(zeta_{self.conductor})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self) -> int:
        return hash(("CyclotomicField", self.conductor))

    def __reduce__(self):
        return (get_field, (self.conductor,))

    def __call__(self, value: Number) -> "Scalar":
        """Coerce an integer, fraction or Scalar into this field."""
        if isinstance(value, Scalar):
            return value.lift(self)
        if isinstance(value, (int, Fraction)):
            if value == 0:
                return self.zero
            return Scalar((Fraction(value),) + (Fraction(0),) * (self.degree - 1), self)
        raise ValidationError(f"cannot coerce {value!r} into {self}")

    def zeta(self, power: int = 1) -> "Scalar":
        return Scalar(self.powers[power % self.conductor], self)

    def from_power_coefficients(self, coeffs: Sequence[Number]) -> "Scalar":
        """Σ c_i ζ^i before reduction, i unrestricted."""
        acc = [Fraction(0)] * self.degree
        for i, c in enumerate(coeffs):
            c = Fraction(c) if not isinstance(c, Fraction) else c
            if c:
                row = self.powers[i % self.conductor]
                for k in range(self.degree):
                    if row[k]:
                        acc[k] += c * row[k]
        return Scalar(tuple(acc), self)

    def galois_exponents(self) -> List[int]:
        return [k for k in range(1, self.conductor + 1) if math.gcd(k, self.conductor) == 1][: self.degree]


@lru_cache(maxsize=None)
def get_field(conductor: int = 1) -> CyclotomicField:
    return CyclotomicField(conductor)


class Scalar:
    """An immutable element of Q(ζ_n)."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Tuple[Fraction, ...], field: CyclotomicField):
        self.coeffs = coeffs
        self.field = field

    # -- coercion -----------------------------------------------------------------

    def _pair(self, other) -> Tuple["Scalar", "Scalar"]:
        if isinstance(other, Scalar):
            if other.field is self.field or other.field == self.field:
                return self, other
            common = get_field(math.lcm(self.field.conductor, other.field.conductor))
            return self.lift(common), other.lift(common)
        if isinstance(other, (int, Fraction)):
            return self, self.field(other)
        return NotImplemented, NotImplemented

    def lift(self, field: CyclotomicField) -> "Scalar":
        """Embed into Q(ζ_L) for a multiple L of the conductor."""
        if field == self.field:
            return self
        n, big = self.field.conductor, field.conductor
        if big % n:
            raise ValidationError(
                f"cannot embed {self.field} into {field}",
                {"from": n, "to": big}
            )
        step = big // n
        return field.from_power_coefficients(self._spread(step, big))

    def _spread(self, step: int, size: int) -> List[Fraction]:
        out = [Fraction(0)] * size
        for i, c in enumerate(self.coeffs):
            out[(i * step) % size] += c
        return out

    # -- predicates ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValidationError(f"{self.to_text()} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------------

    def __neg__(self) -> "Scalar":
        return Scalar(tuple(-c for c in self.coeffs), self.field)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return Scalar(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.field)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return Scalar(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.field)

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return Scalar(tuple(y - x for x, y in zip(a.coeffs, b.coeffs)), a.field)

    def __mul__(self, other):
        if isinstance(other, int) and other == 0:
            return self.field.zero
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        field = a.field
        if a.is_zero() or b.is_zero():
            return field.zero
        if b.is_rational():
            c = b.coeffs[0]
            return Scalar(tuple(x * c for x in a.coeffs), field)
        if a.is_rational():
            c = a.coeffs[0]
            return Scalar(tuple(x * c for x in b.coeffs), field)
        d = field.degree
        product = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        product[i + j] += x * y
        acc = list(product[:d])
        n = field.conductor
        for k in range(d, 2 * d - 1):
            c = product[k]
            if c:
                row = field.powers[k % n]
                for t in range(d):
                    if row[t]:
                        acc[t] += c * row[t]
        return Scalar(tuple(acc), field)

    __rmul__ = __mul__

    def conjugate(self, exponent: int) -> "Scalar":
        """The Galois conjugate ζ -> ζ^exponent (exponent coprime to the conductor)."""
        n = self.field.conductor
        return self.field.from_power_coefficients(self._spread(exponent % n, n))

    def norm(self) -> Fraction:
        """Field norm to Q, the product of all Galois conjugates."""
        acc = self
        for k in self.field.galois_exponents()[1:]:
            acc = acc * self.conjugate(k)
        return acc.to_fraction()

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.is_rational():
            return self.field(1 / self.coeffs[0])
        cofactor = self.field.one
        for k in self.field.galois_exponents()[1:]:
            cofactor = cofactor * self.conjugate(k)
        norm = (self * cofactor).to_fraction()
        return cofactor * (1 / norm)

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.field.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.conductor, self.coeffs))

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.coeffs

    # -- text ---------------------------------------------------------------------

    def to_text(self) -> str:
        if self.is_rational():
            return _fraction_text(self.coeffs[0])
        body = ",".join(_fraction_text(c) for c in self.coeffs)
        return f"[{body}]@{self.field.conductor}"

    def __repr__(self) -> str:
        return self.to_text()

    __str__ = to_text


QQ = get_field(1)


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_scalar(text: str, field: CyclotomicField = QQ) -> Scalar:
    """Parse "p/q", "p" or "[c0,c1,...]@n" into ``field`` (n must divide its conductor)."""
    if not isinstance(text, str):
        if isinstance(text, (int, Fraction)):
            return field(text)
        raise ParseError(f"scalar must be a string, got {type(text).__name__}", {"value": repr(text)})
    match = _CYCLOTOMIC_TEXT.match(text)
    try:
        if match:
            n = int(match.group("n"))
            parts = [p for p in match.group("coeffs").split(",") if p.strip()]
            coeffs = [Fraction(p.strip()) for p in parts]
            value = get_field(n).from_power_coefficients(coeffs)
            return value.lift(field) if n != field.conductor else value
        return field(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"cannot parse scalar {text!r}", {"value": text}) from e
    except ValidationError as e:
        raise ParseError(e.message, {"value": text, **e.details}) from e


def as_scalar(value: Number, field: CyclotomicField) -> Scalar:
    if isinstance(value, Scalar):
        return value.lift(field) if value.field != field else value
    return field(value)


def common_field(values: Iterable[Number]) -> CyclotomicField:
    conductor = 1
    for v in values:
        if isinstance(v, Scalar):
            conductor = math.lcm(conductor, v.field.conductor)
    return get_field(conductor)


def square_class(value: Union[Fraction, Scalar]) -> int:
    """Squarefree integer representative of the class of a nonzero rational modulo squares."""
    if isinstance(value, Scalar):
        value = value.to_fraction()
    value = Fraction(value)
    if value == 0:
        raise ValidationError("zero has no square class")
    product = value.numerator * value.denominator
    sign = -1 if product < 0 else 1
    result = 1
    for prime, exponent in sympy.factorint(abs(product)).items():
        if exponent % 2:
            result *= prime
    return sign * result
