"""
Univariate polynomials over Q(ζ_n) and root finding in the field.

A polynomial is a list of Scalars, lowest degree first, with no trailing zeros;
the zero polynomial is the empty list.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import sympy

from exactmath.scalar import CyclotomicField, Number, Scalar, as_scalar
from utils.exceptions import InternalInvariantError, ValidationError

logger = logging.getLogger(__name__)

Poly = List[Scalar]

_X = sympy.Symbol("x")
_Z = sympy.Symbol("z")

# shifts f(x - sζ) tried before giving up on a squarefree norm
MAX_NORM_SHIFTS = 40


def make_poly(coeffs: Sequence[Number], field: CyclotomicField) -> Poly:
    return trim([as_scalar(c, field) for c in coeffs])


def trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return trim(out)


def scale(p: Poly, c: Scalar) -> Poly:
    return trim([a * c for a in p])


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, [-c for c in q])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    zero = p[0].field.zero
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_poly(p: Poly, q: Poly):
    """Euclidean division p = quotient·q + remainder."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    remainder = trim(p)
    field = q[-1].field
    quotient = [field.zero] * max(len(remainder) - len(q) + 1, 0)
    lead_inverse = q[-1].inverse()
    while len(remainder) >= len(q):
        shift = len(remainder) - len(q)
        factor = remainder[-1] * lead_inverse
        quotient[shift] = factor
        for i, c in enumerate(q):
            remainder[shift + i] = remainder[shift + i] - factor * c
        remainder = trim(remainder)
    return trim(quotient), remainder


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return scale(p, p[-1].inverse())


def gcd(p: Poly, q: Poly) -> Poly:
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def extended_gcd(p: Poly, q: Poly):
    """(g, s, t) with s·p + t·q = g, g monic."""
    p, q = trim(p), trim(q)
    r0, r1 = p, q
    s0, s1 = [p[-1].field.one] if p else [], []
    t0, t1 = [], [q[-1].field.one] if q else []
    while r1:
        quotient, remainder = divmod_poly(r0, r1)
        r0, r1 = r1, remainder
        s0, s1 = s1, sub(s0, mul(quotient, s1))
        t0, t1 = t1, sub(t0, mul(quotient, t1))
    if not r0:
        return r0, s0, t0
    lead = r0[-1].inverse()
    return scale(r0, lead), scale(s0, lead), scale(t0, lead)


def power(p: Poly, exponent: int) -> Poly:
    result = [p[0].field.one] if p else []
    for _ in range(exponent):
        result = mul(result, p)
    return result


def multiplicity(p: Poly, root: Scalar) -> int:
    linear = [-root, root.field.one]
    count = 0
    p = trim(p)
    while p:
        quotient, remainder = divmod_poly(p, linear)
        if remainder:
            break
        count += 1
        p = quotient
    return count


def derivative(p: Poly) -> Poly:
    return trim([c * i for i, c in enumerate(p)][1:])


def evaluate(p: Poly, x: Scalar) -> Scalar:
    result = x.field.zero
    for c in reversed(p):
        result = result * x + c
    return result


def shift(p: Poly, c: Scalar) -> Poly:
    """The polynomial x ↦ p(x + c)."""
    result: Poly = []
    linear = [c, c.field.one]
    for a in reversed(p):
        result = add(mul(result, linear), [a])
    return result


def squarefree_part(p: Poly) -> Poly:
    p = trim(p)
    if len(p) <= 2:
        return monic(p)
    return monic(divmod_poly(p, gcd(p, derivative(p)))[0])


def to_text(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        power = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        coefficient = c.to_text()
        if power and coefficient == "1":
            terms.append(power)
        elif power:
            terms.append(f"({coefficient})*{power}")
        else:
            terms.append(f"({coefficient})")
    return " + ".join(terms)


def _sympy_rational_poly(p: Poly) -> sympy.Poly:
    coeffs = [sympy.Rational(c.to_fraction().numerator, c.to_fraction().denominator) for c in reversed(p)]
    return sympy.Poly(coeffs, _X, domain="QQ")


def _from_sympy(coeffs, field: CyclotomicField) -> Poly:
    values = [Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in reversed(coeffs)]
    return make_poly(values, field)


def _rational_roots(p: Poly, field: CyclotomicField) -> List[Scalar]:
    _, factors = _sympy_rational_poly(p).factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() == 1:
            a1, a0 = factor.all_coeffs()
            root = -sympy.Rational(a0) / sympy.Rational(a1)
            roots.append(field(Fraction(int(root.p), int(root.q))))
    return roots


def _norm_over_q(g: Poly, field: CyclotomicField) -> sympy.Poly:
    """Res_z(Φ_n(z), G(x, z)): the norm of g from Q(ζ_n)[x] down to Q[x]."""
    expression = sympy.Integer(0)
    for i, c in enumerate(g):
        inner = sum(
            sympy.Rational(a.numerator, a.denominator) * _Z ** j
            for j, a in enumerate(c.coeffs) if a
        )
        expression += inner * _X ** i
    cyclotomic = sympy.cyclotomic_poly(field.conductor, _Z)
    return sympy.Poly(sympy.resultant(cyclotomic, sympy.expand(expression), _Z), _X)


def roots_in_field(p: Poly, field: Optional[CyclotomicField] = None) -> List[Scalar]:
    """All distinct roots of ``p`` lying in ``field`` (default: the field of its coefficients)."""
    p = trim(p)
    if not p:
        raise ValidationError("the zero polynomial has no finite root set")
    field = field or p[-1].field
    p = [as_scalar(c, field) for c in p]
    f = squarefree_part(p)
    if degree(f) < 1:
        return []
    if degree(f) == 1:
        return [-f[0] / f[1]]
    if all(c.is_rational() for c in f):
        roots = _rational_roots(f, field)
        if field.degree == 1 or len(roots) == degree(f):
            return roots
    if field.degree == 1:
        return _rational_roots(f, field)

    zeta = field.zeta()
    for s in range(MAX_NORM_SHIFTS):
        offset = zeta * s
        g = shift(f, -offset)
        norm = _norm_over_q(g, field)
        if sympy.gcd(norm, norm.diff(_X)).degree() > 0:
            continue
        _, factors = norm.factor_list()
        roots = []
        for factor, _ in factors:
            common = gcd(g, _from_sympy(factor.all_coeffs(), field))
            if degree(common) == 1:
                beta = -common[0] / common[1]
                roots.append(beta - offset)
        logger.debug(f"roots of degree {degree(f)} polynomial over {field}: {len(roots)} (shift {s})")
        return roots
    raise InternalInvariantError(
        "no squarefree norm found", {"polynomial": to_text(f), "conductor": field.conductor, "shifts": MAX_NORM_SHIFTS}
    )


def scalar_is_square(a: Scalar) -> Optional[Scalar]:
    """A square root of ``a`` in its field, or None when ``a`` is not a square there."""
    field = a.field
    if a == 0:
        return field.zero
    if a.is_rational():
        value = a.to_fraction()
        if value > 0:
            num, num_exact = sympy.integer_nthroot(value.numerator, 2)
            den, den_exact = sympy.integer_nthroot(value.denominator, 2)
            if num_exact and den_exact:
                return field(Fraction(int(num), int(den)))
        if field.degree == 1:
            return None
    roots = roots_in_field([-a, field.zero, field.one], field)
    if not roots:
        return None
    return max(roots, key=lambda r: r.sort_key())
