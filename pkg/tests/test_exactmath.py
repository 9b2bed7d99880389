import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import assume, given, settings, strategies as st

from exactmath import (
    QQ,
    Subspace,
    get_field,
    kernel,
    matrix,
    parse_scalar,
    roots_in_field,
    scalar_is_square,
    solve_sparse,
    square_class,
    subspace_intersection,
    subspace_sum,
    vector,
)
from exactmath.polynomial import make_poly
from utils.exceptions import ParseError, ValidationError

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def elements(conductor):
    field = get_field(conductor)
    return st.lists(rationals, min_size=field.degree, max_size=field.degree).map(
        lambda coeffs: field.from_power_coefficients(coeffs)
    )


class TestCyclotomicField:
    def test_rational_field_is_built_at_import(self):
        assert QQ is get_field(1)
        assert parse_scalar("1/2").field is QQ
        code = "import exactmath.scalar as s; assert s.QQ.one.field is s.QQ"
        subprocess.run([sys.executable, "-c", code], cwd=Path(__file__).parent.parent, check=True)

    def test_root_of_unity_has_exact_order(self):
        for n in (3, 4, 5, 8, 12):
            zeta = get_field(n).zeta()
            assert zeta ** n == 1
            assert all(zeta ** k != 1 for k in range(1, n))

    def test_cyclotomic_relation(self):
        zeta = get_field(3).zeta()
        assert zeta * zeta + zeta + 1 == 0

    def test_conductor_two_is_rational(self):
        field = get_field(2)
        assert field.degree == 1
        assert field.zeta() == -1

    def test_mixed_conductors_meet_in_lcm(self):
        total = get_field(3).zeta() + get_field(4).zeta()
        assert total.field.conductor == 12

    def test_lift_preserves_value(self):
        i = get_field(4).zeta()
        assert i.lift(get_field(8)) == get_field(8).zeta(2)
        with pytest.raises(ValidationError):
            i.lift(get_field(6))

    @given(elements(5))
    def test_inverse(self, x):
        assume(x != 0)
        assert x * x.inverse() == 1

    @given(elements(12), elements(12), elements(12))
    @settings(max_examples=30)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(elements(7))
    @settings(max_examples=30)
    def test_norm_is_multiplicative_on_squares(self, x):
        assert (x * x).norm() == x.norm() ** 2


class TestParsing:
    @given(elements(8))
    @settings(max_examples=40)
    def test_text_round_trip(self, x):
        assert parse_scalar(x.to_text(), get_field(8)) == x

    def test_rational_text(self):
        assert parse_scalar("-3/4") == Fraction(-3, 4)
        assert parse_scalar("[0,1]@4", get_field(8)) == get_field(8).zeta(2)

    @pytest.mark.parametrize("text", ["abc", "1/0", "[1,x]@3"])
    def test_bad_scalar(self, text):
        with pytest.raises(ParseError):
            parse_scalar(text)

    def test_incompatible_conductor(self):
        with pytest.raises(ParseError):
            parse_scalar("[0,1]@4", get_field(3))


class TestSquares:
    @pytest.mark.parametrize("value, expected", [
        (Fraction(8, 3), 6), (Fraction(-4), -1), (Fraction(9, 25), 1), (Fraction(12), 3),
    ])
    def test_square_class(self, value, expected):
        assert square_class(value) == expected

    def test_square_roots(self):
        assert scalar_is_square(QQ(Fraction(1, 4))) == Fraction(1, 2)
        assert scalar_is_square(QQ(2)) is None
        i = scalar_is_square(get_field(4)(-1))
        assert i is not None and i * i == -1

    def test_roots_need_the_field(self):
        assert roots_in_field(make_poly([1, 0, 1], QQ)) == []
        roots = roots_in_field(make_poly([1, 0, 1], get_field(4)))
        assert len(roots) == 2
        assert all(r * r == -1 for r in roots)

    def test_roots_of_cyclotomic_split(self):
        field = get_field(5)
        roots = roots_in_field(make_poly([1, 1, 1, 1, 1], field))
        assert len(roots) == 4
        assert all(r ** 5 == 1 and r != 1 for r in roots)

    def test_zero_polynomial(self):
        with pytest.raises(ValidationError):
            roots_in_field([])


class TestSubspaces:
    def test_span_is_canonical(self):
        a = Subspace.span([vector([1, 1, 0], QQ), vector([0, 1, 1], QQ)], 3, QQ)
        b = Subspace.span([vector([1, 2, 1], QQ), vector([1, 0, -1], QQ)], 3, QQ)
        assert a == b
        assert hash(a) == hash(b)

    def test_sum_and_intersection(self):
        u = Subspace.span([vector([1, 0, 0, 0], QQ), vector([0, 1, 0, 0], QQ)], 4, QQ)
        v = Subspace.span([vector([0, 1, 0, 0], QQ), vector([0, 0, 1, 0], QQ)], 4, QQ)
        assert subspace_sum(u, v).dim == 3
        meet = subspace_intersection(u, v)
        assert meet.dim == 1
        assert meet.contains(vector([0, 5, 0, 0], QQ))

    def test_kernel(self):
        f = matrix([[1, 1, 0], [0, 1, 1]], QQ)
        k = kernel(f, QQ)
        assert k.dim == 1
        assert k.contains(vector([1, -1, 1], QQ))

    def test_ambient_mismatch(self):
        with pytest.raises(ValidationError):
            Subspace.span([vector([1, 0], QQ)], 3, QQ)


class TestSparseSolve:
    def test_consistent_system(self):
        # x + y = 3, y - z = 1, x + z = 2
        rows = [{0: QQ(1), 1: QQ(1)}, {1: QQ(1), 2: QQ(-1)}, {0: QQ(1), 2: QQ(1)}]
        solution = solve_sparse(rows, [QQ(3), QQ(1), QQ(2)], 3, QQ)
        x, y, z = solution
        assert x + y == 3 and y - z == 1 and x + z == 2

    def test_inconsistent_system(self):
        rows = [{0: QQ(1), 1: QQ(1)}, {0: QQ(2), 1: QQ(2)}]
        assert solve_sparse(rows, [QQ(1), QQ(3)], 2, QQ) is None

    def test_free_variables_are_zero(self):
        solution = solve_sparse([{0: QQ(1), 1: QQ(1)}], [QQ(4)], 2, QQ)
        assert solution == [QQ(4), QQ(0)]
