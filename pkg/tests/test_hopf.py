import pytest

from coalgebra import AlgebraSC, coradical, nichols_data
from exactmath import QQ, Subspace, unit_vector, zeros
from exactmath.linalg import arrays_equal
from hopf import (
    HopfAlgebra,
    antipode_order,
    check_bialgebra,
    compute_antipode,
    generated_hopf_subalgebra,
    group_data,
    group_divisibility_check,
    has_nontrivial_skew_primitive,
    is_semisimple,
    isotypic_symmetry_check,
    s_stable,
    tensor_product,
)
from utils.exceptions import ValidationError


def _unit(h, name):
    return unit_vector(h.dim, h.coalgebra.basis_names.index(name), h.field)


class TestBialgebra:
    @pytest.mark.parametrize("name", ["sweedler", "taft3", "k_d7", "k_d7_dual", "pointed8", "nonpointed8"])
    def test_zoo_passes(self, name, request):
        assert check_bialgebra(request.getfixturevalue(name)).ok

    def test_broken_product_is_reported(self, sweedler):
        mul = sweedler.algebra.mul.copy()
        g, x = sweedler.coalgebra.basis_names.index("g"), sweedler.coalgebra.basis_names.index("x")
        mul[g, g] = zeros(sweedler.dim, QQ)
        mul[g, g, x] = QQ(1)
        broken = HopfAlgebra(
            sweedler.coalgebra,
            AlgebraSC(QQ, mul, sweedler.algebra.unit.copy(), list(sweedler.algebra.basis_names)),
        )
        assert not check_bialgebra(broken).ok

    def test_dimension_mismatch(self, sweedler, k_c3):
        with pytest.raises(ValidationError):
            HopfAlgebra(sweedler.coalgebra, k_c3.algebra)


class TestAntipode:
    def test_recomputed_antipode_is_unique(self, sweedler):
        bare = HopfAlgebra(sweedler.coalgebra, sweedler.algebra)
        assert arrays_equal(compute_antipode(bare), sweedler.antipode)

    def test_sweedler_antipode_on_generators(self, sweedler):
        g, x, gx = (_unit(sweedler, name) for name in ("g", "x", "gx"))
        assert arrays_equal(sweedler.apply_antipode(g), g)
        assert arrays_equal(sweedler.apply_antipode(x), -gx)

    @pytest.mark.parametrize("name, order", [("sweedler", 4), ("taft3", 6), ("k_d7", 2), ("k_d7_dual", 2)])
    def test_orders(self, name, order, request):
        result = antipode_order(request.getfixturevalue(name))
        assert result.order == order
        assert result.divides_bound

    def test_sweedler_bound_is_certified(self, sweedler):
        result = antipode_order(sweedler)
        assert result.certified
        assert result.to_dict()["bound"] == 8

    def test_rational_dihedral_is_uncertified(self, k_d7):
        assert not antipode_order(k_d7).certified


class TestStructure:
    def test_group_data(self, sweedler, k_d7):
        assert group_data(sweedler).order == 2
        assert group_data(sweedler).is_abelian()
        assert group_data(k_d7).order == 14
        assert not group_data(k_d7).is_abelian()

    def test_semisimplicity(self, sweedler, k_d7):
        assert is_semisimple(k_d7)
        assert not is_semisimple(sweedler)

    def test_skew_primitives(self, sweedler, k_d7):
        assert has_nontrivial_skew_primitive(sweedler)
        assert not has_nontrivial_skew_primitive(k_d7)

    @pytest.mark.parametrize("name", ["sweedler", "taft3", "k_d7", "k_d7_dual", "pointed8", "nonpointed8"])
    def test_group_divisibility(self, name, request):
        h = request.getfixturevalue(name)
        nd = nichols_data(h.coalgebra) if not is_semisimple(h) else None
        report = group_divisibility_check(h, nd)
        assert report.ok, report.violations

    @pytest.mark.parametrize("name", ["sweedler", "taft3", "nonpointed8", "pointed8"])
    def test_isotypic_symmetry(self, name, request):
        h = request.getfixturevalue(name)
        assert isotypic_symmetry_check(h, nichols_data(h.coalgebra)).ok

    def test_s_stable_components(self, sweedler, k_d7_dual):
        _, components = coradical(sweedler.coalgebra)
        assert all(s_stable(sweedler, comp) for comp in components)
        _, components = coradical(k_d7_dual.coalgebra)
        assert all(s_stable(k_d7_dual, comp) for comp in components if comp.d == 1)


class TestGeneratedSubalgebra:
    def test_grouplike_generates_group_algebra(self, sweedler):
        seed = Subspace.span([_unit(sweedler, "g")], sweedler.dim, sweedler.field)
        assert generated_hopf_subalgebra(sweedler, seed).dim == 2

    def test_skew_primitive_generates_everything(self, sweedler):
        seed = Subspace.span([_unit(sweedler, "x")], sweedler.dim, sweedler.field)
        assert generated_hopf_subalgebra(sweedler, seed).dim == 4

    def test_rotation_generates_cyclic_subgroup(self, k_d7):
        seed = Subspace.span([_unit(k_d7, "r")], k_d7.dim, k_d7.field)
        assert generated_hopf_subalgebra(k_d7, seed).dim == 7

    def test_simple_component_of_dual_dihedral_generates_everything(self, k_d7_dual):
        _, components = coradical(k_d7_dual.coalgebra)
        block = next(comp for comp in components if comp.d == 2)
        assert generated_hopf_subalgebra(k_d7_dual, block.subcoalgebra).dim == 14

    def test_seed_must_live_in_h(self, sweedler):
        with pytest.raises(ValidationError):
            generated_hopf_subalgebra(sweedler, Subspace.zero(3, QQ))


class TestTensorProduct:
    def test_sweedler_with_group_algebra(self, sweedler, k_c3):
        h = tensor_product(sweedler, k_c3)
        assert h.dim == 12
        assert check_bialgebra(h).ok
        assert antipode_order(h).order == 4
        assert group_data(h).order == 6
