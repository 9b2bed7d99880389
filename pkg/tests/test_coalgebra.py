import numpy as np
import pytest

from coalgebra import (
    Coalgebra,
    check_coalgebra,
    coradical,
    coradical_filtration,
    grouplikes,
    nichols_data,
    nonzero_p1_for_grouplikes,
    p1_comatrix,
    skew_primitives,
    subcoalgebra_restriction,
    wedge,
    wedge_identity,
)
from exactmath import QQ, Subspace, identity, mat_mul, unit_vector, vector
from exactmath.linalg import arrays_equal
from tests.fixtures import component_index
from utils.exceptions import ExtendFieldError, ValidationError
from zoo import build, matrix_coalgebra, spec


def _unit(c, name):
    return unit_vector(c.dim, c.basis_names.index(name), c.field)


class TestAxioms:
    @pytest.mark.parametrize("name", ["sweedler", "taft3", "k_d7", "nonpointed8", "pointed8"])
    def test_zoo_coalgebras_pass(self, name, request):
        h = request.getfixturevalue(name)
        assert check_coalgebra(h.coalgebra).ok

    def test_broken_comultiplication_is_reported(self, sweedler):
        c = sweedler.coalgebra
        comul = c.comul.copy()
        x, one = c.basis_names.index("x"), c.basis_names.index("1")
        comul[x, one, one] = comul[x, one, one] + 1
        report = check_coalgebra(Coalgebra(c.field, comul, c.counit.copy(), list(c.basis_names)))
        assert not report.ok
        assert report.to_dict()["ok"] is False

    def test_shape_mismatch(self):
        with pytest.raises(ValidationError):
            Coalgebra(QQ, np.zeros((2, 2, 2), dtype=object), vector([1, 0, 0], QQ))


class TestFiltration:
    def test_sweedler(self, sweedler):
        assert [layer.dim for layer in coradical_filtration(sweedler.coalgebra)] == [2, 4]

    def test_taft3(self, taft3):
        assert [layer.dim for layer in coradical_filtration(taft3.coalgebra)] == [3, 6, 9]

    def test_cosemisimple(self, k_d7):
        assert [layer.dim for layer in coradical_filtration(k_d7.coalgebra)] == [14]

    def test_nonpointed8(self, nonpointed8):
        assert [layer.dim for layer in coradical_filtration(nonpointed8.coalgebra)] == [6, 8]

    def test_wedge_with_everything(self, sweedler):
        c = sweedler.coalgebra
        full = Subspace.full(c.dim, c.field)
        c0 = coradical_filtration(c)[0]
        assert wedge(c0, full, c).dim == c.dim


class TestCoradical:
    def test_matrix_coalgebra_is_simple(self):
        c = matrix_coalgebra(3, QQ)
        c0, components = coradical(c)
        assert c0.dim == 9
        assert [comp.d for comp in components] == [3]

    def test_dual_dihedral_components(self, k_d7_dual):
        _, components = coradical(k_d7_dual.coalgebra)
        assert sorted(comp.d for comp in components) == [1, 1, 2, 2, 2]

    def test_dual_dihedral_needs_the_field(self):
        h = build(spec("dual_group_algebra", group="dihedral", n=7))
        with pytest.raises(ExtendFieldError) as info:
            coradical(h.coalgebra)
        assert info.value.to_dict()["details"]["conductor"] == 1

    def test_nonpointed8_components(self, nonpointed8):
        _, components = coradical(nonpointed8.coalgebra)
        assert sorted(comp.d for comp in components) == [1, 1, 2]

    def test_matrix_units_satisfy_comatrix_identities(self, nonpointed8):
        c = nonpointed8.coalgebra
        _, components = coradical(c)
        comp = next(comp for comp in components if comp.d == 2)
        for i in range(2):
            for j in range(2):
                expected = sum(np.outer(comp.unit(i, k), comp.unit(k, j)) for k in range(2))
                assert arrays_equal(c.delta(comp.unit(i, j)), expected)
                assert c.epsilon(comp.unit(i, j)) == (1 if i == j else 0)

    def test_restriction_to_component(self, nonpointed8):
        c = nonpointed8.coalgebra
        _, components = coradical(c)
        comp = next(comp for comp in components if comp.d == 2)
        restricted = subcoalgebra_restriction(c, comp.subcoalgebra)
        assert restricted.dim == 4
        assert check_coalgebra(restricted).ok


class TestGrouplikes:
    def test_counts(self, sweedler, taft3, k_d7, k_d7_dual, nonpointed8):
        assert len(grouplikes(sweedler.coalgebra)) == 2
        assert len(grouplikes(taft3.coalgebra)) == 3
        assert len(grouplikes(k_d7.coalgebra)) == 14
        assert len(grouplikes(k_d7_dual.coalgebra)) == 2
        assert len(grouplikes(nonpointed8.coalgebra)) == 2

    def test_c2_over_q(self):
        assert grouplikes(build(spec("c2", a=2))) == []

    def test_c2_with_square_parameter(self):
        c = build(spec("c2", a=4))
        found = grouplikes(c)
        assert len(found) == 2
        expected = [vector([1, 2], QQ), vector([1, -2], QQ)]
        for g in expected:
            assert any(arrays_equal(g, f) for f in found)


class TestSkewPrimitives:
    def test_sweedler(self, sweedler):
        c = sweedler.coalgebra
        one, g = _unit(c, "1"), _unit(c, "g")
        space = skew_primitives(c, g, one)
        assert space.dim == 2
        assert space.nontrivial_dim == 1
        assert space.space.contains(_unit(c, "x"))
        assert skew_primitives(c, one, one).dim == 0

    def test_rejects_non_grouplike(self, sweedler):
        c = sweedler.coalgebra
        with pytest.raises(ValidationError):
            skew_primitives(c, _unit(c, "x"), _unit(c, "1"))


class TestNichols:
    def test_sweedler_isotypic_table(self, sweedler):
        c = sweedler.coalgebra
        nd = nichols_data(c)
        assert [p.dim for p in nd.P] == [2]
        one = component_index(nd, _unit(c, "1"))
        g = component_index(nd, _unit(c, "g"))
        assert nd.isotypic == {(g, one): 1, (one, g): 1}

    def test_taft3_layers(self, taft3):
        nd = nichols_data(taft3.coalgebra)
        assert [p.dim for p in nd.P] == [3, 6]
        assert sum(nd.isotypic.values()) == 3

    @pytest.mark.parametrize("name", ["sweedler", "taft3"])
    def test_randomized_lifts_agree(self, name, request):
        c = request.getfixturevalue(name).coalgebra
        canonical = nichols_data(c)
        for seed in range(5):
            nd = nichols_data(c, seed=seed)
            assert [p.dim for p in nd.P] == [p.dim for p in canonical.P]
            assert sorted(nd.isotypic.values()) == sorted(canonical.isotypic.values())

    def test_taft4(self):
        c = build(spec("taft", n=4)).coalgebra
        nd = nichols_data(c, seed=3)
        assert [p.dim for p in nd.P] == [4, 8, 12]

    def test_nonpointed8_p1_between_grouplikes(self, nonpointed8):
        nd = nichols_data(nonpointed8.coalgebra)
        assert nd.p1.dim == 2
        grouplike_indices = {comp.index for comp in nd.components if comp.is_grouplike}
        for tau, gamma in nd.isotypic:
            assert tau in grouplike_indices and gamma in grouplike_indices

    def test_p1_comatrix_avoids_excluded_configurations(self, sweedler):
        nd = nichols_data(sweedler.coalgebra)
        comatrix = p1_comatrix(sweedler.coalgebra, nd)
        assert comatrix.size == 2
        assert not comatrix.both_scalar
        assert not comatrix.both_full

    @pytest.mark.parametrize("name", ["sweedler", "taft3"])
    def test_wedge_identity(self, name, request):
        c = request.getfixturevalue(name).coalgebra
        nd = nichols_data(c)
        for g in nd.components:
            for other in nd.components:
                assert wedge_identity(c, nd, g.index, other.index).holds

    def test_nonzero_p1_keys_are_grouplikes(self, taft3):
        nd = nichols_data(taft3.coalgebra)
        result = nonzero_p1_for_grouplikes(nd)
        assert set(result) == {comp.index for comp in nd.components}
        assert all(v == [] for v in result.values())

    @pytest.mark.parametrize("name", ["sweedler", "taft3", "nonpointed8"])
    def test_first_layer_splits_over_coradical(self, name, request):
        c = request.getfixturevalue(name).coalgebra
        layers = coradical_filtration(c)
        assert layers[1].dim == layers[0].dim + nichols_data(c).p1.dim

    @pytest.mark.slow
    def test_taft4_randomized_lifts(self):
        c = build(spec("taft", n=4)).coalgebra
        for seed in range(5):
            assert [p.dim for p in nichols_data(c, seed=seed).P] == [4, 8, 12]


class TestHitActions:
    def test_counit_acts_trivially(self, taft3):
        c = taft3.coalgebra
        ident = identity(c.dim, c.field)
        assert arrays_equal(c.left_hit_matrix(c.counit), ident)
        assert arrays_equal(c.right_hit_matrix(c.counit), ident)

    @pytest.mark.parametrize("left, right", [("1", "g"), ("g", "x"), ("gx", "x")])
    def test_left_and_right_actions_commute(self, sweedler, left, right):
        c = sweedler.coalgebra
        f, h = _unit(c, left), _unit(c, right)
        lf, rh = c.left_hit_matrix(f), c.right_hit_matrix(h)
        assert arrays_equal(mat_mul(lf, rh, c.field), mat_mul(rh, lf, c.field))
