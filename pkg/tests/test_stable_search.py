import pytest

from coalgebra import coradical
from exactmath import mat_vec, unit_vector
from hopf import SearchOutcome, antipode_power, s_squared_adapted_basis, stable_coalgebra_search
from matrixlike import MatrixLikeTag
from tests.fixtures import random_base_change, rigged_search_algebra, search_components, transport_hopf
from utils.exceptions import ValidationError

KINDS = {
    "full": SearchOutcome.FOUND,
    "c3": SearchOutcome.GROUPLIKE_FORCED,
    "c2": SearchOutcome.GROUPLIKE_FORCED,
    "collapse": SearchOutcome.CONTRADICTION,
}


def _search(h, c_span):
    _, components = coradical(h.coalgebra)
    c_comp, d_comp = search_components(h, c_span, components)
    return stable_coalgebra_search(h, c_comp, d_comp)


@pytest.fixture(scope="module")
def rigged():
    return {kind: rigged_search_algebra(kind) for kind in KINDS}


class TestAdaptedBasis:
    def test_sign_pattern(self, rigged):
        h, c_span = rigged["full"]
        _, components = coradical(h.coalgebra)
        c_comp, _ = search_components(h, c_span, components)
        s2 = antipode_power(h, 2)
        basis = s_squared_adapted_basis(h, c_comp)
        for index, v in enumerate(basis):
            i, j = divmod(index, 2)
            assert c_span.contains(v)
            assert all(a == b * (-1) ** (i + j) for a, b in zip(mat_vec(s2, v, h.field), v))


class TestOutcomes:
    def test_found(self, rigged):
        result = _search(*rigged["full"])
        assert result.outcome is SearchOutcome.FOUND
        assert result.stable.dim == 4
        assert result.classes["E"].tag is MatrixLikeTag.FULL4
        assert result.checks["stable_under_S"]
        assert result.checks["antipode_on_E"]

    def test_c3_is_grouplike_forced(self, rigged):
        result = _search(*rigged["c3"])
        assert result.outcome is SearchOutcome.GROUPLIKE_FORCED
        assert result.classes["E"].tag is MatrixLikeTag.C3
        assert result.classes["F"].tag is MatrixLikeTag.C3

    def test_c2_is_grouplike_forced(self, rigged):
        result = _search(*rigged["c2"])
        assert result.outcome is SearchOutcome.GROUPLIKE_FORCED
        e_class = result.classes["E"]
        assert e_class.tag is MatrixLikeTag.C2
        assert "class 1" in e_class.label

    def test_collapse_has_primitive_witness(self, rigged):
        result = _search(*rigged["collapse"])
        assert result.outcome is SearchOutcome.CONTRADICTION
        for name in ("E_is_unit", "F_is_unit", "diagonal_products_are_one",
                     "off_diagonal_products_vanish", "x_forms_agree", "x_primitive"):
            assert result.checks[name], name
        assert result.witness["x_is_zero"] is False
        assert result.witness["inconsistent"] is True

    def test_report_shape(self, rigged):
        payload = _search(*rigged["full"]).to_dict()
        assert payload["outcome"] == "found"
        assert payload["dim_E"] == 4
        assert payload["stable_dim"] == 4
        assert payload["classes"]["E"]["tag"] == "Full4"


class TestPreconditions:
    def test_components_must_be_four_dimensional(self, rigged):
        h, c_span = rigged["collapse"]
        _, components = coradical(h.coalgebra)
        c_comp, _ = search_components(h, c_span, components)
        point = next(comp for comp in components if comp.d == 1)
        with pytest.raises(ValidationError):
            stable_coalgebra_search(h, c_comp, point)

    def test_antipode_must_swap_components(self, rigged):
        h, c_span = rigged["full"]
        _, components = coradical(h.coalgebra)
        c_comp, _ = search_components(h, c_span, components)
        t11 = unit_vector(h.dim, h.coalgebra.basis_names.index("t11"), h.field)
        target = next(comp for comp in components if comp.subcoalgebra.contains(t11))
        with pytest.raises(ValidationError):
            stable_coalgebra_search(h, c_comp, target)


class TestBaseChange:
    @pytest.mark.parametrize("kind", sorted(KINDS))
    @pytest.mark.parametrize("seed", [0, 1])
    def test_outcome_survives(self, kind, seed, rigged):
        h, c_span = rigged[kind]
        moved, moved_span = transport_hopf(h, c_span, random_base_change(h.dim, seed))
        assert _search(moved, moved_span).outcome is KINDS[kind]

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(50))
    def test_many_fixtures(self, seed, rigged):
        kind = sorted(KINDS)[seed % len(KINDS)]
        h, c_span = rigged[kind]
        moved, moved_span = transport_hopf(h, c_span, random_base_change(h.dim, 100 + seed))
        result = _search(moved, moved_span)
        assert result.outcome is KINDS[kind]
        if kind == "collapse":
            assert result.checks["x_primitive"]
            assert result.witness["x_is_zero"] is False
