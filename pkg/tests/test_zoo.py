import pytest

from coalgebra import Coalgebra, check_coalgebra
from hopf import HopfAlgebra, check_bialgebra, group_data
from utils.exceptions import ExtendFieldError, ValidationError
from zoo import ZooFamily, build, cyclic, dihedral, dualize, parse_zoo_spec, spec


class TestGroups:
    def test_dihedral_relations(self):
        group = dihedral(5)
        r, s = group.labels.index("r"), group.labels.index("s")
        assert group.order == 10
        assert group.multiply(r, group.multiply(s, r)) == s
        assert group.multiply(s, s) == group.identity
        assert group.multiply(r, s) != group.multiply(s, r)

    def test_cyclic(self):
        group = cyclic(4)
        assert group.labels == ["1", "g", "g^2", "g^3"]
        g = group.labels.index("g")
        assert group.multiply(g, group.multiply(g, group.multiply(g, g))) == group.identity

    def test_group_algebras_recover_their_groups(self):
        assert group_data(build(spec("group_algebra", group="cyclic", n=4))).is_abelian()
        dihedral_algebra = build(spec("group_algebra", group="dihedral", n=5))
        assert group_data(dihedral_algebra).order == 10
        assert not group_data(dihedral_algebra).is_abelian()

    @pytest.mark.parametrize("factory, n", [(cyclic, 0), (dihedral, 2)])
    def test_bad_orders(self, factory, n):
        with pytest.raises(ValidationError):
            factory(n)


class TestParsing:
    @pytest.mark.parametrize("tokens, family", [
        (["sweedler"], ZooFamily.TAFT),
        (["taft", "3"], ZooFamily.TAFT),
        (["dual", "group_algebra", "dihedral", "7"], ZooFamily.DUAL),
        (["tensor", "nonpointed8", "group_algebra", "cyclic", "3"], ZooFamily.TENSOR),
        (["direct_sum", "2", "c3", "c2", "2"], ZooFamily.DIRECT_SUM),
    ])
    def test_families(self, tokens, family):
        assert parse_zoo_spec(tokens).family is family

    def test_sweedler_alias(self):
        assert parse_zoo_spec(["sweedler"]).param_dict == {"n": 2}

    @pytest.mark.parametrize("tokens", [
        [], ["mystery"], ["taft"], ["taft", "three"], ["group_algebra", "cyclic"], ["taft", "2", "extra"],
    ])
    def test_rejects(self, tokens):
        with pytest.raises(ValidationError):
            parse_zoo_spec(tokens)


class TestBuild:
    def test_taft_needs_roots_of_unity(self):
        with pytest.raises(ExtendFieldError):
            build(spec("taft", n=3, conductor=1))

    def test_taft_default_field(self):
        h = build(spec("taft", n=4))
        assert h.field.conductor == 4
        assert h.dim == 16

    def test_dual_dual_names(self, sweedler):
        twice = dualize(dualize(sweedler))
        assert twice.coalgebra.basis_names == sweedler.coalgebra.basis_names
        assert twice.name == sweedler.name

    def test_dualize_needs_hopf_data(self):
        with pytest.raises(ValidationError):
            dualize(build(spec("c3")))

    def test_direct_sum(self):
        c = build(parse_zoo_spec(["direct_sum", "2", "c3", "matrix_coalgebra", "2"]))
        assert isinstance(c, Coalgebra)
        assert c.dim == 7
        assert check_coalgebra(c).ok

    def test_tensor(self):
        h = build(parse_zoo_spec(["tensor", "sweedler", "group_algebra", "cyclic", "2"]))
        assert isinstance(h, HopfAlgebra)
        assert h.dim == 8
        assert check_bialgebra(h).ok

    def test_tensor_needs_hopf_algebras(self):
        with pytest.raises(ValidationError):
            build(parse_zoo_spec(["tensor", "c3", "sweedler"]))

    def test_nonpointed8_field(self, nonpointed8):
        assert nonpointed8.field.conductor == 4
        assert nonpointed8.name == "nonpointed8"
