import json

import pytest

from cli import read_structure, run, write_structure
from cli.formats import loads_structure, parse_vector
from coalgebra import coradical
from exactmath.linalg import arrays_equal
from tests.fixtures import rigged_search_algebra, search_components
from utils.exceptions import ParseError


def _emit(tmp_path, *tokens):
    out = tmp_path / f"{'_'.join(tokens)}.json"
    assert run(["zoo", "emit", *tokens, "--out", str(out)]) == 0
    return out


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def _error(capsys):
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


class TestZooFiles:
    def test_round_trip(self, tmp_path, sweedler):
        path = _emit(tmp_path, "sweedler")
        loaded = read_structure(path)
        assert arrays_equal(loaded.coalgebra.comul, sweedler.coalgebra.comul)
        assert arrays_equal(loaded.algebra.mul, sweedler.algebra.mul)
        assert arrays_equal(loaded.antipode, sweedler.antipode)
        assert loaded.coalgebra.basis_names == sweedler.coalgebra.basis_names

    def test_cyclotomic_scalars_survive(self, tmp_path, taft3):
        path = _emit(tmp_path, "taft", "3")
        loaded = read_structure(path)
        assert loaded.field.conductor == 3
        assert arrays_equal(loaded.algebra.mul, taft3.algebra.mul)

    def test_one_triple_per_line(self, tmp_path):
        text = _emit(tmp_path, "sweedler").read_text(encoding="utf-8")
        assert any(line.startswith('    [0, 0, 0, "1"]') for line in text.splitlines())

    def test_configured_conductor_extends_the_field(self, tmp_path, capsys):
        config = tmp_path / "field.yaml"
        config.write_text("field:\n  default_conductor: 3\n", encoding="utf-8")
        out = tmp_path / "sweedler.json"
        assert run(["--json", "--config", str(config), "zoo", "emit", "sweedler", "--out", str(out)]) == 0
        assert _json(capsys)["conductor"] == 3
        assert read_structure(out).field.conductor == 3

    def test_list(self, capsys):
        assert run(["--json", "zoo", "list"]) == 0
        families = {f["family"]: f["hopf"] for f in _json(capsys)["families"]}
        assert families["taft"] is True
        assert families["c3"] is False


class TestParsing:
    def test_bad_json_names_the_position(self):
        with pytest.raises(ParseError) as info:
            loads_structure('{"dim": 2,\n  "field": }')
        assert info.value.to_dict()["details"]["line"] == 2

    def test_missing_field(self):
        with pytest.raises(ParseError) as info:
            loads_structure('{"field": {"conductor": 1}, "dim": 1, "counit": ["1"]}')
        assert info.value.to_dict()["details"]["field"] == "comul"

    def test_bad_scalar_names_the_entry(self):
        text = '{"field": {"conductor": 1}, "dim": 1, "comul": [[0, 0, 0, "one"]], "counit": ["1"]}'
        with pytest.raises(ParseError) as info:
            loads_structure(text)
        assert info.value.to_dict()["details"]["field"] == "comul[0]"

    def test_vectors(self, sweedler):
        c = sweedler.coalgebra
        assert arrays_equal(parse_vector("gx", c), parse_vector("0;0;0;1", c))
        with pytest.raises(ParseError):
            parse_vector("1;2", c)


class TestCommands:
    def test_filtration_text(self, tmp_path, capsys):
        path = _emit(tmp_path, "sweedler")
        capsys.readouterr()
        assert run(["filtration", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "C_0 dim 2, C_1 dim 4 = H"

    def test_check(self, tmp_path, capsys):
        path = _emit(tmp_path, "taft", "3")
        capsys.readouterr()
        assert run(["--json", "check", str(path)]) == 0
        payload = _json(capsys)
        assert payload["ok"] is True
        assert payload["antipode"] == "verified"

    def test_nichols(self, tmp_path, capsys):
        path = _emit(tmp_path, "taft", "3")
        capsys.readouterr()
        assert run(["--json", "nichols", str(path), "--seed", "2"]) == 0
        payload = _json(capsys)
        assert payload["P"] == [3, 6]
        assert payload["seed"] == 2

    def test_grouplikes_and_skew_primitives(self, tmp_path, capsys):
        path = _emit(tmp_path, "sweedler")
        capsys.readouterr()
        assert run(["--json", "grouplikes", str(path)]) == 0
        assert _json(capsys)["count"] == 2
        dims = []
        for g, h in ((0, 1), (1, 0)):
            assert run(["--json", "skewprim", str(path), "--g", str(g), "--h", str(h)]) == 0
            dims.append(_json(capsys)["nontrivial_dim"])
        assert dims == [1, 1]

    def test_antipode_order(self, tmp_path, capsys):
        path = _emit(tmp_path, "sweedler")
        capsys.readouterr()
        assert run(["--json", "antipode", str(path)]) == 0
        payload = _json(capsys)
        assert payload["order"]["order"] == 4
        assert payload["images"]["x"] == "-gx"

    def test_subalgebra(self, tmp_path, capsys):
        path = _emit(tmp_path, "sweedler")
        capsys.readouterr()
        assert run(["--json", "subalgebra", str(path), "--seed-basis", "g"]) == 0
        assert _json(capsys)["dim"] == 2

    def test_classify(self, tmp_path, capsys):
        path = _emit(tmp_path, "matrix_coalgebra", "2")
        capsys.readouterr()
        assert run(["--json", "classify2x2", str(path), "--span", "e11|e12|e21|e22"]) == 0
        assert _json(capsys)["tag"] == "Full4"

    def test_stable_search(self, tmp_path, capsys):
        h, c_span = rigged_search_algebra("collapse")
        path = tmp_path / "rigged.json"
        write_structure(h, path)
        loaded = read_structure(path)
        _, components = coradical(loaded.coalgebra)
        c_comp, d_comp = search_components(loaded, c_span, components)
        argv = ["--json", "stable-search", str(path), "--c", str(c_comp.index), "--d", str(d_comp.index)]
        assert run(argv) == 0
        payload = _json(capsys)
        assert payload["outcome"] == "contradiction"
        assert payload["witness"]["x_is_zero"] is False

    def test_bounds_dimension_14(self, capsys):
        assert run(["--json", "bounds", "--dim", "14"]) == 0
        payload = _json(capsys)
        assert payload["open"] == 0
        assert len(payload["reports"]) == 8
        assert "conclusion" in payload

    def test_bounds_dimension_16_text(self, capsys):
        assert run(["bounds", "--dim", "16"]) == 0
        assert capsys.readouterr().out.count("OPEN") == 6

    def test_pq_sweep(self, capsys):
        assert run(["--json", "pq", "--sweep"]) == 0
        assert _json(capsys)["semisimple_dimensions"] == [15, 21, 35, 55, 65, 77, 91, 143]


class TestExitCodes:
    def test_usage_error(self, capsys):
        assert run(["no-such-command"]) == 1
        assert _error(capsys)["exit_code"] == 1

    def test_bad_primes(self, capsys):
        assert run(["pq", "--p", "2", "--q", "3"]) == 1
        assert _error(capsys)["error_type"] == "ValidationError"

    def test_field_extension_is_a_math_error(self, tmp_path, capsys):
        path = _emit(tmp_path, "dual_group_algebra", "dihedral", "7")
        capsys.readouterr()
        assert run(["coradical", str(path)]) == 2
        payload = _error(capsys)
        assert payload["error_type"] == "ExtendFieldError"
        assert payload["exit_code"] == 2

    def test_antipode_needs_a_hopf_file(self, tmp_path, capsys):
        path = _emit(tmp_path, "c3")
        capsys.readouterr()
        assert run(["antipode", str(path)]) == 1

    def test_missing_file(self, tmp_path, capsys):
        assert run(["filtration", str(tmp_path / "absent.json")]) == 1
