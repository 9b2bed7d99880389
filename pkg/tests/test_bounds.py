import pytest
from hypothesis import given, strategies as st

from bounds import (
    CoradicalShape,
    PqOutcome,
    RuleContext,
    dim14_conclusion,
    dim14_report,
    dim16_report,
    enumerate_shapes,
    evaluate_shape,
    p1_lower_bound,
    pq_checker,
    pq_sweep,
    reports_frame,
    rule_cor43,
    rule_cor53,
    rule_cor55,
    semisimple_dimensions,
    semisimple_shapes,
    verdicts_frame,
)
from bounds.rules import round_up
from coalgebra import coradical
from utils.exceptions import ValidationError

DIM14_SHAPES = {
    (1, (2,)), (1, (3,)), (1, (2, 2)), (1, (2, 2, 2)), (2, (2,)), (2, (2, 2)), (2, (3,)), (7, (2,)),
}

DIM16_OPEN = {(1, (2, 2)), (2, (2,)), (2, (2, 2)), (2, (2, 2, 2)), (4, (2,)), (4, (2, 2))}

DIM16_EXCLUDED = {
    (1, (2,)): "dim16_generation",
    (1, (3,)): "cor43",
    (1, (2, 2, 2)): "cor43",
    (1, (2, 3)): "cor43",
    (2, (3,)): "divisibility",
    (2, (2, 3)): "divisibility",
    (4, (3,)): "divisibility",
    (8, (2,)): "divisibility",
}


def _key(report):
    return report.shape.g, report.shape.parts


class TestShapes:
    def test_dimension_14(self):
        assert {(s.g, s.parts) for s in enumerate_shapes(14)} == DIM14_SHAPES

    def test_dimension_16_count(self):
        assert len(enumerate_shapes(16)) == 14

    def test_pointed_shapes_are_optional(self):
        pointed = [s for s in enumerate_shapes(16, include_pointed=True) if s.pointed]
        assert {s.g for s in pointed} == {2, 4, 8}
        assert not any(s.pointed for s in enumerate_shapes(16))

    def test_semisimple_branch(self):
        shapes = semisimple_shapes(14)
        assert len(shapes) == 3
        assert {"dim": 14, "g": 2, "parts": [2, 2, 2], "branch": "semisimple"} in shapes

    def test_invalid_shapes(self):
        with pytest.raises(ValidationError):
            CoradicalShape(8, 1, (1,))
        with pytest.raises(ValidationError):
            CoradicalShape(8, 2, (3,))
        with pytest.raises(ValidationError):
            enumerate_shapes(1)

    def test_block_dims(self):
        shape = CoradicalShape(40, 2, (3, 2, 2))
        assert shape.parts == (2, 2, 3)
        assert shape.block_dims() == {1: 2, 2: 8, 3: 9}
        assert shape.label() == "k[G], |G|=2 ⊕ M^c(2) ⊕ M^c(2) ⊕ M^c(3)"


class TestRounding:
    @given(st.integers(min_value=0, max_value=500), st.integers(min_value=1, max_value=40))
    def test_round_up(self, value, modulus):
        rounded = round_up(value, modulus)
        assert rounded % modulus == 0
        assert value <= rounded < value + modulus

    @pytest.mark.parametrize("g, parts, expected", [
        (2, (2, 2), (4, 2, 4)),
        (3, (2,), (4, 6, 6)),
        (3, (2, 3), (4, 3, 6)),
        (1, (3,), (6, 3, 6)),
    ])
    def test_p1_lower_bound(self, g, parts, expected):
        assert p1_lower_bound(CoradicalShape(120, g, parts)) == expected


class TestRules:
    def test_cor55(self):
        assert not rule_cor55(3, 13, 1).fires
        assert rule_cor55(3, 13, 2).fires
        assert rule_cor55(3, 13, 2).values["threshold"] == "2"
        with pytest.raises(ValidationError):
            rule_cor55(4, 7, 1)
        with pytest.raises(ValidationError):
            rule_cor55(3, 5, 0)

    def test_asserting_no_skew_primitive_enables_cor43(self):
        shape = CoradicalShape(16, 2, (2,))
        assert not rule_cor43(shape).applicable
        verdict = rule_cor43(shape, RuleContext(assert_no_skew_primitive=True))
        assert verdict.applicable
        assert verdict.values["certificate"] == "asserted"
        assert not verdict.fires

    def test_cor53_closes_four_grouplikes_with_one_block(self):
        shape = CoradicalShape(16, 4, (2,))
        assert evaluate_shape(shape).open
        report = evaluate_shape(shape, RuleContext(assert_no_skew_primitive=True))
        assert "cor53" in report.reasons
        verdict = rule_cor53(shape, RuleContext(assert_no_skew_primitive=True))
        assert verdict.fires
        assert verdict.values["bound"] == 24

    @pytest.mark.parametrize("g, parts, rule", [
        (1, (2,), "simple4_generation"),
        (1, (3,), "cor43"),
        (1, (2, 2), "prop63"),
        (2, (2,), "cor55"),
        (7, (2,), "divisibility"),
    ])
    def test_dimension_14_reasons(self, g, parts, rule):
        assert rule in evaluate_shape(CoradicalShape(14, g, parts)).reasons

    def test_verdict_frame(self):
        frame = verdicts_frame(evaluate_shape(CoradicalShape(14, 1, (2, 2))))
        assert list(frame.columns) == ["rule", "applicable", "fires", "values"]
        row = frame[frame["rule"] == "prop63"].iloc[0]
        assert row["fires"]
        assert "radford_bound=4" in row["values"]


class TestReports:
    def test_dimension_14_is_closed(self):
        reports = dim14_report()
        assert {_key(r) for r in reports} == DIM14_SHAPES
        assert all(r.excluded for r in reports)
        assert "group algebra" in dim14_conclusion()

    def test_dimension_16(self):
        reports = {_key(r): r for r in dim16_report()}
        assert {key for key, r in reports.items() if r.open} == DIM16_OPEN
        for key, rule in DIM16_EXCLUDED.items():
            assert rule in reports[key].reasons, key

    def test_frame(self):
        frame = reports_frame(dim14_report())
        assert list(frame.columns) == ["g", "parts", "coradical", "status", "rules"]
        assert len(frame) == 8
        assert set(frame["status"]) == {"excluded"}

    def test_report_dict(self):
        payload = dim16_report()[0].to_dict()
        assert set(payload) == {"shape", "verdicts", "excluded", "open", "reasons"}


class TestSoundness:
    """No rule may exclude the coradical shape of an algebra that exists."""

    @pytest.mark.parametrize("name", ["sweedler", "taft3", "k_d7", "k_d7_dual", "pointed8", "nonpointed8"])
    def test_zoo_shapes_survive(self, name, request):
        h = request.getfixturevalue(name)
        _, components = coradical(h.coalgebra)
        g = sum(1 for comp in components if comp.d == 1)
        parts = tuple(comp.d for comp in components if comp.d > 1)
        report = evaluate_shape(CoradicalShape(h.dim, g, parts))
        assert report.open, report.reasons


class TestPq:
    def test_semisimple_dimensions(self):
        assert semisimple_dimensions() == [15, 21, 35, 55, 65, 77, 91, 143]

    def test_hypotheses_fail(self):
        verdict = pq_checker(3, 11)
        assert verdict.outcome is PqOutcome.HYPOTHESES_FAIL
        assert verdict.hypotheses == {"q_at_most_1_plus_3p": False, "q_at_most_13": True}
        assert verdict.steps == []

    def test_every_case_closes(self):
        verdict = pq_checker(5, 13)
        assert verdict.outcome is PqOutcome.SEMISIMPLE
        assert all(step.contradiction for step in verdict.steps[1:])
        assert verdict.to_dict()["dim"] == 65

    @pytest.mark.parametrize("p, q", [(2, 3), (5, 3), (3, 9), (7, 7)])
    def test_rejects_bad_primes(self, p, q):
        with pytest.raises(ValidationError):
            pq_checker(p, q)

    def test_sweep_size(self):
        assert len(pq_sweep()) == 10

    def test_large_block_case_is_the_plain_inequality(self):
        for verdict in pq_sweep():
            if verdict.outcome is not PqOutcome.SEMISIMPLE:
                continue
            step = next(s for s in verdict.steps if s.case == "case_ii_large")
            assert step.requirement == "q > 9 + p"
            assert step.values["dim"] <= step.values["bound"]
