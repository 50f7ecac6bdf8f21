import pytest

import pad_planner as pp
from pad_planner.emotion import BUNDLED_PLAN
from conftest import fixture_path


def test_golden_line():
    plan = pp.Plan((pp.TimedAction(0.0, "(move kenny kenny_wp toy1_wp)", 10.0),))
    with open(fixture_path("golden_plan_line.txt")) as f:
        assert pp.format_plan(plan) == f.read().rstrip("\n") + "\n"


def test_reference_plan():
    plan = pp.load_plan(BUNDLED_PLAN)
    assert len(plan) == 20
    assert plan.makespan == pytest.approx(620.019)
    assert plan.actions[5] == pp.TimedAction(200.005, "(accomodate-distress c1)", 30.0)
    assert [a.start for a in plan] == sorted(a.start for a in plan)


def test_empty_plan():
    assert pp.parse_plan("") == pp.Plan()
    assert pp.parse_plan("\n  \n; nothing to do\n").makespan == 0.0
    assert pp.format_plan(pp.Plan()) == ""


def test_lines_are_sorted_and_normalized():
    plan = pp.parse_plan("5: ( move  kenny a b )[10]\n0.5:(improve-boredom c1) [ 10.0 ]")
    assert [str(a) for a in plan] == ["0.500: (improve-boredom c1)  [10.000]",
                                      "5.000: (move kenny a b)  [10.000]"]
    assert plan.makespan == 15.0


@pytest.mark.parametrize("text, line", [
    ("0.000: (move kenny kenny_wp toy1_wp)  10.000", 1),
    ("0.000: (move kenny kenny_wp toy1_wp)  [10.000]\n10: move  [1]", 2),
    ("0.000: ()  [1]", 1),
    ("0.000: (a)  [-1]", 1),
])
def test_syntax_errors(text, line):
    with pytest.raises(pp.PlanSyntaxError) as info:
        pp.parse_plan(text, "broken.plan")
    assert info.value.line == line
    assert "broken.plan" in str(info.value)


def test_format_then_parse(benchmark_plan):
    again = pp.parse_plan(pp.format_plan(benchmark_plan))
    assert len(again) == len(benchmark_plan)
    for a, b in zip(again, benchmark_plan):
        assert a.action == b.action
        assert a.start == pytest.approx(b.start, abs=5e-4)
        assert a.duration == pytest.approx(b.duration, abs=5e-4)
