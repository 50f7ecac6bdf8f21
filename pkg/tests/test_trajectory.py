import csv
import dataclasses
import io
import math

import pytest

import pad_planner as pp
from conftest import make_plan


@pytest.fixture(scope="module")
def trajectory(domain, problem, benchmark_plan):
    return pp.simulate_trajectory(domain, problem, benchmark_plan, 1.0)


def test_row_count(trajectory, benchmark_plan):
    per_child = math.floor(benchmark_plan.makespan / 1.0) + 1 + 2 * len(benchmark_plan)
    assert len(trajectory) == 3 * per_child
    assert trajectory.children == ("c1", "c2", "c3")
    assert all(len(trajectory.of_child(c)) == per_child for c in trajectory.children)


def test_first_rows(trajectory):
    rows = [s.row() for s in trajectory if not s.is_event][:3]
    assert rows == [
        ("0.000", "c1", "0.400", "0.400", "0.450", "Boredom"),
        ("0.000", "c2", "1.000", "1.000", "1.000", "Happiness"),
        ("0.000", "c3", "0.830", "0.980", "0.600", "Happiness"),
    ]


def test_values_stay_in_range(trajectory):
    for s in trajectory:
        assert all(-1.0 <= v <= 1.0 for v in s.pad)


def test_rows_are_ordered(trajectory):
    keys = [(round(s.time, 6), s.child) for s in trajectory]
    assert keys == sorted(keys)
    # at equal time and child, grid rows come first
    for a, b in zip(trajectory.samples, trajectory.samples[1:]):
        if (round(a.time, 6), a.child) == (round(b.time, 6), b.child):
            assert not (a.is_event and not b.is_event)


def test_last_sample_is_final_state(domain, problem, benchmark_plan, trajectory):
    final = pp.validate(domain, problem, benchmark_plan).final_state
    for c in trajectory.children:
        assert trajectory.of_child(c)[-1].pad == pp.pad_state(final, c)


def test_grid_matches_the_event_replay(domain, problem, benchmark_plan, trajectory):
    states = []
    pp.validate(domain, problem, benchmark_plan, observer=states.append)
    initial = pp.initial_state(problem)
    for c in trajectory.children:
        samples = trajectory.of_child(c)
        events = [s for s in samples if s.is_event]
        assert [s.time for s in events] == pytest.approx([x.time for x in states])
        assert [s.pad for s in events] == [pp.pad_state(x, c) for x in states]

        # between two events every grid sample shows the earlier one
        between = {}
        for s in samples:
            if s.is_event: continue
            done = [x for x in states if x.time <= s.time + 1e-6]
            latest = done[-1] if done else initial
            assert s.pad == pp.pad_state(latest, c), s
            between.setdefault(len(done), set()).add(s.pad)
        assert all(len(pads) == 1 for pads in between.values())


def test_csv(trajectory, tmp_path):
    text = trajectory.to_csv()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == list(pp.trajectory.CSV_HEADER)
    assert len(rows) == len(trajectory) + 1
    path = tmp_path / "out.csv"
    trajectory.write_csv(path)
    with open(path, newline="") as f:
        assert f.read() == text


def test_coarse_grid(domain, problem, benchmark_plan):
    coarse = pp.simulate_trajectory(domain, problem, benchmark_plan, 1000.0)
    assert len(coarse) == 3 * (1 + 2 * len(benchmark_plan))
    assert sum(not s.is_event for s in coarse) == 3


def test_bad_sample_period(domain, problem, benchmark_plan):
    with pytest.raises(ValueError):
        pp.simulate_trajectory(domain, problem, benchmark_plan, 0)


def test_invalid_plan(domain, problem):
    with pytest.raises(pp.InvalidPlan) as info:
        pp.simulate_trajectory(domain, problem, make_plan("0: (fly kenny)  [1]"))
    assert not info.value.report.valid


def test_improve_boredom_changes_the_label(domain, problem):
    plan = make_plan("0: (improve-boredom c1)  [10]")
    prob = dataclasses.replace(problem, goal=())
    trajectory = pp.simulate_trajectory(domain, prob, plan, 5.0)
    c1 = trajectory.of_child("c1")
    assert [s.emotion for s in c1 if not s.is_event] == [pp.EmotionLabel.BOREDOM] * 2 + \
        [pp.EmotionLabel.UNCLASSIFIED]
    assert tuple(c1[-1].pad) == pytest.approx((0.5, 0.5, 0.55))
