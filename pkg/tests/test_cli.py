import pytest

import pad_planner as pp
from pad_planner.cli import main
from conftest import fixture_path


@pytest.fixture
def small_files(tmp_path):
    assert main(["gen", "--out", str(tmp_path), "--children", "1", "--toys", "1"]) == 0
    return str(tmp_path / "domain.pddl"), str(tmp_path / "problem.pddl")


@pytest.fixture
def small_plan_file(small_files, tmp_path):
    dom, prob = small_files
    out = str(tmp_path / "plan.txt")
    assert main(["plan", "-d", dom, "-p", prob, "-o", out, "--timeout", "30"]) == 0
    return out


def test_gen(tmp_path, capsys):
    assert main(["gen", "--out", str(tmp_path / "bench")]) == 0
    err = capsys.readouterr().err
    assert "domain.pddl" in err and "problem.pddl" in err
    assert (tmp_path / "bench" / "domain.pddl").exists()


def test_plan_to_stdout(small_files, capsys):
    dom, prob = small_files
    assert main(["plan", "-d", dom, "-p", prob, "--timeout", "30"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("0.000: (")
    assert out[-1].startswith("makespan ")


def test_validate(small_files, small_plan_file, capsys):
    dom, prob = small_files
    assert main(["validate", "-d", dom, "-p", prob, "-P", small_plan_file, "--cross-check"]) == 0
    assert capsys.readouterr().out.startswith("valid, makespan ")


def test_validate_invalid(small_files, tmp_path, capsys):
    dom, prob = small_files
    plan = tmp_path / "bad.txt"
    plan.write_text("0.000: (tidy kenny toy1 box1 box1_wp)  [30.000]\n")
    assert main(["validate", "-d", dom, "-p", prob, "-P", str(plan), "--all-violations"]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "UnsatisfiedAtStart at 0.000: (tidy kenny toy1 box1 box1_wp) (holding kenny toy1)"
    assert out[-1].startswith("GoalUnsatisfied")


def test_simulate(small_files, small_plan_file, tmp_path, capsys):
    dom, prob = small_files
    csv_path = tmp_path / "trajectory.csv"
    assert main(["simulate", "-d", dom, "-p", prob, "-P", small_plan_file,
                 "--csv", str(csv_path), "--dt", "10"]) == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "time,child,pleasure,arousal,dominance,emotion"
    assert lines[1] == "0.000,c1,0.400,0.400,0.450,Boredom"

    assert main(["simulate", "-d", dom, "-p", prob, "-P", small_plan_file, "--dt", "10"]) == 0
    assert capsys.readouterr().out.splitlines() == lines


def test_simulate_with_a_coarse_grid(small_files, small_plan_file, capsys):
    dom, prob = small_files
    capsys.readouterr()
    assert main(["simulate", "-d", dom, "-p", prob, "-P", small_plan_file, "--dt", "100000"]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    plan = pp.load_plan(small_plan_file)
    events = [pp.fixed3(t) for t in sorted(t for a in plan for t in (a.start, a.end))]
    assert [r.split(",")[0] for r in rows] == ["0.000"] + events
    assert rows[-1].startswith(pp.fixed3(plan.makespan) + ",")


def test_simulate_invalid_plan(small_files, tmp_path):
    dom, prob = small_files
    plan = tmp_path / "empty.txt"
    plan.write_text("")
    assert main(["simulate", "-d", dom, "-p", prob, "-P", str(plan)]) == 1


def test_plot(small_files, small_plan_file, tmp_path):
    dom, prob = small_files
    out = tmp_path / "chart.png"
    assert main(["plot", "-d", dom, "-p", prob, "-P", small_plan_file, "--out", str(out),
                 "--width", "400", "--height", "300", "--line-width", "2"]) == 0
    assert out.stat().st_size > 0


def test_ground_count(tmp_path, capsys):
    main(["gen", "--out", str(tmp_path)])
    capsys.readouterr()
    assert main(["ground", "-d", str(tmp_path / "domain.pddl"),
                 "-p", str(tmp_path / "problem.pddl"), "--count"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "kid_give 225" in out and "move 25" in out
    assert out[-1] == "total 313"


def test_classify(tmp_path, capsys):
    main(["gen", "--out", str(tmp_path)])
    assert main(["classify", "-d", str(tmp_path / "domain.pddl"),
                 "-p", str(tmp_path / "problem.pddl")]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "c1 (0.400, 0.400, 0.450) Boredom",
        "c2 (1.000, 1.000, 1.000) Happiness",
        "c3 (0.830, 0.980, 0.600) Happiness",
    ]


def test_goal_already_holds(tmp_path, capsys):
    dom = tmp_path / "d.pddl"
    prob = tmp_path / "p.pddl"
    dom.write_text("(define (domain d) (:predicates (p)))")
    prob.write_text("(define (problem x) (:domain d) (:init (p)) (:goal (p)))")
    out = tmp_path / "plan.txt"
    assert main(["plan", "-d", str(dom), "-p", str(prob), "-o", str(out)]) == 0
    assert capsys.readouterr().out == "makespan 0.000\n"
    assert out.read_text() == ""
    assert main(["validate", "-d", str(dom), "-p", str(prob), "-P", str(out)]) == 0
    assert capsys.readouterr().out == "valid, makespan 0.000\n"


def test_missing_fluent(tmp_path, capsys):
    main(["gen", "--out", str(tmp_path)])
    prob = tmp_path / "problem.pddl"
    lines = prob.read_text().splitlines(keepends=True)
    prob.write_text("".join(l for l in lines if "(pleasure c3)" not in l))
    capsys.readouterr()
    assert main(["plan", "-d", str(tmp_path / "domain.pddl"), "-p", str(prob)]) == 2
    err = capsys.readouterr().err.strip().splitlines()
    assert err[-1] == "error: fluent '(pleasure c3)' has no value"
    assert not any(line.startswith("Traceback") for line in err)


def test_unsolvable_plan_exit_code(tmp_path, capsys):
    dom = tmp_path / "d.pddl"
    prob = tmp_path / "p.pddl"
    dom.write_text("(define (domain d) (:predicates (p)))")
    prob.write_text("(define (problem x) (:domain d) (:goal (p)))")
    assert main(["plan", "-d", str(dom), "-p", str(prob)]) == 1
    assert "unsolvable" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["gen", "--children", "0"],
    ["plan", "-d", "missing.pddl", "-p", "missing.pddl"],
    ["ground", "-d", fixture_path("malformed_domain.pddl"), "-p", "missing.pddl"],
    ["plan", "--timeout", "-1", "-d", "x", "-p", "y"],
    [],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_help(capsys):
    assert main(["--help"]) == 0
    assert "pad-planner" in capsys.readouterr().out
