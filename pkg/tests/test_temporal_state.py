import pytest

import pad_planner as pp
from pad_planner.grounding import ground_action

K = pp.ViolationKind


def _find(actions, name):
    return next(a for a in actions if a.name == name)


def test_initial_state(problem):
    s = pp.initial_state(problem)
    assert s.time == 0.0 and s.idle
    assert ("not_busy",) in s.facts
    assert pp.pad_state(s, "c1") == pp.PadState(0.4, 0.4, 0.45)
    assert str(pp.pad_state(s, "c3")) == "(0.830, 0.980, 0.600)"


def test_evaluate():
    v = pp.FluentValuation({("f",): 2.0})
    f = pp.FluentRef("f")
    assert pp.evaluate(pp.BinaryOp("*", f, pp.Constant(3)), v) == 6.0
    assert pp.evaluate(pp.BinaryOp("-", pp.DurationVar(), f), v, 10) == 8.0
    with pytest.raises(pp.MissingFluent):
        pp.evaluate(pp.FluentRef("g"), v)
    with pytest.raises(pp.DivisionByZero):
        pp.evaluate(pp.BinaryOp("/", f, pp.BinaryOp("-", f, f)), v)
    with pytest.raises(pp.UnboundDuration):
        pp.evaluate(pp.DurationVar(), v)


def test_equality_tolerance():
    s = pp.TimedState(0.0, frozenset(), pp.FluentValuation({("f",): 0.1 + 0.2}))
    assert pp.holds(pp.Comparison("=", pp.FluentRef("f"), pp.Constant(0.3)), s)
    assert not pp.holds(pp.Comparison("<", pp.FluentRef("f"), pp.Constant(0.3)), s)


def test_start_then_end(problem, actions):
    s = pp.initial_state(problem)
    move = _find(actions, "(move kenny kenny_wp toy1_wp)")
    s = pp.apply_start(s, move, 10)
    assert isinstance(s, pp.TimedState)
    assert ("not_busy",) not in s.facts
    assert ("robot_at", "kenny", "kenny_wp") not in s.facts
    assert s.next_end().end_time == 10

    s, ended = pp.advance_to_next_end(s)
    assert ended is move
    assert s.time == 10 and s.idle
    assert ("robot_at", "kenny", "toy1_wp") in s.facts
    assert ("not_busy",) in s.facts
    # 10 s of work cost every child 0.01 pleasure and arousal
    assert pp.pad_state(s, "c1").pleasure == pytest.approx(0.39)
    assert pp.pad_state(s, "c2").arousal == pytest.approx(0.99)
    assert pp.pad_state(s, "c2").dominance == 1.0


def test_start_violations(problem, actions):
    s = pp.initial_state(problem)
    pickup = _find(actions, "(pickup kenny toy1 toy1_wp)")
    v = pp.apply_start(s, pickup, 60)
    assert isinstance(v, pp.Violation) and v.kind is K.UNSATISFIED_AT_START
    assert v.action == "(pickup kenny toy1 toy1_wp)"

    move = _find(actions, "(move kenny kenny_wp toy1_wp)")
    v = pp.apply_start(s, move, 12)
    assert v.kind is K.DURATION_OUT_OF_BOUNDS
    assert "12.000" in v.describe()

    busy = pp.apply_start(s, move, 10)
    v = pp.apply_start(busy, _find(actions, "(improve-boredom c1)"), 10)
    assert v.kind is K.UNSATISFIED_AT_START
    assert v.condition == pp.Literal("not_busy")


def test_over_all_is_checked_on_start(small):
    dom, prob = small
    actions = pp.ground(dom, prob)
    # c1 below the floor breaks the guards of every task action
    low = pp.TimedState(0.0, pp.initial_state(prob).facts,
                        pp.initial_state(prob).fluents.updated({("pleasure", "c1"): -0.2}))
    v = pp.apply_start(low, _find(actions, "(move kenny kenny_wp toy1_wp)"), 10)
    assert v.kind is K.UNSATISFIED_OVER_ALL
    assert "pleasure c1" in str(v.condition)


def _with_pad(s, child, pad):
    values = {(f, child): v for f, v in zip(pp.PAD_FLUENTS, pad)}
    return pp.TimedState(s.time, s.facts, s.fluents.updated(values))


def test_task_below_the_floor_on_the_benchmark(problem, actions):
    s = pp.initial_state(problem)
    s = _with_pad(s, "c1", (-0.1, 0.4, 0.45))
    for move in (a for a in actions if a.name.startswith("(move kenny kenny_wp ")):
        v = pp.apply_start(s, move, 10)
        assert isinstance(v, pp.Violation)
        assert v.kind is K.UNSATISFIED_OVER_ALL
        assert str(v.condition) == "(>= (pleasure c1) 0.0)"


def test_accommodate_distress(problem, actions):
    s = _with_pad(pp.initial_state(problem), "c1", (0.4, 0.9, 0.6))
    accommodate = _find(actions, "(accommodate-distress c1)")
    s = pp.apply_start(s, accommodate, 30)
    assert isinstance(s, pp.TimedState)
    assert ("not_busy",) not in s.facts
    s, ended = pp.advance_to_next_end(s)
    assert ended is accommodate
    assert tuple(pp.pad_state(s, "c1")) == pytest.approx((0.7, 0.3, 0.6), abs=1e-9)
    assert tuple(pp.pad_state(s, "c2")) == (1.0, 1.0, 1.0)


def test_improve_boredom(problem, actions):
    s = pp.initial_state(problem)
    s = pp.apply_start(s, _find(actions, "(improve-boredom c1)"), 10)
    s, _ = pp.advance_to_next_end(s)
    assert tuple(pp.pad_state(s, "c1")) == pytest.approx((0.5, 0.5, 0.55))


def test_clamping(problem, actions):
    s = pp.initial_state(problem)
    kid_give = _find(actions, "(kid_give c2 kenny toy1 kenny_wp toy1_wp)")
    # c2 is already at 1
    s = pp.apply_start(s, kid_give, 60)
    assert isinstance(s, pp.TimedState)
    s, _ = pp.advance_to_next_end(s)
    assert tuple(pp.pad_state(s, "c2")) == (1.0, 1.0, 1.0)


def test_effect_order_delete_then_add():
    p = pp.Literal("p")
    flip = pp.GroundAction("flip", (), pp.DurationConstraint.fixed(1),
                           effects=((pp.TimeSpec.AT_END, pp.AddEffect(p)),
                                    (pp.TimeSpec.AT_END, pp.DeleteEffect(p))))
    s = pp.TimedState(0.0, frozenset(), pp.FluentValuation())
    s, _ = pp.advance_to_next_end(pp.apply_start(s, flip, 1))
    assert ("p",) in s.facts


def test_contradictory_effects_do_not_parse():
    with pytest.raises(pp.SemanticError):
        pp.parse_domain("(define (domain d) (:predicates (p))"
                        " (:durative-action flip :parameters () :duration (= ?duration 1)"
                        " :effect (and (at end (not (p))) (at end (p)))))")


def test_simultaneous_numeric_effects_read_the_old_state():
    dom = pp.parse_domain("""
    (define (domain d)
      (:functions (f) (g))
      (:durative-action copy
        :parameters ()
        :duration (= ?duration 1)
        :effect (and (at end (assign (f) (g))) (at end (assign (g) (f))))))
    """)
    a = ground_action(dom.action("copy"), ())
    s = pp.TimedState(0.0, frozenset(), pp.FluentValuation({("f",): 1.0, ("g",): 2.0}))
    s, _ = pp.advance_to_next_end(pp.apply_start(s, a, 1))
    assert (s.fluents[("f",)], s.fluents[("g",)]) == (2.0, 1.0)


def test_agenda_order():
    dom = pp.parse_domain("""
    (define (domain d)
      (:predicates (p))
      (:durative-action long :parameters () :duration (= ?duration 5))
      (:durative-action short :parameters () :duration (= ?duration 2)))
    """)
    long_, short = ground_action(dom.action("long"), ()), ground_action(dom.action("short"), ())
    s = pp.TimedState(0.0, frozenset(), pp.FluentValuation())
    s = pp.apply_start(s, long_, 5)
    s = pp.apply_start(pp.elapse_to(s, 3), short, 2)
    assert [p.action.name for p in s.agenda] == ["(long)", "(short)"]
    assert [p.seq for p in s.agenda] == [0, 1]
    s, first = pp.advance_to_next_end(s)
    assert first is long_ and s.time == 5


def test_elapse_to_errors(problem, actions):
    s = pp.initial_state(problem)
    s = pp.apply_start(s, _find(actions, "(move kenny kenny_wp toy1_wp)"), 10)
    assert pp.elapse_to(s, 4).time == 4
    with pytest.raises(ValueError):
        pp.elapse_to(pp.elapse_to(s, 4), 3)
    with pytest.raises(ValueError):
        pp.elapse_to(s, 11)


def test_empty_agenda(problem):
    s = pp.initial_state(problem)
    with pytest.raises(pp.EmptyAgendaError):
        pp.advance_to_next_end(s)
    with pytest.raises(pp.EmptyAgendaError):
        pp.skip_next_end(s)


def test_violations_describe_themselves():
    v = pp.Violation(K.GOAL_UNSATISFIED, 620.0189, condition=pp.Literal("in_box", ("box1", "toy1")))
    assert v.describe() == "GoalUnsatisfied at 620.019: (in_box box1 toy1)"
    assert pp.Violation(K.EPSILON_VIOLATION, 1).describe() == "EpsilonViolation at 1.000"
