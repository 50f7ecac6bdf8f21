import pytest

import pad_planner as pp

E = pp.EmotionLabel
S = pp.Strategy


@pytest.mark.parametrize("pad, label", [
    ((0.2, 0.8, 0.8), E.DISTRESS),
    ((0.2, 0.2, 0.8), E.SADNESS),
    ((0.2, 0.2, 0.2), E.BOREDOM),
    ((0.8, 0.2, 0.8), E.HAPPINESS),
    ((0.8, 0.8, 0.8), E.HAPPINESS),
    ((0.5, 0.5, 0.5), E.UNCLASSIFIED),
    ((0.2, 0.8, 0.2), E.UNCLASSIFIED),
    ((0.8, 0.8, 0.2), E.UNCLASSIFIED),
])
def test_classify(pad, label):
    assert pp.classify(pad) is label


def test_benchmark_children(problem):
    s = pp.initial_state(problem)
    labels = [pp.classify(tuple(pp.pad_state(s, c))) for c in ("c1", "c2", "c3")]
    assert labels == [E.BOREDOM, E.HAPPINESS, E.HAPPINESS]


def test_cut_is_strict():
    assert pp.classify((0.4, 0.4, 0.45), pp.Thresholds(low_high_cut=0.45)) is E.UNCLASSIFIED
    assert pp.classify((0.4, 0.4, 0.45), pp.Thresholds(low_high_cut=0.46)) is E.BOREDOM


def test_thresholds_are_checked():
    with pytest.raises(ValueError):
        pp.Thresholds(low_high_cut=0.2, hard_floor=0.3)
    with pytest.raises(ValueError):
        pp.Thresholds(low_high_cut=1.5)


def test_expected_delta():
    assert pp.expected_delta(S.ACCOMMODATE, E.DISTRESS, 30) == pytest.approx((0.3, -0.6, 0.0), abs=1e-9)
    assert pp.expected_delta(S.IMPROVE, E.SADNESS, 10) == pytest.approx((0.2, 0.0, 0.0), abs=1e-9)
    assert pp.expected_delta(S.MAINTAIN, E.HAPPINESS, 10) == pytest.approx((0.0, -0.2, 0.0), abs=1e-9)
    with pytest.raises(ValueError):
        pp.expected_delta(S.IMPROVE, E.BOREDOM, 0)
    with pytest.raises(pp.UnclassifiedEmotion):
        pp.expected_delta(S.IMPROVE, E.UNCLASSIFIED, 10)


def test_zero_rates():
    assert pp.strategy_rates(S.MAINTAIN, E.SADNESS).is_zero
    assert pp.strategy_rates(S.ACCOMMODATE, E.BOREDOM).is_zero
    assert not pp.strategy_rates(S.IMPROVE, E.BOREDOM).is_zero


def test_strategy_actions():
    actions = {a.name: a for a in pp.strategy_actions()}
    assert list(actions) == ["accommodate-distress", "improve-distress", "accommodate-sadness",
                             "improve-sadness", "improve-boredom", "maintain-happiness"]
    assert actions["accommodate-distress"].duration == pp.DurationConstraint.upper_bounded(30)
    assert actions["improve-distress"].duration == pp.DurationConstraint.fixed(30)

    starts = [c for spec, c in actions["improve-sadness"].conditions if spec is pp.TimeSpec.AT_START]
    assert [str(c) for c in starts] == ["(< (pleasure ?c) 0.5)", "(< (arousal ?c) 0.5)",
                                        "(> (dominance ?c) 0.5)", "(not_busy)"]
    # happiness does not constrain arousal
    starts = [str(c) for spec, c in actions["maintain-happiness"].conditions
              if spec is pp.TimeSpec.AT_START]
    assert not any("arousal" in c for c in starts)


def test_task_actions_carry_the_guards(domain):
    move = domain.action("move")
    guards = [c for spec, c in move.conditions
              if spec is pp.TimeSpec.OVER_ALL and isinstance(c, pp.Comparison)]
    assert len(guards) == 9
    assert all(c.op == ">=" and c.rhs == pp.Constant(0.0) for c in guards)
    decreases = [e for _, e in move.effects if isinstance(e, pp.NumericEffect)]
    assert len(decreases) == 6
    assert all(e.op == "decrease" and e.amount.right.value == 0.001 for e in decreases)


def test_no_degradation():
    dom = pp.synthesize_domain(pp.DomainConfig(degradation_rate=0))
    assert not any(isinstance(e, pp.NumericEffect) for _, e in dom.action("tidy").effects)


def test_domain_config_checks():
    with pytest.raises(ValueError):
        pp.DomainConfig(n_children=0)
    with pytest.raises(ValueError):
        pp.DomainConfig(degradation_rate=-1)


def test_synthesize_problem():
    prob = pp.synthesize_problem(5, 2, seed=3)
    values = {f.key: v for f, v in prob.init_fluents}
    assert values[("pleasure", "c1")] == 0.4
    assert all(0 <= values[(f, "c5")] <= 1 for f in pp.PAD_FLUENTS)
    assert prob == pp.synthesize_problem(5, 2, seed=3)
    assert [o.name for o in prob.objects if o.type == "waypoint"] == \
        ["kenny_wp", "toy1_wp", "toy2_wp", "box1_wp"]
    with pytest.raises(ValueError):
        pp.synthesize_problem(2, 1, init_pads=[(0.1, 0.2, 0.3)])
    with pytest.raises(ValueError):
        pp.synthesize_problem(1, 1, init_pads=[(0.1, 2.0, 0.3)])
    with pytest.raises(ValueError):
        pp.synthesize_problem(1, 0)


def test_write_benchmark(tmp_path):
    out = tmp_path / "bench"
    dom_path, prob_path = pp.write_benchmark(out, pp.DomainConfig(n_children=2), toys=2)
    dom = pp.load_domain(dom_path)
    assert dom == pp.synthesize_domain(pp.DomainConfig(n_children=2))
    assert pp.load_problem(prob_path, dom) == pp.synthesize_problem(2, 2)


def test_bundled_domain_warns(caplog):
    dom = pp.load_bundled_domain()
    assert "improve-introvert" in caplog.text
    assert dom.action("improve-introvert") is not None
