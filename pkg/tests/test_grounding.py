import itertools
from collections import Counter

import pad_planner as pp
from pad_planner.grounding import ground_action


def _enumerate(dom, prob):
    """Every assignment of every declared object, filtered by type afterwards"""
    typed = {c.name: c.type for c in dom.constants}
    typed.update({o.name: o.type for o in prob.objects})
    names = sorted(typed)
    found = []
    for a in dom.actions:
        for args in itertools.product(names, repeat=len(a.parameters)):
            if all(dom.is_subtype(typed[n], p.type) for n, p in zip(args, a.parameters)):
                found.append((a.name, args))
    return found


def test_benchmark_counts(domain, problem, actions):
    counts = Counter(a.schema_name for a in actions)
    assert counts["kid_give"] == 225
    assert counts["move"] == 25
    assert counts["classify"] == counts["pickup"] == counts["tidy"] == 15
    for name in ("accommodate-distress", "improve-distress", "accommodate-sadness",
                 "improve-sadness", "improve-boredom", "maintain-happiness"):
        assert counts[name] == 3
    assert len(actions) == 225 + 25 + 45 + 18


def test_matches_enumeration(domain, problem, actions):
    assert sorted((a.schema_name, a.bound_args) for a in actions) == sorted(_enumerate(domain, problem))


def test_small_task_has_one_instance_per_strategy(small):
    dom, prob = small
    counts = Counter(a.schema_name for a in pp.ground(dom, prob))
    assert all(counts[a.name] == 1 for a in pp.strategy_actions())


def test_order_is_stable(domain, problem, actions):
    names = [a.name for a in actions]
    assert names == [a.name for a in pp.ground(domain, problem)]
    schemas = [a.schema_name for a in actions]
    assert schemas == sorted(schemas)


def test_box_is_not_an_object(domain, problem):
    extensions = pp.type_extensions(domain, problem)
    assert extensions["object"] == ["toy1", "toy2", "toy3"]
    assert extensions["child"] == ["c1", "c2", "c3"]
    assert "box1" not in extensions["object"]


def test_ground_action_binds_everything(domain):
    a = ground_action(domain.action("tidy"), ("kenny", "toy1", "box1", "box1_wp"))
    assert a.name == "(tidy kenny toy1 box1 box1_wp)"
    assert pp.Literal("robot_at", ("kenny", "box1_wp")) in a.over_all
    assert pp.Literal("holding", ("kenny", "toy1")) in a.at_start
    assert ("in_box", "box1", "toy1") in a.relaxed_add
    assert ("not_busy",) in a.relaxed_pre
    for c in a.at_start + a.over_all + a.at_end:
        if isinstance(c, pp.Literal):
            assert not any(arg.startswith("?") for arg in c.args)


def test_unused_types_ground_to_nothing():
    dom = pp.parse_domain("""
    (define (domain d)
      (:types thing)
      (:predicates (on ?t - thing))
      (:durative-action touch
        :parameters (?t - thing)
        :duration (= ?duration 1)
        :effect (at end (on ?t))))
    """)
    prob = pp.parse_problem("(define (problem p) (:domain d) (:goal (and)))", dom)
    assert pp.ground(dom, prob) == []
