#!/usr/bin/env python3

"""
pp.emotion

Type: module

Description: the PAD emotion model of the children, which emotion a
    PAD triple shows, how the robot's strategies change it and the
    generator of the toy-tidying domain and problem

Classes:
    - EmotionLabel
    - Strategy
    - RateVector
    - Thresholds
    - DomainConfig

Functions:
    - classify(pad, th)
    - strategy_rates(s, e)
    - expected_delta(s, e, duration)
    - strategy_actions(cfg)
    - synthesize_domain(cfg)
    - synthesize_problem(n_children, toys, init_pads, seed)
    - unmodelled_actions(dom)
    - write_benchmark(out_dir, cfg, toys, init_pads, seed)
    - load_bundled_domain()
    - load_bundled_problem(dom)
    - load_bundled_plan()


Emotions
========

Each PAD component is Low when it is below the cut (0.5 by default) and
High when it is above it:

    Emotion     P     A     D
    Distress    Low   High  High
    Sadness     Low   Low   High
    Boredom     Low   Low   Low
    Happiness   High  any   High

Any other pattern, or a component exactly on the cut, is Unclassified.

Strategies
==========

The robot can accommodate, maintain or improve an emotion. The signs of
the change per second of each strategy are:

    Emotion     Accommodate   Maintain   Improve
    Distress    + - 0         0 0 0      ++ - 0
    Sadness     + 0 0         0 0 0      ++ 0 0
    Boredom     0 0 0         0 0 0      + + +
    Happiness   0 0 0         0 - 0      0 0 0

with '+' = 0.01/s, '++' = 0.02/s, '-' = -0.02/s and '--' = -0.04/s.
Every non-zero cell becomes a durative action named
'<strategy>-<emotion>', six in total.
"""
from __future__ import annotations as _annotations

import logging as _logging
import os as _os
import random as _random
from dataclasses import dataclass as _dataclass, field as _field
from enum import Enum as _Enum
from typing import (Dict as _Dict,
                    List as _List,
                    Optional as _Optional,
                    Sequence as _Sequence,
                    Tuple as _Tuple)

from .constants import (PLEASURE as _P,
                        PAD_FLUENTS as _PAD_FLUENTS,
                        PAD_MIN as _PAD_MIN,
                        PAD_MAX as _PAD_MAX,
                        ROOT_TYPE as _ROOT_TYPE,
                        CHILD_TYPE as _CHILD_TYPE,
                        NOT_BUSY as _NOT_BUSY,
                        DEFAULT_CUT as _DEFAULT_CUT,
                        DEFAULT_HARD_FLOOR as _DEFAULT_HARD_FLOOR,
                        DEFAULT_DEGRADATION as _DEFAULT_DEGRADATION,
                        DEFAULT_SEED as _DEFAULT_SEED,
                        KID_GIVE_RATE as _KID_GIVE_RATE)
from .exceptions import UnclassifiedEmotion as _UnclassifiedEmotion
from .pddl.parser import load_domain as _load_domain, load_problem as _load_problem
from .pddl.printer import print_domain as _print_domain, print_problem as _print_problem
from .pddl.model import (TypedName, Signature, DurationConstraint, Literal,
                         Constant, FluentRef, DurationVar, BinaryOp, Comparison,
                         AddEffect, DeleteEffect, NumericEffect, TimeSpec,
                         DurativeAction, Domain, Problem)
from .plan import load_plan as _load_plan
from .type_hints import _pad, _path
from .utils import write_text as _write_text

_log = _logging.getLogger(__name__)

DOMAIN_NAME = "squirrel_emotion"
PROBLEM_NAME = "squirrel_emotion_problem"

DATA_DIR = _os.path.join(_os.path.dirname(_os.path.abspath(__file__)), "data")
BUNDLED_DOMAIN = _os.path.join(DATA_DIR, "squirrel_domain.pddl")
BUNDLED_PROBLEM = _os.path.join(DATA_DIR, "squirrel_problem.pddl")
BUNDLED_PLAN = _os.path.join(DATA_DIR, "reference_plan.txt")

# Initial PAD values of c1, c2 and c3 in the benchmark problem
BENCHMARK_PADS = (
    (0.4, 0.4, 0.45),
    (1.0, 1.0, 1.0),
    (0.83, 0.98, 0.6)
)


class EmotionLabel(_Enum):
    DISTRESS = "Distress"
    SADNESS = "Sadness"
    BOREDOM = "Boredom"
    HAPPINESS = "Happiness"
    UNCLASSIFIED = "Unclassified"


class Strategy(_Enum):
    ACCOMMODATE = "accommodate"
    MAINTAIN = "maintain"
    IMPROVE = "improve"


@_dataclass(frozen=True)
class RateVector:
    """Change per second of pleasure, arousal and dominance"""
    dp: float = 0.0
    da: float = 0.0
    dd: float = 0.0

    def __iter__(self):
        return iter((self.dp, self.da, self.dd))

    @property
    def is_zero(self) -> bool:
        return not (self.dp or self.da or self.dd)

    def scaled(self, duration: float) -> _pad:
        return self.dp * duration, self.da * duration, self.dd * duration


@_dataclass(frozen=True)
class Thresholds:
    """
    Thresholds

    Type: class

    Description: the value that separates Low from High and the floor
        every child must stay above for the robot to work on its task

    Attrs:
        'low_high_cut' (float): default 0.5
        'hard_floor' (float): default 0.0
    """
    low_high_cut: float = _DEFAULT_CUT
    hard_floor: float = _DEFAULT_HARD_FLOOR

    def __post_init__(self):
        if not _PAD_MIN <= self.hard_floor < self.low_high_cut <= _PAD_MAX:
            raise ValueError("the thresholds must satisfy -1 <= hard_floor < low_high_cut <= 1, "
                             f"got {self.hard_floor} and {self.low_high_cut}")


# 'L' below the cut, 'H' above it, None for any value
_PATTERNS = {
    EmotionLabel.DISTRESS:  ("L", "H", "H"),
    EmotionLabel.SADNESS:   ("L", "L", "H"),
    EmotionLabel.BOREDOM:   ("L", "L", "L"),
    EmotionLabel.HAPPINESS: ("H", None, "H"),
}

_CALIBRATION = {"+": 0.01, "++": 0.02, "-": -0.02, "--": -0.04, "0": 0.0}

_SIGNS = {
    (Strategy.ACCOMMODATE, EmotionLabel.DISTRESS):  ("+", "-", "0"),
    (Strategy.MAINTAIN,    EmotionLabel.DISTRESS):  ("0", "0", "0"),
    (Strategy.IMPROVE,     EmotionLabel.DISTRESS):  ("++", "-", "0"),
    (Strategy.ACCOMMODATE, EmotionLabel.SADNESS):   ("+", "0", "0"),
    (Strategy.MAINTAIN,    EmotionLabel.SADNESS):   ("0", "0", "0"),
    (Strategy.IMPROVE,     EmotionLabel.SADNESS):   ("++", "0", "0"),
    (Strategy.ACCOMMODATE, EmotionLabel.BOREDOM):   ("0", "0", "0"),
    (Strategy.MAINTAIN,    EmotionLabel.BOREDOM):   ("0", "0", "0"),
    (Strategy.IMPROVE,     EmotionLabel.BOREDOM):   ("+", "+", "+"),
    (Strategy.ACCOMMODATE, EmotionLabel.HAPPINESS): ("0", "0", "0"),
    (Strategy.MAINTAIN,    EmotionLabel.HAPPINESS): ("0", "-", "0"),
    (Strategy.IMPROVE,     EmotionLabel.HAPPINESS): ("0", "0", "0"),
}


def _level(value: float, cut: float) -> _Optional[str]:
    if value < cut: return "L"
    if value > cut: return "H"
    return None


def classify(pad: _Sequence[float], th: Thresholds = Thresholds()) -> EmotionLabel:
    """
    classify(pad, th=Thresholds())

    Type: function

    Description: the emotion shown by a PAD triple, comparisons with the
        cut are strict

    Args:
        'pad' (Sequence[float]): pleasure, arousal and dominance
        'th' (Thresholds): where the cut is

    Return type: EmotionLabel
    """
    levels = tuple(_level(v, th.low_high_cut) for v in pad)
    if None in levels:
        return EmotionLabel.UNCLASSIFIED
    for label, pattern in _PATTERNS.items():
        if all(p is None or p == l for p, l in zip(pattern, levels)):
            return label
    return EmotionLabel.UNCLASSIFIED


def strategy_rates(s: Strategy, e: EmotionLabel) -> RateVector:
    """
    strategy_rates(s, e)

    Type: function

    Description: the change per second a strategy causes on a child
        showing an emotion

    Raises:
        UnclassifiedEmotion: e is EmotionLabel.UNCLASSIFIED

    Return type: RateVector
    """
    if e is EmotionLabel.UNCLASSIFIED:
        raise _UnclassifiedEmotion(e.value)
    return RateVector(*(_CALIBRATION[sign] for sign in _SIGNS[(s, e)]))


def expected_delta(s: Strategy, e: EmotionLabel, duration: float) -> _pad:
    """
    expected_delta(s, e, duration)

    Type: function

    Description: the change of pleasure, arousal and dominance after
        applying a strategy for some time, before clamping

    Raises:
        ValueError: duration is not positive
        UnclassifiedEmotion: e is EmotionLabel.UNCLASSIFIED

    Return type: tuple[float, float, float]
    """
    if duration <= 0:
        raise ValueError(f"the duration must be positive, got {duration}")
    return strategy_rates(s, e).scaled(duration)


def _task_durations():
    return {"move": 10.0, "classify": 60.0, "pickup": 60.0, "tidy": 30.0, "kid_give": 60.0}


def _strategy_durations():
    return {
        "accommodate-distress": DurationConstraint.upper_bounded(30),
        "accommodate-sadness": DurationConstraint.upper_bounded(30),
        "improve-distress": DurationConstraint.fixed(30),
        "improve-sadness": DurationConstraint.fixed(10),
        "improve-boredom": DurationConstraint.fixed(10),
        "maintain-happiness": DurationConstraint.fixed(10),
    }


@_dataclass
class DomainConfig:
    """
    DomainConfig

    Type: class

    Description: the knobs of the generated domain

    Attrs:
        'n_children' (int): how many children, named c1, c2, ...
        'degradation_rate' (float): how much pleasure and arousal of every
            child drop per second of a task action
        'kid_give_rate' (float): how much each PAD value of a child grows
            per second while it hands a toy to the robot
        'thresholds' (Thresholds): the cut used by the strategy conditions
            and the floor used by the task guards
        'task_durations' (dict[str, float]): the fixed durations of move,
            classify, pickup, tidy and kid_give
        'strategy_durations' (dict[str, DurationConstraint]): the
            durations of the strategy actions
    """
    n_children: int = 3
    degradation_rate: float = _DEFAULT_DEGRADATION
    kid_give_rate: float = _KID_GIVE_RATE
    thresholds: Thresholds = _field(default_factory=Thresholds)
    task_durations: _Dict[str, float] = _field(default_factory=_task_durations)
    strategy_durations: _Dict[str, DurationConstraint] = _field(default_factory=_strategy_durations)

    def __post_init__(self):
        if self.n_children < 1:
            raise ValueError(f"at least one child is needed, got {self.n_children}")
        if self.degradation_rate < 0:
            raise ValueError("the degradation rate cannot be negative")

    @property
    def children(self) -> _List[str]:
        return [f"c{i}" for i in range(1, self.n_children + 1)]


_lit = lambda pred, *args: Literal(pred, args)
_neg = lambda pred, *args: Literal(pred, args, False)
_fluent = lambda f, *args: FluentRef(f, args)
_per_second = lambda rate: BinaryOp("*", DurationVar(), Constant(rate))


def _rate_effects(target, rates) -> list:
    effects = []
    for f, rate in zip(_PAD_FLUENTS, rates):
        if rate > 0:
            effect = NumericEffect("increase", _fluent(f, target), _per_second(rate))
        elif rate < 0:
            effect = NumericEffect("decrease", _fluent(f, target), _per_second(-rate))
        else:
            continue
        effects.append((TimeSpec.AT_END, effect))
    return effects


def _busy_effects() -> list:
    return [(TimeSpec.AT_START, DeleteEffect(_lit(_NOT_BUSY))),
            (TimeSpec.AT_END, AddEffect(_lit(_NOT_BUSY)))]


def _strategy_action(s: Strategy, e: EmotionLabel, duration: DurationConstraint,
                     th: Thresholds) -> DurativeAction:
    rates = strategy_rates(s, e)
    conditions = []
    if rates.dp > 0:
        conditions.append((TimeSpec.OVER_ALL, Comparison("<", _fluent(_P, "?c"), Constant(1.0))))
    for f, level in zip(_PAD_FLUENTS, _PATTERNS[e]):
        if level is None: continue
        op = "<" if level == "L" else ">"
        cut = Constant(th.low_high_cut)
        conditions.append((TimeSpec.AT_START, Comparison(op, _fluent(f, "?c"), cut)))
    conditions.append((TimeSpec.AT_START, _lit(_NOT_BUSY)))

    return DurativeAction(
        name=f"{s.value}-{e.value.lower()}",
        parameters=(TypedName("?c", _CHILD_TYPE),),
        duration=duration,
        conditions=tuple(conditions),
        effects=tuple(_busy_effects() + _rate_effects("?c", rates))
    )


def strategy_actions(cfg: DomainConfig = None) -> _List[DurativeAction]:
    """
    strategy_actions(cfg=None)

    Type: function

    Description: one action for each strategy that changes an emotion,
        its start conditions are the pattern of the emotion and its end
        effects are the rates of the strategy times ?duration

    Return type: list[DurativeAction]
    """
    if cfg is None: cfg = DomainConfig()
    actions = []
    for e in (EmotionLabel.DISTRESS, EmotionLabel.SADNESS, EmotionLabel.BOREDOM, EmotionLabel.HAPPINESS):
        for s in (Strategy.ACCOMMODATE, Strategy.IMPROVE, Strategy.MAINTAIN):
            if strategy_rates(s, e).is_zero: continue
            name = f"{s.value}-{e.value.lower()}"
            actions.append(_strategy_action(s, e, cfg.strategy_durations[name], cfg.thresholds))
    return actions


def _kid_give(cfg: DomainConfig) -> DurativeAction:
    conditions = [
        (TimeSpec.OVER_ALL, _lit("robot_at", "?v", "?robot_wp")),
        (TimeSpec.AT_START, _lit("gripper_empty", "?v")),
        (TimeSpec.AT_START, _lit("object_at", "?o", "?object_wp")),
        (TimeSpec.AT_START, _lit(_NOT_BUSY)),
    ]
    conditions += [(TimeSpec.OVER_ALL, Comparison("<=", _fluent(f, "?c"), Constant(1.0)))
                   for f in _PAD_FLUENTS]
    effects = _busy_effects() + [
        (TimeSpec.AT_START, DeleteEffect(_lit("gripper_empty", "?v"))),
        (TimeSpec.AT_END, AddEffect(_lit("holding", "?v", "?o"))),
        (TimeSpec.AT_START, DeleteEffect(_lit("object_at", "?o", "?object_wp"))),
    ]
    effects += _rate_effects("?c", (cfg.kid_give_rate,) * 3)
    return DurativeAction(
        name="kid_give",
        parameters=(TypedName("?c", _CHILD_TYPE), TypedName("?v", "robot"),
                    TypedName("?o", _ROOT_TYPE), TypedName("?robot_wp", "waypoint"),
                    TypedName("?object_wp", "waypoint")),
        duration=DurationConstraint.fixed(cfg.task_durations["kid_give"]),
        conditions=tuple(conditions),
        effects=tuple(effects)
    )


def _task_action(cfg, name, parameters, conditions, effects) -> DurativeAction:
    """Adds the not_busy lock, the floor guards and the degradation of every child"""
    floor = Constant(cfg.thresholds.hard_floor)
    guards = [(TimeSpec.OVER_ALL, Comparison(">=", _fluent(f, c), floor))
              for c in cfg.children for f in _PAD_FLUENTS]
    degradation = []
    if cfg.degradation_rate > 0:
        for c in cfg.children:
            degradation += _rate_effects(c, (-cfg.degradation_rate, -cfg.degradation_rate, 0.0))

    return DurativeAction(
        name=name,
        parameters=tuple(parameters),
        duration=DurationConstraint.fixed(cfg.task_durations[name]),
        conditions=tuple(conditions + [(TimeSpec.AT_START, _lit(_NOT_BUSY))] + guards),
        effects=tuple(_busy_effects() + effects + degradation)
    )


def _task_actions(cfg: DomainConfig) -> _List[DurativeAction]:
    robot, obj = TypedName("?v", "robot"), TypedName("?o", _ROOT_TYPE)
    wp = TypedName("?wp", "waypoint")
    start, end, over_all = TimeSpec.AT_START, TimeSpec.AT_END, TimeSpec.OVER_ALL

    move = _task_action(
        cfg, "move",
        [robot, TypedName("?from", "waypoint"), TypedName("?to", "waypoint")],
        [(start, _lit("robot_at", "?v", "?from"))],
        [(start, DeleteEffect(_lit("robot_at", "?v", "?from"))),
         (end, AddEffect(_lit("robot_at", "?v", "?to")))]
    )
    classify_ = _task_action(
        cfg, "classify",
        [robot, obj, wp],
        [(over_all, _lit("robot_at", "?v", "?wp")),
         (start, _lit("object_at", "?o", "?wp"))],
        [(end, AddEffect(_lit("classified", "?o")))]
    )
    pickup = _task_action(
        cfg, "pickup",
        [robot, obj, wp],
        [(over_all, _lit("robot_at", "?v", "?wp")),
         (start, _lit("classified", "?o")),
         (start, _lit("gripper_empty", "?v")),
         (start, _lit("object_at", "?o", "?wp"))],
        [(start, DeleteEffect(_lit("gripper_empty", "?v"))),
         (start, DeleteEffect(_lit("object_at", "?o", "?wp"))),
         (end, AddEffect(_lit("holding", "?v", "?o")))]
    )
    tidy = _task_action(
        cfg, "tidy",
        [robot, obj, TypedName("?b", "box"), wp],
        [(over_all, _lit("robot_at", "?v", "?wp")),
         (over_all, _lit("box_at", "?b", "?wp")),
         (start, _lit("holding", "?v", "?o")),
         (start, _lit("classified", "?o"))],
        [(end, DeleteEffect(_lit("holding", "?v", "?o"))),
         (end, AddEffect(_lit("in_box", "?b", "?o"))),
         (end, AddEffect(_lit("gripper_empty", "?v")))]
    )
    return [move, classify_, pickup, tidy]


def synthesize_domain(cfg: DomainConfig = None) -> Domain:
    """
    synthesize_domain(cfg=None)

    Type: function

    Description: the toy-tidying domain, the six strategy actions,
        kid_give and the task actions move, classify, pickup and tidy

    Args:
        'cfg' (DomainConfig): the knobs, the defaults give the benchmark
            domain

    Return type: Domain
    """
    if cfg is None: cfg = DomainConfig()
    child = lambda n: TypedName(n, _CHILD_TYPE)
    return Domain(
        name=DOMAIN_NAME,
        types=(("robot", None), (_CHILD_TYPE, None), ("waypoint", None), ("box", None),
               (_ROOT_TYPE, None)),
        constants=tuple(child(c) for c in cfg.children),
        predicates=(
            Signature("robot_at", (TypedName("?v", "robot"), TypedName("?wp", "waypoint"))),
            Signature("object_at", (TypedName("?o", _ROOT_TYPE), TypedName("?wp", "waypoint"))),
            Signature("box_at", (TypedName("?b", "box"), TypedName("?wp", "waypoint"))),
            Signature("classified", (TypedName("?o", _ROOT_TYPE),)),
            Signature("in_box", (TypedName("?b", "box"), TypedName("?o", _ROOT_TYPE))),
            Signature("holding", (TypedName("?v", "robot"), TypedName("?o", _ROOT_TYPE))),
            Signature("gripper_empty", (TypedName("?v", "robot"),)),
            Signature(_NOT_BUSY),
        ),
        functions=tuple(Signature(f, (child("?c"),)) for f in _PAD_FLUENTS),
        actions=tuple(strategy_actions(cfg) + [_kid_give(cfg)] + _task_actions(cfg))
    )


def _check_pad(pad):
    if len(pad) != 3 or not all(_PAD_MIN <= v <= _PAD_MAX for v in pad):
        raise ValueError(f"a PAD triple must have three values in [-1, 1], got {pad}")


def benchmark_pads(n_children: int, seed: int = _DEFAULT_SEED) -> _List[_pad]:
    """
    benchmark_pads(n_children, seed=0)

    Type: function

    Description: the initial PAD values of the benchmark for the first
        three children, the others are drawn in [0, 1] with two decimals

    Return type: list[tuple[float, float, float]]
    """
    rng = _random.Random(seed)
    pads = list(BENCHMARK_PADS[:n_children])
    while len(pads) < n_children:
        pads.append(tuple(round(rng.random(), 2) for _ in range(3)))
    return pads


def synthesize_problem(n_children: int = 3,
                       toys: int = 3,
                       init_pads: _Optional[_Sequence[_pad]] = None,
                       seed: int = _DEFAULT_SEED) -> Problem:
    """
    synthesize_problem(n_children=3, toys=3, init_pads=None, seed=0)

    Type: function

    Description: a problem where the robot kenny must put every toy in
        box1 while the children play around it

    Args:
        'n_children' (int): how many children, at least one
        'toys' (int): how many toys, at least one
        'init_pads' (Sequence[tuple]?): the initial PAD values, one per
            child, when None benchmark_pads(n_children, seed) is used
        'seed' (int): the seed used for the children after the third

    Return type: Problem
    """
    if n_children < 1 or toys < 1:
        raise ValueError("at least one child and one toy are needed")
    if init_pads is None:
        init_pads = benchmark_pads(n_children, seed)
    if len(init_pads) != n_children:
        raise ValueError(f"{len(init_pads)} PAD triples given for {n_children} children")
    for pad in init_pads: _check_pad(pad)

    toy_names = [f"toy{i}" for i in range(1, toys + 1)]
    waypoints = ["kenny_wp"] + [f"{t}_wp" for t in toy_names] + ["box1_wp"]
    objects = ([TypedName(t, _ROOT_TYPE) for t in toy_names]
               + [TypedName("box1", "box"), TypedName("kenny", "robot")]
               + [TypedName(wp, "waypoint") for wp in waypoints])

    facts = ([_lit(_NOT_BUSY), _lit("robot_at", "kenny", "kenny_wp"), _lit("box_at", "box1", "box1_wp")]
             + [_lit("object_at", t, f"{t}_wp") for t in toy_names]
             + [_lit("gripper_empty", "kenny")])

    fluents = []
    for i, pad in enumerate(init_pads, 1):
        fluents += [(_fluent(f, f"c{i}"), float(v)) for f, v in zip(_PAD_FLUENTS, pad)]

    return Problem(
        name=PROBLEM_NAME,
        domain_name=DOMAIN_NAME,
        objects=tuple(objects),
        init_facts=tuple(facts),
        init_fluents=tuple(fluents),
        goal=tuple(_lit("in_box", "box1", t) for t in toy_names)
    )


def unmodelled_actions(dom: Domain) -> _List[str]:
    """
    unmodelled_actions(dom)

    Type: function

    Description: the actions named like a strategy whose emotion is not
        one the model knows, such as 'improve-introvert'

    Return type: list[str]
    """
    strategies = {s.value for s in Strategy}
    emotions = {e.value.lower() for e in EmotionLabel if e is not EmotionLabel.UNCLASSIFIED}
    flagged = []
    for a in dom.actions:
        prefix, _, suffix = a.name.partition("-")
        if prefix.lower() in strategies and suffix.lower() not in emotions:
            flagged.append(a.name)
    return flagged


def write_benchmark(out_dir: _path,
                    cfg: DomainConfig = None,
                    toys: int = 3,
                    init_pads: _Optional[_Sequence[_pad]] = None,
                    seed: int = _DEFAULT_SEED) -> _Tuple[str, str]:
    """
    write_benchmark(out_dir, cfg=None, toys=3, init_pads=None, seed=0)

    Type: function

    Description: writes 'domain.pddl' and 'problem.pddl' in out_dir,
        creating it if needed

    Return type: tuple[str, str]
        the paths of the domain and of the problem
    """
    if cfg is None: cfg = DomainConfig()
    dom = synthesize_domain(cfg)
    prob = synthesize_problem(cfg.n_children, toys, init_pads, seed)

    dom_path = _write_text(_os.path.join(out_dir, "domain.pddl"), _print_domain(dom))
    prob_path = _write_text(_os.path.join(out_dir, "problem.pddl"), _print_problem(prob))
    _log.info("wrote %s and %s", dom_path, prob_path)
    return dom_path, prob_path


def load_bundled_domain() -> Domain:
    """The domain shipped with the package, actions the model cannot explain are logged"""
    dom = _load_domain(BUNDLED_DOMAIN)
    for name in unmodelled_actions(dom):
        _log.warning("action '%s' targets no known emotion and is kept only for reference", name)
    return dom


def load_bundled_problem(dom: Domain) -> Problem:
    return _load_problem(BUNDLED_PROBLEM, dom)


def load_bundled_plan():
    return _load_plan(BUNDLED_PLAN)
