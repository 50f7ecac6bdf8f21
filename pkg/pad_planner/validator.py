#!/usr/bin/env python3

"""
pp.validator

Type: module

Description: checks timed plans against the semantics of
    pp.temporal_state

Classes:
    - Verdict
    - ValidationReport

Functions:
    - validate(dom, prob, plan, epsilon, all_violations, actions, observer)
    - check_by_events(dom, prob, plan, epsilon, actions)

A plan is valid when every action can start and end where it is
scheduled, every event is at least epsilon after the previous one and
the goal holds once every action has ended. validate replays the plan
with the functions of pp.temporal_state, check_by_events sorts every
start and end event up front and checks them with its own bookkeeping,
the two must always agree.
"""
from __future__ import annotations as _annotations

import logging as _logging
import operator as _operator
from dataclasses import dataclass as _dataclass
from enum import Enum as _Enum
from typing import (Callable as _Callable,
                    Dict as _Dict,
                    Optional as _Optional,
                    Sequence as _Sequence,
                    Tuple as _Tuple)

from .constants import DEFAULT_EPSILON as _DEFAULT_EPSILON, PAD_FLUENTS as _PAD_FLUENTS
from .grounding import GroundAction, ground as _ground
from .mathf import clamp_pad as _clamp_pad, fixed3 as _fixed3, time_le as _time_le, time_lt as _time_lt
from .pddl.model import (Literal, AddEffect, DeleteEffect, NumericEffect, Domain,
                         Problem, Condition)
from .plan import Plan
from .temporal_state import (TimedState, FluentValuation, Violation, ViolationKind,
                             initial_state as _initial_state, evaluate as _evaluate,
                             apply_start as _apply_start,
                             advance_to_next_end as _advance_to_next_end,
                             elapse_to as _elapse_to, skip_next_end as _skip_next_end,
                             holds as _holds)

_log = _logging.getLogger(__name__)

_K = ViolationKind


class Verdict(_Enum):
    VALID = "valid"
    INVALID = "invalid"


@_dataclass(frozen=True)
class ValidationReport:
    """
    ValidationReport

    Type: class

    Description: the outcome of checking a plan

    Attrs:
        'verdict' (Verdict): VALID when there are no violations
        'violations' (tuple[Violation]): at most one unless every
            violation was asked for, an unsatisfied goal is reported as
            GoalUnsatisfied
        'final_state' (TimedState): the state where the replay stopped
        'makespan' (float): the latest end of an action of the plan
    """
    verdict: Verdict
    violations: _Tuple[Violation, ...]
    final_state: TimedState
    makespan: float

    @property
    def valid(self) -> bool:
        return self.verdict is Verdict.VALID

    @property
    def first(self) -> _Optional[Violation]:
        return self.violations[0] if self.violations else None

    def summary(self) -> str:
        if self.valid:
            return f"valid, makespan {_fixed3(self.makespan)}"
        return f"invalid, {self.violations[0].describe()}"


def _index(dom, prob, actions) -> _Dict[str, GroundAction]:
    if actions is None: actions = _ground(dom, prob)
    return {a.name: a for a in actions}


class _Replay:
    def __init__(self, epsilon, all_violations, observer):
        self.epsilon = epsilon
        self.all_violations = all_violations
        self.observer = observer
        self.violations = []
        self.last_event = None

    def fail(self, v: Violation) -> bool:
        """Records a violation, True when the replay has to stop"""
        _log.info("violation: %s", v.describe())
        self.violations.append(v)
        return not self.all_violations

    def event(self, t, name) -> bool:
        bad = _time_lt(t, 0.0) or self.last_event is not None and \
              _time_lt(t, self.last_event + self.epsilon)
        if self.last_event is None or t > self.last_event:
            self.last_event = t
        if bad:
            return self.fail(Violation(_K.EPSILON_VIOLATION, t, name,
                                       message=f"less than {self.epsilon} after the previous event"))
        return False

    def end_next(self, s: TimedState):
        """Ends the earliest running action, returns (state, stop)"""
        pending = s.agenda[0]
        if self.event(pending.end_time, pending.action.name):
            return s, True
        result = _advance_to_next_end(s)
        if isinstance(result, Violation):
            return _skip_next_end(s), self.fail(result)
        s, _ = result
        if self.observer is not None: self.observer(s)
        return s, False


def validate(dom: Domain,
             prob: Problem,
             plan: Plan,
             epsilon: float = _DEFAULT_EPSILON,
             all_violations: bool = False,
             actions: _Optional[_Sequence[GroundAction]] = None,
             observer: _Optional[_Callable[[TimedState], None]] = None) -> ValidationReport:
    """
    validate(dom, prob, plan, epsilon=0.001, all_violations=False,
             actions=None, observer=None)

    Type: function

    Description: replays a plan event by event, before each start the
        actions ending no later than it are ended

    Args:
        'dom' (Domain): the domain
        'prob' (Problem): the problem
        'plan' (Plan): the plan to check
        'epsilon' (float): the smallest gap between two events
        'all_violations' (bool): keep going after a violation, the
            effects of the failing step are skipped, this is a
            diagnostic and not part of the semantics
        'actions' (Sequence[GroundAction]?): the ground actions, computed
            when None
        'observer' (Callable?): called with the state after every event

    Return type: ValidationReport
    """
    index = _index(dom, prob, actions)
    replay = _Replay(epsilon, all_violations, observer)
    s = _initial_state(prob)
    stop = False

    for step in plan.actions:
        while s.agenda and _time_le(s.agenda[0].end_time, step.start):
            s, stop = replay.end_next(s)
            if stop: break
        if stop: break

        if replay.event(step.start, step.action):
            stop = True
            break

        a = index.get(step.action)
        if a is None:
            stop = replay.fail(Violation(_K.UNKNOWN_ACTION, step.start, step.action,
                                         message="no such ground action"))
            if stop: break
            continue

        s = _elapse_to(s, max(s.time, step.start))
        result = _apply_start(s, a, step.duration)
        if isinstance(result, Violation):
            stop = replay.fail(result)
            if stop: break
            continue
        s = result
        if observer is not None: observer(s)

    while not stop and s.agenda:
        s, stop = replay.end_next(s)

    if not stop:
        for c in prob.goal:
            if not _holds(c, s):
                replay.fail(Violation(_K.GOAL_UNSATISFIED, s.time, None, c))
                if not all_violations: break

    verdict = Verdict.INVALID if replay.violations else Verdict.VALID
    return ValidationReport(verdict, tuple(replay.violations), s, plan.makespan)


_COMPARE = {
    "<": _operator.lt,
    "<=": _operator.le,
    ">": _operator.gt,
    ">=": _operator.ge,
    "=": lambda a, b: abs(a - b) <= 1e-9,
}


def _check(c: Condition, facts, fluents, duration=None) -> bool:
    if isinstance(c, Literal):
        return (c.key in facts) == c.positive
    return _COMPARE[c.op](_evaluate(c.lhs, fluents, duration), _evaluate(c.rhs, fluents, duration))


def _apply(effects, facts: set, fluents: dict, duration):
    amounts = [(e, _evaluate(e.amount, fluents, duration)) for e in effects
               if isinstance(e, NumericEffect)]
    for e in effects:
        if isinstance(e, DeleteEffect): facts.discard(e.literal.key)
    for e in effects:
        if isinstance(e, AddEffect): facts.add(e.literal.key)
    for e, amount in amounts:
        k = e.fluent.key
        if e.op == "assign":
            value = amount
        elif e.op == "increase":
            value = _evaluate(e.fluent, fluents) + amount
        else:
            value = _evaluate(e.fluent, fluents) - amount
        fluents[k] = _clamp_pad(value) if e.fluent.function in _PAD_FLUENTS else value


def check_by_events(dom: Domain,
                    prob: Problem,
                    plan: Plan,
                    epsilon: float = _DEFAULT_EPSILON,
                    actions: _Optional[_Sequence[GroundAction]] = None) -> ValidationReport:
    """
    check_by_events(dom, prob, plan, epsilon=0.001, actions=None)

    Type: function

    Description: an independent check of a plan, the 2n start and end
        events are sorted first (ends before starts at the same time)
        and every condition is checked at every event with plain sets
        and dicts, only pp.temporal_state.evaluate is shared with
        validate

    Return type: ValidationReport
        only the first violation is reported
    """
    index = _index(dom, prob, actions)
    facts = {lit.key for lit in prob.init_facts}
    fluents = {f.key: float(v) for f, v in prob.init_fluents}

    events = []
    for i, step in enumerate(plan.actions):
        events.append((round(step.start, 6), 1, i, step))
        events.append((round(step.start + step.duration, 6), 0, i, step))
    events.sort(key=lambda e: e[:3])

    running = {}
    last = None
    now = 0.0

    def report(v=None):
        state = TimedState(now, frozenset(facts), FluentValuation(fluents))
        if v is None:
            return ValidationReport(Verdict.VALID, (), state, plan.makespan)
        return ValidationReport(Verdict.INVALID, (v,), state, plan.makespan)

    def broken_running(t):
        for i in sorted(running):
            a = running[i]
            for c in a.over_all:
                if not _check(c, facts, fluents):
                    return Violation(_K.UNSATISFIED_OVER_ALL, t, a.name, c)
        return None

    for _, is_start, i, step in events:
        t = step.start if is_start else round(step.start + step.duration, 9)
        now = max(now, t)
        if t < -1e-6 or last is not None and t < last + epsilon - 1e-6:
            return report(Violation(_K.EPSILON_VIOLATION, t, step.action))
        last = t if last is None else max(last, t)

        a = index.get(step.action)
        if is_start:
            if a is None:
                return report(Violation(_K.UNKNOWN_ACTION, t, step.action))
            if not a.duration.allows(step.duration):
                return report(Violation(_K.DURATION_OUT_OF_BOUNDS, t, a.name))
            for spec_conditions, kind in ((a.at_start, _K.UNSATISFIED_AT_START),
                                          (a.over_all, _K.UNSATISFIED_OVER_ALL)):
                for c in spec_conditions:
                    if not _check(c, facts, fluents):
                        return report(Violation(kind, t, a.name, c))
            _apply(a.start_effects, facts, fluents, step.duration)
            running[i] = a
        else:
            if i not in running:
                continue
            del running[i]
            for spec_conditions, kind in ((a.over_all, _K.UNSATISFIED_OVER_ALL),
                                          (a.at_end, _K.UNSATISFIED_AT_END)):
                for c in spec_conditions:
                    if not _check(c, facts, fluents):
                        return report(Violation(kind, t, a.name, c))
            _apply(a.end_effects, facts, fluents, step.duration)

        v = broken_running(t)
        if v is not None:
            return report(v)

    for c in prob.goal:
        if not _check(c, facts, fluents):
            return report(Violation(_K.GOAL_UNSATISFIED, now, None, c))
    return report()
