#!/usr/bin/env python3

"""
pp.temporal_state

Type: module

Description: how starting an action, letting time pass and ending an
    action change facts and fluents, the planner and the validator both
    replay plans through these functions

Classes:
    - FluentValuation
    - PadState
    - PendingEnd
    - TimedState
    - ViolationKind
    - Violation

Functions:
    - initial_state(prob)
    - evaluate(expr, v, duration)
    - holds(c, s)
    - pad_state(s, child)
    - apply_start(s, a, duration)
    - advance_to_next_end(s)
    - elapse_to(s, t)
    - skip_next_end(s)


Semantics
=========

Facts and fluents only change at events: the start or the end of an
action. An over-all condition is checked when its action starts, after
every event that happens while the action runs and right before the
effects at its end. Between events nothing changes, so checking at the
events is exact.

Effects are applied in this order: the amounts of numeric effects are
evaluated on the state before the event, then deletes, then adds, then
the numeric updates. Pleasure, arousal and dominance are clamped to
[-1, 1] after every update.
"""
from __future__ import annotations as _annotations

import math as _math
import operator as _operator
from collections.abc import Mapping as _Mapping
from dataclasses import dataclass as _dataclass, replace as _replace
from enum import Enum as _Enum
from typing import (Iterable as _Iterable,
                    Optional as _Optional,
                    Tuple as _Tuple,
                    Union as _Union)

from .constants import PAD_FLUENTS as _PAD_FLUENTS, PLEASURE, AROUSAL, DOMINANCE
from .exceptions import (MissingFluent as _MissingFluent,
                         DivisionByZero as _DivisionByZero,
                         UnboundDuration as _UnboundDuration,
                         EmptyAgendaError as _EmptyAgendaError)
from .grounding import GroundAction
from .mathf import clamp_pad as _clamp_pad, fixed3 as _fixed3, time_lt as _time_lt
from .pddl.model import (Literal, Constant, FluentRef, DurationVar, BinaryOp,
                         AddEffect, DeleteEffect, NumericEffect,
                         Problem, NumericExpr, Condition)
from .type_hints import _fluent_key

_ARITHMETIC = {
    "+": _operator.add,
    "-": _operator.sub,
    "*": _operator.mul,
}

_COMPARE = {
    "<": _operator.lt,
    "<=": _operator.le,
    ">": _operator.gt,
    ">=": _operator.ge,
    "=": lambda a, b: _math.isclose(a, b, rel_tol=0.0, abs_tol=1e-9),
}


class FluentValuation(_Mapping):
    """
    FluentValuation

    Type: class

    Description: an immutable map from ground fluents, written as
        (function, *args), to their values

    Args:
        'values' (Mapping): the initial values

    Methods:
        - updated(changes)
        - key(ndigits=9)

    Reading a fluent without a value raises MissingFluent.
    """
    __slots__ = "_values", "_hash"

    def __init__(self, values=None):
        self._values = dict(values or {})
        self._hash = None

    def __getitem__(self, k: _fluent_key) -> float:
        try:
            return self._values[k]
        except KeyError:
            raise _MissingFluent(f"({' '.join(k)})") from None

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if isinstance(other, FluentValuation):
            return self._values == other._values
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._values.items()))
        return self._hash

    def __repr__(self):
        return f"FluentValuation({self._values})"

    def updated(self, changes) -> FluentValuation:
        if not changes:
            return self
        values = dict(self._values)
        values.update(changes)
        return FluentValuation(values)

    def key(self, ndigits: int = 9) -> tuple:
        """A hashable, sorted and rounded snapshot of the values"""
        return tuple(sorted((k, round(v, ndigits)) for k, v in self._values.items()))


@_dataclass(frozen=True)
class PadState:
    """A child's pleasure, arousal and dominance, each in [-1, 1]"""
    pleasure: float
    arousal: float
    dominance: float

    def __iter__(self):
        return iter((self.pleasure, self.arousal, self.dominance))

    def __str__(self):
        return f"({_fixed3(self.pleasure)}, {_fixed3(self.arousal)}, {_fixed3(self.dominance)})"


@_dataclass(frozen=True)
class PendingEnd:
    end_time: float
    action: GroundAction
    duration: float
    start_time: float
    seq: int

    @property
    def sort_key(self):
        return self.end_time, self.seq


@_dataclass(frozen=True)
class TimedState:
    """
    TimedState

    Type: class

    Description: the state of the world at a point in time

    Attrs:
        'time' (float): the current time, in seconds
        'facts' (frozenset[tuple]): the true ground atoms as
            (predicate, *args)
        'fluents' (FluentValuation): the numeric fluents
        'agenda' (tuple[PendingEnd]): the running actions, ordered by end
            time and then by the order they were started in
        'seq' (int): how many actions were started so far
    """
    time: float
    facts: frozenset
    fluents: FluentValuation
    agenda: _Tuple[PendingEnd, ...] = ()
    seq: int = 0

    @property
    def idle(self) -> bool:
        return not self.agenda

    def next_end(self) -> _Optional[PendingEnd]:
        return self.agenda[0] if self.agenda else None


class ViolationKind(_Enum):
    UNSATISFIED_AT_START = "UnsatisfiedAtStart"
    UNSATISFIED_AT_END = "UnsatisfiedAtEnd"
    UNSATISFIED_OVER_ALL = "UnsatisfiedOverAll"
    EPSILON_VIOLATION = "EpsilonViolation"
    GOAL_UNSATISFIED = "GoalUnsatisfied"
    DURATION_OUT_OF_BOUNDS = "DurationOutOfBounds"
    UNKNOWN_ACTION = "UnknownAction"


_K = ViolationKind


@_dataclass(frozen=True)
class Violation:
    """
    Violation

    Type: class

    Description: the reason a step of a plan cannot be applied

    Attrs:
        'kind' (ViolationKind): what went wrong
        'time' (float): when it went wrong
        'action' (str?): the name of the action involved, None for
            GoalUnsatisfied
        'condition' (Condition?): the condition that does not hold, None
            for EpsilonViolation, DurationOutOfBounds and UnknownAction
        'message' (str): extra detail

    Methods:
        - describe()
    """
    kind: ViolationKind
    time: float
    action: _Optional[str] = None
    condition: _Optional[Condition] = None
    message: str = ""

    def describe(self) -> str:
        """'<Kind> at <t>: <action> <condition>', used by the command line"""
        parts = [str(p) for p in (self.action, self.condition, self.message) if p]
        text = f"{self.kind.value} at {_fixed3(self.time)}"
        return f"{text}: {' '.join(parts)}" if parts else text


def initial_state(prob: Problem) -> TimedState:
    """
    initial_state(prob)

    Type: function

    Description: the state at time 0, with the initial facts and fluents
        and nothing running

    Args:
        'prob' (Problem): the problem

    Return type: TimedState
    """
    return TimedState(
        time=0.0,
        facts=frozenset(lit.key for lit in prob.init_facts),
        fluents=FluentValuation({f.key: float(v) for f, v in prob.init_fluents})
    )


def evaluate(expr: NumericExpr,
             v: _Mapping,
             duration: _Optional[float] = None) -> float:
    """
    evaluate(expr, v, duration=None)

    Type: function

    Description: the value of a ground numeric expression

    Args:
        'expr' (NumericExpr): the expression
        'v' (FluentValuation): the values of the fluents
        'duration' (float?): the value of ?duration, needed only if expr
            contains it

    Raises:
        MissingFluent: a fluent in expr has no value
        DivisionByZero: the divisor evaluates to zero
        UnboundDuration: expr uses ?duration and duration is None

    Return type: float
    """
    if isinstance(expr, Constant):
        return expr.value
    if isinstance(expr, FluentRef):
        return v[expr.key]
    if isinstance(expr, DurationVar):
        if duration is None:
            raise _UnboundDuration("?duration evaluated outside of an action")
        return duration
    if isinstance(expr, BinaryOp):
        left = evaluate(expr.left, v, duration)
        right = evaluate(expr.right, v, duration)
        if expr.op == "/":
            if right == 0:
                raise _DivisionByZero(f"division by zero in {expr}")
            return left / right
        return _ARITHMETIC[expr.op](left, right)
    raise TypeError(f"not a numeric expression: {expr!r}")


def _holds(c: Condition, facts, fluents, duration=None) -> bool:
    if isinstance(c, Literal):
        return (c.key in facts) == c.positive
    return _COMPARE[c.op](evaluate(c.lhs, fluents, duration), evaluate(c.rhs, fluents, duration))


def holds(c: Condition, s: TimedState) -> bool:
    """
    holds(c, s)

    Type: function

    Description: whether a ground condition is true in a state, literals
        are looked up in the facts and comparisons are evaluated, '='
        accepts a difference up to 1e-9

    Args:
        'c' (Condition): the condition
        's' (TimedState): the state

    Return type: bool
    """
    return _holds(c, s.facts, s.fluents)


def first_unsatisfied(conditions: _Iterable[Condition], s: TimedState) -> _Optional[Condition]:
    return next((c for c in conditions if not _holds(c, s.facts, s.fluents)), None)


def pad_state(s: _Union[TimedState, _Mapping], child: str) -> PadState:
    fluents = s.fluents if isinstance(s, TimedState) else s
    return PadState(*(fluents[(f, child)] for f in (PLEASURE, AROUSAL, DOMINANCE)))


def apply_effects(s: TimedState, effects, duration: float) -> TimedState:
    """
    apply_effects(s, effects, duration)

    Type: function

    Description: applies one batch of simultaneous effects, the time and
        the agenda are not changed

    Return type: TimedState
    """
    amounts = [(e, evaluate(e.amount, s.fluents, duration))
               for e in effects if isinstance(e, NumericEffect)]
    deleted = {e.literal.key for e in effects if isinstance(e, DeleteEffect)}
    added = {e.literal.key for e in effects if isinstance(e, AddEffect)}
    facts = s.facts
    if deleted or added:
        facts = (facts - deleted) | added

    changes = {}
    for e, amount in amounts:
        k = e.fluent.key
        current = changes.get(k)
        if e.op == "assign":
            value = amount
        else:
            if current is None: current = s.fluents[k]
            value = current + amount if e.op == "increase" else current - amount
        if e.fluent.function in _PAD_FLUENTS:
            value = _clamp_pad(value)
        changes[k] = value

    return _replace(s, facts=facts, fluents=s.fluents.updated(changes))


def _check_running(s: TimedState) -> _Optional[Violation]:
    for pending in s.agenda:
        c = first_unsatisfied(pending.action.over_all, s)
        if c is not None:
            return Violation(_K.UNSATISFIED_OVER_ALL, s.time, pending.action.name, c)
    return None


def apply_start(s: TimedState, a: GroundAction, duration: float) -> _Union[TimedState, Violation]:
    """
    apply_start(s, a, duration)

    Type: function

    Description: starts an action at the current time of the state

    Args:
        's' (TimedState): the state
        'a' (GroundAction): the action to start
        'duration' (float): the chosen duration

    Return type: TimedState | Violation
        a Violation of kind DurationOutOfBounds, UnsatisfiedAtStart or
        UnsatisfiedOverAll if the action cannot start, the state is
        never modified
    """
    if not a.duration.allows(duration):
        return Violation(_K.DURATION_OUT_OF_BOUNDS, s.time, a.name,
                         message=f"duration {_fixed3(duration)} is not "
                                 f"{a.duration.op} {_fixed3(a.duration.bound)}")
    c = first_unsatisfied(a.at_start, s)
    if c is not None:
        return Violation(_K.UNSATISFIED_AT_START, s.time, a.name, c)
    c = first_unsatisfied(a.over_all, s)
    if c is not None:
        return Violation(_K.UNSATISFIED_OVER_ALL, s.time, a.name, c)

    after = apply_effects(s, a.start_effects, duration)
    pending = PendingEnd(round(s.time + duration, 9), a, duration, s.time, s.seq)
    agenda = tuple(sorted(s.agenda + (pending,), key=lambda p: p.sort_key))
    after = _replace(after, agenda=agenda, seq=s.seq + 1)

    return _check_running(after) or after


def advance_to_next_end(s: TimedState) -> _Union[_Tuple[TimedState, GroundAction], Violation]:
    """
    advance_to_next_end(s)

    Type: function

    Description: moves time to the earliest pending end and ends that
        action

    Args:
        's' (TimedState): the state, with at least one running action

    Raises:
        EmptyAgendaError: nothing is running

    Return type: tuple[TimedState, GroundAction] | Violation
        a Violation of kind UnsatisfiedOverAll or UnsatisfiedAtEnd if the
        action cannot end
    """
    if not s.agenda:
        raise _EmptyAgendaError("no running action to end")

    pending = s.agenda[0]
    a = pending.action
    now = _replace(s, time=max(s.time, pending.end_time), agenda=s.agenda[1:])

    c = first_unsatisfied(a.over_all, now)
    if c is not None:
        return Violation(_K.UNSATISFIED_OVER_ALL, now.time, a.name, c)
    c = first_unsatisfied(a.at_end, now)
    if c is not None:
        return Violation(_K.UNSATISFIED_AT_END, now.time, a.name, c)

    after = apply_effects(now, a.end_effects, pending.duration)
    return _check_running(after) or (after, a)


def elapse_to(s: TimedState, t: float) -> TimedState:
    """
    elapse_to(s, t)

    Type: function

    Description: moves the clock forward without any event, t cannot be
        earlier than the current time or later than the next pending end

    Return type: TimedState
    """
    if _time_lt(t, s.time):
        raise ValueError(f"cannot go back in time from {s.time} to {t}")
    if s.agenda and _time_lt(s.agenda[0].end_time, t):
        raise ValueError(f"{t} is past the end of {s.agenda[0].action.name}")
    return _replace(s, time=max(s.time, t))


def skip_next_end(s: TimedState) -> TimedState:
    """Drops the next pending end without checking or applying anything"""
    if not s.agenda:
        raise _EmptyAgendaError("no running action to skip")
    return _replace(s, time=max(s.time, s.agenda[0].end_time), agenda=s.agenda[1:])

