#!/usr/bin/env python3

"""
pp.grounding

Type: module

Description: instantiates the durative actions of a domain over every
    type-compatible tuple of objects

Classes:
    - GroundAction

Functions:
    - ground(dom, prob)
    - type_extensions(dom, prob)
    - ground_action(action, args)
"""
from __future__ import annotations as _annotations

import itertools as _itertools
import logging as _logging
from dataclasses import dataclass as _dataclass
from functools import cached_property as _cached_property
from typing import Dict as _Dict, List as _List, Mapping as _Mapping, Tuple as _Tuple

from .pddl.model import (Literal, FluentRef, BinaryOp, Comparison, AddEffect,
                         DeleteEffect, NumericEffect, TimeSpec, DurationConstraint,
                         DurativeAction, Domain, Problem, NumericExpr, Condition,
                         Effect)
from .type_hints import _fact

_log = _logging.getLogger(__name__)


@_dataclass(frozen=True)
class GroundAction:
    """
    GroundAction

    Type: class

    Description: a durative action with every parameter bound to an
        object, only ?duration may remain inside numeric expressions

    Attrs:
        'schema_name' (str): the name of the lifted action
        'bound_args' (tuple[str]): the objects, in parameter order
        'duration' (DurationConstraint): the allowed durations
        'conditions' (tuple[tuple[TimeSpec, Condition]]): ground
            conditions
        'effects' (tuple[tuple[TimeSpec, Effect]]): ground effects
        'name' (str, cached): '(schema arg1 arg2 ...)', the text used in
            plan files

    The conditions and effects are also split by time specifier into
    cached tuples: 'at_start', 'over_all', 'at_end', 'start_effects' and
    'end_effects'.
    """
    schema_name: str
    bound_args: _Tuple[str, ...]
    duration: DurationConstraint
    conditions: _Tuple[_Tuple[TimeSpec, Condition], ...] = ()
    effects: _Tuple[_Tuple[TimeSpec, Effect], ...] = ()

    @_cached_property
    def name(self) -> str:
        return f"({' '.join((self.schema_name,) + self.bound_args)})"

    def _conditions(self, spec):
        return tuple(c for s, c in self.conditions if s is spec)

    def _effects(self, spec):
        return tuple(e for s, e in self.effects if s is spec)

    @_cached_property
    def at_start(self) -> _Tuple[Condition, ...]:
        return self._conditions(TimeSpec.AT_START)

    @_cached_property
    def over_all(self) -> _Tuple[Condition, ...]:
        return self._conditions(TimeSpec.OVER_ALL)

    @_cached_property
    def at_end(self) -> _Tuple[Condition, ...]:
        return self._conditions(TimeSpec.AT_END)

    @_cached_property
    def start_effects(self) -> _Tuple[Effect, ...]:
        return self._effects(TimeSpec.AT_START)

    @_cached_property
    def end_effects(self) -> _Tuple[Effect, ...]:
        return self._effects(TimeSpec.AT_END)

    @_cached_property
    def relaxed_pre(self) -> _Tuple[_fact, ...]:
        """Positive literal conditions that must hold when the action starts"""
        return tuple(sorted({c.key for c in self.at_start + self.over_all
                             if isinstance(c, Literal) and c.positive}))

    @_cached_property
    def relaxed_add(self) -> _Tuple[_fact, ...]:
        return tuple(sorted({e.literal.key for _, e in self.effects if isinstance(e, AddEffect)}))

    def __str__(self):
        return self.name


def _substitute(expr: NumericExpr, binding: _Mapping[str, str]) -> NumericExpr:
    if isinstance(expr, FluentRef):
        return FluentRef(expr.function, tuple(binding.get(a, a) for a in expr.args))
    if isinstance(expr, BinaryOp):
        return BinaryOp(expr.op, _substitute(expr.left, binding), _substitute(expr.right, binding))
    return expr


def _bind_literal(lit: Literal, binding) -> Literal:
    return Literal(lit.predicate, tuple(binding.get(a, a) for a in lit.args), lit.positive)


def _bind_condition(c: Condition, binding) -> Condition:
    if isinstance(c, Comparison):
        return Comparison(c.op, _substitute(c.lhs, binding), _substitute(c.rhs, binding))
    return _bind_literal(c, binding)


def _bind_effect(e: Effect, binding) -> Effect:
    if isinstance(e, AddEffect): return AddEffect(_bind_literal(e.literal, binding))
    if isinstance(e, DeleteEffect): return DeleteEffect(_bind_literal(e.literal, binding))
    return NumericEffect(e.op, _substitute(e.fluent, binding), _substitute(e.amount, binding))


def ground_action(action: DurativeAction, args: _Tuple[str, ...]) -> GroundAction:
    """
    ground_action(action, args)

    Type: function

    Description: binds the parameters of an action to the given objects,
        types are not checked

    Args:
        'action' (DurativeAction): the lifted action
        'args' (tuple[str]): one object per parameter

    Return type: GroundAction
    """
    binding = {p.name: a for p, a in zip(action.parameters, args)}
    return GroundAction(
        schema_name=action.name,
        bound_args=tuple(args),
        duration=action.duration,
        conditions=tuple((s, _bind_condition(c, binding)) for s, c in action.conditions),
        effects=tuple((s, _bind_effect(e, binding)) for s, e in action.effects)
    )


def type_extensions(dom: Domain, prob: Problem) -> _Dict[str, _List[str]]:
    """
    type_extensions(dom, prob)

    Type: function

    Description: the sorted names of the objects and constants of every
        declared type, subtypes included

    Return type: dict[str, list[str]]
    """
    typed = {c.name: c.type for c in dom.constants}
    typed.update({o.name: o.type for o in prob.objects})
    extensions = {}
    for t in dom._parents:
        extensions[t] = sorted(n for n, nt in typed.items() if dom.is_subtype(nt, t))
    return extensions


def ground(dom: Domain, prob: Problem) -> _List[GroundAction]:
    """
    ground(dom, prob)

    Type: function

    Description: every type-correct instantiation of every action,
        ordered by schema name and then by argument names

    Args:
        'dom' (Domain): the domain
        'prob' (Problem): a problem parsed against dom

    Return type: list[GroundAction]
    """
    extensions = type_extensions(dom, prob)
    actions = []
    for schema in sorted(dom.actions, key=lambda a: a.name):
        domains = [extensions.get(p.type, []) for p in schema.parameters]
        count = 0
        for args in _itertools.product(*domains):
            actions.append(ground_action(schema, args))
            count += 1
        _log.debug("%s: %d ground instance(s)", schema.name, count)
    _log.info("grounded %d action(s) from %d schema(s)", len(actions), len(dom.actions))
    return actions

