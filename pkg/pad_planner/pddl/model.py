#!/usr/bin/env python3

"""
pp.pddl.model

Type: module

Description: the immutable syntax tree of the PDDL 2.1 fragment, typed
    durative actions with numeric fluents and conjunctive goals

Every node is a frozen dataclass, two trees are equal when they have the
same structure, which is what the printer/parser round-trip relies on.

Classes:
    - TypedName
    - Signature
    - DurationConstraint
    - Literal
    - Constant
    - FluentRef
    - DurationVar
    - BinaryOp
    - Comparison
    - AddEffect
    - DeleteEffect
    - NumericEffect
    - TimeSpec
    - DurativeAction
    - Domain
    - Problem
"""
from __future__ import annotations as _annotations

from dataclasses import dataclass as _dataclass, field as _field
from enum import Enum as _Enum
from functools import cached_property as _cached_property
from typing import Dict as _Dict, Optional as _Optional, Tuple as _Tuple, Union as _Union

from ..constants import (ROOT_TYPE as _ROOT_TYPE,
                         FIXED as _FIXED,
                         UPPER_BOUNDED as _UPPER_BOUNDED,
                         DURATION_VAR as _DURATION_VAR,
                         TIME_TOLERANCE as _TOL)


class TimeSpec(_Enum):
    AT_START = "at start"
    AT_END = "at end"
    OVER_ALL = "over all"


@_dataclass(frozen=True)
class TypedName:
    name: str
    type: str = _ROOT_TYPE


@_dataclass(frozen=True)
class Signature:
    """A predicate or function declaration: a name and typed parameters"""
    name: str
    params: _Tuple[TypedName, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.params)


@_dataclass(frozen=True)
class DurationConstraint:
    """
    DurationConstraint

    Type: class

    Description: '(= ?duration v)' (Fixed) or '(<= ?duration v)'
        (UpperBounded)

    Attrs:
        'op' (str): '=' or '<='
        'bound' (float): the fixed value or the upper bound, positive
    """
    op: str
    bound: float

    @property
    def is_fixed(self) -> bool:
        return self.op == _FIXED

    def allows(self, duration: float) -> bool:
        if duration <= 0:
            return False
        if self.op == _FIXED:
            return abs(duration - self.bound) <= _TOL
        return duration <= self.bound + _TOL

    @classmethod
    def fixed(cls, value: float) -> DurationConstraint:
        return cls(_FIXED, float(value))

    @classmethod
    def upper_bounded(cls, max_: float) -> DurationConstraint:
        return cls(_UPPER_BOUNDED, float(max_))


@_dataclass(frozen=True)
class Literal:
    """An atom with a polarity, arguments are variables or object names"""
    predicate: str
    args: _Tuple[str, ...] = ()
    positive: bool = True

    @_cached_property
    def key(self) -> _Tuple[str, ...]:
        return (self.predicate,) + self.args

    def __str__(self):
        atom = f"({' '.join(self.key)})"
        return atom if self.positive else f"(not {atom})"


@_dataclass(frozen=True)
class Constant:
    value: float

    def __str__(self):
        return repr(self.value)


@_dataclass(frozen=True)
class FluentRef:
    function: str
    args: _Tuple[str, ...] = ()

    @_cached_property
    def key(self) -> _Tuple[str, ...]:
        return (self.function,) + self.args

    def __str__(self):
        return f"({' '.join(self.key)})"


@_dataclass(frozen=True)
class DurationVar:
    def __str__(self):
        return _DURATION_VAR


@_dataclass(frozen=True)
class BinaryOp:
    op: str
    left: NumericExpr
    right: NumericExpr

    def __str__(self):
        return f"({self.op} {self.left} {self.right})"


NumericExpr = _Union[Constant, FluentRef, DurationVar, BinaryOp]


@_dataclass(frozen=True)
class Comparison:
    op: str
    lhs: NumericExpr
    rhs: NumericExpr

    def __str__(self):
        return f"({self.op} {self.lhs} {self.rhs})"


Condition = _Union[Literal, Comparison]


@_dataclass(frozen=True)
class AddEffect:
    literal: Literal

    def __str__(self):
        return str(self.literal)


@_dataclass(frozen=True)
class DeleteEffect:
    literal: Literal

    def __str__(self):
        return f"(not {self.literal})"


@_dataclass(frozen=True)
class NumericEffect:
    op: str
    fluent: FluentRef
    amount: NumericExpr

    def __str__(self):
        return f"({self.op} {self.fluent} {self.amount})"


Effect = _Union[AddEffect, DeleteEffect, NumericEffect]


@_dataclass(frozen=True)
class DurativeAction:
    """
    DurativeAction

    Type: class

    Description: a lifted durative action schema

    Attrs:
        'name' (str): the name of the action
        'parameters' (tuple[TypedName]): the typed variables, every name
            starts with '?'
        'duration' (DurationConstraint): the allowed durations
        'conditions' (tuple[tuple[TimeSpec, Condition]]): annotated
            conditions, any of the three time specifiers
        'effects' (tuple[tuple[TimeSpec, Effect]]): annotated effects,
            only AT_START or AT_END
    """
    name: str
    parameters: _Tuple[TypedName, ...]
    duration: DurationConstraint
    conditions: _Tuple[_Tuple[TimeSpec, Condition], ...] = ()
    effects: _Tuple[_Tuple[TimeSpec, Effect], ...] = ()


@_dataclass(frozen=True)
class Domain:
    """
    Domain

    Type: class

    Description: a parsed domain file

    Attrs:
        'name' (str): the domain name
        'types' (tuple[tuple[str, str?]]): declared types with their
            parent, None for a type declared without one
        'constants' (tuple[TypedName]): the domain constants
        'predicates' (tuple[Signature]): the predicate declarations
        'functions' (tuple[Signature]): the numeric function declarations
        'actions' (tuple[DurativeAction]): the durative actions

    Methods:
        - is_subtype(sub, sup)
        - action(name)
        - predicate(name)
        - function(name)
    """
    name: str
    types: _Tuple[_Tuple[str, _Optional[str]], ...] = ()
    constants: _Tuple[TypedName, ...] = ()
    predicates: _Tuple[Signature, ...] = ()
    functions: _Tuple[Signature, ...] = ()
    actions: _Tuple[DurativeAction, ...] = ()

    @_cached_property
    def _parents(self) -> _Dict[str, _Optional[str]]:
        parents = {_ROOT_TYPE: None}
        for t, parent in self.types:
            parents[t] = parent
        return parents

    def declares_type(self, t: str) -> bool:
        return t in self._parents

    def is_subtype(self, sub: str, sup: str) -> bool:
        """
        is_subtype(self, sub, sup)

        Type: method

        Description: reflexive-transitive closure of the declared parents,
            a type declared without a parent sits at the top level and is
            not a subtype of 'object'

        Return type: bool
        """
        seen = set()
        t = sub
        while t is not None and t not in seen:
            if t == sup: return True
            seen.add(t)
            t = self._parents.get(t)
        return False

    def action(self, name: str) -> _Optional[DurativeAction]:
        return next((a for a in self.actions if a.name == name), None)

    def predicate(self, name: str) -> _Optional[Signature]:
        return next((p for p in self.predicates if p.name == name), None)

    def function(self, name: str) -> _Optional[Signature]:
        return next((f for f in self.functions if f.name == name), None)


@_dataclass(frozen=True)
class Problem:
    """
    Problem

    Type: class

    Description: a parsed problem file

    Attrs:
        'name' (str): the problem name
        'domain_name' (str): the name of the domain it is written for
        'objects' (tuple[TypedName]): the typed objects
        'init_facts' (tuple[Literal]): ground positive literals
        'init_fluents' (tuple[tuple[FluentRef, float]]): ground fluent
            assignments, at most one per fluent
        'goal' (tuple[Condition]): the goal conjunction
    """
    name: str
    domain_name: str
    objects: _Tuple[TypedName, ...] = ()
    init_facts: _Tuple[Literal, ...] = ()
    init_fluents: _Tuple[_Tuple[FluentRef, float], ...] = ()
    goal: _Tuple[Condition, ...] = _field(default=())
