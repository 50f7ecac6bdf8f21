#!/usr/bin/env python3

"""
pp.heuristic

Type: module

Description: the estimate that orders the planner's open list

Classes:
    - RelaxedTask

Functions:
    - heuristic(state, goal, relaxed, cfg)
    - projected_facts(state)
    - emotional_deficit(state, cut)

The estimate adds three terms:

    goal_weight * unsatisfied goal conditions
    + relaxed_weight * size of a relaxed plan
    + deficit_weight * sum over children of max(0, cut - min(P, A, D))

The relaxed plan ignores deletes and numeric conditions and is extracted
from the cheapest supporters found by a Dijkstra sweep over the facts,
it is infinite when the goal cannot be reached even ignoring deletes.
Every term is computed on the facts that hold once the running actions
end. The estimate is 0 when the goal holds and nothing is running.
"""
from __future__ import annotations as _annotations

import heapq as _heapq
import math as _math
from typing import (Dict as _Dict,
                    FrozenSet as _FrozenSet,
                    List as _List,
                    Optional as _Optional,
                    Sequence as _Sequence)

from .constants import (PLEASURE as _P,
                        PAD_FLUENTS as _PAD_FLUENTS,
                        DEFAULT_CUT as _DEFAULT_CUT,
                        GOAL_WEIGHT as _GOAL_WEIGHT,
                        RELAXED_WEIGHT as _RELAXED_WEIGHT,
                        DEFICIT_WEIGHT as _DEFICIT_WEIGHT)
from .grounding import GroundAction
from .pddl.model import AddEffect, Literal, Condition
from .temporal_state import TimedState, _holds
from .type_hints import _fact

INFINITY = _math.inf


class RelaxedTask:
    """
    RelaxedTask

    Type: class

    Description: the ground actions with deletes and numeric conditions
        dropped, indexed by their preconditions

    Args:
        'actions' (Sequence[GroundAction]): the ground actions

    Methods:
        - plan_size(facts, goal)
    """
    def __init__(self, actions: _Sequence[GroundAction]):
        self.actions = list(actions)
        self._pre = [a.relaxed_pre for a in self.actions]
        self._add = [a.relaxed_add for a in self.actions]
        self._users: _Dict[_fact, _List[int]] = {}
        self._free: _List[int] = []
        for i, pre in enumerate(self._pre):
            if not pre:
                self._free.append(i)
            for f in pre:
                self._users.setdefault(f, []).append(i)

    def plan_size(self, facts: _FrozenSet[_fact], goal: _Sequence[_fact]) -> float:
        """
        plan_size(self, facts, goal)

        Type: method

        Description: the number of distinct actions in a relaxed plan that
            reaches every goal fact from facts

        Args:
            'facts' (frozenset[tuple]): the facts that hold
            'goal' (Sequence[tuple]): the positive goal facts

        Return type: float
            INFINITY if a goal fact is unreachable
        """
        missing = [g for g in goal if g not in facts]
        if not missing:
            return 0

        cost: _Dict[_fact, float] = {}
        supporter: _Dict[_fact, int] = {}
        waiting = [len(pre) for pre in self._pre]
        heap = [(0, f) for f in sorted(facts)]
        done = set()
        open_goals = set(missing)

        def reach(i, base):
            for f in self._add[i]:
                if f not in cost or base + 1 < cost[f]:
                    cost[f] = base + 1
                    supporter[f] = i
                    _heapq.heappush(heap, (base + 1, f))

        for f in facts:
            cost[f] = 0
        for i in self._free:
            reach(i, 0)

        while heap and open_goals:
            c, f = _heapq.heappop(heap)
            if f in done or c > cost[f]:
                continue
            done.add(f)
            open_goals.discard(f)
            for i in self._users.get(f, ()):
                waiting[i] -= 1
                if waiting[i] == 0:
                    reach(i, sum(cost[p] for p in self._pre[i]))

        if open_goals:
            return INFINITY

        chosen = set()
        stack = list(missing)
        seen = set()
        while stack:
            f = stack.pop()
            if f in seen or f in facts:
                continue
            seen.add(f)
            i = supporter[f]
            if i not in chosen:
                chosen.add(i)
                stack.extend(self._pre[i])
        return len(chosen)


def projected_facts(state: TimedState) -> _FrozenSet[_fact]:
    """The facts of the state with the at-end adds of every running action"""
    if not state.agenda:
        return state.facts
    pending = {e.literal.key for p in state.agenda for e in p.action.end_effects
               if isinstance(e, AddEffect)}
    return state.facts | pending


def emotional_deficit(state: TimedState, cut: float = _DEFAULT_CUT) -> float:
    """
    emotional_deficit(state, cut=0.5)

    Type: function

    Description: how far below the cut the lowest PAD value of every
        child is, summed over the children

    Return type: float
    """
    deficit = 0.0
    for k in state.fluents:
        if k[0] != _P or len(k) != 2: continue
        values = [state.fluents.get((f, k[1])) for f in _PAD_FLUENTS]
        lowest = min(v for v in values if v is not None)
        deficit += max(0.0, cut - lowest)
    return deficit


def _goal_facts(goal: _Sequence[Condition]):
    return tuple(c.key for c in goal if isinstance(c, Literal) and c.positive)


def heuristic(state: TimedState,
              goal: _Sequence[Condition],
              relaxed: _Optional[RelaxedTask] = None,
              cfg=None) -> float:
    """
    heuristic(state, goal, relaxed=None, cfg=None)

    Type: function

    Description: the estimate of how far the state is from the goal, it
        is not admissible

    Args:
        'state' (TimedState): the state to estimate
        'goal' (Sequence[Condition]): the goal conjunction
        'relaxed' (RelaxedTask?): the relaxed actions, without them the
            relaxed plan term is left out
        'cfg' (PlannerConfig?): the weights and the cut, the defaults
            are used when None

    Return type: float
    """
    goal_weight = getattr(cfg, "goal_weight", _GOAL_WEIGHT)
    relaxed_weight = getattr(cfg, "relaxed_weight", _RELAXED_WEIGHT)
    deficit_weight = getattr(cfg, "deficit_weight", _DEFICIT_WEIGHT)
    cut = getattr(cfg, "deficit_cut", _DEFAULT_CUT)

    facts = projected_facts(state)
    unsatisfied = sum(1 for c in goal if not _holds(c, facts, state.fluents))
    if not unsatisfied and not state.agenda:
        return 0.0

    h = goal_weight * unsatisfied
    if relaxed is not None and relaxed_weight:
        size = relaxed.plan_size(facts, _goal_facts(goal))
        if size == INFINITY:
            return INFINITY
        h += relaxed_weight * size
    return h + deficit_weight * emotional_deficit(state, cut)
