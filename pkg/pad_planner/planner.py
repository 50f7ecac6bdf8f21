#!/usr/bin/env python3

"""
pp.planner

Type: module

Description: a forward search over decision epochs that finds plans
    with starts separated by epsilon

Classes:
    - PlannerConfig
    - SearchNode
    - Unsolvable
    - Timeout

Functions:
    - plan(dom, prob, cfg, actions)
    - plan_portfolio(dom, prob, cfg, k, actions)
    - candidate_durations(a, state, cfg)


Search
======

Greedy best-first search ordered by the heuristic, ties go to the
smaller makespan and then to a random order fixed by the seed. From a
node the search can:

- start any applicable ground action, at time 0 for the first action and
  epsilon after the last event otherwise, once for each candidate
  duration
- jump to the end of the earliest running action

A node is a goal when the goal holds and nothing is running. States are
compared by their facts, fluents and the remaining time of the running
actions, a state seen before is expanded again only with a smaller
makespan.
"""
from __future__ import annotations as _annotations

import heapq as _heapq
import itertools as _itertools
import logging as _logging
import random as _random
import time as _time
from concurrent.futures import ThreadPoolExecutor as _ThreadPoolExecutor
from dataclasses import dataclass as _dataclass, replace as _replace
from typing import (List as _List,
                    Optional as _Optional,
                    Sequence as _Sequence,
                    Tuple as _Tuple,
                    Union as _Union)

from .constants import (DEFAULT_EPSILON as _DEFAULT_EPSILON,
                        DEFAULT_GRID_STEP as _DEFAULT_GRID_STEP,
                        DEFAULT_TIMEOUT as _DEFAULT_TIMEOUT,
                        DEFAULT_SEED as _DEFAULT_SEED,
                        DEFAULT_CUT as _DEFAULT_CUT,
                        GOAL_WEIGHT as _GOAL_WEIGHT,
                        RELAXED_WEIGHT as _RELAXED_WEIGHT,
                        DEFICIT_WEIGHT as _DEFICIT_WEIGHT)
from .grounding import GroundAction, ground as _ground
from .heuristic import RelaxedTask as _RelaxedTask, heuristic as _heuristic, INFINITY as _INFINITY
from .mathf import grid as _grid, time_lt as _time_lt
from .pddl.model import Domain, Problem
from .plan import Plan, TimedAction
from .temporal_state import (TimedState, Violation, initial_state as _initial_state,
                             apply_start as _apply_start, elapse_to as _elapse_to,
                             advance_to_next_end as _advance_to_next_end,
                             first_unsatisfied as _first_unsatisfied)

_log = _logging.getLogger(__name__)


@_dataclass(frozen=True)
class PlannerConfig:
    """
    PlannerConfig

    Type: class

    Description: the knobs of the search

    Attrs:
        'epsilon' (float): the gap between two events, default 0.001
        'timeout' (float): the time budget in seconds, default 60
        'duration_grid_step' (float): the step of the durations tried for
            actions with an upper bound, default 5
        'seed' (int): the seed of the tie-break order, default 0
        'goal_weight' (float): weight of each unsatisfied goal condition
        'relaxed_weight' (float): weight of the relaxed plan size, 0
            leaves that term out
        'deficit_weight' (float): weight of the emotional deficit
        'deficit_cut' (float): PAD values below it count as a deficit
        'max_expansions' (int?): stop after this many expansions
    """
    epsilon: float = _DEFAULT_EPSILON
    timeout: float = _DEFAULT_TIMEOUT
    duration_grid_step: float = _DEFAULT_GRID_STEP
    seed: int = _DEFAULT_SEED
    goal_weight: float = _GOAL_WEIGHT
    relaxed_weight: float = _RELAXED_WEIGHT
    deficit_weight: float = _DEFICIT_WEIGHT
    deficit_cut: float = _DEFAULT_CUT
    max_expansions: _Optional[int] = None

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.duration_grid_step <= 0:
            raise ValueError("the duration grid step must be positive, "
                             f"got {self.duration_grid_step}")
        if self.timeout <= 0:
            raise ValueError(f"the timeout must be positive, got {self.timeout}")


@_dataclass(frozen=True)
class SearchNode:
    state: TimedState
    plan_prefix: _Tuple[TimedAction, ...]
    g: float
    h: float
    last_event: _Optional[float] = None


@_dataclass(frozen=True)
class Unsolvable:
    """The search space was exhausted without reaching the goal"""
    expansions: int = 0
    elapsed: float = 0.0
    reason: str = "search space exhausted"


@_dataclass(frozen=True)
class Timeout:
    """The time or expansion budget ran out"""
    expansions: int = 0
    elapsed: float = 0.0
    reason: str = "time budget exceeded"


Result = _Union[Plan, Unsolvable, Timeout]


def candidate_durations(a: GroundAction,
                        state: _Optional[TimedState] = None,
                        cfg: PlannerConfig = None) -> _List[float]:
    """
    candidate_durations(a, state=None, cfg=None)

    Type: function

    Description: the durations tried when starting an action, the fixed
        value or the grid step, 2*step, ... up to the bound, with the
        bound included

    Return type: list[float]
    """
    if a.duration.is_fixed:
        return [a.duration.bound]
    step = cfg.duration_grid_step if cfg is not None else _DEFAULT_GRID_STEP
    return _grid(step, a.duration.bound)


def _state_key(s: TimedState):
    agenda = tuple((round(p.end_time - s.time, 9), p.action.name) for p in s.agenda)
    return s.facts, s.fluents.key(), agenda


class _Search:
    def __init__(self, dom, prob, cfg, actions):
        self.prob = prob
        self.cfg = cfg
        self.actions = actions
        self.relaxed = _RelaxedTask(actions)
        self.rng = _random.Random(cfg.seed)
        self.counter = _itertools.count()
        self.durations = {a.name: candidate_durations(a, None, cfg) for a in actions}
        self.open: list = []
        self.best_g = {}
        self.expansions = 0

    def h(self, state):
        return _heuristic(state, self.prob.goal, self.relaxed, self.cfg)

    def is_goal(self, state) -> bool:
        return not state.agenda and _first_unsatisfied(self.prob.goal, state) is None

    def push(self, node: SearchNode):
        key = _state_key(node.state)
        if key in self.best_g and self.best_g[key] <= node.g:
            return
        self.best_g[key] = node.g
        h = self.h(node.state)
        if h == _INFINITY:
            return
        node = _replace(node, h=h)
        _heapq.heappush(self.open, (h, node.g, self.rng.random(), next(self.counter), node))

    def successors(self, node: SearchNode):
        s = node.state
        eps = self.cfg.epsilon
        t = 0.0 if node.last_event is None else round(node.last_event + eps, 9)

        nxt = s.next_end()
        if nxt is None or not _time_lt(nxt.end_time, t + eps):
            now = _elapse_to(s, t)
            for a in self.actions:
                if not all(f in now.facts for f in a.relaxed_pre):
                    continue
                for d in self.durations[a.name]:
                    result = _apply_start(now, a, d)
                    if isinstance(result, Violation):
                        continue
                    step = TimedAction(t, a.name, d)
                    yield SearchNode(result, node.plan_prefix + (step,), max(node.g, step.end),
                                     0.0, t)

        if nxt is not None:
            if node.last_event is not None and _time_lt(nxt.end_time, node.last_event + eps):
                return
            result = _advance_to_next_end(s)
            if isinstance(result, Violation):
                return
            after, _ = result
            yield SearchNode(after, node.plan_prefix, node.g, 0.0, after.time)

    def run(self) -> Result:
        started = _time.perf_counter()
        root_state = _initial_state(self.prob)
        root = SearchNode(root_state, (), 0.0, self.h(root_state))
        if root.h == _INFINITY:
            _log.info("the goal is unreachable even ignoring deletes")
            return Unsolvable(0, _time.perf_counter() - started, "goal unreachable")
        self.push(root)

        while self.open:
            elapsed = _time.perf_counter() - started
            if elapsed > self.cfg.timeout:
                _log.info("timeout after %d expansions", self.expansions)
                return Timeout(self.expansions, elapsed)
            if self.cfg.max_expansions is not None and self.expansions >= self.cfg.max_expansions:
                return Timeout(self.expansions, elapsed, "expansion budget exceeded")

            h, g, _, _, node = _heapq.heappop(self.open)
            if self.best_g.get(_state_key(node.state), g) < g:
                continue
            if self.is_goal(node.state):
                _log.info("plan found: %d action(s), makespan %.3f, %d expansions, %.2fs",
                          len(node.plan_prefix), node.g, self.expansions, elapsed)
                return Plan(node.plan_prefix)

            self.expansions += 1
            if self.expansions % 1000 == 0:
                _log.debug("%d expansions, open list %d, h=%.3f", self.expansions, len(self.open), h)
            for child in self.successors(node):
                self.push(child)

        return Unsolvable(self.expansions, _time.perf_counter() - started)


def plan(dom: Domain,
         prob: Problem,
         cfg: PlannerConfig = None,
         actions: _Optional[_Sequence[GroundAction]] = None) -> Result:
    """
    plan(dom, prob, cfg=None, actions=None)

    Type: function

    Description: searches for a plan that reaches the goal of the
        problem

    Args:
        'dom' (Domain): the domain
        'prob' (Problem): the problem
        'cfg' (PlannerConfig): the knobs, the defaults when None
        'actions' (Sequence[GroundAction]?): the ground actions, computed
            with grounding.ground when None

    Return type: Plan | Unsolvable | Timeout
    """
    if cfg is None: cfg = PlannerConfig()
    if actions is None: actions = _ground(dom, prob)
    return _Search(dom, prob, cfg, list(actions)).run()


def plan_portfolio(dom: Domain,
                   prob: Problem,
                   cfg: PlannerConfig = None,
                   k: int = 2,
                   actions: _Optional[_Sequence[GroundAction]] = None) -> Result:
    """
    plan_portfolio(dom, prob, cfg=None, k=2, actions=None)

    Type: function

    Description: runs k searches with the seeds cfg.seed, cfg.seed + 1,
        ... concurrently and keeps the plan with the smallest makespan,
        ties go to the smaller seed

    Return type: Plan | Unsolvable | Timeout
        Timeout if no search found a plan and at least one timed out
    """
    if cfg is None: cfg = PlannerConfig()
    if k < 1:
        raise ValueError(f"the portfolio needs at least one search, got {k}")
    if actions is None: actions = _ground(dom, prob)
    actions = list(actions)

    configs = [_replace(cfg, seed=cfg.seed + i) for i in range(k)]
    with _ThreadPoolExecutor(max_workers=k) as pool:
        results = list(pool.map(lambda c: plan(dom, prob, c, actions), configs))

    plans = [r for r in results if isinstance(r, Plan)]
    if plans:
        return min(plans, key=lambda p: p.makespan)
    return next((r for r in results if isinstance(r, Timeout)), results[0])
