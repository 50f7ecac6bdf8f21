#!/usr/bin/env python3

"""
pp.trajectory

Type: module

Description: samples the emotions of the children along a valid plan

Classes:
    - Sample
    - Trajectory

Functions:
    - simulate_trajectory(dom, prob, plan, sample_dt, thresholds, epsilon)
    - children_of(prob)


Sampling
========

The PAD values only change at events, so the trajectory is piecewise
constant. It is sampled on a grid, at 0, dt, 2*dt, ... up to the
makespan, where each sample shows the state after every event up to that
time, and right after every event. At the same time grid samples come
before event samples.

CSV
===

time,child,pleasure,arousal,dominance,emotion
0.000,c1,0.400,0.400,0.450,Boredom
"""
from __future__ import annotations as _annotations

import csv as _csv
import io as _io
import logging as _logging
import math as _math
from dataclasses import dataclass as _dataclass
from typing import (Iterator as _Iterator,
                    List as _List,
                    Optional as _Optional,
                    Tuple as _Tuple)

from .constants import (PLEASURE as _P,
                        DEFAULT_DT as _DEFAULT_DT,
                        DEFAULT_EPSILON as _DEFAULT_EPSILON)
from .emotion import EmotionLabel, Thresholds, classify as _classify
from .exceptions import InvalidPlan as _InvalidPlan
from .mathf import fixed3 as _fixed3, time_le as _time_le
from .pddl.model import Domain, Problem
from .plan import Plan
from .temporal_state import PadState, TimedState, initial_state as _initial_state, pad_state as _pad_state
from .type_hints import _path
from .validator import validate as _validate

_log = _logging.getLogger(__name__)

CSV_HEADER = ("time", "child", "pleasure", "arousal", "dominance", "emotion")


@_dataclass(frozen=True)
class Sample:
    time: float
    child: str
    pad: PadState
    emotion: EmotionLabel
    is_event: bool = False

    def row(self) -> _Tuple[str, ...]:
        return (_fixed3(self.time), self.child, *(_fixed3(v) for v in self.pad), self.emotion.value)


@_dataclass(frozen=True)
class Trajectory:
    """
    Trajectory

    Type: class

    Description: the samples of every child, sorted by time and then by
        child

    Attrs:
        'samples' (tuple[Sample]): the samples
        'sample_dt' (float): the period of the grid samples
        'children' (tuple[str]): the sampled children
        'makespan' (float): the end of the plan

    Methods:
        - of_child(child)
        - to_csv()
        - write_csv(path)
    """
    samples: _Tuple[Sample, ...]
    sample_dt: float
    children: _Tuple[str, ...]
    makespan: float

    def __len__(self):
        return len(self.samples)

    def __iter__(self) -> _Iterator[Sample]:
        return iter(self.samples)

    def of_child(self, child: str) -> _List[Sample]:
        return [s for s in self.samples if s.child == child]

    def to_csv(self) -> str:
        buffer = _io.StringIO(newline="")
        self._write(buffer)
        return buffer.getvalue()

    def write_csv(self, path: _path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as f:
            self._write(f)
        _log.info("wrote %d rows to %s", len(self.samples), path)

    def _write(self, f):
        writer = _csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(s.row() for s in self.samples)


def children_of(prob: Problem) -> _List[str]:
    """The objects with an initial pleasure value, sorted"""
    return sorted({ref.args[0] for ref, _ in prob.init_fluents
                   if ref.function == _P and len(ref.args) == 1})


def _samples_at(t: float, s: TimedState, children, th, is_event) -> _List[Sample]:
    samples = []
    for c in children:
        pad = _pad_state(s, c)
        samples.append(Sample(t, c, pad, _classify(tuple(pad), th), is_event))
    return samples


def simulate_trajectory(dom: Domain,
                        prob: Problem,
                        plan: Plan,
                        sample_dt: float = _DEFAULT_DT,
                        thresholds: _Optional[Thresholds] = None,
                        epsilon: float = _DEFAULT_EPSILON) -> Trajectory:
    """
    simulate_trajectory(dom, prob, plan, sample_dt=1.0, thresholds=None,
                        epsilon=0.001)

    Type: function

    Description: replays a valid plan and samples the PAD values and the
        emotion of every child

    Args:
        'dom' (Domain): the domain
        'prob' (Problem): the problem
        'plan' (Plan): the plan, it must be valid
        'sample_dt' (float): the period of the grid samples, positive
        'thresholds' (Thresholds?): the cut used to classify the samples
        'epsilon' (float): the separation used to validate the plan

    Raises:
        ValueError: sample_dt is not positive
        InvalidPlan: the plan does not validate, the report is attached

    Return type: Trajectory
    """
    if sample_dt <= 0:
        raise ValueError(f"the sample period must be positive, got {sample_dt}")
    if thresholds is None: thresholds = Thresholds()

    events: _List[TimedState] = []
    report = _validate(dom, prob, plan, epsilon, observer=events.append)
    if not report.valid:
        raise _InvalidPlan(report)

    children = children_of(prob)
    makespan = report.makespan
    initial = _initial_state(prob)

    samples = []
    i = 0
    current = initial
    for k in range(_math.floor(makespan / sample_dt + 1e-9) + 1):
        t = round(k * sample_dt, 9)
        while i < len(events) and _time_le(events[i].time, t):
            current = events[i]
            i += 1
        samples += _samples_at(t, current, children, thresholds, False)

    for s in events:
        samples += _samples_at(s.time, s, children, thresholds, True)

    # stable, so grid rows stay ahead of event rows at the same time
    samples.sort(key=lambda x: (round(x.time, 6), x.child))
    _log.debug("%d samples for %d children", len(samples), len(children))
    return Trajectory(tuple(samples), sample_dt, tuple(children), makespan)
