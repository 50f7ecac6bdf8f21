#!/usr/bin/env python3

"""
pp.plan

Type: module

Description: timed plans and their text format

Classes:
    - TimedAction
    - Plan

Functions:
    - format_plan(plan)
    - parse_plan(text, file)
    - load_plan(path, encoding)


Plan syntax
===========

One action per line, the start time, a colon, the ground action in
parentheses, two spaces and the duration in square brackets. Times have
exactly three decimal digits:

0.000: (move kenny kenny_wp toy1_wp)  [10.000]
10.001: (classify kenny toy1 toy1_wp)  [60.000]

When reading, any amount of white space is accepted, empty lines and
lines starting with ';' are skipped and the actions are sorted by start
time.
"""
from __future__ import annotations as _annotations

import re as _re
from dataclasses import dataclass as _dataclass
from typing import Tuple as _Tuple

from .exceptions import PlanSyntaxError as _PlanSyntaxError
from .mathf import fixed3 as _fixed3
from .type_hints import _path
from .utils import read_text as _read_text

_line_expr = _re.compile(
    r"\s*(?P<start>-?\d+(?:\.\d*)?)\s*:\s*\((?P<name>[^()]*)\)\s*"
    r"\[\s*(?P<duration>\d+(?:\.\d*)?)\s*\]\s*"
)


@_dataclass(frozen=True)
class TimedAction:
    """
    TimedAction

    Type: class

    Description: a ground action scheduled at a start time with a
        duration

    Attrs:
        'start' (float): the start time, in seconds
        'action' (str): the ground action as written in plan files,
            '(name arg1 arg2 ...)'
        'duration' (float): the duration, in seconds
    """
    start: float
    action: str
    duration: float

    @property
    def end(self) -> float:
        return round(self.start + self.duration, 9)

    def __str__(self):
        return f"{_fixed3(self.start)}: {self.action}  [{_fixed3(self.duration)}]"


@_dataclass(frozen=True)
class Plan:
    """A list of timed actions sorted by start time"""
    actions: _Tuple[TimedAction, ...] = ()

    @property
    def makespan(self) -> float:
        return max((a.end for a in self.actions), default=0.0)

    def __len__(self):
        return len(self.actions)

    def __iter__(self):
        return iter(self.actions)


def format_plan(plan: Plan) -> str:
    """
    format_plan(plan)

    Type: function

    Description: the text of a plan file, an empty plan gives an empty
        string

    Return type: str
    """
    return "".join(f"{a}\n" for a in plan.actions)


def parse_plan(text: str, file: str = "<string>") -> Plan:
    """
    parse_plan(text, file='<string>')

    Type: function

    Description: reads a plan file

    Args:
        'text' (str): the contents of the file
        'file' (str): the name shown in error messages

    Raises:
        PlanSyntaxError: a line does not follow the plan syntax

    Return type: Plan
    """
    actions = []
    for l_no, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith(";"):
            continue
        match = _line_expr.fullmatch(line)
        if match is None:
            raise _PlanSyntaxError(l_no, f"expected '<start>: (<action>)  [<duration>]', "
                                         f"found '{line.strip()}'", file)
        words = match["name"].split()
        if not words:
            raise _PlanSyntaxError(l_no, "empty action name", file)
        actions.append(TimedAction(float(match["start"]),
                                   f"({' '.join(words)})",
                                   float(match["duration"])))

    actions.sort(key=lambda a: a.start)
    return Plan(tuple(actions))


def load_plan(path: _path, encoding: str = "utf-8") -> Plan:
    return parse_plan(_read_text(path, encoding), str(path))
