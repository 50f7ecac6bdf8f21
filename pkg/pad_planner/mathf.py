#!/usr/bin/env python3

"""
pp.mathf

Type: module

Description: small numeric helpers shared by the state semantics, the
    planner and the printers

Functions:
    'clamp(value, min_, max_)': keeps value between min_ and max_
    'clamp_pad(value)': keeps value inside the PAD range [-1, 1]
    'fixed3(x)': formats x with exactly three decimal digits
    'fmt_number(x)': the shortest text that reads back as x, integers
        are printed without a fractional part
    'grid(step, bound)': the multiples of step up to bound, with bound
        itself always included
    'time_lt(a, b)': strict comparison of two times that ignores the
        noise of 3-decimal plan files
"""

from typing import List as _List

from .constants import PAD_MIN as _PAD_MIN, PAD_MAX as _PAD_MAX, TIME_TOLERANCE as _TOL

clamp = lambda value, min_, max_: min(max(value, min_), max_)
clamp_pad = lambda value: clamp(value, _PAD_MIN, _PAD_MAX)

fixed3 = lambda x: f"{x + 0.0:.3f}"

time_lt = lambda a, b: a < b - _TOL
time_le = lambda a, b: a <= b + _TOL


def fmt_number(x: float) -> str:
    if float(x).is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def grid(step: float, bound: float) -> _List[float]:
    """
    grid(step, bound)

    Type: function

    Description: returns the ascending list step, 2*step, ... that does
        not exceed bound, followed by bound if it is not already there

    Args:
        'step' (float): the grid step, must be positive
        'bound' (float): the largest value, must be positive

    Return type: list[float]
    """
    if step <= 0:
        raise ValueError("the grid step must be positive")

    values = []
    k = 1
    while k * step <= bound + _TOL:
        values.append(round(k * step, 9))
        k += 1

    if not values or abs(values[-1] - bound) > _TOL:
        values.append(float(bound))
    return values
