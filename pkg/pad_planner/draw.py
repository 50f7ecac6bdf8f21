#!/usr/bin/env python3

"""
pp.draw

Type: module

Description: renders the trajectory of the children as a chart

Functions:
    - aa_line(surface, color, start_pos, end_pos, width)
    - step_points(samples, to_screen, index)
    - render_trajectory(trajectory, path, size, thresholds)

The chart has a panel for pleasure, arousal and dominance, stacked top to
bottom, with one line per child and dashed guides at the cut and at the
floor. pygame is used without a window, so it also works on machines
without a display.
"""
from __future__ import annotations as _annotations

import logging as _logging
import os as _os

_os.environ.setdefault("PYGAME_HIDE_SUPPORT_PROMPT", "1")
_os.environ.setdefault("SDL_VIDEODRIVER", "dummy")

from typing import (Callable as _Callable,
                    List as _List,
                    Optional as _Optional,
                    Sequence as _Sequence,
                    Tuple as _Tuple)

import pygame

from .constants import (PAD_FLUENTS as _PAD_FLUENTS,
                        PAD_MIN as _PAD_MIN,
                        PAD_MAX as _PAD_MAX,
                        BLACK, WHITE, SERIES_COLORS)
from .emotion import Thresholds
from .trajectory import Sample, Trajectory
from .type_hints import _col_type, _path

_log = _logging.getLogger(__name__)

_MARGIN = 50
_GAP = 20
_GRID_COLOR = (200, 200, 200, 255)
_CUT_COLOR = (120, 120, 120, 255)

_point = _Tuple[float, float]


def aa_line(surface: pygame.Surface,
            color: _col_type,
            start_pos: _point,
            end_pos: _point,
            width: int = 1) -> None:
    """
    aa_line(surface, color, start_pos, end_pos, width=1)

    Type: function

    Description: draws an anti-aliased line that can be thicker than
        one pixel

    Args:
        'surface' (pygame.Surface): the surface where to draw the line
        'color' (tuple): the color of the line
        'start_pos' (tuple): the first point
        'end_pos' (tuple): the second point
        'width' (int): the width of the line, even widths are rounded up

    Return type: None
    """
    if width <= 0: return
    if not width % 2: width += 1

    pygame.draw.line(surface, color, start_pos, end_pos, width)
    if width == 1:
        pygame.draw.aaline(surface, color, start_pos, end_pos)
        return

    vertical = abs(start_pos[0] - end_pos[0]) <= abs(start_pos[1] - end_pos[1])
    ox, oy = (width / 2, 0) if vertical else (0, width / 2)
    pygame.draw.aaline(surface, color, (start_pos[0] + ox, start_pos[1] + oy),
                       (end_pos[0] + ox, end_pos[1] + oy))
    pygame.draw.aaline(surface, color, (start_pos[0] - ox, start_pos[1] - oy),
                       (end_pos[0] - ox, end_pos[1] - oy))


def _dashed(surface, color, y, x0, x1, dash=6):
    x = x0
    while x < x1:
        pygame.draw.line(surface, color, (x, y), (min(x + dash, x1), y))
        x += dash * 2


def step_points(samples: _Sequence[Sample],
                to_screen: _Callable[[float, float], _point],
                index: int) -> _List[_point]:
    """
    step_points(samples, to_screen, index)

    Type: function

    Description: the corners of the step line of one PAD component, the
        value is held until the next sample

    Args:
        'samples' (Sequence[Sample]): the samples of one child, by time
        'to_screen' (Callable): maps (time, value) to a screen position
        'index' (int): 0 for pleasure, 1 for arousal, 2 for dominance

    Return type: list[tuple[float, float]]
    """
    points = []
    previous = None
    for s in samples:
        value = tuple(s.pad)[index]
        if previous is not None:
            points.append(to_screen(s.time, previous))
        points.append(to_screen(s.time, value))
        previous = value
    return points


def _label(surface, font, text, pos, color=BLACK):
    if font is not None:
        surface.blit(font.render(text, True, color), pos)


def render_trajectory(trajectory: Trajectory,
                      path: _Optional[_path] = None,
                      size: _Tuple[int, int] = (900, 720),
                      thresholds: _Optional[Thresholds] = None,
                      line_width: int = 3) -> pygame.Surface:
    """
    render_trajectory(trajectory, path=None, size=(900, 720), thresholds=None,
                      line_width=3)

    Type: function

    Description: draws the chart of a trajectory and saves it if a path
        is given, the format follows the extension of the path

    Args:
        'trajectory' (Trajectory): the samples to draw
        'path' (str, os.PathLike?): where to save the image
        'size' (tuple[int, int]): the size of the image in pixels
        'thresholds' (Thresholds?): the cut and the floor drawn as guides
        'line_width' (int): the width of the lines of the children

    Return type: pygame.Surface
    """
    if thresholds is None: thresholds = Thresholds()
    w, h = size
    panel_h = (h - 2 * _MARGIN - 2 * _GAP) / 3
    plot_w = w - 2 * _MARGIN
    if panel_h <= 0 or plot_w <= 0:
        raise ValueError(f"the chart is too small: {size}")

    surface = pygame.Surface(size, flags=pygame.SRCALPHA)
    surface.fill(WHITE)
    if not pygame.font.get_init(): pygame.font.init()
    try:
        font = pygame.font.Font(None, 18)
    except (pygame.error, OSError):
        font = None

    span = trajectory.makespan or 1.0

    for i, fluent in enumerate(_PAD_FLUENTS):
        top = _MARGIN + i * (panel_h + _GAP)

        def to_screen(t, v, top=top):
            x = _MARGIN + plot_w * t / span
            y = top + panel_h * (_PAD_MAX - v) / (_PAD_MAX - _PAD_MIN)
            return x, y

        pygame.draw.rect(surface, _GRID_COLOR, (_MARGIN, top, plot_w, panel_h), 1)
        for value in (thresholds.low_high_cut, thresholds.hard_floor):
            _dashed(surface, _CUT_COLOR, round(to_screen(0, value)[1]), _MARGIN, _MARGIN + plot_w)
        _label(surface, font, fluent, (_MARGIN, top - 16))
        _label(surface, font, "1", (_MARGIN - 20, top - 6))
        _label(surface, font, "-1", (_MARGIN - 24, top + panel_h - 10))

        for j, child in enumerate(trajectory.children):
            color = SERIES_COLORS[j % len(SERIES_COLORS)]
            points = step_points(trajectory.of_child(child), to_screen, i)
            for a, b in zip(points, points[1:]):
                aa_line(surface, color, a, b, line_width)
            if i == 0:
                _label(surface, font, child, (w - _MARGIN + 8, _MARGIN + 16 * j), color)

    _label(surface, font, f"time (s), makespan {trajectory.makespan:.3f}",
           (_MARGIN, h - _MARGIN + 8))

    if path is not None:
        pygame.image.save(surface, str(path))
        _log.info("saved the chart to %s", path)
    return surface
