import dataclasses

import pygame
import pytest

import pad_planner as pp
from pad_planner import draw
from conftest import make_plan


@pytest.fixture(scope="module")
def short_trajectory(domain, problem):
    prob = dataclasses.replace(problem, goal=())
    plan = make_plan("0: (improve-boredom c1)  [10]", "10.001: (maintain-happiness c2)  [10]")
    return pp.simulate_trajectory(domain, prob, plan, 5.0)


def test_step_points():
    pad = lambda v: pp.PadState(v, 0.0, 0.0)
    samples = [pp.Sample(0.0, "c1", pad(0.1), pp.EmotionLabel.BOREDOM),
               pp.Sample(5.0, "c1", pad(0.1), pp.EmotionLabel.BOREDOM),
               pp.Sample(10.0, "c1", pad(0.6), pp.EmotionLabel.UNCLASSIFIED)]
    points = draw.step_points(samples, lambda t, v: (t, v), 0)
    assert points == [(0.0, 0.1), (5.0, 0.1), (5.0, 0.1), (10.0, 0.1), (10.0, 0.6)]


def test_aa_line():
    surface = pygame.Surface((20, 20), flags=pygame.SRCALPHA)
    surface.fill((255, 255, 255, 255))
    draw.aa_line(surface, (0, 0, 0, 255), (2, 10), (18, 10), 3)
    assert surface.get_at((10, 10))[:3] != (255, 255, 255)
    assert surface.get_at((10, 2))[:3] == (255, 255, 255)


def test_render(short_trajectory, tmp_path):
    path = tmp_path / "chart.png"
    surface = draw.render_trajectory(short_trajectory, path, (600, 480))
    assert surface.get_size() == (600, 480)
    assert path.stat().st_size > 0
    assert pygame.image.load(str(path)).get_size() == (600, 480)


def test_render_without_saving(short_trajectory):
    surface = draw.render_trajectory(short_trajectory)
    assert surface.get_size() == (900, 720)


def test_too_small(short_trajectory):
    with pytest.raises(ValueError):
        draw.render_trajectory(short_trajectory, size=(80, 80))


def _ink(surface):
    w, h = surface.get_size()
    return sum(surface.get_at((x, y))[:3] != (255, 255, 255) for x in range(w) for y in range(h))


def test_line_width(short_trajectory):
    thin = draw.render_trajectory(short_trajectory, size=(300, 240), line_width=1)
    thick = draw.render_trajectory(short_trajectory, size=(300, 240), line_width=5)
    assert _ink(thick) > _ink(thin)
