import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))

import pytest

import pad_planner as pp

TEST_FILES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "test_files")


def fixture_path(name):
    return os.path.join(TEST_FILES, name)


def make_plan(*lines):
    return pp.parse_plan("\n".join(lines))


@pytest.fixture(scope="session")
def domain():
    return pp.synthesize_domain()


@pytest.fixture(scope="session")
def problem():
    return pp.synthesize_problem()


@pytest.fixture(scope="session")
def actions(domain, problem):
    return pp.ground(domain, problem)


@pytest.fixture(scope="session")
def benchmark_plan(domain, problem, actions):
    result = pp.plan(domain, problem, pp.PlannerConfig(timeout=60), actions)
    assert isinstance(result, pp.Plan), result
    return result


@pytest.fixture(scope="session")
def small():
    """One child, one toy"""
    dom = pp.synthesize_domain(pp.DomainConfig(n_children=1))
    return dom, pp.synthesize_problem(1, 1)


@pytest.fixture(scope="session")
def small_plan(small):
    dom, prob = small
    result = pp.plan(dom, prob, pp.PlannerConfig(timeout=30))
    assert isinstance(result, pp.Plan), result
    return result
