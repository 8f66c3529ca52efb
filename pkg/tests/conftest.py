"""Shared fixtures: the pole searches are the slow part, so run them once."""

import sys

import pytest
from hypothesis import settings

from _cache import delta_wall_search as _delta_wall_search
from _cache import reference_search
from shape_resonance.models import ModelSpec
from shape_resonance.reference import DELTA_WALL, REFERENCE_SYSTEMS

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def delta_wall():
    return DELTA_WALL


@pytest.fixture(scope="session")
def delta_wall_search():
    return _delta_wall_search()


@pytest.fixture(scope="session")
def delta_wall_pole(delta_wall_search):
    return delta_wall_search.poles[0]


@pytest.fixture(scope="session")
def reference_searches():
    """label -> PoleSearch over [1, 30] with 2000 grid points."""
    return {ref.label: reference_search(ref.label) for ref in REFERENCE_SYSTEMS}


@pytest.fixture(scope="session")
def exp1():
    return ModelSpec.exp_one_piece(5.0, 0.5)


@pytest.fixture(scope="session")
def exp2():
    return ModelSpec.exp_two_piece(5.0, 0.5, 5.0)


@pytest.fixture(scope="session")
def exp2_step():
    return ModelSpec.exp_two_piece(5.0, 0.0, 5.0)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.summary_line(number))
