"""Test configuration."""

import os
import random
import sys

import pytest

# Add src directory to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from polyalg import IntPoly  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def x():
    return IntPoly.x()


@pytest.fixture
def staircase_poly():
    """x^9 + 2x^5 + 8x + 32: at p = 2 and phi = x, vertices (0,5), (1,3), (5,1), (9,0)."""
    return IntPoly((32, 8, 0, 0, 0, 2, 0, 0, 0, 1))


@pytest.fixture
def quadratic_phi():
    """x^2 + x + 1, irreducible mod 2."""
    return IntPoly((1, 1, 1))


@pytest.fixture
def pure():
    """Factory for x^n - m."""
    def make(m, n=60):
        return IntPoly.monomial(n) - m
    return make


@pytest.fixture
def rng():
    return random.Random(20240531)
