import os

import pytest
from hypothesis import HealthCheck, settings

from src.algebra.monomial import MonomialIdeal, RingContext

settings.register_profile(
    "ci",
    max_examples=200,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "fast",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture
def ring():
    return RingContext(("x", "y", "z"))


@pytest.fixture
def make(ring):
    """Build an ideal of k[x,y,z] from exponent vectors"""
    def build(*vectors):
        return MonomialIdeal.from_exponents(ring, vectors)
    return build


@pytest.fixture
def m(make):
    return make((1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture
def example_ideals(make, m):
    """I = (x,y,z), J = K = (x^2,y,z)"""
    j = make((2, 0, 0), (0, 1, 0), (0, 0, 1))
    return m, j, j
