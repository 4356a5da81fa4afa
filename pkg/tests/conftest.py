import random

import pytest

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def rng():
    # one fixed stream per test; reseeding keeps failures reproducible
    return random.Random(0xF51C)
