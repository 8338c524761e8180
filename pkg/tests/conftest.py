import numpy as np
import pytest


def cgauss(rng, m, n):
    """Complex gaussian matrix, unit variance per entry."""
    return (rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))) / np.sqrt(2.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
