import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def angle_gap(a, b):
    """Distance between two angles modulo 2*pi."""
    return np.abs((np.asarray(a) - np.asarray(b) + np.pi) % (2 * np.pi) - np.pi)
