import numpy as np
import pytest

HADAMARD_R = 1 / np.sqrt(2)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def upper_half_plane(rng, count=20, re=(-2.0, 2.0), im=(0.05, 3.0)):
    return rng.uniform(*re, count) + 1j * rng.uniform(*im, count)
