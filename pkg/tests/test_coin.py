import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwortho.coin import (
    LimitParams,
    hadamard,
    limit_params,
    make_coin,
    make_state,
    random_coin,
    split,
)
from qwortho.density import Asymmetric, density_limit, density_mu, expectation
from qwortho.errors import HypothesisError, UnitarityError

H = 1 / np.sqrt(2)


def test_hadamard_accepted():
    coin = make_coin(H, H, H, -H)
    assert coin == hadamard()
    np.testing.assert_allclose(coin.matrix, np.array([[1, 1], [1, -1]]) * H)


def test_identity_accepted():
    coin = make_coin(1, 0, 0, 1)
    np.testing.assert_array_equal(coin.matrix, np.eye(2))


def test_non_unitary_names_violated_identity():
    with pytest.raises(UnitarityError, match="orthogonality"):
        make_coin(H, H, H, H)


def test_norm_violation_rejected():
    with pytest.raises(UnitarityError, match=r"\|a\|\^2"):
        make_coin(1, 1, 0, 1)


def test_split_hadamard():
    P, Q = split(hadamard())
    np.testing.assert_allclose(P, np.array([[1, 1], [0, 0]]) * H)
    np.testing.assert_allclose(Q, np.array([[0, 0], [1, -1]]) * H)


def test_split_identity():
    P, Q = split(make_coin(1, 0, 0, 1))
    np.testing.assert_array_equal(P, [[1, 0], [0, 0]])
    np.testing.assert_array_equal(Q, [[0, 0], [0, 1]])


def test_split_sums_back_bit_exactly(rng):
    for _ in range(20):
        coin = random_coin(rng)
        P, Q = split(coin)
        assert np.array_equal(P + Q, coin.matrix)


def test_random_coins_preserve_norm(rng):
    for _ in range(10):
        coin = make_coin(*random_coin(rng).matrix.ravel())
        v = rng.normal(size=(100, 2)) + 1j * rng.normal(size=(100, 2))
        np.testing.assert_allclose(
            np.linalg.norm(v @ coin.matrix.T, axis=1), np.linalg.norm(v, axis=1), rtol=0, atol=1e-12
        )


def test_state_must_be_normalised():
    make_state(H, 1j * H)
    with pytest.raises(ValueError):
        make_state(1, 1)


def test_limit_params_symmetric_state():
    params = limit_params(hadamard(), make_state(H, 1j * H))
    assert params.r == pytest.approx(H, abs=1e-15)
    assert params.c == pytest.approx(0.0, abs=1e-15)


def test_limit_params_left_state():
    params = limit_params(hadamard(), make_state(1, 0))
    assert params.r == pytest.approx(H, abs=1e-15)
    assert params.c == pytest.approx(1.0, abs=1e-15)


def test_limit_params_requires_abcd_nonzero():
    with pytest.raises(HypothesisError):
        limit_params(make_coin(1, 0, 0, 1), make_state(1, 0))


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_drift_real_and_bounded_for_random_coins(seed):
    rng = np.random.default_rng(seed)
    coin = random_coin(rng)
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    state = make_state(*(v / np.linalg.norm(v)))
    # the constructor enforces |c| <= 1/r; it would raise otherwise
    params = limit_params(coin, state)
    assert 0 < params.r < 1
    assert abs(params.c) * params.r <= 1 + 1e-12


def test_limit_density_is_mu_with_flipped_tilt():
    params = LimitParams(0.6, 0.9)
    x = np.linspace(-0.59, 0.59, 31)
    np.testing.assert_allclose(density_limit(x, params), (1 - 0.9 * x) * density_mu(x, Asymmetric(0.6, 0.0)))
    np.testing.assert_allclose(density_limit(x, params), density_mu(x, Asymmetric(0.6, -0.9)))
    # same check through an integral: the limit mean is -c * s_2
    mean = expectation(lambda t: t, params.measure())
    assert mean == pytest.approx(-0.9 * (1 - 0.8), abs=1e-12)
