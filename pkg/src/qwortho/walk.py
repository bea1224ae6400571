"""Exact amplitude evolution of the discrete-time walk on the integer line."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coin import Coin, LimitParams, QubitState, split
from .density import cdf_mu

__all__ = [
    "AmplitudeField",
    "Distribution",
    "initial_field",
    "step",
    "evolve",
    "distribution",
    "interior_grid",
    "rescaled_cdf_distance",
]

# grid points this close to +-r are dropped from CDF comparisons
EDGE_EXCLUSION = 0.02


@dataclass(frozen=True)
class AmplitudeField:
    """Chirality amplitudes at time ``time``.

    ``amplitudes[j]`` is the pair ``(L, R)`` at position ``x = j - time``;
    positions with ``x + time`` odd are stored but stay zero.
    """

    time: int
    amplitudes: np.ndarray

    @property
    def positions(self) -> np.ndarray:
        return np.arange(-self.time, self.time + 1)

    def total_probability(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


@dataclass(frozen=True)
class Distribution:
    time: int
    probs: np.ndarray

    @property
    def positions(self) -> np.ndarray:
        return np.arange(-self.time, self.time + 1)

    def mean(self) -> float:
        return float(np.dot(self.positions, self.probs))


def initial_field(state: QubitState) -> AmplitudeField:
    return AmplitudeField(0, state.vector.reshape(1, 2).copy())


def step(field: AmplitudeField, coin: Coin) -> AmplitudeField:
    """One time step: ``psi'(x) = P psi(x + 1) + Q psi(x - 1)``."""
    P, Q = split(coin)
    n = field.time
    old = field.amplitudes
    new = np.zeros((2 * n + 3, 2), dtype=complex)
    # old index j is position j - n; new index i is position i - n - 1
    new[0 : 2 * n + 1] += old @ P.T  # from x + 1 to x
    new[2 : 2 * n + 3] += old @ Q.T  # from x - 1 to x
    return AmplitudeField(n + 1, new)


def evolve(coin: Coin, state: QubitState, n: int) -> AmplitudeField:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    field = initial_field(state)
    for _ in range(n):
        field = step(field, coin)
    return field


def distribution(field: AmplitudeField) -> Distribution:
    return Distribution(field.time, np.sum(np.abs(field.amplitudes) ** 2, axis=1))


def interior_grid(r: float, count: int = 41) -> np.ndarray:
    """``count`` evenly spaced points in ``(-1, 1)`` clear of the edges ``+-r``."""
    grid = np.linspace(-0.95, 0.95, count)
    keep = np.abs(np.abs(grid) - r) >= EDGE_EXCLUSION
    return grid[keep]


def rescaled_cdf_distance(dist: Distribution, params: LimitParams, grid) -> float:
    """``max_t |P(X_n / n <= t) - F(t)|`` over ``grid``.

    ``F`` is the limit distribution function.  Grid points within
    ``EDGE_EXCLUSION`` of ``+-r`` are ignored, where the limit density blows
    up and the finite-``n`` oscillations are largest.  For ``n = 0`` the
    walker sits at the origin and ``X_0 / 0`` is read as 0.
    """
    grid = np.asarray(grid, dtype=float)
    if np.any(np.abs(grid) >= 1):
        raise ValueError("grid points must lie in (-1, 1)")
    grid = grid[np.abs(np.abs(grid) - params.r) >= EDGE_EXCLUSION]
    if grid.size == 0:
        raise ValueError("no grid points left after edge exclusion")
    scaled = dist.positions / max(dist.time, 1)
    cum = np.cumsum(dist.probs)
    idx = np.searchsorted(scaled, grid, side="right")
    empirical = np.where(idx > 0, cum[np.maximum(idx - 1, 0)], 0.0)
    limit = cdf_mu(grid, params.measure())
    return float(np.max(np.abs(empirical - limit)))
