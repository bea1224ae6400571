"""Limit densities of the walk and integration against them.

The walk measures live on ``(-r, r)`` and have inverse square-root edges.
Every integral here goes through the substitution ``x = r sin(theta)``, after
which

    k(x : r) dx = sqrt(1 - r^2) / (pi (1 - r^2 sin^2 theta)) dtheta

is analytic on the closed ``theta`` interval, so a fixed Gauss-Legendre rule
converges spectrally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Union

import numpy as np

__all__ = [
    "Symmetric",
    "Asymmetric",
    "GeneralJacobi",
    "MeasureSpec",
    "QUAD_NODES",
    "density_k",
    "density_mu",
    "density_limit",
    "cdf_mu",
    "expectation",
]

QUAD_NODES = 200


@dataclass(frozen=True)
class Symmetric:
    """Measure with density ``k(x : r)``."""

    r: float

    def __post_init__(self):
        if not 0.0 < self.r < 1.0:
            raise ValueError(f"r must lie in (0, 1), got {self.r}")

    @property
    def c(self) -> float:
        return 0.0


@dataclass(frozen=True)
class Asymmetric:
    """Measure ``mu(r, c)`` with density ``(1 + c x) k(x : r)``."""

    r: float
    c: float

    def __post_init__(self):
        if not 0.0 < self.r < 1.0:
            raise ValueError(f"r must lie in (0, 1), got {self.r}")
        if abs(self.c) * self.r > 1.0 + 1e-12:
            raise ValueError(f"|c| must not exceed 1/r, got c={self.c}, r={self.r}")


@dataclass(frozen=True)
class GeneralJacobi:
    """Measure whose Jacobi parameters are a finite head then constant.

    ``gamma_n = head_gammas[n]`` for ``n < len(head_gammas)`` and ``tail_gamma``
    afterwards; ``beta_0 = head_beta`` and ``beta_n = tail_beta`` for ``n >= 1``.
    """

    head_gammas: tuple[float, ...]
    tail_gamma: float
    head_beta: float = 0.0
    tail_beta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "head_gammas", tuple(float(g) for g in self.head_gammas))
        if not self.head_gammas:
            raise ValueError("need at least one head gamma")
        if min(self.head_gammas) <= 0 or self.tail_gamma <= 0:
            raise ValueError("all gammas must be positive")

    @property
    def n(self) -> int:
        return len(self.head_gammas)

    @property
    def support(self) -> tuple[float, float]:
        h = 2.0 * np.sqrt(self.tail_gamma)
        return self.tail_beta - h, self.tail_beta + h


MeasureSpec = Union[Symmetric, Asymmetric, GeneralJacobi]


def _walk_params(spec) -> tuple[float, float]:
    if isinstance(spec, (Symmetric, Asymmetric)):
        return spec.r, spec.c
    raise TypeError(f"expected a Symmetric or Asymmetric spec, got {type(spec).__name__}")


def density_k(x, r: float):
    """``sqrt(1-r^2) / (pi (1-x^2) sqrt(r^2-x^2))`` on ``|x| < r``, zero outside.

    Returns ``inf`` exactly at ``x = +-r``.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < r
    xi = x[inside]
    out[inside] = np.sqrt(1 - r * r) / (np.pi * (1 - xi * xi) * np.sqrt(r * r - xi * xi))
    out[np.abs(x) == r] = np.inf
    return out[()] if out.ndim == 0 else out


def density_mu(x, spec: MeasureSpec):
    r, c = _walk_params(spec)
    x = np.asarray(x, dtype=float)
    k = density_k(x, r)
    with np.errstate(invalid="ignore"):
        out = np.where(k == 0, 0.0, (1 + c * x) * k)
    return out[()] if np.ndim(out) == 0 else out


def density_limit(x, params):
    """Weak-limit density ``(1 - c x) k(x : r)`` for :class:`LimitParams`."""
    return density_mu(x, params.measure())


@lru_cache(maxsize=None)
def _gauss_legendre(n: int):
    return np.polynomial.legendre.leggauss(n)


def expectation(g: Callable, spec: MeasureSpec, upper: float | None = None, nodes: int = QUAD_NODES):
    """``int g(x) dmu(x)`` over ``(-r, upper]`` (whole support by default).

    ``g`` must accept a numpy array; complex-valued ``g`` is fine.
    """
    r, c = _walk_params(spec)
    lo = -np.pi / 2
    if upper is None or upper >= r:
        hi = np.pi / 2
    elif upper <= -r:
        return 0.0
    else:
        hi = np.arcsin(upper / r)
    t, w = _gauss_legendre(nodes)
    half = 0.5 * (hi - lo)
    theta = lo + half * (t + 1)
    x = r * np.sin(theta)
    weight = np.sqrt(1 - r * r) / (np.pi * (1 - x * x)) * (1 + c * x)
    return half * np.sum(w * weight * g(x))


def cdf_mu(t, spec: MeasureSpec):
    """Distribution function of a walk measure, vectorised over ``t``."""
    t = np.asarray(t, dtype=float)
    vals = np.array([expectation(np.ones_like, spec, upper=ti) for ti in t.ravel()])
    vals = np.clip(vals, 0.0, 1.0).reshape(t.shape)
    return vals[()] if vals.ndim == 0 else vals
