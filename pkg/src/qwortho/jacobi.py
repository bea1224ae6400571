"""Jacobi parameters of the walk measures.

A :class:`JacobiSeq` holds the offsets ``beta_n`` and the products
``gamma_n`` of the monic three-term recurrence

    P_{n+1}(x) = (x - beta_n) P_n(x) - gamma_{n-1} P_{n-1}(x),

equivalently the entries of the Stieltjes continued fraction
``1 / (z - beta_0 - gamma_0 / (z - beta_1 - gamma_1 / ...))``.
Every sequence here is eventually constant, which is what lets the
continued fraction be closed off exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IllConditionedError

__all__ = [
    "JacobiSeq",
    "jacobi_symmetric",
    "jacobi_c1",
    "jacobi_c_inv_r",
    "jacobi_head_general",
    "jacobi_asym",
    "jacobi_general",
    "jacobi_from_moments",
]


@dataclass(frozen=True)
class JacobiSeq:
    betas: tuple[float, ...]
    gammas: tuple[float, ...]
    tail_beta: float
    tail_gamma: float

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        object.__setattr__(self, "gammas", tuple(float(g) for g in self.gammas))
        if any(g <= 0 for g in self.gammas) or self.tail_gamma <= 0:
            raise ValueError("Jacobi gammas must be positive")

    def beta(self, n: int) -> float:
        return self.betas[n] if n < len(self.betas) else self.tail_beta

    def gamma(self, n: int) -> float:
        return self.gammas[n] if n < len(self.gammas) else self.tail_gamma

    def beta_array(self, count: int) -> np.ndarray:
        return np.array([self.beta(n) for n in range(count)])

    def gamma_array(self, count: int) -> np.ndarray:
        return np.array([self.gamma(n) for n in range(count)])

    @property
    def head_length(self) -> int:
        """First index from which both sequences sit at their tail values."""
        return max(len(self.betas), len(self.gammas))

    def reflect(self) -> "JacobiSeq":
        """Parameters of the mirror-image measure ``x -> -x``."""
        return JacobiSeq(
            tuple(-b for b in self.betas), self.gammas, -self.tail_beta, self.tail_gamma
        )


def _check_r(r: float) -> float:
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    return np.sqrt(1 - r * r)


def jacobi_symmetric(r: float) -> JacobiSeq:
    s = _check_r(r)
    return JacobiSeq((), (1 - s, s * (1 - s) / 2), 0.0, r * r / 4)


def jacobi_c1(r: float) -> JacobiSeq:
    """Parameters of ``mu(r, 1)``."""
    s = _check_r(r)
    return JacobiSeq((1 - s, -(1 - s) / 2), (s * (1 - s),), 0.0, r * r / 4)


def jacobi_c_inv_r(r: float) -> JacobiSeq:
    """Parameters of ``mu(r, 1/r)``.

    ``gamma_0`` equals the variance ``s (1 - s)^2 / r^2`` with ``s = sqrt(1 - r^2)``.
    """
    s = _check_r(r)
    return JacobiSeq(
        ((1 - s) / r, -((1 - s) ** 2) / (2 * r)),
        (s * (1 - s) ** 2 / (r * r),),
        0.0,
        r * r / 4,
    )


def jacobi_head_general(r: float, c: float) -> tuple[float, float, float, float]:
    """``(beta_0, gamma_0, beta_1, gamma_1)`` of ``mu(r, c)`` for any admissible ``c``.

    Negative ``c`` is handled by reflection (betas flip sign).
    """
    s = _check_r(r)
    if abs(c) * r > 1.0 + 1e-12:
        raise ValueError(f"|c| must not exceed 1/r, got c={c}, r={r}")
    sign = -1.0 if c < 0 else 1.0
    c = abs(c)
    q = 1 - c * c + c * c * s
    # q carries an absolute rounding error ~1e-16; below 1e-6 beta_1, gamma_1 lose > 1e-10 relative
    if q < 1e-6:
        raise IllConditionedError(f"boundary-degenerate parameters: 1 - c^2 + c^2 s = {q:.3g}")
    b0 = c * (1 - s)
    g0 = (1 - s) * q
    b1 = -c * (1 - s) * (2 - 2 * c * c - s + 2 * c * c * s) / (2 * q)
    g1 = s * (1 - s) * (2 - 2 * c * c + c * c * s + c * c * s * s) / (4 * q * q)
    return sign * b0, g0, sign * b1, g1


def jacobi_asym(r: float, c: float) -> JacobiSeq:
    """Full parameter sequence where one is known in closed form: ``c`` in {0, +-1, +-1/r}."""
    if c == 0:
        return jacobi_symmetric(r)
    if abs(abs(c) - 1.0) < 1e-12:
        seq = jacobi_c1(r)
    elif abs(abs(c) * r - 1.0) < 1e-12:
        seq = jacobi_c_inv_r(r)
    else:
        raise ValueError(f"no closed-form Jacobi sequence for c={c}; use jacobi_from_moments")
    return seq if c > 0 else seq.reflect()


def jacobi_general(spec) -> JacobiSeq:
    """Sequence for a :class:`~qwortho.density.GeneralJacobi` spec."""
    betas = (spec.head_beta,) if spec.head_beta != spec.tail_beta else ()
    return JacobiSeq(betas, spec.head_gammas, spec.tail_beta, spec.tail_gamma)


def _inner(p: np.ndarray, q: np.ndarray, moments: np.ndarray) -> float:
    # <p, q> = sum_ij p_i q_j s_{i+j}
    return float(np.dot(np.convolve(p, q), moments[: len(p) + len(q) - 1]))


def _inner_magnitude(p: np.ndarray, moments: np.ndarray) -> float:
    # size of the terms summed in <p, p>; a norm far below it is pure cancellation
    return float(np.dot(np.abs(np.convolve(p, p)), np.abs(moments[: 2 * len(p) - 1])))


def jacobi_from_moments(moments, count: int) -> JacobiSeq:
    """Recover ``beta_0..beta_{count-1}``, ``gamma_0..gamma_{count-1}`` from raw moments.

    Builds the monic orthogonal polynomials one at a time in the moment
    functional ``<x^i, x^j> = s_{i+j}`` (Gram-Schmidt / Chebyshev algorithm).
    Double precision supports roughly ``count <= 8`` for the walk measures.

    The returned sequence uses the last recovered values as its tail.
    """
    moments = np.asarray(moments, dtype=float)
    if count < 1:
        raise ValueError("count must be at least 1")
    if len(moments) < 2 * count + 2:
        raise ValueError(f"need at least {2 * count + 2} moments for {count} levels, got {len(moments)}")
    prev = np.zeros(1)
    cur = np.ones(1)
    norm_cur = _inner(cur, cur, moments)
    betas, gammas = [], []
    for k in range(count):
        xcur = np.concatenate(([0.0], cur))
        beta = _inner(xcur, cur, moments) / norm_cur
        nxt = xcur.copy()
        nxt[:-1] -= beta * cur
        if k > 0:
            nxt[: len(prev)] -= gammas[-1] * prev
        norm_next = _inner(nxt, nxt, moments)
        gamma = norm_next / norm_cur
        if gamma <= 0:
            raise IllConditionedError(f"non-positive gamma_{k} = {gamma:.3g}")
        if norm_next < 1e-13 * _inner_magnitude(nxt, moments):
            raise IllConditionedError(f"level {k}: polynomial norm lost to cancellation")
        betas.append(beta)
        gammas.append(gamma)
        prev, cur, norm_cur = cur, nxt, norm_next
    return JacobiSeq(tuple(betas), tuple(gammas), betas[-1], gammas[-1])
