"""Monic orthogonal polynomials generated by a :class:`~qwortho.jacobi.JacobiSeq`."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.optimize import brentq

from .density import expectation
from .jacobi import JacobiSeq, jacobi_symmetric

__all__ = [
    "MonicPoly",
    "eval_polys",
    "monic_coeffs",
    "hadamard_table",
    "orthogonality_residual",
    "orthogonality_matrix",
    "genfun_residual",
    "zeros_by_bisection",
]


@dataclass(frozen=True)
class MonicPoly:
    """Polynomial with ascending coefficients ``coeffs[0] + coeffs[1] x + ...``."""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=float)
        if coeffs[-1] != 1.0:
            raise ValueError(f"leading coefficient must be 1, got {coeffs[-1]}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return npoly.polyval(x, self.coeffs)


def eval_polys(jacobi: JacobiSeq, x, n: int) -> np.ndarray:
    """``P_0(x) .. P_n(x)`` stacked along the first axis.

    ``P_{-1} = 0``, ``P_0 = 1``, ``P_{k+1} = (x - beta_k) P_k - gamma_{k-1} P_{k-1}``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    x = np.asarray(x, dtype=float)
    out = np.empty((n + 1,) + x.shape)
    out[0] = 1.0
    if n >= 1:
        out[1] = x - jacobi.beta(0)
    for k in range(1, n):
        out[k + 1] = (x - jacobi.beta(k)) * out[k] - jacobi.gamma(k - 1) * out[k - 1]
    return out


def monic_coeffs(jacobi: JacobiSeq, n: int) -> list[MonicPoly]:
    if n < 0:
        raise ValueError("n must be non-negative")
    polys = [np.array([1.0])]
    if n >= 1:
        polys.append(np.array([-jacobi.beta(0), 1.0]))
    for k in range(1, n):
        nxt = np.zeros(k + 2)
        nxt[1:] += polys[k]
        nxt[:-1] -= jacobi.beta(k) * polys[k]
        nxt[:-2] -= jacobi.gamma(k - 1) * polys[k - 1]
        nxt[-1] = 1.0
        polys.append(nxt)
    return [MonicPoly(c) for c in polys]


def hadamard_table() -> list[np.ndarray]:
    """Ascending coefficients of ``P_0 .. P_6`` for ``r = 1/sqrt(2)``, written out as surds."""
    q = np.sqrt(2.0)
    return [
        np.array([1.0]),
        np.array([0.0, 1.0]),
        np.array([(-2 + q) / 2, 0.0, 1.0]),
        np.array([0.0, (-3 + q) / 2**2, 0.0, 1.0]),
        np.array([(2 - q) / 2**4, 0.0, (-7 + 2 * q) / 2**3, 0.0, 1.0]),
        np.array([0.0, (7 - 3 * q) / 2**5, 0.0, (-4 + q) / 2**2, 0.0, 1.0]),
        np.array([(-2 + q) / 2**7, 0.0, (21 - 8 * q) / 2**6, 0.0, (-9 + 2 * q) / 2**3, 0.0, 1.0]),
    ]


def orthogonality_residual(jacobi: JacobiSeq, spec, m: int, n: int) -> float:
    """``int P_m P_n dmu`` by quadrature (zero for ``m != n``, ``gamma_0...gamma_{n-1}`` otherwise)."""
    top = max(m, n)
    return float(expectation(lambda x: (lambda P: P[m] * P[n])(eval_polys(jacobi, x, top)), spec))


def orthogonality_matrix(jacobi: JacobiSeq, spec, n: int) -> np.ndarray:
    """Gram matrix ``(int P_i P_j dmu)_{i, j <= n}``."""
    out = np.empty((n + 1, n + 1))
    for i in range(n + 1):
        for j in range(i, n + 1):
            out[i, j] = out[j, i] = orthogonality_residual(jacobi, spec, i, j)
    return out


def genfun_residual(x: float, z: float, r: float, N: int) -> float:
    """``|(4 - 4xz + r^2 z^2) Q_N - 4 - (r^2 - 4 + 4s) z^2 - (2 - 2s - r^2) x z^3|``.

    ``Q_N = sum_{n<=N} P_n(x) z^n`` for the symmetric walk measure, ``s = sqrt(1 - r^2)``.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    s = np.sqrt(1 - r * r)
    P = eval_polys(jacobi_symmetric(r), x, N)
    Q = np.sum(P * z ** np.arange(N + 1))
    lhs = (4 - 4 * x * z + r * r * z * z) * Q
    rhs = 4 + (r * r - 4 + 4 * s) * z * z + (2 - 2 * s - r * r) * x * z**3
    return float(abs(lhs - rhs))


def zeros_by_bisection(poly: MonicPoly, lo: float = -1.0, hi: float = 1.0, points: int = 2001) -> np.ndarray:
    """Real zeros in ``[lo, hi]`` located from sign changes on a uniform grid."""
    grid = np.linspace(lo, hi, points)
    vals = poly(grid)
    roots = list(grid[vals == 0])
    for i in np.nonzero(vals[:-1] * vals[1:] < 0)[0]:
        roots.append(brentq(poly, grid[i], grid[i + 1], xtol=1e-15))
    return np.sort(np.array(roots))
