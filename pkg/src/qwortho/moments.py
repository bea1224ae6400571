"""Moments and moment generating functions of the walk measures."""
from __future__ import annotations

import numpy as np

from .density import expectation, _walk_params

__all__ = [
    "MAX_MOMENT",
    "central_binomials",
    "moment_closed",
    "moment_asym",
    "moment_sequence",
    "mgf",
    "moment_quadrature",
    "hankel_min_eigenvalue",
]

# past this index raw moments are too ill-conditioned to feed a recurrence recovery
MAX_MOMENT = 40

_POLE_TOL = 1e-8


def central_binomials(count: int) -> np.ndarray:
    """``C(2k, k)`` for ``k < count`` as floats (exact ints overflow int64 near k=31)."""
    out = np.empty(count)
    v = 1.0
    for k in range(count):
        out[k] = v
        v *= 2 * (2 * k + 1) / (k + 1)
    return out


def moment_closed(m: int, r: float) -> float:
    """``s_m`` of the symmetric measure ``k(x : r) dx``.

    Odd moments vanish and
    ``s_{2j} = 1 - sqrt(1 - r^2) sum_{k<j} C(2k, k) (r^2 / 4)^k``.
    """
    if m < 0:
        raise ValueError(f"moment index must be non-negative, got {m}")
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    if m % 2:
        return 0.0
    j = m // 2
    terms = central_binomials(j) * (r * r / 4) ** np.arange(j)
    return float(1.0 - np.sqrt(1 - r * r) * terms.sum())


def moment_asym(m: int, r: float, c: float) -> float:
    return moment_closed(m, r) + c * moment_closed(m + 1, r)


def moment_sequence(count: int, spec) -> np.ndarray:
    """``s_0 .. s_{count-1}`` from the closed forms."""
    r, c = _walk_params(spec)
    return np.array([moment_asym(m, r, c) for m in range(count)])


def mgf(z, spec):
    """Moment generating function ``sum_m s_m z^m`` in closed form.

    Valid for ``|z| < 1``; raises within ``1e-8`` of the poles ``+-1``.
    """
    r, c = _walk_params(spec)
    z = np.asarray(z, dtype=complex)
    if np.any(np.minimum(np.abs(z - 1), np.abs(z + 1)) < _POLE_TOL):
        raise ValueError("z is too close to a pole of the moment generating function")
    if np.any(np.abs(z) >= 1):
        raise ValueError("moment generating function is only defined for |z| < 1")
    s = np.sqrt(1 - r * r)
    rz2 = 1 - r * r * z * z
    num = rz2 * (1 + c * z) - (z + c) * z * s * np.sqrt(rz2)
    out = num / ((1 - z * z) * rz2)
    return out[()] if out.ndim == 0 else out


def moment_quadrature(m: int, spec) -> float:
    """``int x^m dmu`` by quadrature; the independent check on :func:`moment_closed`."""
    if m < 0:
        raise ValueError(f"moment index must be non-negative, got {m}")
    return float(expectation(lambda x: x**m, spec))


def hankel_min_eigenvalue(moments, order: int) -> float:
    """Smallest eigenvalue of ``(s_{i+j})_{0 <= i, j <= order}``."""
    moments = np.asarray(moments, dtype=float)
    if len(moments) < 2 * order + 1:
        raise ValueError(f"need {2 * order + 1} moments for a Hankel matrix of order {order}")
    idx = np.add.outer(np.arange(order + 1), np.arange(order + 1))
    return float(np.linalg.eigvalsh(moments[idx]).min())
