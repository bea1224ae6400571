"""Stieltjes transforms ``G(z) = int dmu(x) / (z - x)`` and their inversion.

Every square root of ``z^2 - s^2`` is taken as ``z * sqrt(1 - s^2 / z^2)``
(:func:`branch_sqrt`).  That branch is analytic off ``[-s, s]``, behaves like
``z`` at infinity and has positive imaginary part on the upper half plane, so
each closed form below is a Nevanlinna function mapping the upper half plane
into the lower one.  The naive ``sqrt(z^2 - s^2)`` picks the wrong sheet on
the left half plane.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from .density import Asymmetric, GeneralJacobi, Symmetric, expectation
from .errors import DepthUnstableError, InversionError
from .jacobi import JacobiSeq

__all__ = [
    "branch_sqrt",
    "a_function",
    "g_symmetric",
    "g_asym",
    "g_measure",
    "cf_eval",
    "g_general",
    "g_general_closed",
    "g_general_asym",
    "g_quadrature",
    "invert",
    "rho_closed",
    "rho_quadrature",
    "asymptotic_check",
]

_CUT_TOL = 1e-10
# (1e-2, 1e-3, 1e-4) is too coarse within ~0.05 of an inverse-sqrt edge
DEFAULT_EPS = (1e-3, 1e-4, 1e-5)


def _out(v):
    return v[()] if np.ndim(v) == 0 else v


def branch_sqrt(z, s: float):
    """``sqrt(z^2 - s^2)`` with the cut on ``[-s, s]`` and ``~ z`` at infinity."""
    z = np.asarray(z, dtype=complex)
    return z * np.sqrt(1 - (s * s) / (z * z))


def a_function(z, p: float):
    """Transform of the constant chain ``gamma_n = p``: ``(z - sqrt(z^2 - 4p)) / (2p)``.

    Solves ``p A^2 - z A + 1 = 0`` on the branch with ``A(z) ~ 1/z``.
    Evaluated as ``2 / (z + sqrt(z^2 - 4p))`` to avoid cancellation at large ``|z|``.
    """
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    z = np.asarray(z, dtype=complex)
    return _out(2.0 / (z + branch_sqrt(z, 2 * np.sqrt(p))))


def _reject_cut(z, r: float):
    near_pole = np.minimum(np.abs(z - 1), np.abs(z + 1)) < _CUT_TOL
    on_cut = (np.abs(z.imag) < _CUT_TOL) & (np.abs(z.real) <= r + _CUT_TOL)
    if np.any(near_pole):
        raise ValueError("z is too close to +-1")
    if np.any(on_cut):
        raise ValueError(f"z lies on the cut [-{r}, {r}]")


def g_asym(z, r: float, c: float):
    """Closed-form transform of ``mu(r, c)``.

    ``((z^2 - r^2)(z + c) - (1 + c z) sqrt(1 - r^2) sqrt(z^2 - r^2)) / ((z^2 - 1)(z^2 - r^2))``
    """
    Asymmetric(r, c)
    z = np.asarray(z, dtype=complex)
    _reject_cut(z, r)
    s = np.sqrt(1 - r * r)
    zr = z * z - r * r
    out = (zr * (z + c) - (1 + c * z) * s * branch_sqrt(z, r)) / ((z * z - 1) * zr)
    return _out(out)


def g_symmetric(z, r: float):
    return g_asym(z, r, 0.0)


def g_measure(z, spec):
    """Closed-form transform for any spec type."""
    if isinstance(spec, Symmetric):
        return g_symmetric(z, spec.r)
    if isinstance(spec, Asymmetric):
        return g_asym(z, spec.r, spec.c)
    if isinstance(spec, GeneralJacobi):
        if spec.head_beta == 0 and spec.tail_beta == 0:
            return g_general(z, spec)
        return g_general_asym(z, spec)
    raise TypeError(f"unknown spec type {type(spec).__name__}")


def cf_eval(z, jacobi: JacobiSeq, depth: int, closure: bool = False):
    """Finite continued fraction ``1/(z - b0 - g0/(z - b1 - ... /(z - b_{depth-1})))``.

    Evaluated bottom-up.  With ``closure=True`` the bottom level is completed
    by the exact transform of the constant tail,
    ``gamma_{depth-1} * A(z - tail_beta)``, which requires ``depth`` to reach
    the start of the tail.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    z = np.asarray(z, dtype=complex)
    t = z - jacobi.beta(depth - 1)
    if closure:
        if depth < jacobi.head_length:
            raise ValueError(f"closure needs depth >= {jacobi.head_length}")
        t = t - jacobi.gamma(depth - 1) * a_function(z - jacobi.tail_beta, jacobi.tail_gamma)
    for k in range(depth - 2, -1, -1):
        if np.any(np.abs(t) < 1e-300):
            raise DepthUnstableError(f"zero denominator at level {k + 1}")
        t = z - jacobi.beta(k) - jacobi.gamma(k) / t
    if np.any(np.abs(t) < 1e-300):
        raise DepthUnstableError("zero denominator at level 0")
    return _out(1.0 / t)


def _check_general(spec, asym_ok=False):
    if not isinstance(spec, GeneralJacobi):
        raise TypeError("expected a GeneralJacobi spec")
    if not asym_ok and (spec.head_beta != 0 or spec.tail_beta != 0):
        raise ValueError("spec has nonzero betas; use g_general_asym")


def g_general(z, spec: GeneralJacobi):
    """Transform of the ``(p_0, ..., p_{n-1}, p)`` case as ``Pi_{n-2} / Pi_{n-1}``.

    ``Pi_{-1} = 1``, ``Pi_0 = z - p_{n-1} A(z)`` and
    ``Pi_k = z Pi_{k-1} - p_{n-1-k} Pi_{k-2}``.
    """
    _check_general(spec)
    z = np.asarray(z, dtype=complex)
    p = spec.head_gammas
    n = spec.n
    prev = np.ones_like(z)
    cur = z - p[n - 1] * a_function(z, spec.tail_gamma)
    for k in range(1, n):
        prev, cur = cur, z * cur - p[n - 1 - k] * prev
    if np.any(np.abs(cur) < 1e-300):
        raise DepthUnstableError("zero denominator in the Pi recursion")
    return _out(prev / cur)


def g_general_closed(z, spec: GeneralJacobi):
    """Explicit rational-in-sqrt formulas for head lengths 1, 2 and 3."""
    _check_general(spec)
    z = np.asarray(z, dtype=complex)
    p = spec.tail_gamma
    w = branch_sqrt(z, 2 * np.sqrt(p))
    if spec.n == 1:
        (p0,) = spec.head_gammas
        out = 0.5 * ((2 * p - p0) * z - p0 * w) / ((p - p0) * z * z + p0 * p0)
    elif spec.n == 2:
        p0, p1 = spec.head_gammas
        out = ((2 * p - p1) * z + p1 * w) / ((2 * p - p1) * z * z - 2 * p0 * p + p1 * z * w)
    elif spec.n == 3:
        p0, p1, p2 = spec.head_gammas
        num = (2 * p - p2) * z * z - 2 * p1 * p + p2 * z * w
        den = (2 * p - p2) * z**3 + (p0 * p2 - 2 * p0 * p - 2 * p1 * p) * z + p2 * (z * z - p0) * w
        out = num / den
    else:
        raise ValueError(f"closed forms exist for head length 1..3, got {spec.n}")
    return _out(out)


def g_general_asym(z, spec: GeneralJacobi):
    """Closed form for gammas ``(p_0, p_1, p, p, ...)`` and betas ``(q_0, q, q, ...)``."""
    _check_general(spec, asym_ok=True)
    if spec.n != 2:
        raise ValueError(f"asymmetric closed form needs head length 2, got {spec.n}")
    p0, p1 = spec.head_gammas
    p, q0, q = spec.tail_gamma, spec.head_beta, spec.tail_beta
    z = np.asarray(z, dtype=complex)
    w = branch_sqrt(z - q, 2 * np.sqrt(p))
    num = (2 * p - p1) * z - q * (2 * p - p1) + p1 * w
    den = (2 * p - p1) * (z - q0) * (z - q) - 2 * p0 * p + p1 * (z - q0) * w
    return _out(num / den)


def invert(transform: Callable, x: float, eps_schedule=DEFAULT_EPS, support=None, tol: float = 1e-5) -> float:
    """Density at ``x`` from ``-Im G(x + i eps) / pi`` extrapolated to ``eps = 0``.

    Polynomial (Neville) extrapolation through every point of the schedule;
    no parity in ``eps`` is assumed.  If ``support`` is given, ``x`` may not
    sit within 2% of the support width of an endpoint.

    Raises
    ------
    InversionError
        When the last two extrapolants differ by more than ``tol``.
    """
    eps = np.asarray(sorted(eps_schedule, reverse=True), dtype=float)
    if eps.size < 2 or np.any(eps <= 0):
        raise ValueError("eps_schedule needs at least two positive values")
    if support is not None:
        lo, hi = support
        margin = 0.02 * (hi - lo)
        if lo - margin < x < lo + margin or hi - margin < x < hi + margin:
            raise ValueError(f"x={x} is within the endpoint exclusion zone of {support}")
    vals = np.array([-np.imag(transform(x + 1j * e)) / np.pi for e in eps])
    # Neville tableau at eps = 0
    table = vals.copy()
    last = [table[-1]]
    for level in range(1, eps.size):
        for i in range(eps.size - level):
            j = i + level
            table[i] = (eps[j] * table[i] - eps[i] * table[i + 1]) / (eps[j] - eps[i])
        last.append(table[eps.size - level - 1])
    est, prev = last[-1], last[-2]
    if abs(est - prev) > tol:
        raise InversionError(f"inversion at x={x} did not settle: {prev:.3g} vs {est:.3g}")
    return float(max(est, 0.0)) if est > -1e-8 else float(est)


def rho_closed(k, spec: GeneralJacobi, x):
    """Absolutely continuous density of a general-case measure.

    ``k`` is 1, 2, 3 (head length, zero betas) or ``"2asym"`` (head length 2
    with betas ``q_0``, ``q``).  Zero outside ``(q - 2 sqrt p, q + 2 sqrt p)``.
    """
    if not isinstance(spec, GeneralJacobi):
        raise TypeError("expected a GeneralJacobi spec")
    expected = {1: 1, 2: 2, 3: 3, "2asym": 2}
    if k not in expected:
        raise ValueError(f"k must be 1, 2, 3 or '2asym', got {k!r}")
    if spec.n != expected[k]:
        raise ValueError(f"rho^({k}) needs head length {expected[k]}, spec has {spec.n}")
    if k != "2asym" and (spec.head_beta != 0 or spec.tail_beta != 0):
        raise ValueError("nonzero betas need k='2asym'")
    p, q0, q = spec.tail_gamma, spec.head_beta, spec.tail_beta
    x = np.asarray(x, dtype=float)
    u = x - q
    inside = np.abs(u) < 2 * np.sqrt(p)
    root = np.sqrt(np.where(inside, 4 * p - u * u, 0.0))
    g = spec.head_gammas
    if k == 1:
        (p0,) = g
        num = p0 * root
        den = (p - p0) * x**2 + p0**2
    elif k == 2:
        p0, p1 = g
        num = p0 * p1 * root
        den = (p - p1) * x**4 + (p0 * (p1 - 2 * p) + p1**2) * x**2 + p0**2 * p
    elif k == 3:
        p0, p1, p2 = g
        c1 = (p0 + p1) * (p2 - 2 * p) + (p0 + p2) * p2
        c2 = (p0 + p1) ** 2 * p - p0 * p2 * (p0 + p1 + 2 * p2)
        num = p0 * p1 * p2 * root
        # constant term p0^2 p2^2 (the leading-order value of |denominator|^2 at x = 0)
        den = (p - p2) * x**6 + c1 * x**4 + c2 * x**2 + p0**2 * p2**2
    else:
        p0, p1 = g
        v = x - q0
        num = p0 * p1 * root
        den = (p - p1) * v**2 * u**2 + (p0 * (p1 - 2 * p) * u + p1**2 * v) * v + p0**2 * p
    out = np.where(inside, num / (2 * np.pi * den), 0.0)
    return _out(out)


def _rho_kind(spec: GeneralJacobi):
    if spec.head_beta != 0 or spec.tail_beta != 0:
        return "2asym"
    return spec.n


def rho_quadrature(g: Callable, spec: GeneralJacobi, nodes: int = 200):
    """``int g(x) rho(x) dx`` over the band, via ``x = q + 2 sqrt(p) sin(theta)``."""
    k = _rho_kind(spec)
    t, w = np.polynomial.legendre.leggauss(nodes)
    theta = 0.5 * np.pi * t
    h = 2 * np.sqrt(spec.tail_gamma)
    x = spec.tail_beta + h * np.sin(theta)
    # interior nodes only, so rho_closed sees |u| < 2 sqrt(p)
    jac = h * np.cos(theta)
    return 0.5 * np.pi * np.sum(w * jac * rho_closed(k, spec, x) * g(x))


def g_quadrature(z, spec):
    """``int dmu(x) / (z - x)`` by quadrature, for every spec type.

    For :class:`GeneralJacobi` only the absolutely continuous part is seen.
    """
    z = np.asarray(z, dtype=complex)
    if isinstance(spec, GeneralJacobi):
        f = lambda zz: rho_quadrature(lambda x: 1.0 / (zz - x), spec)
    else:
        f = lambda zz: expectation(lambda x: 1.0 / (zz - x), spec)
    out = np.array([f(zz) for zz in z.ravel()], dtype=complex).reshape(z.shape)
    return _out(out)


def asymptotic_check(transform: Callable, moments, M: int, ys=(10.0, 30.0, 100.0)) -> float:
    """``max_y |y^{M+2} (G(iy) - sum_{m<=M} s_m (iy)^{-m-1})|``.

    Stays bounded when ``moments`` are the moments of the measure behind
    ``transform``; a wrong ``s_m`` with ``m <= M`` makes it grow like a power of ``y``.
    """
    moments = np.asarray(moments, dtype=float)
    if len(moments) < M + 1:
        raise ValueError(f"need {M + 1} moments, got {len(moments)}")
    worst = 0.0
    for y in ys:
        z = 1j * y
        series = sum(moments[m] * z ** (-m - 1) for m in range(M + 1))
        worst = max(worst, abs(y ** (M + 2) * (transform(z) - series)))
    return float(worst)
