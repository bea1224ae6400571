"""Coins, initial qubit states and the weak-limit parameters they induce.

A coin is a 2x2 unitary

    U = [[a, b],
         [c, d]]

acting on the chirality basis ``|L> = (1, 0)``, ``|R> = (0, 1)``.  Its first
row moves the walker left, the second row moves it right (``U = P + Q``).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import HypothesisError, UnitarityError

UNITARY_TOL = 1e-12

__all__ = [
    "Coin",
    "QubitState",
    "LimitParams",
    "make_coin",
    "make_state",
    "hadamard",
    "split",
    "limit_params",
    "random_coin",
]


@dataclass(frozen=True)
class Coin:
    a: complex
    b: complex
    c: complex
    d: complex

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c


@dataclass(frozen=True)
class QubitState:
    alpha: complex
    beta: complex

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=complex)


@dataclass(frozen=True)
class LimitParams:
    """``r = |a|`` and the drift coefficient ``c`` of the weak limit.

    The limit density of ``X_n / n`` is ``(1 - c x) k(x : r)``.  In the
    ``(1 + c x) k(x : r)`` parametrisation used by :class:`Asymmetric` this is
    the measure with the opposite sign of ``c``; :meth:`measure` does the flip.
    """

    r: float
    c: float

    def __post_init__(self):
        if not 0.0 < self.r < 1.0:
            raise ValueError(f"r must lie in (0, 1), got {self.r}")
        if abs(self.c) * self.r > 1.0 + 1e-12:
            raise ValueError(f"|c| must not exceed 1/r, got c={self.c}, r={self.r}")

    def measure(self):
        from .density import Asymmetric

        return Asymmetric(self.r, -self.c)


def make_coin(a: complex, b: complex, c: complex, d: complex, tol: float = UNITARY_TOL) -> Coin:
    """Validate the unitarity identities and return a :class:`Coin`.

    Raises
    ------
    UnitarityError
        Naming the first identity that fails by more than ``tol``.
    """
    a, b, c, d = (complex(v) for v in (a, b, c, d))
    delta = a * d - b * c
    checks = [
        ("|a|^2 + |b|^2 = 1", abs(abs(a) ** 2 + abs(b) ** 2 - 1.0)),
        ("|c|^2 + |d|^2 = 1", abs(abs(c) ** 2 + abs(d) ** 2 - 1.0)),
        ("row orthogonality a*conj(b) + c*conj(d) = 0", abs(a * b.conjugate() + c * d.conjugate())),
        ("c = -det * conj(b)", abs(c + delta * b.conjugate())),
        ("d = det * conj(a)", abs(d - delta * a.conjugate())),
    ]
    for name, err in checks:
        if err > tol:
            raise UnitarityError(f"coin is not unitary: {name} violated by {err:.3g}")
    return Coin(a, b, c, d)


def hadamard() -> Coin:
    h = 1.0 / np.sqrt(2.0)
    return make_coin(h, h, h, -h)


def random_coin(rng: np.random.Generator) -> Coin:
    """Haar-ish random U(2) coin, exactly unitary by construction.

    Parametrised as ``e^{i g} [[cos t e^{i p1}, sin t e^{i p2}],
    [-sin t e^{-i p2}, cos t e^{-i p1}]]``.
    """
    t = np.arcsin(np.sqrt(rng.uniform()))
    p1, p2, g = rng.uniform(0.0, 2 * np.pi, size=3)
    ph = np.exp(1j * g)
    return Coin(
        ph * np.cos(t) * np.exp(1j * p1),
        ph * np.sin(t) * np.exp(1j * p2),
        -ph * np.sin(t) * np.exp(-1j * p2),
        ph * np.cos(t) * np.exp(-1j * p1),
    )


def make_state(alpha: complex, beta: complex, tol: float = UNITARY_TOL) -> QubitState:
    alpha, beta = complex(alpha), complex(beta)
    err = abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0)
    if err > tol:
        raise ValueError(f"state is not normalised: |alpha|^2 + |beta|^2 - 1 = {err:.3g}")
    return QubitState(alpha, beta)


def split(coin: Coin) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(P, Q)``: the left-moving and right-moving halves of the coin."""
    P = np.array([[coin.a, coin.b], [0, 0]], dtype=complex)
    Q = np.array([[0, 0], [coin.c, coin.d]], dtype=complex)
    return P, Q


def limit_params(coin: Coin, state: QubitState) -> LimitParams:
    """Weak-limit parameters ``(r, c)`` for a coin and initial state.

    ``c = |alpha|^2 - |beta|^2 + (a alpha conj(b beta) + conj(a alpha) b beta) / |a|^2``
    """
    if min(abs(coin.a), abs(coin.b), abs(coin.c), abs(coin.d)) <= UNITARY_TOL:
        raise HypothesisError("weak limit requires abcd != 0")
    r = abs(coin.a)
    aa = coin.a * state.alpha
    bb = coin.b * state.beta
    c = (
        abs(state.alpha) ** 2
        - abs(state.beta) ** 2
        + (aa * bb.conjugate() + aa.conjugate() * bb) / abs(coin.a) ** 2
    )
    if abs(c.imag) > UNITARY_TOL:
        raise ArithmeticError(f"drift coefficient has imaginary part {c.imag:.3g}")
    c = c.real
    bound = 1.0 / r
    if abs(c) > bound * (1 + 1e-12):
        raise ArithmeticError(f"drift coefficient {c} outside [-1/r, 1/r]")
    c = float(np.clip(c, -bound, bound))
    return LimitParams(float(r), c)
