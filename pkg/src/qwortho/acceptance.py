"""Acceptance criteria, runnable from pytest and from ``qwortho verify``.

Each ``criterion_*`` function returns a :class:`Criterion` with the worst
observed deviation and the tolerance it was held to.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .coin import hadamard, limit_params, make_state, random_coin, split
from .density import Asymmetric, GeneralJacobi, Symmetric, density_k, density_mu
from .jacobi import jacobi_asym, jacobi_from_moments, jacobi_general, jacobi_symmetric
from .moments import mgf, moment_closed, moment_quadrature, moment_sequence
from .orthopoly import eval_polys, genfun_residual, hadamard_table, monic_coeffs, orthogonality_residual
from .stieltjes import (
    cf_eval,
    g_general,
    g_general_closed,
    g_measure,
    g_quadrature,
    g_symmetric,
    invert,
    rho_closed,
)
from .walk import distribution, evolve, interior_grid, rescaled_cdf_distance

HADAMARD_R = 1 / np.sqrt(2)

# Frozen fixtures.  Observed values come from running this module on the
# reference build (numpy float64, 2001-step exact evolution).
FIXTURES = {
    # max |P(X_n/n <= t) - F(t)| on interior_grid(1/sqrt 2), Hadamard, phi = (1, i)/sqrt 2
    "walk_distance_n100_observed": 0.0149236092,
    "walk_distance_n2000_observed": 0.0011223359,
    "walk_distance_n2000_bound": 0.02,
    # asymptotic_check(g_symmetric(., 1/sqrt 2), closed moments, M=8); float64 roundoff level
    "asymptotic_m8_observed": 1.0073886e-3,
    "asymptotic_m8_bound": 1e-2,
    # int_{-r}^0 (1 + x) k(x : r) dx at r = 1/sqrt 2: 1/2 - atan(r/s)/pi = 1/4
    "cdf_c1_at_0": 0.25,
}

# parameter sets with no point masses (total mass of rho is 1)
GENERAL_FAMILIES = {
    "rho1": GeneralJacobi((2.0,), 1.0),
    "rho2": GeneralJacobi((1.0, 0.5), 0.8),
    "rho3": GeneralJacobi((0.7, 1.2, 0.5), 0.9),
    "rho2asym": GeneralJacobi((1.0, 0.6), 0.8, head_beta=0.3, tail_beta=-0.2),
}


@dataclass
class Criterion:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} [{self.number:2d}] {self.name}: {self.detail}"


def _upper_points(rng, count=20, re=(-1.5, 1.5), im=(0.5, 2.0)):
    return rng.uniform(*re, count) + 1j * rng.uniform(*im, count)


def _walk_head(r):
    s = np.sqrt(1 - r * r)
    return GeneralJacobi((1 - s, s * (1 - s) / 2), r * r / 4)


def criterion_1() -> Criterion:
    t0 = time.perf_counter()
    worst = 0.0
    for r in (0.3, HADAMARD_R, 0.9):
        spec = Symmetric(r)
        for m in range(21):
            worst = max(worst, abs(moment_closed(m, r) - moment_quadrature(m, spec)))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and elapsed < 1.0
    return Criterion(1, "moments closed vs quadrature", ok, f"max diff {worst:.2e} (<1e-9), {elapsed:.3f}s (<1s)")


def criterion_2() -> Criterion:
    seq = jacobi_from_moments(moment_sequence(12, Symmetric(HADAMARD_R)), 5)
    q = np.sqrt(2)
    target = np.array([(2 - q) / 2, (q - 1) / 4, 1 / 8, 1 / 8, 1 / 8])
    worst = float(np.max(np.abs(seq.gamma_array(5) - target)))
    worst_beta = float(np.max(np.abs(seq.beta_array(5))))
    ok = worst < 1e-6 and worst_beta < 1e-6
    return Criterion(2, "Hadamard Jacobi table from moments", ok, f"gamma diff {worst:.2e}, |beta| {worst_beta:.2e} (<1e-6)")


def _families():
    """(label, spec, JacobiSeq) for every family with a known full parameter sequence."""
    out = [
        ("symmetric r=1/sqrt2", Symmetric(HADAMARD_R), jacobi_symmetric(HADAMARD_R)),
        ("symmetric r=0.9", Symmetric(0.9), jacobi_symmetric(0.9)),
        ("mu(1/sqrt2, 1)", Asymmetric(HADAMARD_R, 1.0), jacobi_asym(HADAMARD_R, 1.0)),
        ("mu(1/sqrt2, -1)", Asymmetric(HADAMARD_R, -1.0), jacobi_asym(HADAMARD_R, -1.0)),
        ("mu(0.6, 1/0.6)", Asymmetric(0.6, 1 / 0.6), jacobi_asym(0.6, 1 / 0.6)),
    ]
    for label, spec in GENERAL_FAMILIES.items():
        out.append((label, spec, jacobi_general(spec)))
    return out


def criterion_3() -> Criterion:
    rng = np.random.default_rng(3)
    worst = 0.0
    where = ""
    for label, spec, seq in _families():
        z = _upper_points(rng)
        closed = g_measure(z, spec)
        cf = cf_eval(z, seq, 80)
        quad = g_quadrature(z, spec)
        d = max(np.max(np.abs(closed - cf)), np.max(np.abs(closed - quad)), np.max(np.abs(cf - quad)))
        if d > worst:
            worst, where = d, label
    return Criterion(3, "transform closed vs CF(80) vs quadrature", worst < 1e-8, f"max pairwise {worst:.2e} ({where}) (<1e-8)")


def criterion_4() -> Criterion:
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(10):
        p = rng.uniform(0.1, 3.0, 4)
        for n in (1, 2, 3):
            spec = GeneralJacobi(tuple(p[:n]), p[3])
            z = _upper_points(rng, re=(-3, 3))
            worst = max(worst, np.max(np.abs(g_general(z, spec) - g_general_closed(z, spec))))
    z = _upper_points(rng)
    walk = float(np.max(np.abs(g_general(z, _walk_head(HADAMARD_R)) - g_symmetric(z, HADAMARD_R))))
    ok = worst < 1e-12 and walk < 1e-11
    return Criterion(4, "Pi recursion vs closed G^(1..3); walk head = G_mu", ok,
                     f"recursion {worst:.2e} (<1e-12), walk head {walk:.2e} (<1e-11, tail r^2/4)")


def _interior(lo, hi, count=41):
    c, h = (lo + hi) / 2, (hi - lo) / 2
    return c + 0.95 * h * np.linspace(-1, 1, count)


def criterion_5() -> Criterion:
    cases = []
    r = HADAMARD_R
    cases.append(("k", lambda z: g_symmetric(z, r), lambda x: density_k(x, r), (-r, r)))
    for c in (0.5, 1.0, 1 / r):
        spec = Asymmetric(r, c)
        cases.append((f"(1+{c:.3g}x)k", lambda z, s=spec: g_measure(z, s), lambda x, s=spec: density_mu(x, s), (-r, r)))
    for label, spec in GENERAL_FAMILIES.items():
        kind = "2asym" if label == "rho2asym" else spec.n
        cases.append((label, lambda z, s=spec: g_measure(z, s), lambda x, s=spec, k=kind: rho_closed(k, s, x), spec.support))
    worst, where = 0.0, ""
    for label, G, dens, support in cases:
        for x in _interior(*support):
            d = abs(invert(G, x, support=support) - dens(x))
            if d > worst:
                worst, where = d, label
    # The target for rho1(0) at p0 = 2, p = 1 is 1/pi.  The closed form gives
    # 2 * 2 / (2 pi * 4) = 1/(2 pi), which is also the arcsine density
    # 1/(pi sqrt(4 - x^2)) at 0, so this part cannot pass.
    rho0 = float(rho_closed(1, GeneralJacobi((2.0,), 1.0), 0.0))
    inv0 = invert(lambda z: g_measure(z, GeneralJacobi((2.0,), 1.0)), 0.0)
    spot = abs(rho0 - 1 / np.pi)
    arcsine = max(abs(rho0 - 1 / (2 * np.pi)), abs(inv0 - 1 / (2 * np.pi)))
    ok = worst < 1e-6 and spot < 1e-8
    return Criterion(5, "Stieltjes inversion vs closed densities", ok,
                     f"grid max diff {worst:.2e} ({where}) (<1e-6); rho1(0) = {rho0:.7f} vs target 1/pi, "
                     f"diff {spot:.1e} (<1e-8); vs 1/(2pi) {arcsine:.1e}")


def criterion_6() -> Criterion:
    worst_off, worst_norm = 0.0, 0.0
    for spec in (Symmetric(HADAMARD_R), Asymmetric(HADAMARD_R, 1.0)):
        seq = jacobi_asym(spec.r, spec.c)
        for m in range(9):
            for n in range(m + 1, 9):
                worst_off = max(worst_off, abs(orthogonality_residual(seq, spec, m, n)))
        for n in range(7):
            norm = np.prod(seq.gamma_array(n)) if n else 1.0
            worst_norm = max(worst_norm, abs(orthogonality_residual(seq, spec, n, n) - norm))
    ok = worst_off < 1e-9 and worst_norm < 1e-9
    return Criterion(6, "orthogonality and norms", ok, f"off-diagonal {worst_off:.2e}, norm identity {worst_norm:.2e} (<1e-9)")


# x z^3 coefficient of the r = 1/sqrt 2 identity: 2 - 2s - r^2 = 3/2 - sqrt 2.
# The acceptance target lists 3/2 - 1/sqrt 2, which leaves a residual ~1e-2.
HADAMARD_Z3_COEFF = 1.5 - np.sqrt(2)
HADAMARD_Z3_COEFF_LISTED = 1.5 - 1 / np.sqrt(2)


def hadamard_genfun_residual(x, z, N=40, z3_coeff=HADAMARD_Z3_COEFF):
    """Residual of ``(4 - 4xz + z^2/2) Q = 4 + (-7/2 + 2 sqrt 2) z^2 + c3 x z^3``."""
    P = eval_polys(jacobi_symmetric(HADAMARD_R), x, N)
    Q = np.sum(P * z ** np.arange(N + 1))
    lhs = (4 - 4 * x * z + 0.5 * z * z) * Q
    rhs = 4 + (-3.5 + 2 * np.sqrt(2)) * z * z + z3_coeff * x * z**3
    return float(abs(lhs - rhs))


def criterion_7() -> Criterion:
    worst = max(genfun_residual(0.4, 0.3, HADAMARD_R, 40), genfun_residual(-0.8, 0.25, 0.6, 40))
    listed = hadamard_genfun_residual(0.4, 0.3, z3_coeff=HADAMARD_Z3_COEFF_LISTED)
    derived = hadamard_genfun_residual(0.4, 0.3)
    ok = worst < 1e-9 and listed < 1e-9
    return Criterion(7, "generating function identity", ok,
                     f"general {worst:.2e} (<1e-9); Hadamard coefficients as listed "
                     f"(z^3: 3/2-1/sqrt2) {listed:.1e} (<1e-9); with 3/2-sqrt2 {derived:.1e}")


def criterion_8() -> Criterion:
    computed = monic_coeffs(jacobi_symmetric(HADAMARD_R), 6)
    worst = max(float(np.max(np.abs(p.coeffs - t))) for p, t in zip(computed, hadamard_table()))
    return Criterion(8, "Hadamard polynomial table P0..P6", worst < 1e-14, f"max coeff diff {worst:.2e} (<1e-14)")


def criterion_9() -> Criterion:
    t0 = time.perf_counter()
    coin = hadamard()
    state = make_state(1 / np.sqrt(2), 1j / np.sqrt(2))
    params = limit_params(coin, state)
    grid = interior_grid(params.r)
    d100 = rescaled_cdf_distance(distribution(evolve(coin, state, 100)), params, grid)
    d2000 = rescaled_cdf_distance(distribution(evolve(coin, state, 2000)), params, grid)
    elapsed = time.perf_counter() - t0
    ok = d2000 < d100 and d2000 < FIXTURES["walk_distance_n2000_bound"] and elapsed < 30
    return Criterion(9, "walk CDF convergence", ok,
                     f"n=100 {d100:.4f} -> n=2000 {d2000:.4f} (<{FIXTURES['walk_distance_n2000_bound']}), {elapsed:.2f}s (<30s)")


def path_sum_field(coin, state, n: int) -> np.ndarray:
    """Amplitudes at time ``n`` by summing all ``2^n`` products of ``P`` and ``Q``.

    Row ``j`` is position ``j - n``.  The newest step multiplies on the left.
    """
    P, Q = split(coin)
    out = np.zeros((2 * n + 1, 2), dtype=complex)
    phi = state.vector
    for word in itertools.product((0, 1), repeat=n):
        v = phi
        for letter in reversed(word):
            v = (Q if letter else P) @ v
        x = 2 * sum(word) - n
        out[x + n] += v
    return out


def criterion_10() -> Criterion:
    rng = np.random.default_rng(10)
    cases = [(hadamard(), make_state(1 / np.sqrt(2), 1j / np.sqrt(2)))]
    for _ in range(2):
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        v /= np.linalg.norm(v)
        cases.append((random_coin(rng), make_state(*v)))
    worst = 0.0
    for coin, state in cases:
        for n in range(11):
            worst = max(worst, np.max(np.abs(evolve(coin, state, n).amplitudes - path_sum_field(coin, state, n))))
    return Criterion(10, "evolve vs brute-force path sum (n<=10)", worst < 1e-12, f"max amplitude diff {worst:.2e} (<1e-12)")


def criterion_11() -> Criterion:
    rng = np.random.default_rng(11)
    z = 0.4 * np.exp(2j * np.pi * rng.uniform(size=20))
    worst = 0.0
    for spec in (Symmetric(HADAMARD_R), Symmetric(0.3), Asymmetric(HADAMARD_R, 1.0), Asymmetric(0.9, -0.7), Asymmetric(0.6, 1 / 0.6)):
        worst = max(worst, np.max(np.abs(mgf(z, spec) - g_measure(1 / z, spec) / z)))
    return Criterion(11, "M(z) = G(1/z)/z", worst < 1e-12, f"max diff {worst:.2e} (<1e-12)")


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
]


def run_all(stream=None) -> list[Criterion]:
    results = []
    for fn in CRITERIA:
        res = fn()
        results.append(res)
        if stream is not None:
            print(res.line(), file=stream, flush=True)
    return results
