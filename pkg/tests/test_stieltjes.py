import numpy as np
import pytest
from scipy import integrate

from qwortho.acceptance import FIXTURES, GENERAL_FAMILIES
from qwortho.density import Asymmetric, GeneralJacobi, Symmetric, density_k, density_mu
from qwortho.errors import InversionError
from qwortho.jacobi import jacobi_asym, jacobi_general, jacobi_symmetric
from qwortho.moments import moment_asym, moment_sequence
from qwortho.stieltjes import (
    a_function,
    asymptotic_check,
    branch_sqrt,
    cf_eval,
    g_asym,
    g_general,
    g_general_asym,
    g_general_closed,
    g_measure,
    g_quadrature,
    g_symmetric,
    invert,
    rho_closed,
    rho_quadrature,
)

H = 1 / np.sqrt(2)


def upper(rng, count=40, re=(-2, 2), im=(1e-3, 3)):
    return rng.uniform(*re, count) + 1j * rng.uniform(*im, count)


def test_branch_sqrt_sheet():
    z = np.array([-3 + 0.1j, 3 + 0.1j, 0.2 + 1j, -0.2 + 1j])
    w = branch_sqrt(z, 1.0)
    np.testing.assert_allclose(w * w, z * z - 1, atol=1e-14)
    assert np.all(w.imag > 0)


def test_a_function_solves_quadratic(rng):
    z = upper(rng)
    for p in (0.1, 0.25, 2.0):
        A = a_function(z, p)
        np.testing.assert_allclose(p * A * A - z * A + 1, 0, atol=1e-12)


def test_a_function_decays_like_inverse():
    assert abs(a_function(1e6j, 0.3) * 1e6j - 1) < 1e-10


def test_a_function_real_value():
    # p = 1/4, z = 2: (2 - sqrt 3) / (1/2)
    assert a_function(2.0, 0.25).real == pytest.approx(2 * (2 - np.sqrt(3)), abs=1e-15)


def test_a_function_rejects_bad_p():
    with pytest.raises(ValueError):
        a_function(1j, 0.0)


def test_g_symmetric_real_axis_matches_quadrature():
    assert g_symmetric(2.0, H).real == pytest.approx(g_quadrature(2.0, Symmetric(H)).real, abs=1e-12)


def test_g_symmetric_decays_like_inverse():
    z = 1e6j
    assert abs(z * g_symmetric(z, H) - 1) < 1e-10


@pytest.mark.parametrize(
    "G",
    [
        lambda z: g_symmetric(z, H),
        lambda z: g_asym(z, 0.6, 1 / 0.6),
        lambda z: g_asym(z, 0.9, -0.8),
        lambda z: a_function(z, 0.4),
        lambda z: g_general(z, GENERAL_FAMILIES["rho3"]),
        lambda z: g_general_asym(z, GENERAL_FAMILIES["rho2asym"]),
    ],
)
def test_nevanlinna_property(G, rng):
    z = upper(rng, 100, re=(-3, 3), im=(1e-6, 5))
    assert np.all(G(z).imag < 0)


def test_g_asym_reduces_at_c_zero(rng):
    z = upper(rng)
    np.testing.assert_array_equal(g_asym(z, 0.7, 0.0), g_symmetric(z, 0.7))


def test_g_asym_reflection(rng):
    z = upper(rng)
    lhs = g_asym(z, 0.8, -0.9)
    rhs = -g_asym(-z, 0.8, 0.9)
    np.testing.assert_allclose(lhs, rhs, atol=1e-14)


@pytest.mark.parametrize("r,c", [(H, 0.0), (H, 1.0), (0.6, -1 / 0.6), (0.3, 0.0)])
def test_g_asym_vs_quadrature(r, c, rng):
    z = upper(rng, 10, im=(0.3, 2))
    np.testing.assert_allclose(g_asym(z, r, c), g_quadrature(z, Asymmetric(r, c)), atol=1e-10)


def test_g_rejects_cut_and_poles():
    with pytest.raises(ValueError):
        g_symmetric(0.3, H)
    with pytest.raises(ValueError):
        g_symmetric(1.0 + 1e-12j, H)


def test_cf_converges_to_closed_form(rng):
    z = upper(rng, 20, im=(0.2, 2))
    np.testing.assert_allclose(cf_eval(z, jacobi_symmetric(H), 60), g_symmetric(z, H), atol=1e-10)


@pytest.mark.parametrize("r,c", [(H, 0.0), (H, 1.0), (H, -1.0), (0.6, 1 / 0.6)])
def test_cf_closure_is_exact(r, c, rng):
    seq = jacobi_asym(r, c)
    z = upper(rng, 20, im=(1e-3, 2))
    for depth in (seq.head_length, seq.head_length + 1, 7):
        np.testing.assert_allclose(cf_eval(z, seq, max(depth, 1), closure=True), g_asym(z, r, c), atol=1e-13)


def test_cf_closure_needs_head():
    with pytest.raises(ValueError):
        cf_eval(1j, jacobi_symmetric(H), 1, closure=True)


def test_general_single_head_equal_to_tail_is_a(rng):
    z = upper(rng)
    np.testing.assert_allclose(g_general(z, GeneralJacobi((0.7,), 0.7)), a_function(z, 0.7), atol=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_general_recursion_vs_closed(n, rng):
    for _ in range(10):
        p = rng.uniform(0.1, 3.0, 4)
        spec = GeneralJacobi(tuple(p[:n]), p[3])
        z = upper(rng, 20, re=(-3, 3))
        np.testing.assert_allclose(g_general(z, spec), g_general_closed(z, spec), atol=1e-12)


@pytest.mark.parametrize("label", sorted(GENERAL_FAMILIES))
def test_general_vs_continued_fraction(label, rng):
    spec = GENERAL_FAMILIES[label]
    z = upper(rng, 20, im=(0.3, 2))
    np.testing.assert_allclose(cf_eval(z, jacobi_general(spec), 80), g_measure(z, spec), atol=1e-9)


def test_general_walk_head_reproduces_k(rng):
    s = np.sqrt(1 - H * H)
    spec = GeneralJacobi((1 - s, s * (1 - s) / 2), H * H / 4)
    z = upper(rng, 20, im=(0.1, 2))
    np.testing.assert_allclose(g_general(z, spec), g_symmetric(z, H), atol=1e-13)


def test_general_asym_reduces_to_symmetric(rng):
    z = upper(rng)
    a = g_general_asym(z, GeneralJacobi((1.0, 0.5), 0.8, 0.0, 0.0))
    np.testing.assert_allclose(a, g_general(z, GeneralJacobi((1.0, 0.5), 0.8)), atol=1e-14)


def test_general_asym_shift(rng):
    # shifting every beta by d shifts the measure by d
    z = upper(rng)
    d = 0.35
    base = g_general_asym(z, GeneralJacobi((1.0, 0.6), 0.8, 0.1, -0.2))
    moved = g_general_asym(z + d, GeneralJacobi((1.0, 0.6), 0.8, 0.1 + d, -0.2 + d))
    np.testing.assert_allclose(moved, base, atol=1e-13)


def test_general_closed_rejects_long_heads():
    with pytest.raises(ValueError):
        g_general_closed(1j, GeneralJacobi((1.0, 1.0, 1.0, 1.0), 1.0))
    with pytest.raises(ValueError):
        g_general(1j, GeneralJacobi((1.0, 0.5), 0.8, 0.2, 0.0))


def test_invert_symmetric_at_origin():
    assert invert(lambda z: g_symmetric(z, H), 0.0) == pytest.approx(1 / np.pi, abs=1e-8)


@pytest.mark.parametrize("c", [0.0, 0.5, 1.0, 1 / H, -1.2])
def test_invert_matches_density(c):
    spec = Asymmetric(H, c)
    for x in np.linspace(-0.65, 0.65, 14):
        assert invert(lambda z: g_measure(z, spec), x, support=(-H, H)) == pytest.approx(density_mu(x, spec), abs=1e-6)


def test_invert_outside_support_is_zero():
    assert invert(lambda z: g_symmetric(z, H), 0.85) == pytest.approx(0.0, abs=1e-8)


def test_invert_exclusion_zone():
    with pytest.raises(ValueError):
        invert(lambda z: g_symmetric(z, H), H - 0.01, support=(-H, H))


def test_invert_unsettled_raises():
    # a pole sitting at eps-scale distance below the axis cannot be extrapolated away
    with pytest.raises(InversionError):
        invert(lambda z: 1 / (z - 0.1 + 2e-4j), 0.1)


def test_arcsine_value_at_origin():
    spec = GeneralJacobi((2.0,), 1.0)
    assert rho_closed(1, spec, 0.0) == pytest.approx(1 / (2 * np.pi), abs=1e-15)
    assert invert(lambda z: g_measure(z, spec), 0.0) == pytest.approx(1 / (2 * np.pi), abs=1e-8)


def test_rho2_walk_head_equals_k():
    s = np.sqrt(1 - H * H)
    spec = GeneralJacobi((1 - s, s * (1 - s) / 2), H * H / 4)
    x = np.linspace(-0.95 * H, 0.95 * H, 41)
    np.testing.assert_allclose(rho_closed(2, spec, x), density_k(x, H), atol=1e-10)


def test_rho2asym_reduces():
    x = np.linspace(-1.7, 1.7, 31)
    np.testing.assert_allclose(
        rho_closed("2asym", GeneralJacobi((1.0, 0.5), 0.8, 0.0, 0.0), x),
        rho_closed(2, GeneralJacobi((1.0, 0.5), 0.8), x),
        atol=1e-15,
    )


def test_rho_rejects_mismatched_head():
    with pytest.raises(ValueError):
        rho_closed(3, GeneralJacobi((1.0, 0.5), 0.8), 0.0)
    with pytest.raises(ValueError):
        rho_closed(2, GeneralJacobi((1.0, 0.5), 0.8, 0.1, 0.0), 0.0)
    with pytest.raises(ValueError):
        rho_closed(4, GeneralJacobi((1.0, 0.5), 0.8), 0.0)


@pytest.mark.parametrize("label", sorted(GENERAL_FAMILIES))
def test_rho_vs_inversion(label):
    spec = GENERAL_FAMILIES[label]
    kind = "2asym" if label == "rho2asym" else spec.n
    lo, hi = spec.support
    for x in np.linspace(lo, hi, 23)[2:-2]:
        assert invert(lambda z: g_measure(z, spec), x) == pytest.approx(rho_closed(kind, spec, x), abs=1e-6)


def test_rho3_constant_term_must_be_p0p2():
    # with p0^2 p1^2 in place of p0^2 p2^2 the density at 0 is off unless p1 = p2
    spec = GENERAL_FAMILIES["rho3"]
    p0, p1, p2 = spec.head_gammas
    p = spec.tail_gamma
    truth = invert(lambda z: g_measure(z, spec), 0.0)
    alt = p0 * p1 * p2 * 2 * np.sqrt(p) / (2 * np.pi * p0**2 * p1**2)
    assert rho_closed(3, spec, 0.0) == pytest.approx(truth, abs=1e-8)
    assert abs(alt - truth) > 0.1


@pytest.mark.parametrize("label", sorted(GENERAL_FAMILIES))
def test_rho_total_mass_families(label):
    assert rho_quadrature(np.ones_like, GENERAL_FAMILIES[label]) == pytest.approx(1.0, abs=1e-8)


def test_rho_total_mass_at_most_one(rng):
    # point masses can only take mass away from the continuous part.  Near-resonant
    # draws give sharp peaks that a fixed 200-node rule under-resolves, so use QUADPACK.
    full = 0
    for _ in range(30):
        p = rng.uniform(0.1, 3.0, 4)
        for n in (1, 2, 3):
            spec = GeneralJacobi(tuple(p[:n]), p[3])
            h = 2 * np.sqrt(p[3])
            mass, _ = integrate.quad(lambda x: rho_closed(n, spec, x), -h, h, limit=500, epsabs=1e-13)
            assert mass <= 1 + 1e-9
            full += mass > 1 - 1e-9
    assert full > 0


def test_rho_moments_match_cf_expansion():
    spec = GENERAL_FAMILIES["rho2"]
    seq = jacobi_general(spec)
    # s_1 = beta_0 = 0, s_2 = gamma_0
    assert rho_quadrature(lambda x: x, spec) == pytest.approx(0.0, abs=1e-12)
    assert rho_quadrature(lambda x: x * x, spec) == pytest.approx(seq.gamma(0), abs=1e-10)


def test_asymptotic_check_fixture():
    moments = moment_sequence(9, Symmetric(H))
    val = asymptotic_check(lambda z: g_symmetric(z, H), moments, 8)
    assert val == pytest.approx(FIXTURES["asymptotic_m8_observed"], rel=1e-3)
    assert val < FIXTURES["asymptotic_m8_bound"]


def test_asymptotic_check_low_order():
    moments = [moment_asym(m, 0.6, 1.0) for m in range(3)]
    assert asymptotic_check(lambda z: g_asym(z, 0.6, 1.0), moments, 0) < 1.0
    assert asymptotic_check(lambda z: g_asym(z, 0.6, 1.0), moments, 2) < 1.0


def test_asymptotic_check_detects_wrong_moment():
    moments = moment_sequence(9, Symmetric(H)).copy()
    moments[6] += 1e-3
    # the error enters as 1e-3 y^3, i.e. ~1e3 at y = 100
    assert asymptotic_check(lambda z: g_symmetric(z, H), moments, 8) > 1e2
