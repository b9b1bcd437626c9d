import math

import mpmath
import numpy as np
import pytest
from scipy import optimize

from chebtau.asymptotics import bessel_at_next_zero, convergence_table, tau_double_star, tau_star
from chebtau.closed_forms import gap_limit
from chebtau.extrema import tau


def first_root(f, lo, hi):
    return optimize.brentq(f, lo, hi, xtol=1e-15, rtol=1e-15)


def tau_star_1_oracle():
    # nu = 1/2: the limit profile is sin x / x, stationary where tan x = x
    j = first_root(lambda x: math.sin(x) - x * math.cos(x), 4.0, 4.6)
    return abs(math.sin(j) / j)


def tau_star_2_oracle():
    # nu = 3/2: profile 3 (sin x - x cos x) / x^3, stationary at the first zero of j_2
    j = first_root(lambda x: (3 - x * x) * math.sin(x) - 3 * x * math.cos(x), 5.0, 6.0)
    return abs(3 * (math.sin(j) - j * math.cos(j)) / j**3)


def test_tau_star_one():
    assert tau_star(1).exact == pytest.approx(0.217234, abs=1e-5)
    assert tau_star(1).exact == pytest.approx(tau_star_1_oracle(), rel=1e-13)


def test_tau_star_two():
    assert tau_star(2).exact == pytest.approx(tau_star_2_oracle(), rel=1e-12)


@pytest.mark.parametrize("k", [3, 10, 57])
def test_tau_star_against_mpmath(k):
    nu = k - 0.5
    with mpmath.workdps(40):
        j = mpmath.besseljzero(nu + 1, 1)
        ref = mpmath.gamma(nu + 1) * (j / 2) ** (-nu) * abs(mpmath.besselj(nu, j))
    assert tau_star(k).exact == pytest.approx(float(ref), rel=1e-13)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_finite_values_decrease_to_limit(k):
    rows = convergence_table("tau_star", k, [10, 50, 250, 1000])
    gaps = [r.gap for r in rows]
    assert all(g > 0 for g in gaps)
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    # the approach is O(1/n^2)
    assert gaps[-1] * 1000**2 == pytest.approx(gaps[-2] * 250**2, rel=0.05)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_double_star_matches_gap_limits(m):
    assert tau_double_star(m).exact == pytest.approx(gap_limit(m), rel=1e-10)


def test_double_star_small_exact():
    assert tau_double_star(2).exact == pytest.approx(0.5, abs=1e-10)
    assert tau_double_star(3).exact == pytest.approx(math.sqrt(2) / 2, abs=1e-10)


def test_double_star_against_mpmath():
    m = 12
    with mpmath.workdps(40):
        roots = np.polynomial.hermite.hermroots([0] * (m - 1) + [1])
        x = mpmath.findroot(lambda t: mpmath.hermite(m - 1, t), max(roots))
        ref = abs(mpmath.hermite(m, x)) / 2**m
    assert tau_double_star(m).exact == pytest.approx(float(ref), rel=1e-13)


def test_double_star_convergence_gap_two():
    rows = convergence_table("tau_double_star", 2, [10, 40, 160])
    for r in rows:
        assert r.finite == pytest.approx(r.n / (2 * r.n - 3), rel=1e-12)
    assert rows[0].gap > rows[1].gap > rows[2].gap > 0


@pytest.mark.parametrize("m", [3, 5])
def test_double_star_is_limit_of_scaled_values(m):
    n = 4000
    scaled = n ** (m / 2) * tau(n, n - m).value
    assert scaled == pytest.approx(tau_double_star(m).exact, rel=5e-3)


def test_asymptotic_ratio_bands():
    r400 = tau_star(400).ratio
    r1000 = tau_double_star(1000).ratio
    assert abs(r400 - 1) <= 0.15
    assert abs(r1000 - 1) <= 0.15


def test_ratios_drift_towards_one():
    star = [tau_star(k).ratio for k in (10, 50, 200)]
    dstar = [tau_double_star(m).ratio for m in (10, 100, 1000)]
    assert all(b < a for a, b in zip(star, star[1:]))
    assert all(b < a for a, b in zip(dstar, dstar[1:]))
    assert all(r > 1 for r in star + dstar)


def test_large_double_star_is_finite_in_log_domain():
    v = tau_double_star(10_000)
    assert math.isfinite(v.log_exact) and v.log_exact > 700  # too big for a float
    assert abs(v.ratio - 1) < 0.1


def test_bessel_airy_approximation():
    scaled = []
    for nu in (10.0, 20.0, 40.0, 80.0, 160.0):
        value, approx = bessel_at_next_zero(nu)
        assert value < 0 and approx < 0
        scaled.append(nu * abs(value - approx))
    assert max(scaled) < 1.0
    assert all(b < a for a, b in zip(scaled, scaled[1:]))


def test_domain_errors():
    for bad in (0, 401, 2.5):
        with pytest.raises(ValueError):
            tau_star(bad)
    for bad in (1, 10_001):
        with pytest.raises(ValueError):
            tau_double_star(bad)
    with pytest.raises(ValueError):
        convergence_table("other", 1, [10])
