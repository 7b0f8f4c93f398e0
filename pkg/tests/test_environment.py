import json
import math

import numpy as np
import pytest

from trapmc.environment import (
    Environment,
    JumpField,
    alpha_hat,
    c_hat,
    is_interrupted,
    normalizer_cn,
    pareto_from_uniform,
    sample_pareto_env,
    sample_stable_jumps,
    tail_time_mass,
)
from trapmc.seeds import mix64

# ---------------------------------------------------------------------------
# Pareto landscape


def test_pareto_inverse_transform():
    # tail probability u = 0.25 at alpha = 0.5 maps to 0.25**(-2) = 16
    assert pareto_from_uniform(0.25, 0.5) == pytest.approx(16.0, rel=1e-12)


def test_single_site_tail():
    # P(tau > 4) = 0.5 at alpha = 0.5: check over many single-site draws
    hits = sum(
        sample_pareto_env(1, 0.5, 0.0, seed=mix64(11, i)).tau[0] > 4.0
        for i in range(4000)
    )
    se = math.sqrt(0.25 / 4000)
    assert abs(hits / 4000 - 0.5) < 4 * se


def test_empirical_tail_large_sample():
    env = sample_pareto_env(10**5, 0.5, 0.0, seed=101)
    assert env.tau.min() >= 1.0
    for t in (2.0, 10.0, 100.0):
        p = t**-0.5
        se = math.sqrt(p * (1.0 - p) / env.n)
        assert abs((env.tau > t).mean() - p) < 4 * se


def test_sampling_deterministic():
    a = sample_pareto_env(100, 0.3, 0.5, seed=7)
    b = sample_pareto_env(100, 0.3, 0.5, seed=7)
    np.testing.assert_array_equal(a.tau, b.tau)


def test_env_validation():
    with pytest.raises(ValueError):
        sample_pareto_env(0, 0.5, 0.0, seed=1)
    with pytest.raises(ValueError):
        sample_pareto_env(10, 1.5, 0.0, seed=1)
    with pytest.raises(ValueError):
        Environment(n=2, alpha=0.5, a=0.0, tau=np.array([0.5, 2.0]), c_n=1.0)


def test_env_json_roundtrip():
    env = sample_pareto_env(20, 0.4, 0.25, seed=3)
    other = Environment.from_json(env.to_json())
    np.testing.assert_array_equal(env.tau, other.tau)
    assert (other.n, other.alpha, other.a, other.c_n) == (
        env.n,
        env.alpha,
        env.a,
        env.c_n,
    )
    # field names follow the type definition
    assert sorted(json.loads(env.to_json())) == ["a", "alpha", "c_n", "n", "tau"]


# ---------------------------------------------------------------------------
# normalizer


def _cn_bisection(n, alpha):
    # independent oracle: invert inf{t >= 0 : t**(-alpha) <= 1/n} by bisection
    lo, hi = 1.0, 1.0
    while hi**-alpha > 1.0 / n:
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid**-alpha <= 1.0 / n:
            hi = mid
        else:
            lo = mid
    return 1.0 / hi


def test_normalizer_trivial():
    assert normalizer_cn(1, 0.5) == 1.0
    assert normalizer_cn(1, 0.123) == 1.0


@pytest.mark.parametrize("n,alpha", [(16, 0.5), (10**4, 0.5), (1000, 0.3)])
def test_normalizer_vs_bisection(n, alpha):
    assert normalizer_cn(n, alpha) == pytest.approx(_cn_bisection(n, alpha), rel=1e-9)


def test_normalizer_values():
    assert normalizer_cn(16, 0.5) == pytest.approx(1.0 / 256.0, rel=1e-12)
    assert normalizer_cn(10**4, 0.5) == pytest.approx(1e-8, rel=1e-12)


def test_normalizer_quantile_product():
    # c_n times the 1/n tail quantile is exactly 1
    for n, alpha in [(10, 0.5), (1000, 0.8), (7, 0.21)]:
        quantile = (1.0 / n) ** (-1.0 / alpha)
        assert normalizer_cn(n, alpha) * quantile == pytest.approx(1.0, rel=1e-12)


# ---------------------------------------------------------------------------
# stable jump fields


def test_empty_field():
    field = sample_stable_jumps(0.5, 1.0, 0, seed=1)
    assert len(field) == 0
    assert field.total_mass() == 0.0
    assert field.tail_mass == 0.0


def test_sizes_strictly_decreasing():
    for i in range(50):
        field = sample_stable_jumps(0.7, 2.0, 100, seed=mix64(5, i))
        assert np.all(np.diff(field.sizes) < 0.0)
        assert field.locations.min() >= 0.0 and field.locations.max() <= 2.0


def test_mean_count_above_threshold():
    # E #{jumps > delta} = window * scale * delta**(-alpha_eff)
    delta, alpha_eff = 0.01, 0.5
    counts = [
        (sample_stable_jumps(alpha_eff, 1.0, 400, seed=mix64(21, i)).sizes > delta).sum()
        for i in range(10**4)
    ]
    expected = delta**-alpha_eff
    se = math.sqrt(expected / len(counts))  # Poisson counts
    assert abs(np.mean(counts) - expected) < 4 * se


def test_largest_jump_law():
    # P(J_1 <= x) = exp(-window * scale * x**(-alpha_eff))
    window, scale, alpha_eff = 2.0, 1.5, 0.4
    j1 = np.array(
        [
            sample_stable_jumps(alpha_eff, window, 1, scale, seed=mix64(31, i)).sizes[0]
            for i in range(4000)
        ]
    )
    for x in (5.0, 50.0, 500.0):
        p = math.exp(-window * scale * x**-alpha_eff)
        se = math.sqrt(p * (1.0 - p) / j1.size)
        assert abs((j1 <= x).mean() - p) < 4 * se


def test_jump_field_json_roundtrip():
    field = sample_stable_jumps(0.5, 1.0, 30, 2.0, seed=9)
    other = JumpField.from_json(field.to_json())
    np.testing.assert_array_equal(field.sizes, other.sizes)
    np.testing.assert_array_equal(field.locations, other.locations)
    assert other.scale == field.scale and other.tail_mass == field.tail_mass


def test_subordinator_laplace_exponent():
    # E exp(-lam * S_r) = exp(-r * scale * Gamma(1-alpha) * lam**alpha)
    alpha_eff, r, scale, lam = 0.5, 0.3, 1.2, 1.7
    vals = np.array(
        [
            math.exp(
                -lam
                * sample_stable_jumps(alpha_eff, r, 3000, scale, mix64(41, i)).total_mass()
            )
            for i in range(3000)
        ]
    )
    expected = math.exp(-r * scale * math.gamma(1.0 - alpha_eff) * lam**alpha_eff)
    se = vals.std(ddof=1) / math.sqrt(vals.size)
    assert abs(vals.mean() - expected) < 4 * se


# ---------------------------------------------------------------------------
# tail_time_mass


def test_tail_time_mass_value():
    assert tail_time_mass(0.5, 100, 1.0, 1.0) == pytest.approx(0.01, rel=1e-12)


def test_tail_time_mass_monotone():
    vals = [tail_time_mass(0.5, m) for m in (10, 100, 1000, 10000)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    grows = [tail_time_mass(0.5, 100, w, 1.0) for w in (0.5, 1.0, 4.0)]
    assert all(b > a for a, b in zip(grows, grows[1:]))
    assert tail_time_mass(0.5, 100, 1.0, 3.0) > tail_time_mass(0.5, 100, 1.0, 1.0)


def test_tail_time_mass_brute_force():
    # Monte Carlo of the discarded series tail confirms the approximation
    alpha_eff, m = 0.5, 100
    rng = np.random.default_rng(2718)
    total = 0.0
    reps = 400
    for _ in range(reps):
        arrivals = np.cumsum(rng.standard_exponential(50 * m))
        total += (arrivals[m:] ** (-1.0 / alpha_eff)).sum()
    mc = total / reps
    assert tail_time_mass(alpha_eff, m) == pytest.approx(mc, rel=0.25)


def test_tail_time_mass_window_scaling():
    # brute-force check of the (scale*window)**(1/alpha) prefactor
    a1 = tail_time_mass(0.5, 100, 1.0, 1.0)
    a4 = tail_time_mass(0.5, 100, 4.0, 1.0)
    assert a4 / a1 == pytest.approx(16.0, rel=1e-12)


def test_tail_time_mass_validation():
    with pytest.raises(ValueError):
        tail_time_mass(1.0, 10)
    with pytest.raises(ValueError):
        tail_time_mass(0.5, 0)


# ---------------------------------------------------------------------------
# limit constants


def test_alpha_hat_values():
    assert alpha_hat(0.37, 0.0) == 0.37
    assert alpha_hat(0.6, 0.2) == pytest.approx(0.5, rel=1e-12)
    assert alpha_hat(0.4, 0.4) == 0.0
    assert is_interrupted(0.4, 0.4)
    assert is_interrupted(0.4, 0.6)
    assert not is_interrupted(0.5, 0.2)


def test_alpha_hat_rejects_a_one():
    with pytest.raises(ValueError):
        alpha_hat(0.5, 1.0)


def _c_hat_closed_form(alpha, a):
    # alpha * int (1-e^{-x^{1-a}}) x^{-(1+alpha-a)} dx = alpha/(alpha-a) * Gamma(1-ahat)
    ahat = (alpha - a) / (1.0 - a)
    return alpha / (alpha - a) * math.gamma(1.0 - ahat)


def _c_hat_composite(alpha, a, points=10**6):
    # independent fixed-grid oracle on two smooth transformed pieces:
    # with u = x**(1-a) the integral is alpha/(1-a) * int_0^inf (1-e^-u) u^(-1-ahat) du;
    # split at u=1, substitute u = y**(1/(1-ahat)) below and u = 1/w above.
    ahat = (alpha - a) / (1.0 - a)
    y = np.linspace(0.0, 1.0, points + 1)
    power = 1.0 / (1.0 - ahat)
    u = y**power
    g = np.where(u > 0.0, -np.expm1(-u) / np.where(u > 0.0, u, 1.0), 1.0)
    head = np.trapz(g, y) / (1.0 - ahat)
    w = np.linspace(0.0, 1.0, points + 1)
    with np.errstate(divide="ignore", over="ignore"):
        decay = np.where(w > 0.0, np.exp(-1.0 / np.where(w > 0.0, w, 1.0)), 0.0)
    tail = 1.0 / ahat - np.trapz(decay * w ** (ahat - 1.0), w)
    return alpha / (1.0 - a) * (head + tail)


def test_c_hat_gamma_identity():
    assert c_hat(0.5, 0.0) == pytest.approx(math.sqrt(math.pi), rel=1e-7)
    assert c_hat(0.3, 0.0) == pytest.approx(math.gamma(0.7), rel=1e-7)
    for alpha in (0.2, 0.5, 0.8):
        assert c_hat(alpha, 0.0) == pytest.approx(math.gamma(1.0 - alpha), rel=1e-7)


def test_c_hat_dual_quadrature():
    for alpha, a in [(0.6, 0.2), (0.5, 0.1), (0.8, 0.3)]:
        adaptive = c_hat(alpha, a)
        assert adaptive == pytest.approx(_c_hat_composite(alpha, a), rel=1e-8)
        assert adaptive == pytest.approx(_c_hat_closed_form(alpha, a), rel=1e-8)


def test_c_hat_rejects_degenerate():
    with pytest.raises(ValueError):
        c_hat(0.4, 0.4)
    with pytest.raises(ValueError):
        c_hat(0.4, 0.6)
