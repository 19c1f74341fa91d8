import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubediam.coupon import (
    EULER_GAMMA,
    CouponError,
    collector_stats,
    completion_probability,
    coverings_stddev,
    expected_coverings,
    expected_distinct,
    expected_unseen,
    harmonic,
    simulate_collector,
    simulate_distinct,
)

N2 = 3_674_160


def _harmonic_exact(n):
    return sum(Fraction(1, k) for k in range(1, n + 1))


@pytest.mark.parametrize("n", [1, 2, 3, 10, 100, 1000])
def test_harmonic_against_fractions(n):
    assert harmonic(n) == pytest.approx(float(_harmonic_exact(n)), rel=1e-14)


def test_small_exact_values():
    assert expected_coverings(1, "exact") == 1.0
    assert expected_coverings(2, "exact") == 3.0
    assert coverings_stddev(1, "exact") == 0.0
    # Var T_2 = 2 (geometric with p = 1/2 plus one)
    assert coverings_stddev(2, "exact") == pytest.approx(math.sqrt(2))
    # exact variance oracle: sum of geometric variances
    n = 30
    var = sum(Fraction(n * (k - 1), (n - k + 1) ** 2) for k in range(1, n + 1))
    assert coverings_stddev(n, "exact") == pytest.approx(math.sqrt(float(var)), rel=1e-12)


def test_gamma_digits():
    assert EULER_GAMMA == pytest.approx(0.5772156649015329, abs=1e-16)


def test_two_by_two_asymptotics():
    st_ = collector_stats(N2)
    assert st_.expected_over_n == pytest.approx(15.69, abs=0.005)
    assert st_.stddev_over_n == pytest.approx(1.28, abs=0.005)


@pytest.mark.parametrize("N", [10**6, 10**7, 10**9])
def test_exact_and_asymptotic_agree(N):
    a = expected_coverings(N, "asymptotic")
    e = expected_coverings(N, "exact")
    assert abs(a - e) / e < 1e-4
    assert expected_coverings(N, "asymptotic", correction=True) - a == 0.5


@pytest.mark.parametrize("N", [10**4, 10**6, 4.3e19, 2.83e74])
def test_stddev_near_pi_over_root_six(N):
    assert coverings_stddev(N) / N == pytest.approx(math.pi / math.sqrt(6), rel=0.01)
    assert coverings_stddev(N) / N == pytest.approx(1.28, rel=0.01)


def test_unseen_examples():
    assert expected_unseen(N2, 14.892 * N2) == pytest.approx(1.3, rel=0.05)
    assert expected_unseen(N2, 20.816 * N2) == pytest.approx(0.00335, rel=0.01)
    assert expected_unseen(N2, 0) == pytest.approx(N2)


def test_completion_half_point():
    for N in (100, N2, 4.3e19):
        T = N * math.log(N) - N * math.log(math.log(2))
        assert completion_probability(N, T) == pytest.approx(0.5, abs=1e-12)


@settings(max_examples=100)
@given(st.floats(1.0, 1e60), st.floats(0, 200), st.floats(0, 50))
def test_completion_monotone(N, a, b):
    t1, t2 = sorted((a * N, a * N + b * N))
    assert completion_probability(N, t1) <= completion_probability(N, t2)
    assert 0.0 <= completion_probability(N, t1) <= 1.0


@settings(max_examples=100)
@given(st.integers(1, 10**6), st.integers(0, 10**7))
def test_distinct_bounds(N, n):
    d = expected_distinct(N, n)
    assert 0 <= d <= min(N, n) + 1e-9 * N
    assert expected_distinct(N, n, "asymptotic") == pytest.approx(d, rel=1e-3, abs=1.0)


def test_distinct_exact_small():
    # N=2, n=2: distinct is 1 or 2 with equal chance
    assert expected_distinct(2, 2) == pytest.approx(1.5)
    assert expected_distinct(1, 5) == 1.0
    assert expected_distinct(5, 0) == 0.0


def test_errors():
    with pytest.raises(CouponError):
        expected_coverings(0)
    with pytest.raises(CouponError):
        expected_coverings(2.5, "exact")
    with pytest.raises(CouponError):
        expected_coverings(10, "median")
    with pytest.raises(CouponError):
        simulate_collector(10**5, 10**4, seed=0)
    with pytest.raises(CouponError):
        completion_probability(10, -1)


# Monte Carlo oracles -----------------------------------------------------

def test_simulation_trivial_population():
    res = simulate_collector(1, 1000, seed=1)
    assert res.mean == 1.0 and res.stddev == 0.0


@pytest.mark.parametrize(("N", "trials"), [(2, 100_000), (10, 50_000), (100, 10_000)])
def test_simulated_mean_matches_harmonic(N, trials):
    res = simulate_collector(N, trials, seed=N)
    exact = float(N * _harmonic_exact(N))
    assert abs(res.mean - exact) < 3 * res.stderr
    # the spread agrees with the exact variance to a few percent
    assert res.stddev == pytest.approx(coverings_stddev(N, "exact"), rel=0.05)


def test_simulation_reproducible():
    a = simulate_collector(10, 500, seed=42)
    b = simulate_collector(10, 500, seed=42)
    assert a == b


@pytest.mark.parametrize(("N", "n"), [(5, 3), (5, 12), (10, 10), (10, 25), (100, 50), (100, 400)])
def test_expected_distinct_matches_simulation(N, n):
    res = simulate_distinct(N, n, 100_000, seed=N * 1000 + n)
    assert abs(res.mean - expected_distinct(N, n)) < 3 * res.stderr
