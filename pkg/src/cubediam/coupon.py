"""Coupon-collector statistics and a Monte Carlo oracle for them.

``T_N`` is the number of uniform draws from ``N`` items needed to see every
item at least once. Populations may be astronomically large (1e74), so the
asymptotic forms take real ``N`` and work through ``log N``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

EULER_GAMMA = 0.57721566490153286061
EXACT_SUM_LIMIT = 10**8
SIMULATION_BUDGET = 10**8
MODES = ("exact", "asymptotic")

_CHUNK = 1 << 22


class CouponError(ValueError):
    pass


def _check(N, mode: str) -> None:
    if mode not in MODES:
        raise CouponError(f"mode must be one of {MODES}, got {mode!r}")
    if not N >= 1:
        raise CouponError(f"population size must be >= 1, got {N}")
    if mode == "exact" and int(N) != N:
        raise CouponError("exact mode needs an integer population")


def _inverse_power_sum(N: int, p: int) -> float:
    """sum(k**-p for k in 1..N), smallest terms first."""
    total = 0.0
    for hi in range(N, 0, -_CHUNK):
        lo = max(hi - _CHUNK, 0)
        k = np.arange(hi, lo, -1, dtype=np.float64)
        total += float(np.sum(k**-p))
    return total


def harmonic(N: int) -> float:
    if N <= EXACT_SUM_LIMIT:
        return _inverse_power_sum(N, 1)
    return math.log(N) + EULER_GAMMA + 1 / (2 * N) - 1 / (12 * N * N)


def _inverse_square_sum(N: int) -> float:
    if N <= EXACT_SUM_LIMIT:
        return _inverse_power_sum(N, 2)
    return math.pi**2 / 6 - 1 / N + 1 / (2 * N * N)


def expected_coverings(N, mode: str = "asymptotic", correction: bool = False) -> float:
    """E[T_N]: exact ``N * H_N`` or ``N ln N + gamma N`` (plus ``1/2`` with ``correction``)."""
    _check(N, mode)
    if mode == "exact":
        return int(N) * harmonic(int(N))
    return N * math.log(N) + EULER_GAMMA * N + (0.5 if correction else 0.0)


def coverings_stddev(N, mode: str = "asymptotic") -> float:
    _check(N, mode)
    if mode == "exact":
        n = int(N)
        var = n * n * _inverse_square_sum(n) - n * harmonic(n)
    else:
        var = math.pi**2 * N * N / 6 - N * math.log(N) - EULER_GAMMA * N
    if var < 0:
        if var > -1e-9 * max(1.0, float(N)) ** 2:
            return 0.0
        raise CouponError(f"negative variance {var} for N={N}")
    return math.sqrt(var)


@dataclass(frozen=True)
class CollectorStats:
    N: float
    expected: float
    stddev: float
    mode: str

    @property
    def expected_over_n(self) -> float:
        return self.expected / self.N

    @property
    def stddev_over_n(self) -> float:
        return self.stddev / self.N


def collector_stats(N, mode: str = "asymptotic") -> CollectorStats:
    return CollectorStats(N, expected_coverings(N, mode), coverings_stddev(N, mode), mode)


def _unseen_scaled(log_n: float, draws_over_n: float) -> float:
    return math.exp(log_n - draws_over_n)


def completion_probability(N, T) -> float:
    """Pr(T_N <= T) ~ exp(-N exp(-T/N)), the asymptotic law for full coverage."""
    if N < 1 or T < 0:
        raise CouponError("need N >= 1 and T >= 0")
    return completion_probability_scaled(N, T / N)


def completion_probability_scaled(N, draws_over_n: float) -> float:
    exponent = _unseen_scaled(math.log(N), draws_over_n)
    return math.exp(-exponent)


def expected_unseen(N, T) -> float:
    """N exp(-T/N): items expected to be missing after T draws."""
    if N < 1 or T < 0:
        raise CouponError("need N >= 1 and T >= 0")
    return _unseen_scaled(math.log(N), T / N)


def expected_unseen_scaled(N, draws_over_n: float) -> float:
    return _unseen_scaled(math.log(N), draws_over_n)


def expected_distinct(N, n, mode: str = "exact") -> float:
    """Distinct items expected among ``n`` uniform draws from ``N``."""
    if mode not in MODES:
        raise CouponError(f"mode must be one of {MODES}, got {mode!r}")
    if N < 1 or n < 0:
        raise CouponError("need N >= 1 and n >= 0")
    if n == 0:
        return 0.0
    if mode == "exact":
        if N == 1:
            return 1.0
        return -N * math.expm1(n * math.log1p(-1.0 / N))
    return -N * math.expm1(-n / N)


@dataclass(frozen=True)
class SimulationResult:
    mean: float
    stddev: float
    trials: int

    @property
    def stderr(self) -> float:
        return self.stddev / math.sqrt(self.trials)


def _check_budget(cost: int, budget: int) -> None:
    if cost > budget:
        raise CouponError(f"simulation needs {cost:,} cells, budget is {budget:,}")


def simulate_collector(N: int, trials: int, seed: int, budget: int = SIMULATION_BUDGET) -> SimulationResult:
    """Draw uniformly until every item is seen; statistics of the draw counts."""
    if N < 1 or trials < 1:
        raise CouponError("need N >= 1 and trials >= 1")
    _check_budget(N * trials, budget)
    rng = np.random.default_rng(seed)
    seen = np.zeros((trials, N), dtype=bool)
    missing = np.full(trials, N, dtype=np.int64)
    draws = np.zeros(trials, dtype=np.int64)
    active = np.arange(trials)
    while active.size:
        x = rng.integers(0, N, size=active.size)
        fresh = ~seen[active, x]
        seen[active, x] = True
        missing[active] -= fresh
        draws[active] += 1
        active = active[missing[active] > 0]
    sd = float(draws.std(ddof=1)) if trials > 1 else 0.0
    return SimulationResult(float(draws.mean()), sd, trials)


def simulate_distinct(N: int, n: int, trials: int, seed: int, budget: int = SIMULATION_BUDGET) -> SimulationResult:
    """Distinct items among ``n`` uniform draws, over repeated trials."""
    if N < 1 or n < 0 or trials < 1:
        raise CouponError("need N >= 1, n >= 0 and trials >= 1")
    _check_budget(n * trials, budget)
    rng = np.random.default_rng(seed)
    if n == 0:
        return SimulationResult(0.0, 0.0, trials)
    draws = np.sort(rng.integers(0, N, size=(trials, n)), axis=1)
    distinct = 1 + (np.diff(draws, axis=1) != 0).sum(axis=1)
    sd = float(distinct.std(ddof=1)) if trials > 1 else 0.0
    return SimulationResult(float(distinct.mean()), sd, trials)
