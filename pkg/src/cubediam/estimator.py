"""Diameter estimates from the coupon-collector model of a random walk.

A few exact level counts seed the recurrence. Each step then spends
``C(t) = r * S(t-1)`` fresh draws on the ``N`` configurations, of which
``S(t) = N (1 - exp(-C(t)/N))`` are expected to be distinct. The predicted
diameter is the first step where the cumulative draw count ``T`` passes
``N ln N + gamma N``, the expected cost of collecting every configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import __version__
from .coupon import EULER_GAMMA, completion_probability_scaled, expected_unseen_scaled
from .cube import metric_generators
from .orders import order_for_metric

ARITHMETIC = ("accurate", "plain")
SEED_SOURCES = ("census", "builtin")
MAX_STEPS = 10_000
ABSOLUTE_LIMIT = 1e15


class EstimateError(ValueError):
    pass


class DivergenceError(EstimateError):
    pass


@dataclass(frozen=True)
class EstimationInput:
    N: int | float
    r: float
    seeds: tuple[int, ...]
    k: int | None = None
    label: str = ""
    seed_source: str = "given"

    def __post_init__(self) -> None:
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        s = self.seeds
        if len(s) < 2:
            raise EstimateError("need at least two seed counts")
        if s[0] != 1:
            raise EstimateError("the first seed count is the solved state and must be 1")
        if any(b <= a for a, b in zip(s, s[1:])):
            raise EstimateError(f"seed counts must be strictly increasing: {s}")
        if not self.N >= sum(s):
            raise EstimateError("the population is smaller than the seeded levels")
        if not (math.isfinite(self.r) and self.r > 1):
            raise EstimateError(f"branching ratio must exceed 1, got {self.r}")
        if self.k is not None and not self.r < self.k:
            raise EstimateError(f"branching ratio {self.r} must be below the generator count {self.k}")

    @property
    def seed_depth(self) -> int:
        return len(self.seeds) - 1


@dataclass(frozen=True)
class EstimateRow:
    t: int
    s: float   # S/N
    c: float   # C/N
    tt: float  # T/N
    S: float | None = None
    C: float | None = None
    T: float | None = None
    seeded: bool = False

    def scaled(self, column: str) -> float:
        return {"S": self.s, "C": self.c, "T": self.tt}[column]

    def absolute(self, column: str) -> float | None:
        return {"S": self.S, "C": self.C, "T": self.T}[column]


@dataclass(frozen=True)
class EstimateReport:
    input: EstimationInput
    arithmetic: str
    rows: tuple[EstimateRow, ...]
    diameter: int
    threshold: float  # (ln N + gamma), in units of N
    closed_form: float
    probabilities: dict[int, float] = field(default_factory=dict)
    unseen: dict[int, float] = field(default_factory=dict)

    def row(self, t: int) -> EstimateRow:
        if not 0 <= t < len(self.rows):
            raise EstimateError(f"step {t} not computed (rows reach {len(self.rows) - 1})")
        return self.rows[t]

    def completion_probability(self, t: int) -> float:
        return completion_probability_scaled(self.input.N, self.row(t).tt)

    def expected_unseen(self, t: int) -> float:
        return expected_unseen_scaled(self.input.N, self.row(t).tt)

    def metadata(self) -> dict:
        inp = self.input
        return {
            "label": inp.label,
            "N": str(int(inp.N)) if float(inp.N).is_integer() else repr(inp.N),
            "r": inp.r,
            "k": inp.k,
            "seeds": list(inp.seeds),
            "seed_depth": inp.seed_depth,
            "seed_source": inp.seed_source,
            "arithmetic": self.arithmetic,
            "threshold_over_n": self.threshold,
            "diameter": self.diameter,
            "closed_form": self.closed_form,
            "version": __version__,
        }


def closed_form_diameter(N, r: float) -> float:
    """ln N / ln r + ln N / r."""
    if r <= 1:
        raise EstimateError("branching ratio must exceed 1")
    ln_n = math.log(N)
    return ln_n / math.log(r) + ln_n / r


def _distinct(C: float, N: float, arithmetic: str) -> float:
    x = C / N
    if arithmetic == "accurate":
        return -N * math.expm1(-x)
    # straightforward formula; it loses digits for small C/N and underflows to
    # zero below machine epsilon, where S = C is the only sane continuation
    # Rounding can also push S slightly above C; that noise is left in on
    # purpose, since published tables computed this way carry it.
    y = 1.0 - math.exp(-x)
    return N * y if y > 0 else C


def _row(t: int, S: float, C: float, T: float, N: float, seeded: bool) -> EstimateRow:
    def ab(v: float):
        if v >= ABSOLUTE_LIMIT:
            return None
        return int(v) if seeded else v
    return EstimateRow(t, S / N, C / N, T / N, ab(S), ab(C), ab(T), seeded)


def run_estimate(inp: EstimationInput, arithmetic: str = "accurate", until: int | None = None,
                 max_steps: int = MAX_STEPS) -> EstimateReport:
    """Iterate the recurrence past the threshold; rows cover at least ``d + 1``."""
    if arithmetic not in ARITHMETIC:
        raise EstimateError(f"arithmetic must be one of {ARITHMETIC}")
    N = float(inp.N)
    threshold = math.log(N) + EULER_GAMMA
    rows: list[EstimateRow] = []
    T = 0
    for t, s in enumerate(inp.seeds):
        T += s
        rows.append(_row(t, s, s, T, N, True))
    T = float(T)
    S = float(inp.seeds[-1])
    d = rows[-1].t if rows[-1].tt > threshold else None
    t = inp.seed_depth
    target = -1 if until is None else until
    while d is None or t < max(d + 1, target):
        t += 1
        if t > max_steps:
            raise DivergenceError(f"no crossing of the threshold within {max_steps} steps")
        C = inp.r * S
        S = _distinct(C, N, arithmetic)
        T += C
        rows.append(_row(t, S, C, T, N, False))
        if d is None and T / N > threshold:
            d = t
    probs, unseen = {}, {}
    for u in (d - 1, d, d + 1):
        if 0 <= u < len(rows):
            probs[u] = completion_probability_scaled(N, rows[u].tt)
            unseen[u] = expected_unseen_scaled(N, rows[u].tt)
    return EstimateReport(inp, arithmetic, tuple(rows), d, threshold,
                          closed_form_diameter(N, inp.r), probs, unseen)


def predicted_new_series(report: EstimateReport) -> list[tuple[int, float]]:
    """Expected number of configurations first reached at each step.

    ``N (exp(-T(t-1)/N) - exp(-T(t)/N))``, written through expm1 so the
    seed phase (where the terms are about ``C(t)``) keeps its digits.
    """
    N = float(report.input.N)
    out = []
    prev = 0.0
    for row in report.rows:
        out.append((row.t, -N * math.exp(-prev) * math.expm1(-row.c)))
        prev = row.tt
    return out


def default_seed_depth(n: int, metric: str) -> int:
    return 5 if (n, metric) == (2, "semi-quarter") else 3


def census_seeds(n: int, metric: str, depth: int, threads: int = 1) -> tuple[int, ...]:
    from .census import shallow_census
    m = metric_generators(metric, n)
    engine = "compact" if n == 2 else "hashed"
    rep = shallow_census(m, depth, engine=engine, threads=threads)
    if rep.max_depth < depth:
        raise EstimateError(f"{m.label} is exhausted before depth {depth}")
    return tuple(rep.counts())


def estimate_for(n: int, metric: str, seed_source: str = "census", r: float | None = None,
                 rounded: bool = False, seed_depth: int | None = None,
                 arithmetic: str = "accurate", until: int | None = None,
                 threads: int = 1) -> EstimateReport:
    """Estimate for one cube/metric pair.

    ``r`` defaults to the ratio of the last two seed counts; ``rounded``
    rounds it to two decimals first.
    """
    from .golden import BUILTIN_SEEDS
    if seed_source not in SEED_SOURCES:
        raise EstimateError(f"seed source must be one of {SEED_SOURCES}")
    m = metric_generators(metric, n)
    depth = default_seed_depth(n, metric) if seed_depth is None else seed_depth
    if depth < 2:
        raise EstimateError("seed depth must be at least 2")
    if seed_source == "builtin":
        seeds = BUILTIN_SEEDS.get((n, metric))
        if seeds is None:
            raise EstimateError(f"no built-in seeds for {m.label}")
        if depth >= len(seeds):
            raise EstimateError(f"built-in seeds for {m.label} only reach depth {len(seeds) - 1}")
        seeds = seeds[:depth + 1]
    else:
        seeds = census_seeds(n, metric, depth, threads)
    if r is None:
        r = seeds[-1] / seeds[-2]
        if rounded:
            r = round(r, 2)
    N = order_for_metric(n, metric).exact
    inp = EstimationInput(N, r, seeds, m.k, m.label, seed_source)
    return run_estimate(inp, arithmetic, until=until)
