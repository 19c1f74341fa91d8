"""Regression presets: recompute a published estimate table and diff it.

The published tables were produced with the two-decimal branching ratio, so
the presets use it too. The two 3x3x3 tables for the half and quarter
metrics carry visible cancellation noise from evaluating ``1 - exp(-x)``
directly; they are only matched with the same plain arithmetic. Everywhere
else the accurate form is used (plain arithmetic underflows for n >= 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cube import metric_generators
from .estimator import EstimateReport, EstimationInput, closed_form_diameter, run_estimate
from .golden import ABSOLUTE, BUILTIN_SEEDS, SUMMARY, TABLES, GoldenTable, resolve
from .orders import order_for_metric

SCALED_TOL = 0.005   # units of N
ABSOLUTE_TOL = 0.005  # relative
PROB_TOL = 0.005
UNSEEN_REL_TOL = 0.10
CLOSED_FORM_TOL = 0.1

PLAIN_TABLES = frozenset({"V", "VI"})


@dataclass(frozen=True)
class CellDiff:
    t: int
    column: str
    published: str
    computed: float
    deviation: float  # N-units for scaled cells, relative for absolute ones
    tolerance: float
    exempt: bool = False

    @property
    def ok(self) -> bool:
        return self.exempt or self.deviation <= self.tolerance


@dataclass(frozen=True)
class TableComparison:
    table: GoldenTable
    report: EstimateReport
    cells: tuple[CellDiff, ...]
    probabilities: tuple[tuple[int, float, float, float, float], ...]  # t, Pr, Pr_pub, unseen, unseen_pub

    @property
    def diameter_ok(self) -> bool:
        return self.report.diameter == self.table.diameter

    @property
    def cells_ok(self) -> bool:
        return all(c.ok for c in self.cells)

    @property
    def worst(self) -> CellDiff | None:
        live = [c for c in self.cells if not c.exempt]
        return max(live, key=_excess, default=None)

    @property
    def probabilities_ok(self) -> bool:
        return all(_prob_ok(p, pp, u, up) for _, p, pp, u, up in self.probabilities)

    @property
    def ok(self) -> bool:
        return self.diameter_ok and self.cells_ok and self.probabilities_ok


def _excess(c: CellDiff) -> float:
    if c.tolerance > 0:
        return c.deviation / c.tolerance
    return math.inf if c.deviation > 0 else 0.0


def _sig_digits(x: float) -> int:
    digits = f"{x:.15e}".split("e")[0].replace(".", "").rstrip("0")
    return max(1, len(digits))


def unseen_matches(u: float, u_pub: float) -> bool:
    """Within 10%, or equal once rounded to the digits the published value shows."""
    if abs(u - u_pub) <= UNSEEN_REL_TOL * u_pub:
        return True
    sig = _sig_digits(u_pub)
    return f"{u:.{sig - 1}e}" == f"{u_pub:.{sig - 1}e}"


def _prob_ok(p: float, p_pub: float, u: float, u_pub: float) -> bool:
    if abs(p - p_pub) > PROB_TOL:
        return False
    return math.isnan(u_pub) or unseen_matches(u, u_pub)


def preset_input(table: GoldenTable, r: float | None = None) -> EstimationInput:
    key = (table.n, table.metric)
    m = metric_generators(table.metric, table.n)
    seeds = BUILTIN_SEEDS[key][: table.seed_depth + 1]
    return EstimationInput(order_for_metric(*key).exact, table.r_printed if r is None else r,
                           seeds, m.k, m.label, "builtin")


def preset_arithmetic(table: GoldenTable) -> str:
    return "plain" if table.id in PLAIN_TABLES else "accurate"


def _census_columns(table: GoldenTable) -> dict[int, dict[str, int]]:
    """S, C and cumulative T for the census-printed steps, by breadth-first search."""
    from .census import shallow_census
    m = metric_generators(table.metric, table.n)
    counts = shallow_census(m, max(table.census_rows), engine="compact" if table.n == 2 else "hashed").counts()
    out = {}
    for t in sorted(table.census_rows):
        out[t] = {"S": counts[t], "C": counts[t], "T": sum(counts[: t + 1])}
    return out


def compare_table(table_id: str, r: float | None = None, arithmetic: str | None = None) -> TableComparison:
    table = TABLES[resolve(table_id)]
    inp = preset_input(table, r)
    last = max(row.t for row in table.rows)
    report = run_estimate(inp, arithmetic or preset_arithmetic(table), until=max(last, max(table.probabilities, default=0)))
    N = float(inp.N)
    observed = _census_columns(table) if table.census_rows else {}
    cells = []
    for g in table.rows:
        got = report.row(g.t)
        for col, cell in zip("SCT", (g.S, g.C, g.T)):
            exempt = (g.t, col) in table.exempt
            if g.t in observed:
                value = observed[g.t][col]
                dev = abs(value - cell.value) / cell.value
                tol = 0.0
            elif got.seeded:
                value = got.absolute(col)
                dev = abs(value - cell.value) / cell.value
                tol = 0.0
            elif cell.kind == ABSOLUTE:
                value = got.scaled(col) * N
                dev = abs(value - cell.value) / cell.value
                tol = ABSOLUTE_TOL
            else:
                value = got.scaled(col)
                dev = abs(value - cell.value)
                tol = SCALED_TOL
            cells.append(CellDiff(g.t, col, cell.text, value, dev, tol, exempt))
    probs = []
    for t, (p_pub, u_pub) in sorted(table.probabilities.items()):
        probs.append((t, report.completion_probability(t), p_pub, report.expected_unseen(t), u_pub))
    return TableComparison(table, report, tuple(cells), tuple(probs))


@dataclass(frozen=True)
class SummaryCheck:
    n: int
    metric: str
    r: float
    predicted: int
    predicted_pub: int
    closed_form: float
    closed_form_pub: float
    actual: int | None

    @property
    def ok(self) -> bool:
        return self.predicted == self.predicted_pub and abs(self.closed_form - self.closed_form_pub) <= CLOSED_FORM_TOL


def summary(rounded: bool = True) -> list[SummaryCheck]:
    """Recompute the diameter summary with built-in seeds."""
    out = []
    for row in SUMMARY:
        depth = 5 if (row.n, row.metric) == (2, "semi-quarter") else 3
        seeds = BUILTIN_SEEDS[(row.n, row.metric)][: depth + 1]
        r = round(seeds[-1] / seeds[-2], 2) if rounded else seeds[-1] / seeds[-2]
        m = metric_generators(row.metric, row.n)
        N = order_for_metric(row.n, row.metric).exact
        rep = run_estimate(EstimationInput(N, r, seeds, m.k, m.label, "builtin"))
        out.append(SummaryCheck(row.n, row.metric, r, rep.diameter, row.predicted,
                                closed_form_diameter(N, r), row.closed_form, row.actual))
    return out
