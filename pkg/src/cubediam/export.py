"""CSV/JSON emission for censuses, estimates, table comparisons and figure data.

Floats are written with ``repr`` so output does not depend on locale and is
byte-identical between runs. Every CSV has a header and ends with a newline.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .census import CensusReport
from .estimator import EstimateReport, predicted_new_series

FORMATS = ("csv", "json")


class ExportError(ValueError):
    pass


def _num(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return "nan" if math.isnan(v) else repr(v)
    return str(v)


def _json_safe(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    if isinstance(v, dict):
        return {str(k): _json_safe(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_safe(x) for x in v]
    return v


def dumps_json(obj) -> str:
    return json.dumps(_json_safe(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def dumps_csv(header: list[str], records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for rec in records:
        w.writerow([_num(v) for v in rec])
    return buf.getvalue()


def write_text(text: str, out: str | Path | None) -> None:
    if out is None or str(out) == "-":
        import sys
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8", newline="\n")


# census ---------------------------------------------------------------------

def census_csv(report: CensusReport) -> str:
    return dumps_csv(["t", "new_states"], report.levels)


def census_json(report: CensusReport) -> str:
    return dumps_json({
        "metadata": {
            "metric": report.metric,
            "n": report.n,
            "engine": report.engine,
            "complete": report.complete,
            "version": __version__,
        },
        "diameter": report.diameter,
        "total": report.total,
        "levels": [{"t": t, "new_states": c} for t, c in report.levels],
    })


# estimate -------------------------------------------------------------------

ESTIMATE_COLUMNS = ["t", "S_over_N", "C_over_N", "T_over_N", "S", "C", "T"]


def estimate_csv(report: EstimateReport) -> str:
    return dumps_csv(ESTIMATE_COLUMNS, [(r.t, r.s, r.c, r.tt, r.S, r.C, r.T) for r in report.rows])


def estimate_json(report: EstimateReport) -> str:
    return dumps_json({
        "metadata": report.metadata(),
        "rows": [dict(zip(ESTIMATE_COLUMNS, (r.t, r.s, r.c, r.tt, r.S, r.C, r.T))) for r in report.rows],
        "completion_probability": report.probabilities,
        "expected_unseen": report.unseen,
    })


# figures --------------------------------------------------------------------

@dataclass(frozen=True)
class FigureSpec:
    id: int
    n: int
    metric: str
    table: str
    enumerable: bool


FIGURES: dict[int, FigureSpec] = {
    1: FigureSpec(1, 2, "half", "I", True),
    2: FigureSpec(2, 2, "quarter", "II", True),
    3: FigureSpec(3, 2, "semi-quarter", "III", True),
    4: FigureSpec(4, 2, "bi-quarter", "IV", True),
    5: FigureSpec(5, 3, "square", "VII", True),
    6: FigureSpec(6, 3, "half", "V", False),
    7: FigureSpec(7, 3, "quarter", "VI", False),
}

FIGURE_COLUMNS = ["t", "actual_new", "predicted_new"]


def read_series_csv(path: str | Path) -> dict[int, int]:
    """Per-step counts from a CSV with a ``t`` column and a count column.

    The count column may be called ``new_states`` (census output) or
    ``actual_new``; otherwise the second column is used.
    """
    p = Path(path)
    if not p.is_file():
        raise ExportError(f"actual-series file not found: {p}")
    with p.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or "t" not in reader.fieldnames or len(reader.fieldnames) < 2:
            raise ExportError(f"{p}: expected a header with a 't' column and a count column")
        names = reader.fieldnames
        col = next((c for c in ("new_states", "actual_new") if c in names), names[1] if names[0] == "t" else names[0])
        out = {}
        for rec in reader:
            try:
                out[int(rec["t"])] = int(float(rec[col]))
            except (TypeError, ValueError) as exc:
                raise ExportError(f"{p}: bad record {rec}") from exc
    return out


def figure_series(fig_id: int, actual: dict[int, int] | None = None, threads: int = 1) -> list[tuple]:
    """Rows of (t, actual_new or None, predicted_new)."""
    from .census import full_census
    from .cube import metric_generators
    from .presets import compare_table

    if fig_id not in FIGURES:
        raise ExportError(f"unknown figure {fig_id}; choose 1..{len(FIGURES)}")
    fig = FIGURES[fig_id]
    if fig.enumerable:
        if actual is not None:
            raise ExportError(f"figure {fig_id} computes its own actual series")
        m = metric_generators(fig.metric, fig.n)
        actual = dict(full_census(m, engine="compact" if fig.n == 2 else "hashed", threads=threads).levels)
    report = compare_table(fig.table).report
    predicted = dict(predicted_new_series(report))
    last = max(max(predicted), max(actual) if actual else 0)
    if last > max(predicted):
        from .estimator import run_estimate
        report = run_estimate(report.input, report.arithmetic, until=last)
        predicted = dict(predicted_new_series(report))
    return [(t, (actual or {}).get(t), predicted[t]) for t in range(last + 1)]


def figure_csv(rows: list[tuple]) -> str:
    return dumps_csv(FIGURE_COLUMNS, rows)


def figure_json(fig_id: int, rows: list[tuple]) -> str:
    fig = FIGURES[fig_id]
    return dumps_json({
        "metadata": {"figure": fig_id, "n": fig.n, "metric": fig.metric,
                     "estimate_preset": fig.table, "version": __version__},
        "rows": [dict(zip(FIGURE_COLUMNS, r)) for r in rows],
    })
