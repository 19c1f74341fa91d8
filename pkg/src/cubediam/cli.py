"""Command-line entry point: ``cubediam <subcommand> ...``.

Exit status is 0 on success, 1 when a regression comparison fails and 2 for
usage errors (bad arguments, unknown ids, refused enumeration requests).
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import __version__, export
from .census import DEFAULT_BUDGET, BudgetExceeded, CensusError, full_census, shallow_census
from .coupon import (
    CouponError,
    collector_stats,
    completion_probability,
    expected_distinct,
    expected_unseen,
    simulate_collector,
)
from .cube import MAX_N, METRIC_NAMES, MIN_N, CubeError, metric_generators
from .estimator import ARITHMETIC, EstimateError, estimate_for
from .golden import resolve, table_ids
from .orders import OrderError, group_order

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

MOVE_GRAMMAR = """\
move grammar:
  FACE[_DEPTH][SUFFIX]  FACE in U R F D L B; DEPTH counts layers from that
                        face (1 = outer layer, default 1); SUFFIX is empty
                        (90 deg clockwise), ' (counter-clockwise) or 2 (180).
  Two tokens written together (e.g. RD, R'D') form one compound move,
  applied left to right. Examples: R, U', F2, R_2, D_2', RD.
"""


class UsageError(Exception):
    pass


def _globals() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=export.FORMATS, default="csv", help="output format (default csv)")
    p.add_argument("--out", default=None, metavar="PATH", help="write to PATH instead of stdout")
    p.add_argument("--threads", type=int, default=1, metavar="K", help="worker threads for censuses")
    return p


def _cube_size(text: str) -> int:
    n = int(text)
    if not MIN_N <= n <= MAX_N:
        raise argparse.ArgumentTypeError(f"cube size must be in {MIN_N}..{MAX_N}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _globals()
    parser = argparse.ArgumentParser(
        prog="cubediam",
        description="Exact censuses and coupon-collector diameter estimates for n x n x n cubes.",
        epilog=MOVE_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("orders", parents=[common], help="exact configuration counts")
    p.add_argument("--n", type=_cube_size, action="append", help="cube size (repeatable; default all)")
    p.add_argument("--subgroup", choices=("full", "square"), default="full")

    p = sub.add_parser("census", parents=[common], help="breadth-first level counts",
                       epilog=MOVE_GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=_cube_size, required=True)
    p.add_argument("--metric", choices=METRIC_NAMES, required=True)
    p.add_argument("--engine", choices=("auto", "compact", "hashed"), default="auto")
    p.add_argument("--max-depth", type=int, default=None, help="stop after this depth (shallow census)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest state space to enumerate")

    p = sub.add_parser("estimate", parents=[common], help="coupon-collector diameter estimate")
    p.add_argument("--n", type=_cube_size, required=True)
    p.add_argument("--metric", choices=METRIC_NAMES, required=True)
    p.add_argument("--seeds", choices=("census", "builtin"), default="census", dest="seed_source",
                   help="where the exact seed counts come from")
    p.add_argument("--seed-depth", type=int, default=None)
    p.add_argument("--r", type=float, default=None, help="override the branching ratio")
    p.add_argument("--round-r", action="store_true", help="round the measured ratio to two decimals")
    p.add_argument("--arithmetic", choices=ARITHMETIC, default="accurate")
    p.add_argument("--until", type=int, default=None, help="extend rows to at least this step")

    p = sub.add_parser("paper-table", parents=[common], help="recompute a published table and diff it")
    p.add_argument("id", help="one of " + ", ".join(table_ids()))

    p = sub.add_parser("figure-data", parents=[common], help="actual and predicted new states per step")
    p.add_argument("id", type=int, choices=sorted(export.FIGURES))
    p.add_argument("--actual", default=None, metavar="CSV",
                   help="external actual series (figures 6 and 7 only): columns t,new_states")

    p = sub.add_parser("coupon", parents=[common], help="coupon-collector statistics")
    p.add_argument("--N", type=float, required=True, dest="population", help="population size")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--mode", choices=("exact", "asymptotic"), default=None)
    mode.add_argument("--exact", action="store_const", const="exact", dest="mode")
    mode.add_argument("--asymptotic", action="store_const", const="asymptotic", dest="mode")
    p.add_argument("--draws", type=float, default=None, help="also report coverage after this many draws")
    p.add_argument("--simulate", action="store_true", help="Monte Carlo estimate of the covering time")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit(args, text: str) -> None:
    export.write_text(text, args.out)


def _keyvalue(args, pairs: list[tuple[str, object]]) -> str:
    if args.format == "json":
        return export.dumps_json({"metadata": {"version": __version__}, **dict(pairs)})
    return export.dumps_csv(["key", "value"], pairs)


def cmd_orders(args) -> int:
    sizes = args.n or ([3] if args.subgroup == "square" else [2, 3, 4, 5])
    try:
        orders = [group_order(n, args.subgroup) for n in sizes]
    except OrderError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        _emit(args, export.dumps_json([
            {"n": o.n, "class": o.metric_class, "exact": str(o.exact), "approx": o.scientific()} for o in orders
        ]))
    else:
        _emit(args, export.dumps_csv(["n", "class", "exact", "approx"],
                                     [(o.n, o.metric_class, o.exact, o.scientific()) for o in orders]))
    return EXIT_OK


def cmd_census(args) -> int:
    try:
        m = metric_generators(args.metric, args.n)
    except CubeError as exc:
        raise UsageError(str(exc)) from exc
    engine = args.engine if args.engine != "auto" else ("compact" if args.n == 2 else "hashed")
    try:
        if args.max_depth is None:
            rep = full_census(m, engine, threads=args.threads, budget=args.budget)
        else:
            rep = shallow_census(m, args.max_depth, engine, threads=args.threads, budget=args.budget)
    except BudgetExceeded as exc:
        raise UsageError(f"budget exceeded: {exc}") from exc
    except CensusError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, export.census_json(rep) if args.format == "json" else export.census_csv(rep))
    return EXIT_OK


def cmd_estimate(args) -> int:
    try:
        rep = estimate_for(args.n, args.metric, args.seed_source, r=args.r, rounded=args.round_r,
                           seed_depth=args.seed_depth, arithmetic=args.arithmetic,
                           until=args.until, threads=args.threads)
    except (EstimateError, CubeError, OrderError, CensusError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, export.estimate_json(rep) if args.format == "json" else export.estimate_csv(rep))
    print(f"{rep.input.label}: predicted diameter {rep.diameter} (r={rep.input.r:.6g}, "
          f"closed form {rep.closed_form:.2f})", file=sys.stderr)
    return EXIT_OK


def _summary_table(args) -> int:
    from .presets import summary
    rows = summary()
    header = ["n", "metric", "r", "actual", "predicted", "predicted_published",
              "closed_form", "closed_form_published", "status"]
    recs = [(s.n, s.metric, s.r, s.actual, s.predicted, s.predicted_pub,
             round(s.closed_form, 4), s.closed_form_pub, "ok" if s.ok else "MISMATCH") for s in rows]
    if args.format == "json":
        _emit(args, export.dumps_json({"metadata": {"table": "IX", "version": __version__},
                                       "rows": [dict(zip(header, r)) for r in recs]}))
    else:
        _emit(args, export.dumps_csv(header, recs))
    ok = all(s.ok for s in rows)
    print(f"table IX: {sum(s.ok for s in rows)}/{len(rows)} rows match -> {'PASS' if ok else 'FAIL'}",
          file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_paper_table(args) -> int:
    from .presets import compare_table
    try:
        key = resolve(args.id)
    except KeyError:
        raise UsageError(f"unknown table {args.id!r}; choose from {', '.join(table_ids())}") from None
    if key == "IX":
        return _summary_table(args)
    cmp = compare_table(key)
    header = ["t", "column", "published", "computed", "deviation", "tolerance", "status"]
    recs = [(c.t, c.column, c.published, c.computed, c.deviation, c.tolerance,
             "exempt" if c.exempt else ("ok" if c.ok else "MISMATCH")) for c in cmp.cells]
    prob_header = ["t", "probability", "probability_published", "unseen", "unseen_published"]
    if args.format == "json":
        _emit(args, export.dumps_json({
            "metadata": {**cmp.report.metadata(), "table": key},
            "diameter": {"computed": cmp.report.diameter, "published": cmp.table.diameter},
            "cells": [dict(zip(header, r)) for r in recs],
            "probabilities": [dict(zip(prob_header, p)) for p in cmp.probabilities],
        }))
    else:
        _emit(args, export.dumps_csv(header, recs))
    w = cmp.worst
    print(f"table {key}: d={cmp.report.diameter} (published {cmp.table.diameter}), "
          f"worst cell t={w.t} {w.column} deviation {w.deviation:.5f} (tol {w.tolerance}), "
          f"probabilities {'ok' if cmp.probabilities_ok else 'MISMATCH'} -> {'PASS' if cmp.ok else 'FAIL'}",
          file=sys.stderr)
    return EXIT_OK if cmp.ok else EXIT_MISMATCH


def cmd_figure_data(args) -> int:
    fig = export.FIGURES[args.id]
    if args.actual is not None and fig.enumerable:
        raise UsageError(f"figure {args.id} computes its actual series; --actual applies to figures 6 and 7")
    try:
        actual = export.read_series_csv(args.actual) if args.actual else None
        rows = export.figure_series(args.id, actual, threads=args.threads)
    except export.ExportError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, export.figure_json(args.id, rows) if args.format == "json" else export.figure_csv(rows))
    return EXIT_OK


def cmd_coupon(args) -> int:
    N = args.population
    if N.is_integer():
        N = int(N)
    mode = args.mode or ("exact" if isinstance(N, int) and N <= 10**8 else "asymptotic")
    try:
        st = collector_stats(N, mode)
        pairs: list[tuple[str, object]] = [
            ("N", N), ("mode", mode),
            ("expected_draws", st.expected), ("expected_over_N", st.expected_over_n),
            ("stddev", st.stddev), ("stddev_over_N", st.stddev_over_n),
        ]
        if args.draws is not None:
            pairs += [
                ("draws", args.draws),
                ("completion_probability", completion_probability(N, args.draws)),
                ("expected_unseen", expected_unseen(N, args.draws)),
                ("expected_distinct", expected_distinct(N, args.draws, mode)),
            ]
        if args.simulate:
            if not isinstance(N, int):
                raise UsageError("simulation needs an integer population")
            sim = simulate_collector(N, args.trials, args.seed)
            pairs += [("trials", args.trials), ("seed", args.seed), ("simulated_mean", sim.mean),
                      ("simulated_stddev", sim.stddev), ("simulated_stderr", sim.stderr)]
    except CouponError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, _keyvalue(args, pairs))
    return EXIT_OK


COMMANDS = {
    "orders": cmd_orders,
    "census": cmd_census,
    "estimate": cmd_estimate,
    "paper-table": cmd_paper_table,
    "figure-data": cmd_figure_data,
    "coupon": cmd_coupon,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors as exit 2
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "threads", 1) < 1:
        print("cubediam: error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cubediam: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
