"""Breadth-first census of a metric's Cayley graph.

Two engines are available. ``compact`` walks the perfect-ranked 2x2x2 state
space through precomputed move tables with one depth byte per state.
``hashed`` works on sticker arrays of any cube size and deduplicates packed
sticker keys in a sorted array; it serves the 3x3x3 square subgroup and the
shallow censuses of larger cubes.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .codec import N_STATES, build_move_table
from .cube import Metric, moved_positions, solved_cube
from .orders import order_for_metric

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
ENGINES = ("compact", "hashed")


class CensusError(ValueError):
    pass


class BudgetExceeded(CensusError):
    pass


@dataclass(frozen=True)
class CensusReport:
    metric: str
    n: int
    levels: tuple[tuple[int, int], ...]
    complete: bool
    engine: str = field(default="hashed", compare=False)

    def __post_init__(self) -> None:
        if not self.levels or self.levels[0] != (0, 1):
            raise CensusError("a census starts from the single solved state")
        if any(count <= 0 for _, count in self.levels):
            raise CensusError("listed levels must be non-empty")

    @property
    def total(self) -> int:
        return sum(count for _, count in self.levels)

    @property
    def diameter(self) -> int | None:
        return self.levels[-1][0] if self.complete else None

    @property
    def max_depth(self) -> int:
        return self.levels[-1][0]

    def new_states(self, t: int) -> int:
        if not 0 <= t <= self.max_depth:
            raise CensusError(f"depth {t} not covered (census reaches {self.max_depth})")
        return self.levels[t][1]

    def counts(self) -> list[int]:
        return [count for _, count in self.levels]


def branching_ratio(report: CensusReport, k: int) -> float:
    """Growth of new states from depth ``k - 1`` to ``k``."""
    if k < 2:
        raise CensusError("the seed depth must be at least 2")
    return report.new_states(k) / report.new_states(k - 1)


def _split(frontier: np.ndarray, threads: int) -> list[np.ndarray]:
    if threads <= 1 or len(frontier) < 2 * threads:
        return [frontier]
    return [np.ascontiguousarray(c) for c in np.array_split(frontier, threads)]


def _map(fn, chunks: list, threads: int) -> list:
    if threads <= 1 or len(chunks) == 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))


def compact_bfs(m: Metric, max_depth: int | None = None, threads: int = 1,
                backend=None) -> tuple[list[tuple[int, int]], np.ndarray]:
    """Level counts and the per-index depth array (255 = not reached)."""
    if m.n != 2:
        raise CensusError("the compact engine handles the 2x2x2 cube only")
    impl = backend or kernels
    table = build_move_table(m).table
    depth = np.full(N_STATES, kernels.UNSEEN, dtype=np.uint8)
    depth[0] = 0
    frontier = np.zeros(1, dtype=np.uint32)
    levels = [(0, 1)]
    level = 0
    while max_depth is None or level < max_depth:
        level += 1
        if level >= kernels.UNSEEN:
            raise CensusError("depth counter overflow")
        parts = _map(lambda c: impl.collect_unseen(table, c, depth), _split(frontier, threads), threads)
        frontier = impl.claim(np.concatenate(parts), depth, level)
        if len(frontier) == 0:
            break
        levels.append((level, len(frontier)))
        log.debug("%s depth %d: %d new", m.label, level, len(frontier))
    return levels, depth


class _KeyPacker:
    """Packs the colours of the moving stickers, 3 bits each, into uint64 words."""

    def __init__(self, m: Metric):
        self.positions = moved_positions(m)
        per_word = 21
        self.words = -(-len(self.positions) // per_word)
        self.slices = [self.positions[w * per_word:(w + 1) * per_word] for w in range(self.words)]
        self.shifts = [np.arange(len(s), dtype=np.uint64) * np.uint64(3) for s in self.slices]

    def __call__(self, rows: np.ndarray) -> np.ndarray:
        words = np.empty((len(rows), self.words), dtype=np.uint64)
        for w, (sl, sh) in enumerate(zip(self.slices, self.shifts)):
            words[:, w] = (rows[:, sl].astype(np.uint64) << sh).sum(axis=1, dtype=np.uint64)
        if self.words == 1:
            return words[:, 0]
        return np.ascontiguousarray(words).view(np.dtype((np.void, 8 * self.words))).ravel()


def _contains(sorted_keys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    if len(sorted_keys) == 0:
        return np.zeros(len(keys), dtype=bool)
    idx = np.searchsorted(sorted_keys, keys)
    idx[idx == len(sorted_keys)] = 0
    return sorted_keys[idx] == keys


def hashed_bfs(m: Metric, max_depth: int | None = None, threads: int = 1,
               budget: int = DEFAULT_BUDGET) -> list[tuple[int, int]]:
    pack = _KeyPacker(m)
    perms = m.permutations()
    frontier = solved_cube(m.n).stickers[None, :].copy()
    visited = pack(frontier)
    levels = [(0, 1)]
    level = 0
    while max_depth is None or level < max_depth:
        if len(visited) + len(frontier) * m.k > budget:
            raise BudgetExceeded(
                f"{m.label}: expanding depth {level + 1} may exceed the budget of {budget:,} states"
            )
        level += 1

        def expand(chunk: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
            keys, rows = [], []
            for perm in perms:
                cand = chunk[:, perm]
                ck = pack(cand)
                keep = ~_contains(visited, ck)
                keys.append(ck[keep])
                rows.append(cand[keep])
            return np.concatenate(keys), np.concatenate(rows)

        parts = _map(expand, _split(frontier, threads), threads)
        keys = np.concatenate([p[0] for p in parts])
        rows = np.concatenate([p[1] for p in parts])
        keys, first = np.unique(keys, return_index=True)
        if len(keys) == 0:
            break
        frontier = rows[first]
        visited = np.sort(np.concatenate([visited, keys]))
        levels.append((level, len(keys)))
        log.debug("%s depth %d: %d new", m.label, level, len(keys))
    return levels


def full_census(m: Metric, engine: str = "compact", threads: int = 1,
                budget: int = DEFAULT_BUDGET) -> CensusReport:
    if engine not in ENGINES:
        raise CensusError(f"unknown engine {engine!r}")
    order = order_for_metric(m.n, m.name).exact
    if order > budget:
        raise BudgetExceeded(
            f"{m.label} has {order:.3e} configurations, above the enumeration budget of {budget:.0e}"
        )
    if engine == "compact":
        levels, _ = compact_bfs(m, threads=threads)
    else:
        levels = hashed_bfs(m, threads=threads, budget=budget)
    return CensusReport(m.name, m.n, tuple(levels), True, engine)


def shallow_census(m: Metric, max_depth: int, engine: str = "hashed", threads: int = 1,
                   budget: int = DEFAULT_BUDGET) -> CensusReport:
    if engine not in ENGINES:
        raise CensusError(f"unknown engine {engine!r}")
    if max_depth < 0:
        raise CensusError("max_depth must be non-negative")
    if engine == "compact":
        levels, _ = compact_bfs(m, max_depth=max_depth, threads=threads)
    else:
        levels = hashed_bfs(m, max_depth=max_depth, threads=threads, budget=budget)
    # the search ran dry before max_depth: the whole space has been seen
    exhausted = levels[-1][0] < max_depth
    return CensusReport(m.name, m.n, tuple(levels), exhausted, engine)
