"""Perfect ranking of 2x2x2 states and per-generator move tables.

The front-up-left corner is the orientation anchor, so a state is fixed by
the arrangement of the other seven corner blocks. Movable slots, in frozen
order, are::

    0 URF   1 ULB   2 UBR   3 DFR   4 DLF   5 DBL   6 DRB

``permutation[i]`` is the home slot of the block sitting in slot ``i``.
``orientations[i]`` is the position of that block's U/D-coloured sticker
within slot ``i``'s stickers, listed clockwise starting from the slot's U/D
sticker. The index of a state is::

    lehmer_rank(permutation) * 729 + sum(orientations[i] * 3**(5 - i), i < 6)

so the seventh twist is implied by the other six and indices fill
``[0, 7! * 3**6)`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from pathlib import Path

import numpy as np

from .cube import FaceletCube, Generator, LayerTurn, Metric, apply, solved_cube, sticker_table

N_CORNERS = 7
N_ORIENT = 3**6
N_STATES = factorial(7) * N_ORIENT  # 3,674,160

_SLOT_POS = {
    "URF": (1, 1, 1), "UFL": (-1, 1, 1), "ULB": (-1, 1, -1), "UBR": (1, 1, -1),
    "DFR": (1, -1, 1), "DLF": (-1, -1, 1), "DBL": (-1, -1, -1), "DRB": (1, -1, -1),
}
MOVABLE_SLOTS = ("URF", "ULB", "UBR", "DFR", "DLF", "DBL", "DRB")
ANCHOR_SLOT = "UFL"
_FACT = np.array([factorial(6 - i) for i in range(7)], dtype=np.int64)
_POW3 = np.array([3 ** (5 - i) for i in range(6)], dtype=np.int64)


class CodecError(ValueError):
    pass


@dataclass(frozen=True)
class CornerState:
    permutation: tuple[int, ...]
    orientations: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "permutation", tuple(int(v) for v in self.permutation))
        object.__setattr__(self, "orientations", tuple(int(v) for v in self.orientations))
        if sorted(self.permutation) != list(range(N_CORNERS)):
            raise CodecError(f"not a permutation of 0..6: {self.permutation}")
        if len(self.orientations) != N_CORNERS or any(o not in (0, 1, 2) for o in self.orientations):
            raise CodecError(f"bad orientation trits: {self.orientations}")
        if sum(self.orientations) % 3:
            raise CodecError("corner twists must sum to 0 mod 3")

    @classmethod
    def solved(cls) -> "CornerState":
        return cls(tuple(range(N_CORNERS)), (0,) * N_CORNERS)


def _det(a, b, c) -> int:
    return (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


@lru_cache(maxsize=None)
def slot_stickers() -> dict[str, tuple[int, int, int]]:
    """Sticker indices of each corner slot, clockwise from its U/D sticker."""
    table = sticker_table(2)
    out = {}
    for name, pos in _SLOT_POS.items():
        here = {normal: i for i, (p, normal) in enumerate(table) if p == pos}
        ud = next(nm for nm in here if nm[1] != 0)
        b, c = [nm for nm in here if nm[1] == 0]
        if _det(ud, b, c) > 0:
            b, c = c, b
        out[name] = (here[ud], here[b], here[c])
    return out


@lru_cache(maxsize=None)
def _home_colors() -> tuple[tuple[int, int, int], ...]:
    solved = solved_cube(2).stickers
    stickers = slot_stickers()
    return tuple(tuple(int(solved[i]) for i in stickers[s]) for s in MOVABLE_SLOTS)


def corners_from_facelets(c: FaceletCube) -> CornerState:
    if c.n != 2:
        raise CodecError("corner codec needs a 2x2x2 cube")
    stickers = slot_stickers()
    home = _home_colors()
    by_set = {frozenset(h): i for i, h in enumerate(home)}
    anchor = solved_cube(2).stickers[list(stickers[ANCHOR_SLOT])]
    if not np.array_equal(c.stickers[list(stickers[ANCHOR_SLOT])], anchor):
        raise CodecError("anchor corner has moved")
    perm, ori = [], []
    for slot in MOVABLE_SLOTS:
        colors = tuple(int(c.stickers[i]) for i in stickers[slot])
        piece = by_set.get(frozenset(colors))
        if piece is None:
            raise CodecError(f"unrecognisable corner colouring {colors} in slot {slot}")
        twist = colors.index(home[piece][0])
        if colors != tuple(home[piece][(j - twist) % 3] for j in range(3)):
            raise CodecError(f"mirrored corner colouring {colors} in slot {slot}")
        perm.append(piece)
        ori.append(twist)
    return CornerState(tuple(perm), tuple(ori))


def corners_to_facelets(s: CornerState) -> FaceletCube:
    stickers = slot_stickers()
    home = _home_colors()
    out = solved_cube(2).stickers.copy()
    for slot, piece, twist in zip(MOVABLE_SLOTS, s.permutation, s.orientations):
        for j, idx in enumerate(stickers[slot]):
            out[idx] = home[piece][(j - twist) % 3]
    return FaceletCube(2, out)


def lehmer_rank(perm) -> int:
    rank = 0
    for i, p in enumerate(perm):
        smaller = sum(1 for q in perm[i + 1:] if q < p)
        rank = rank * (len(perm) - i) + smaller
    return rank


def encode(s: CornerState) -> int:
    ori = 0
    for o in s.orientations[:6]:
        ori = ori * 3 + o
    return lehmer_rank(s.permutation) * N_ORIENT + ori


def decode(i: int) -> CornerState:
    if not 0 <= i < N_STATES:
        raise CodecError(f"index {i} outside [0, {N_STATES})")
    perm, ori = decode_many(np.array([i]))
    return CornerState(tuple(int(x) for x in perm[0]), tuple(int(x) for x in ori[0]))


def encode_many(perm: np.ndarray, ori: np.ndarray) -> np.ndarray:
    """Vectorised :func:`encode` over rows of ``(m, 7)`` arrays."""
    perm = np.asarray(perm, dtype=np.int64)
    rank = np.zeros(len(perm), dtype=np.int64)
    for i in range(N_CORNERS):
        smaller = (perm[:, i + 1:] < perm[:, i:i + 1]).sum(axis=1)
        rank += smaller * _FACT[i]
    return rank * N_ORIENT + np.asarray(ori, dtype=np.int64)[:, :6] @ _POW3


def decode_many(index: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`decode`; returns ``(perm, ori)`` as ``(m, 7)`` int8 arrays."""
    index = np.asarray(index, dtype=np.int64)
    if index.size and (index.min() < 0 or index.max() >= N_STATES):
        raise CodecError("index outside the 2x2x2 state range")
    rank, code = np.divmod(index, N_ORIENT)
    perm = np.empty((len(index), N_CORNERS), dtype=np.int64)
    for i in range(N_CORNERS):
        perm[:, i] = (rank // _FACT[i]) % (N_CORNERS - i)
    # Lehmer digits -> permutation, right to left
    for i in range(N_CORNERS - 2, -1, -1):
        tail = perm[:, i + 1:]
        tail += tail >= perm[:, i:i + 1]
    ori = np.empty((len(index), N_CORNERS), dtype=np.int64)
    for i in range(6):
        ori[:, i] = (code // _POW3[i]) % 3
    ori[:, 6] = (-ori[:, :6].sum(axis=1)) % 3
    return perm.astype(np.int8), ori.astype(np.int8)


@lru_cache(maxsize=None)
def generator_action(g: Generator) -> tuple[np.ndarray, np.ndarray]:
    """Corner-level effect ``(src_slot, twist)`` of a move, read off the facelets.

    Slot ``i`` receives the block from slot ``src_slot[i]`` with its twist
    increased by ``twist[i]``.
    """
    s = corners_from_facelets(apply(solved_cube(2), g))
    return np.array(s.permutation, dtype=np.int8), np.array(s.orientations, dtype=np.int8)


def apply_corners(s: CornerState, g: Generator) -> CornerState:
    src, twist = generator_action(g)
    perm = tuple(s.permutation[j] for j in src)
    ori = tuple((s.orientations[j] + t) % 3 for j, t in zip(src, twist))
    return CornerState(perm, ori)


def apply_many(perm: np.ndarray, ori: np.ndarray, g: Generator) -> tuple[np.ndarray, np.ndarray]:
    src, twist = generator_action(g)
    return perm[:, src], (ori[:, src] + twist) % 3


@dataclass(frozen=True)
class MoveTable:
    """``table[j, i]`` is the index reached from index ``i`` by generator ``j``."""

    metric: Metric
    table: np.ndarray

    def __post_init__(self) -> None:
        self.table.flags.writeable = False

    def column(self, g: Generator | str) -> np.ndarray:
        names = [gen.name for gen in self.metric.generators]
        key = g if isinstance(g, str) else g.name
        return self.table[names.index(key)]

    def dump(self, path: str | Path) -> None:
        """Raw little-endian uint32, shape (k, 3674160), generator-major."""
        self.table.astype("<u4").tofile(Path(path))

    @classmethod
    def load(cls, metric: Metric, path: str | Path) -> "MoveTable":
        data = np.fromfile(Path(path), dtype="<u4").astype(np.uint32)
        return cls(metric, data.reshape(metric.k, N_STATES))


# columns are shared between metrics (R appears in four of them)
_COLUMNS: dict[tuple[LayerTurn, ...], np.ndarray] = {}


def _column(g: Generator) -> np.ndarray:
    if g.turns not in _COLUMNS:
        from .kernels import build_table

        col = build_table(*generator_action(g))
        col.flags.writeable = False
        _COLUMNS[g.turns] = col
    return _COLUMNS[g.turns]


def build_move_table(m: Metric) -> MoveTable:
    if m.n != 2:
        raise CodecError("move tables exist only for the 2x2x2 cube")
    return MoveTable(m, np.stack([_column(g) for g in m.generators]))
