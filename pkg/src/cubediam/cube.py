"""Sticker-level n x n x n cube model, layer turns and metric generator sets.

Sticker layout
--------------
A state is a flat ``uint8`` array of ``6 * n * n`` colour labels. Faces are
stored in the order ``U R F D L B`` and each face is row-major, so the sticker
at ``(face, row, col)`` lives at ``face * n * n + row * n + col``. Rows and
columns follow the usual unfolded net::

            U            U: row 0 at the back,  col 0 at the left
        L   F   R   B    F, R, B, L: row 0 at the top; col 0 is the column
            D            next to L, F, B, R respectively
                         D: row 0 at the front, col 0 at the left

The colour of a sticker in the solved cube is the index of its face.

Geometry uses doubled integer coordinates (cubie centres on
``-(n-1), -(n-3), ..., n-1``) with +x = R, +y = U, +z = F. A quarter twist is
clockwise as seen from the positive face of its axis, and layer 0 of an axis
is the layer on that positive face.

Orientation anchor: for even n the front-up-left corner block is never
turned, so only R/D/B-side layers move; for odd n the central slice of every
axis stays put.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

FACES = "URFDLB"
MIN_N, MAX_N = 2, 5
METRIC_NAMES = ("half", "quarter", "semi-quarter", "bi-quarter", "square")

# face letter -> (axis, sign of its outward normal)
_FACE_AXIS = {"R": (0, 1), "L": (0, -1), "U": (1, 1), "D": (1, -1), "F": (2, 1), "B": (2, -1)}
_NORMALS = {f: tuple(s if i == a else 0 for i in range(3)) for f, (a, s) in _FACE_AXIS.items()}


class CubeError(ValueError):
    """Invalid cube size, move name or metric request."""


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or not MIN_N <= n <= MAX_N:
        raise CubeError(f"cube size must be in [{MIN_N}, {MAX_N}], got {n!r}")


def _coord(i: int, n: int) -> int:
    return 2 * i - (n - 1)


def _sticker_geometry(face: str, row: int, col: int, n: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    top = n - 1
    cr, cc = _coord(row, n), _coord(col, n)
    if face == "U":
        pos = (cc, top, cr)
    elif face == "D":
        pos = (cc, -top, -cr)
    elif face == "F":
        pos = (cc, -cr, top)
    elif face == "B":
        pos = (-cc, -cr, -top)
    elif face == "R":
        pos = (top, -cr, -cc)
    else:  # L
        pos = (-top, -cr, cc)
    return pos, _NORMALS[face]


@lru_cache(maxsize=None)
def sticker_table(n: int) -> tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...]:
    """(cubie centre, outward normal) of every sticker index, in storage order."""
    _check_n(n)
    return tuple(
        _sticker_geometry(face, r, c, n) for face in FACES for r in range(n) for c in range(n)
    )


def _rotate(v: Sequence[int], axis: int) -> tuple[int, int, int]:
    x, y, z = v
    if axis == 0:
        return (x, z, -y)
    if axis == 1:
        return (-z, y, x)
    return (y, -x, z)


@dataclass(frozen=True)
class LayerTurn:
    axis: int  # 0 = x (R), 1 = y (U), 2 = z (F)
    layer_index: int  # 0 is the layer on the positive face
    quarter_twists: int  # clockwise from the positive face

    def __post_init__(self) -> None:
        if self.axis not in (0, 1, 2):
            raise CubeError(f"axis must be 0, 1 or 2, got {self.axis}")
        if self.quarter_twists % 4 == 0 or not 1 <= self.quarter_twists <= 3:
            raise CubeError(f"quarter_twists must be 1, 2 or 3, got {self.quarter_twists}")

    def inverse(self) -> "LayerTurn":
        return LayerTurn(self.axis, self.layer_index, 4 - self.quarter_twists)


@lru_cache(maxsize=None)
def turn_permutation(turn: LayerTurn, n: int) -> np.ndarray:
    """Gather permutation ``p`` with ``after = before[p]`` for one layer turn."""
    _check_n(n)
    if not 0 <= turn.layer_index < n:
        raise CubeError(f"layer {turn.layer_index} out of range for n={n}")
    table = sticker_table(n)
    index = {geom: i for i, geom in enumerate(table)}
    level = (n - 1) - 2 * turn.layer_index
    perm = np.arange(len(table), dtype=np.intp)
    for src, (pos, normal) in enumerate(table):
        if pos[turn.axis] != level:
            continue
        for _ in range(turn.quarter_twists):
            pos, normal = _rotate(pos, turn.axis), _rotate(normal, turn.axis)
        perm[index[(pos, normal)]] = src
    perm.flags.writeable = False
    return perm


@dataclass(frozen=True)
class Generator:
    """One metric move: a single layer turn, or two applied left to right."""

    name: str
    turns: tuple[LayerTurn, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.turns) <= 2:
            raise CubeError("a generator holds one or two layer turns")

    def permutation(self, n: int) -> np.ndarray:
        return _generator_perm(self.turns, n)

    def __str__(self) -> str:
        return self.name


@lru_cache(maxsize=None)
def _generator_perm(turns: tuple[LayerTurn, ...], n: int) -> np.ndarray:
    perm = np.arange(6 * n * n, dtype=np.intp)
    for turn in turns:
        perm = perm[turn_permutation(turn, n)]
    perm.flags.writeable = False
    return perm


# FACE, optional _depth (1 = outer layer), optional ' or 2
_TOKEN = re.compile(r"([URFDLB])(?:_([1-9]))?('|2)?")


def _turn_from_token(face: str, depth: int, suffix: str, n: int) -> LayerTurn:
    if not 1 <= depth <= n - 1:
        raise CubeError(f"layer depth {depth} out of range for n={n}")
    axis, sign = _FACE_AXIS[face]
    q = {"": 1, "'": 3, "2": 2}[suffix]
    if sign > 0:
        return LayerTurn(axis, depth - 1, q)
    return LayerTurn(axis, n - depth, 4 - q)


def format_token(face: str, depth: int, suffix: str) -> str:
    return face + (f"_{depth}" if depth > 1 else "") + suffix


def parse_generator(name: str, n: int) -> Generator:
    """Parse ``R``, ``R'``, ``R2``, ``R_2``, ``R_3'``, ``RD``, ``R'D'`` ...

    Grammar: one or two tokens ``FACE[_DEPTH][' | 2]`` written without
    separators; ``DEPTH`` counts layers inward from FACE starting at 1 and
    defaults to 1. Two tokens form a compound move applied left to right.
    """
    _check_n(n)
    text = name.strip().replace("’", "'")
    turns = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise CubeError(f"cannot parse move {name!r}")
        face, depth, suffix = m.group(1), int(m.group(2) or 1), m.group(3) or ""
        turns.append(_turn_from_token(face, depth, suffix, n))
        pos = m.end()
    if not 1 <= len(turns) <= 2:
        raise CubeError(f"cannot parse move {name!r}")
    return Generator(text, tuple(turns))


def parse_sequence(text: str, n: int) -> list[Generator]:
    """Whitespace-separated sequence of moves."""
    return [parse_generator(tok, n) for tok in text.split()]


@dataclass(frozen=True)
class Metric:
    name: str
    n: int
    generators: tuple[Generator, ...] = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.generators)

    def permutations(self) -> list[np.ndarray]:
        return [g.permutation(self.n) for g in self.generators]

    @property
    def label(self) -> str:
        return f"{self.n}x{self.n}x{self.n}-{self.name}"


_BIQUARTER = ("RD", "R'D'", "DB", "D'B'", "BR", "B'R'")


def _layer_faces(n: int) -> list[tuple[str, int]]:
    if n % 2 == 0:
        # every layer except the one holding the front-up-left corner
        return [(f, d) for f in "RDB" for d in range(1, n)]
    half = (n - 1) // 2
    return [(f, d) for f in "RDBLUF" for d in range(1, half + 1)]


@lru_cache(maxsize=None)
def metric_generators(name: str, n: int) -> Metric:
    """Generator set of a named metric for an n x n x n cube."""
    _check_n(n)
    if name not in METRIC_NAMES:
        raise CubeError(f"unknown metric {name!r}; choose from {', '.join(METRIC_NAMES)}")
    if name in ("semi-quarter", "bi-quarter") and n != 2:
        raise CubeError(f"the {name} metric is defined for n=2 only")
    if name == "square" and n != 3:
        raise CubeError("the square metric is defined for n=3 only")

    suffixes = {"half": ("", "'", "2"), "bi-quarter": ("", "'", "2"), "quarter": ("", "'"),
                "semi-quarter": ("",), "square": ("2",)}[name]
    names = [format_token(f, d, s) for f, d in _layer_faces(n) for s in suffixes]
    if name == "bi-quarter":
        names += _BIQUARTER
    return Metric(name, n, tuple(parse_generator(s, n) for s in names))


@dataclass(frozen=True, eq=False)
class FaceletCube:
    n: int
    stickers: np.ndarray

    def __post_init__(self) -> None:
        _check_n(self.n)
        arr = np.asarray(self.stickers, dtype=np.uint8)
        if arr.shape != (6 * self.n * self.n,):
            raise CubeError(f"expected {6 * self.n * self.n} stickers, got shape {arr.shape}")
        if not arr.flags.writeable and arr is self.stickers:
            return
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "stickers", arr)

    def sticker(self, face: str, row: int, col: int) -> int:
        return int(self.stickers[FACES.index(face) * self.n * self.n + row * self.n + col])

    def color_counts(self) -> np.ndarray:
        return np.bincount(self.stickers, minlength=6)

    def is_solved(self) -> bool:
        faces = self.stickers.reshape(6, -1)
        return bool((faces == faces[:, :1]).all())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FaceletCube):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.stickers, other.stickers)

    def __hash__(self) -> int:
        return hash((self.n, self.stickers.tobytes()))

    def __repr__(self) -> str:
        return f"FaceletCube(n={self.n}, key={self.stickers.tobytes().hex()})"


@lru_cache(maxsize=None)
def solved_cube(n: int) -> FaceletCube:
    _check_n(n)
    return FaceletCube(n, np.repeat(np.arange(6, dtype=np.uint8), n * n))


def apply(state: FaceletCube, g: Generator | str) -> FaceletCube:
    """State after performing move ``g``; the input is left untouched."""
    if isinstance(g, str):
        g = parse_generator(g, state.n)
    for turn in g.turns:
        if turn.layer_index >= state.n:
            raise CubeError(f"move {g.name} does not fit a {state.n}-cube")
    return FaceletCube(state.n, state.stickers[g.permutation(state.n)])


def apply_sequence(state: FaceletCube, moves: Iterable[Generator | str]) -> FaceletCube:
    for g in moves:
        state = apply(state, g)
    return state


def state_key(state: FaceletCube) -> bytes:
    return bytes([state.n]) + state.stickers.tobytes()


def moved_positions(metric: Metric) -> np.ndarray:
    """Sticker indices touched by at least one generator of the metric."""
    size = 6 * metric.n * metric.n
    ident = np.arange(size)
    touched = np.zeros(size, dtype=bool)
    for perm in metric.permutations():
        touched |= perm != ident
    return np.flatnonzero(touched)
