"""Pure numpy versions of the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations

import numpy as np

UNSEEN = 255
_CHUNK = 1 << 20


def build_table(src: np.ndarray, twist: np.ndarray) -> np.ndarray:
    from .codec import N_STATES, decode_many, encode_many

    src = np.asarray(src, dtype=np.intp)
    twist = np.asarray(twist, dtype=np.int64)
    out = np.empty(N_STATES, dtype=np.uint32)
    for lo in range(0, N_STATES, _CHUNK):
        hi = min(lo + _CHUNK, N_STATES)
        perm, ori = decode_many(np.arange(lo, hi))
        out[lo:hi] = encode_many(perm[:, src], (ori[:, src] + twist) % 3)
    return out


def collect_unseen(table: np.ndarray, frontier: np.ndarray, depth: np.ndarray) -> np.ndarray:
    """Neighbours of ``frontier`` not yet labelled in ``depth`` (duplicates allowed)."""
    cand = table[:, frontier].ravel()
    return cand[depth[cand] == UNSEEN]


def claim(candidates: np.ndarray, depth: np.ndarray, level: int) -> np.ndarray:
    """Label unseen candidates with ``level``; returns them sorted and unique."""
    fresh = np.unique(candidates)
    fresh = fresh[depth[fresh] == UNSEEN]
    depth[fresh] = level
    return fresh.astype(np.uint32)
