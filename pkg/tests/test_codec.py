import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubediam import codec
from cubediam.codec import (
    N_STATES,
    CodecError,
    CornerState,
    apply_corners,
    build_move_table,
    corners_from_facelets,
    corners_to_facelets,
    decode,
    decode_many,
    encode,
    encode_many,
    lehmer_rank,
)
from cubediam.cube import FaceletCube, apply, apply_sequence, metric_generators, solved_cube


def test_state_count():
    assert N_STATES == 3_674_160


def test_solved_is_zero():
    assert encode(CornerState.solved()) == 0
    assert decode(0) == CornerState.solved()
    assert corners_from_facelets(solved_cube(2)) == CornerState.solved()


def test_lehmer_rank_matches_lexicographic_order():
    # oracle: position of the permutation in itertools' lexicographic listing
    for i, p in enumerate(itertools.permutations(range(5))):
        assert lehmer_rank(p) == i


def test_largest_index():
    rev = CornerState(tuple(range(6, -1, -1)), (2, 2, 2, 2, 2, 2, 0))
    assert encode(rev) == N_STATES - 1


def test_invalid_states_rejected():
    with pytest.raises(CodecError):
        CornerState((0, 0, 1, 2, 3, 4, 5), (0,) * 7)
    with pytest.raises(CodecError):
        CornerState(tuple(range(7)), (1, 0, 0, 0, 0, 0, 0))
    with pytest.raises(CodecError):
        decode(N_STATES)


def test_bijection_on_random_sample():
    rng = np.random.default_rng(11)
    idx = rng.integers(0, N_STATES, size=100_000, dtype=np.int64)
    perm, ori = decode_many(idx)
    assert (ori.sum(axis=1) % 3 == 0).all()
    assert (np.sort(perm, axis=1) == np.arange(7)).all()
    assert (encode_many(perm, ori) == idx).all()
    # scalar path agrees with the vectorised one
    for i in idx[:200]:
        s = decode(int(i))
        assert encode(s) == i


@settings(max_examples=200, deadline=None)
@given(st.integers(0, N_STATES - 1))
def test_decode_encode_roundtrip(i):
    assert encode(decode(i)) == i


def test_facelet_roundtrip_on_random_words():
    rng = np.random.default_rng(5)
    gens = metric_generators("half", 2).generators
    for _ in range(300):
        word = [gens[j] for j in rng.integers(0, len(gens), size=rng.integers(0, 25))]
        c = apply_sequence(solved_cube(2), word)
        s = corners_from_facelets(c)
        assert corners_to_facelets(s) == c


@pytest.fixture(scope="module")
def half_table():
    return build_move_table(metric_generators("half", 2))


def test_first_level_images(half_table):
    assert len(set(half_table.table[:, 0].tolist())) == 9


def test_columns_are_permutations(half_table):
    for col in half_table.table:
        assert len(np.unique(col)) == N_STATES


def test_order_and_composition(half_table):
    R, R2 = half_table.column("R"), half_table.column("R2")
    idx = np.arange(N_STATES, dtype=np.uint32)
    x = idx
    for _ in range(4):
        x = R[x]
    assert (x == idx).all()
    assert (R[R] == R2).all()


def test_facelet_vs_move_table(half_table):
    """Cross-model oracle: 10^4 random 20-move words give the same state both ways."""
    rng = np.random.default_rng(2024)
    m = half_table.metric
    words = rng.integers(0, m.k, size=(10_000, 20))
    # move-table path, vectorised over words
    idx = np.zeros(len(words), dtype=np.uint32)
    for step in range(20):
        idx = half_table.table[words[:, step], idx]
    # facelet path
    perms = m.permutations()
    stickers = np.tile(solved_cube(2).stickers, (len(words), 1))
    rows = np.arange(len(words))[:, None]
    for step in range(20):
        gather = np.stack([perms[g] for g in words[:, step]])
        stickers = stickers[rows, gather]
    got = [encode(corners_from_facelets(FaceletCube(2, s))) for s in stickers]
    assert got == idx.tolist()
    # and through the corner-level action for a subset
    for w, i in zip(words[:300], idx[:300]):
        s = CornerState.solved()
        for g in w:
            s = apply_corners(s, m.generators[g])
        assert encode(s) == i


def test_every_generator_on_random_states(half_table):
    rng = np.random.default_rng(9)
    for i in rng.integers(0, N_STATES, size=300):
        s = decode(int(i))
        c = corners_to_facelets(s)
        for j, g in enumerate(half_table.metric.generators):
            assert encode(corners_from_facelets(apply(c, g))) == half_table.table[j, i]


def test_dump_and_load(tmp_path):
    m = metric_generators("semi-quarter", 2)
    t = build_move_table(m)
    path = tmp_path / "semi.u32"
    t.dump(path)
    assert path.stat().st_size == 4 * 3 * N_STATES
    again = codec.MoveTable.load(m, path)
    assert np.array_equal(again.table, t.table)


def test_no_table_for_larger_cubes():
    with pytest.raises(CodecError):
        build_move_table(metric_generators("half", 3))
