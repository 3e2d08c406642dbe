import random

import pytest

from kakeya.extraction import full_T
from kakeya.field import field_of_order
from kakeya.space import AffineSpace, PointSet, SpaceError
from kakeya.verify import is_kakeya

from oracles import naive_is_kakeya, naive_lines


def test_gf2_plane_examples():
    S = AffineSpace(field_of_order(2), 2)
    T = full_T(S)
    K = PointSet(4, [S.encode(v) for v in [(0, 0), (1, 0), (0, 1)]])
    r = is_kakeya(S, K, T)
    assert r.ok and not r.missing
    assert all(line is not None for line in r.witness.values())

    K = PointSet(4, [S.encode(v) for v in [(0, 0), (1, 0)]])
    r = is_kakeya(S, K, T)
    assert not r.ok
    assert [d.rep for d in r.missing] == [(0, 1), (1, 1)]


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 3), (4, 2), (5, 3)])
def test_full_space(q, n):
    S = AffineSpace(field_of_order(q), n)
    assert is_kakeya(S, PointSet.full(S.size), full_T(S)).ok


def test_zero_vector_rejected():
    S = AffineSpace(field_of_order(3), 2)
    with pytest.raises(SpaceError):
        is_kakeya(S, PointSet.full(9), [(0, 0)])


def test_universe_mismatch():
    S = AffineSpace(field_of_order(3), 2)
    with pytest.raises(SpaceError):
        is_kakeya(S, PointSet.full(8), [(1, 0)])


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_matches_naive_and_monotone(q, n):
    S = AffineSpace(field_of_order(q), n)
    lines = naive_lines(S.field, n)
    allT = full_T(S)
    rng = random.Random(q + 31 * n)
    for _ in range(150):
        codes = rng.sample(range(S.size), rng.randint(0, S.size))
        T = rng.sample(allT, rng.randint(1, len(allT)))
        K = PointSet(S.size, codes)
        ours = is_kakeya(S, K, T).ok
        assert ours == naive_is_kakeya(lines, frozenset(S.decode(c) for c in codes), T)
        if ours:
            bigger = K.copy()
            bigger.add(rng.randrange(S.size))
            assert is_kakeya(S, bigger, T).ok


def test_witness_is_first_contained_line():
    S = AffineSpace(field_of_order(3), 2)
    K = PointSet.full(9)
    r = is_kakeya(S, K, [(1, 1)])
    (line,) = r.witness.values()
    assert line.base == 0
