import itertools
import random

import pytest

from kakeya.exact import (BUDGET_EXCEEDED, OPTIMAL, BudgetExceeded, exact_min_kakeya,
                          sandwich_check)
from kakeya.field import field_of_order
from kakeya.space import AffineSpace, PointSet
from kakeya.verify import is_kakeya

from oracles import brute_force_min_kakeya, coset_tuple_sizes


def full(q, n):
    S = AffineSpace(field_of_order(q), n)
    return S, S.enumerate_directions()


@pytest.mark.parametrize("q,n,expected", [(2, 2, 3), (3, 2, 7), (2, 3, 5)])
def test_known_minima(q, n, expected):
    S, dirs = full(q, n)
    r = exact_min_kakeya(S, dirs)
    assert r.status == OPTIMAL and r.min_size == expected
    assert len(r.kakeya_set) == expected


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_against_subset_brute_force(q, n):
    S, dirs = full(q, n)
    T = [d.rep for d in dirs]
    assert exact_min_kakeya(S, dirs).min_size == brute_force_min_kakeya(S.field, n, T)


def test_gf2_plane_witness():
    S, dirs = full(2, 2)
    r = exact_min_kakeya(S, dirs)
    assert {S.decode(c) for c in r.kakeya_set} == {(0, 0), (1, 0), (0, 1)}
    assert S.decode(r.witness[2].points[0]) == (1, 0)


def test_gf2_cube_reference_witness_is_kakeya():
    S, dirs = full(2, 3)
    pts = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
    K = PointSet(8, [S.encode(v) for v in pts])
    assert is_kakeya(S, K, dirs).ok


def test_single_class_and_line():
    for q, n in [(3, 2), (2, 3), (5, 1), (4, 2)]:
        S, dirs = full(q, n)
        assert exact_min_kakeya(S, dirs[-1:]).min_size == q


def test_one_dimensional_short_circuit():
    S, dirs = full(7, 1)
    r = exact_min_kakeya(S, dirs)
    assert r.min_size == 7 and r.nodes_explored == 0 and r.optimal


@pytest.mark.parametrize("q,n,M", [(2, 2, 3), (3, 2, 3), (3, 2, 4), (2, 3, 4), (2, 3, 7),
                                   (4, 2, 4), (5, 2, 3)])
def test_fix_translation_and_lexicographic_witness(q, n, M):
    S, dirs = full(q, n)
    classes = dirs[:M]
    on = exact_min_kakeya(S, classes)
    off = exact_min_kakeya(S, classes, fix_translation=False)
    assert on.min_size == off.min_size == min(coset_tuple_sizes(S, classes))
    # without the translation fix the witness is the smallest optimal tuple overall
    lines = [S.coset_lines(d) for d in classes]
    best = None
    for combo in itertools.product(*[range(len(ls)) for ls in lines]):
        pts = set()
        for k, i in enumerate(combo):
            pts.update(lines[k][i].points)
        if len(pts) == off.min_size:
            best = combo
            break
    assert off.choice == best
    assert on.choice[0] == 0


def test_permutation_invariance():
    S, dirs = full(3, 2)
    ref = exact_min_kakeya(S, dirs)
    for perm in itertools.permutations(dirs):
        r = exact_min_kakeya(S, perm)
        assert (r.min_size, r.choice) == (ref.min_size, ref.choice)


def test_translation_invariance():
    S, dirs = full(3, 2)
    r = exact_min_kakeya(S, dirs, fix_translation=False)
    for t in S.vectors():
        moved = S.translate(r.kakeya_set, t)
        assert len(moved) == r.min_size
        assert is_kakeya(S, moved, dirs).ok


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 3), (4, 2), (5, 2)])
def test_witness_is_point_minimal(q, n):
    S, dirs = full(q, n)
    r = exact_min_kakeya(S, dirs)
    K = r.kakeya_set
    assert is_kakeya(S, K, dirs).ok
    for c in K:
        smaller = K.copy()
        smaller.discard(c)
        assert not is_kakeya(S, smaller, dirs).ok
    assert [ln.direction for ln in r.witness] == list(r.classes)


def test_witness_line_removal_can_leave_union_unchanged():
    # a minimum set need not decompose uniquely: in GF(2)^2 the third line is
    # covered by the other two
    S, dirs = full(2, 2)
    r = exact_min_kakeya(S, dirs)
    rest = PointSet(4)
    for ln in r.witness[:2]:
        rest.add_line(ln)
    assert rest == r.kakeya_set


@pytest.mark.parametrize("q,n", [(3, 2), (2, 3), (4, 2)])
def test_parallel_matches_sequential(q, n):
    S, dirs = full(q, n)
    seq = exact_min_kakeya(S, dirs)
    par = exact_min_kakeya(S, dirs, threads=3)
    assert (par.min_size, par.choice) == (seq.min_size, seq.choice)
    off_seq = exact_min_kakeya(S, dirs, fix_translation=False)
    off_par = exact_min_kakeya(S, dirs, fix_translation=False, threads=2)
    assert (off_par.min_size, off_par.choice) == (off_seq.min_size, off_seq.choice)


def test_budget_exceeded():
    S, dirs = full(5, 2)
    r = exact_min_kakeya(S, dirs, node_budget=10)
    assert r.status == BUDGET_EXCEEDED and not r.optimal
    assert r.min_size >= 17  # incumbent is only an upper bound
    assert is_kakeya(S, r.kakeya_set, dirs).ok
    with pytest.raises(BudgetExceeded):
        sandwich_check(S, dirs, node_budget=10)


@pytest.mark.parametrize("q,n,bounds", [(2, 2, (3, 3, 3)), (3, 2, (6, 7, 7)), (2, 3, (5, 5, 6))])
def test_sandwich_examples(q, n, bounds):
    S, dirs = full(q, n)
    rep = sandwich_check(S, dirs)
    assert (rep.lb_integer, rep.min_size, rep.ub_existence) == bounds
    assert rep.holds


def test_sandwich_random_subsets():
    rng = random.Random(77)
    for q, n in [(3, 2), (4, 2), (2, 3), (5, 2), (2, 4)]:
        S, dirs = full(q, n)
        for _ in range(4):
            classes = rng.sample(dirs, rng.randint(1, min(len(dirs), 7)))
            rep = sandwich_check(S, classes)
            assert rep.holds
