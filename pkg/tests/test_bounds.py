import math
from fractions import Fraction

import pytest

from kakeya.bounds import (bounds_report, eps_M, epsilon_bounds, lower_bound_integer,
                           lower_bound_paper, upper_bound_exact, upper_bound_paper)
from kakeya.construct import theta_closed


def test_lower_bound_paper_examples():
    assert lower_bound_paper(3, 4) == 6.0
    assert lower_bound_paper(2, 3) == pytest.approx(2 * math.sqrt(3), abs=1e-12)
    # q*sqrt(M) = 6, sqrt(M) > q so the min term is active: 6 + (2 - 3)
    assert lower_bound_paper(2, 9) == 5.0


def _lb_int_oracle(q, M):
    vals = []
    for t in range(1, M + 1):
        first = Fraction(M * q, t)
        first = math.ceil(first)
        vals.append(min(first, (q - 1) * (t + 1) + 1))
    return max(vals)


@pytest.mark.parametrize("q,M,expected", [(2, 3, 3), (3, 4, 6), (2, 7, 5)])
def test_lower_bound_integer_examples(q, M, expected):
    assert lower_bound_integer(q, M) == expected


def test_lower_bound_integer_matches_oracle():
    for q in (2, 3, 4, 5, 7, 8, 9, 16):
        for M in range(1, 80):
            assert lower_bound_integer(q, M) == _lb_int_oracle(q, M)


def test_upper_bound_paper_examples():
    assert upper_bound_paper(3, 2, 4) == pytest.approx(28 / 3, abs=1e-12)
    assert upper_bound_exact(3, 2, 4) == Fraction(28, 3)
    assert upper_bound_paper(2, 2, 3) == 5.0
    for q, n in [(2, 2), (7, 3), (5, 1)]:
        assert upper_bound_paper(q, n, 1) == q


def test_upper_bound_n1():
    # a = 0; 0^0 = 1 at M = 1, else the bound is q + q
    assert upper_bound_paper(3, 1, 1) == 3
    assert upper_bound_paper(3, 1, 2) == 6


def test_epsilon_example():
    e = epsilon_bounds(3, 2, 1)
    assert e.Delta == pytest.approx(2.0, abs=1e-12)
    assert e.ub_eps == pytest.approx(3 + 9 * (1 - math.exp(-2)), abs=1e-12)
    assert e.M == 4


def test_epsilon_domain():
    with pytest.raises(ValueError, match="q\\^\\(n-1\\)"):
        epsilon_bounds(2, 1, 0.5)
    with pytest.raises(ValueError):
        epsilon_bounds(3, 2, 0)
    with pytest.raises(ValueError):
        epsilon_bounds(3, 2, 1.5)


def test_epsilon_limit():
    for q, n in [(3, 2), (2, 3), (7, 2)]:
        assert epsilon_bounds(q, n, 1e-6).ub_eps == pytest.approx(q, abs=1e-3)


def test_ub_paper_dominates_theta():
    for q in (2, 3, 4, 5, 7):
        for n in (1, 2, 3):
            for M in range(1, 40):
                assert upper_bound_exact(q, n, M) >= theta_closed(q, n, M)


def test_ub_eps_dominates_ub_paper():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in (2, 3, 4):
            if q ** (n - 1) < 2:
                continue
            for k in range(1, 11):
                eps = Fraction(k, 10)
                e = epsilon_bounds(q, n, eps)
                M = eps_M(q, n, eps)
                assert e.ub_eps >= upper_bound_paper(q, n, M) - 1e-9


def test_report_flags():
    r = bounds_report(2, 2, 3)
    assert r.lb_paper_unsound and r.lb_integer == 3 and r.ub_existence == 3
    r = bounds_report(3, 2, 4)
    assert not r.lb_paper_unsound
    assert (r.lb_integer, r.ub_existence) == (6, 7)
    assert r.theta_M == Fraction(65, 9)


def test_invariant_chain():
    for q in (2, 3, 4, 5):
        for n in (2, 3):
            for M in range(1, (q**n - 1) // (q - 1) + 1):
                r = bounds_report(q, n, M)
                assert r.lb_integer <= r.ub_existence
                assert q <= r.ub_existence <= r.theta_M <= upper_bound_exact(q, n, M)
