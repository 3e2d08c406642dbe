"""Exact minimum Kakeya sets by branch-and-bound over coset choices.

A minimum Kakeya set for M pairwise non-equivalent directions is a union of
one line per direction, so the search picks one of the q^(n-1) parallel
lines (cosets) for each class.  Classes are taken in sorted order and cosets
in order of their smallest point; a partial union is abandoned as soon as it
is no smaller than the incumbent.  The incumbent only changes on strict
improvement, so the reported witness is the lexicographically smallest
optimal coset tuple.

With ``fix_translation`` the first class is pinned to the coset through the
origin.  Translations permute the cosets of each direction transitively and
preserve sizes, so this loses no optimum and divides the search by q^(n-1).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import lower_bound_integer, lower_bound_paper, upper_bound_paper
from .construct import check_classes, theta_closed
from .space import AffineSpace, DirectionClass, LineSpec, PointSet

OPTIMAL = "optimal"
BUDGET_EXCEEDED = "budget_exceeded"


class BudgetExceeded(RuntimeError):
    """The node budget ran out before optimality was proven."""

    def __init__(self, result):
        super().__init__(f"node budget exhausted after {result.nodes_explored} nodes; "
                         f"best size found {result.min_size}")
        self.result = result


@dataclass(frozen=True)
class ExactResult:
    classes: tuple[DirectionClass, ...]
    min_size: int  # an upper bound only when status is budget_exceeded
    choice: tuple[int, ...]  # coset index per class
    witness: tuple[LineSpec, ...]
    nodes_explored: int
    status: str
    universe: int

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    @property
    def kakeya_set(self) -> PointSet:
        pts = PointSet(self.universe)
        for line in self.witness:
            pts.add_line(line)
        return pts


class _OutOfBudget(Exception):
    pass


def _search(masks, prefix, best, best_choice, budget):
    """DFS below a fixed prefix.  Returns (best, best_choice, nodes, exhausted)."""
    M = len(masks)
    nodes = 0
    choice = list(prefix)
    state = {"best": best, "choice": best_choice}

    def go(depth, mask):
        nonlocal nodes
        for i, m in enumerate(masks[depth]):
            nodes += 1
            if budget is not None and nodes > budget:
                raise _OutOfBudget
            nm = mask | m
            s = nm.bit_count()
            if s >= state["best"]:
                continue
            choice.append(i)
            if depth + 1 == M:
                state["best"] = s
                state["choice"] = tuple(choice)
            else:
                go(depth + 1, nm)
            choice.pop()

    start = 0
    for d, i in enumerate(prefix):
        start |= masks[d][i]
    exhausted = False
    try:
        if len(prefix) == M:
            s = start.bit_count()
            if s < state["best"]:
                state["best"], state["choice"] = s, tuple(prefix)
        else:
            go(len(prefix), start)
    except _OutOfBudget:
        exhausted = True
        nodes = budget
    return state["best"], state["choice"], nodes, exhausted


def exact_min_kakeya(space: AffineSpace, classes, node_budget: int | None = None,
                     fix_translation: bool = True, threads: int = 1) -> ExactResult:
    """Minimum size of a Kakeya set with respect to the given classes.

    ``threads > 1`` splits the search into independent top-level branches run
    in worker processes; each branch gets an equal share of the node budget
    and starts from the same seed incumbent, and the reduction picks the
    smallest size then the smallest coset tuple, which reproduces the
    sequential answer.  Node counts differ from the sequential run.
    """
    classes = tuple(sorted(check_classes(space, classes)))
    lines = [space.coset_lines(d) for d in classes]
    M = len(classes)

    def result(size, choice, nodes, status):
        return ExactResult(classes, size, tuple(choice),
                           tuple(lines[k][i] for k, i in enumerate(choice)),
                           nodes, status, space.size)

    if space.n == 1:
        # every line is the whole of F
        return result(space.q, (0,) * M, 0, OPTIMAL)

    masks = [[ln.mask for ln in ls] for ls in lines]
    # seed: the all-first tuple, which is also the first leaf of the DFS
    seed_choice = (0,) * M
    seed_mask = 0
    for ms in masks:
        seed_mask |= ms[0]
    seed_best = seed_mask.bit_count()

    roots = [(0,)] if fix_translation else [(i,) for i in range(len(masks[0]))]
    if threads > 1 and M > 1:
        if fix_translation:
            roots = [(0, i) for i in range(len(masks[1]))]
        share = None if node_budget is None else -(-node_budget // len(roots))
        with ProcessPoolExecutor(max_workers=threads) as ex:
            futs = [ex.submit(_search, masks, r, seed_best, seed_choice, share) for r in roots]
            parts = [f.result() for f in futs]
        best, choice = min((b, c) for b, c, _, _ in parts)
        nodes = sum(p[2] for p in parts)
        exhausted = any(p[3] for p in parts)
    else:
        best, choice = seed_best, seed_choice
        nodes, exhausted = 0, False
        for r in roots:
            remaining = None if node_budget is None else node_budget - nodes
            # a root assignment is a node too
            if remaining is not None and remaining < 1:
                exhausted = True
                break
            nodes += 1
            b, c, k, ex_ = _search(masks, r, best, choice,
                                   None if remaining is None else remaining - 1)
            best, choice = b, c
            nodes += k
            if ex_:
                exhausted = True
                break
    return result(best, choice, nodes, BUDGET_EXCEEDED if exhausted else OPTIMAL)


def search_space_size(space: AffineSpace, M: int, fix_translation: bool = True) -> int:
    per = space.q ** (space.n - 1)
    return per ** (M - 1 if fix_translation else M)


@dataclass(frozen=True)
class SandwichReport:
    q: int
    n: int
    M: int
    lb_paper: float
    lb_integer: int
    min_size: int
    ub_existence: int
    ub_paper: float

    @property
    def holds(self) -> bool:
        return (self.lb_integer <= self.min_size <= self.ub_existence
                <= math.ceil(self.ub_paper))


def sandwich_check(space: AffineSpace, classes, node_budget: int | None = None,
                   threads: int = 1) -> SandwichReport:
    """Place the exact minimum between the integer lower bound and floor(theta_M).

    lb_paper is reported but never compared with the minimum.
    """
    res = exact_min_kakeya(space, classes, node_budget=node_budget, threads=threads)
    if not res.optimal:
        raise BudgetExceeded(res)
    q, n, M = space.q, space.n, len(res.classes)
    rep = SandwichReport(
        q=q, n=n, M=M,
        lb_paper=lower_bound_paper(q, M),
        lb_integer=lower_bound_integer(q, M),
        min_size=res.min_size,
        ub_existence=math.floor(theta_closed(q, n, M)),
        ub_paper=upper_bound_paper(q, n, M),
    )
    if not rep.holds:
        raise AssertionError(f"sandwich violated: {rep}")
    return rep
