"""Random line-union construction and its expected size.

One uniformly random line per direction class is added in turn.  The
expected size after i lines obeys

    theta_1 = q,    theta_i = theta_{i-1} * (1 - 1/q^(n-1)) + q,

which is evaluated here both recursively and in closed form, in exact
rational arithmetic.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .rng import SplitMix64, derive_seed
from .space import AffineSpace, DirectionClass, PointSet, SpaceError


@dataclass
class ConstructionOutcome:
    seed: int
    classes: tuple[DirectionClass, ...]
    witnesses: tuple[int, ...]  # sampled base point Y_i per class
    kakeya_set: PointSet
    trajectory: tuple[int, ...]  # #S_1, ..., #S_M

    @property
    def size(self) -> int:
        return len(self.kakeya_set)


@dataclass(frozen=True)
class ThetaTable:
    q: int
    n: int
    M: int
    values: tuple[Fraction, ...]  # theta_1 .. theta_M

    @property
    def floats(self) -> list[float]:
        return [float(v) for v in self.values]

    @property
    def last(self) -> Fraction:
        return self.values[-1]


def check_classes(space: AffineSpace, classes) -> tuple[DirectionClass, ...]:
    classes = tuple(classes)
    if not classes:
        raise SpaceError("need at least one direction class")
    seen = set()
    for d in classes:
        if space.canonicalize_direction(d.rep) != d:
            raise SpaceError(f"direction {list(d.rep)} is not canonical")
        if d in seen:
            raise SpaceError(f"direction {list(d.rep)} repeated")
        seen.add(d)
    return classes


def build_random_kakeya(space: AffineSpace, classes, seed: int) -> ConstructionOutcome:
    """Union of lines L(x_j, Y_j), with Y_j drawn from the substream (seed, j)."""
    classes = check_classes(space, classes)
    mask = 0
    bases, trajectory = [], []
    for j, d in enumerate(classes):
        y = SplitMix64(derive_seed(seed, j)).below(space.size)
        bases.append(y)
        for c in space.line_codes(d.rep, space.decode(y)):
            mask |= 1 << c
        trajectory.append(mask.bit_count())
    return ConstructionOutcome(
        seed=seed,
        classes=classes,
        witnesses=tuple(bases),
        kakeya_set=PointSet(space.size, mask=mask),
        trajectory=tuple(trajectory),
    )


def _shrink(q: int, n: int) -> Fraction:
    # 1 - 1/q^(n-1); zero when n == 1
    return 1 - Fraction(1, q ** (n - 1))


def theta_recursive(q: int, n: int, M: int) -> ThetaTable:
    if M < 1:
        raise ValueError("M must be >= 1")
    a = _shrink(q, n)
    vals = [Fraction(q)]
    for _ in range(M - 1):
        vals.append(vals[-1] * a + q)
    return ThetaTable(q, n, M, tuple(vals))


def theta_closed(q: int, n: int, M: int) -> Fraction:
    """a^(M-1) q + q^n (1 - a^(M-1)) with a = 1 - 1/q^(n-1), 0^0 = 1."""
    if M < 1:
        raise ValueError("M must be >= 1")
    aM = _shrink(q, n) ** (M - 1)
    return aM * q + q**n * (1 - aM)


@dataclass
class MonteCarloResult:
    trials: int
    master_seed: int
    total: int
    total_sq: int
    histogram: dict = field(default_factory=dict)  # final size -> count

    @property
    def mean(self) -> float:
        return self.total / self.trials

    @property
    def sample_variance(self) -> float | None:
        if self.trials < 2:
            return None
        n = self.trials
        return float(Fraction(self.total_sq * n - self.total**2, n * (n - 1)))

    @property
    def std_error(self) -> float | None:
        v = self.sample_variance
        return None if v is None else math.sqrt(v / self.trials)


def _mc_chunk(space, classes, master_seed, start, stop):
    hist = Counter()
    for t in range(start, stop):
        out = build_random_kakeya(space, classes, derive_seed(master_seed, t))
        hist[out.size] += 1
    return hist


def monte_carlo(space: AffineSpace, classes, trials: int, master_seed: int,
                threads: int = 1, chunk: int = 1000) -> MonteCarloResult:
    """Repeat the construction; trial t uses seed derive_seed(master_seed, t).

    Statistics are integer sums, so the result does not depend on how the
    trials are split across worker processes.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    classes = check_classes(space, classes)
    ranges = [(s, min(s + chunk, trials)) for s in range(0, trials, chunk)]
    hist = Counter()
    if threads > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            futs = [ex.submit(_mc_chunk, space, classes, master_seed, a, b) for a, b in ranges]
            for f in futs:
                hist.update(f.result())
    else:
        for a, b in ranges:
            hist.update(_mc_chunk(space, classes, master_seed, a, b))
    total = sum(s * c for s, c in hist.items())
    total_sq = sum(s * s * c for s, c in hist.items())
    return MonteCarloResult(trials, master_seed, total, total_sq, dict(sorted(hist.items())))
