"""Reduce a direction set T to pairwise non-equivalent representatives."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .space import AffineSpace, DirectionClass, SpaceError


@dataclass(frozen=True)
class ExtractionResult:
    q: int
    classes: tuple[DirectionClass, ...]
    class_sizes: dict  # DirectionClass -> members of T in that class
    M_paper: Fraction  # #T / (q - 1), possibly fractional
    M_exact: int  # number of distinct classes

    @property
    def exact_flag(self) -> bool:
        """True when T is a union of whole classes, so both M agree."""
        return bool(self.class_sizes) and all(
            s == self.q - 1 for s in self.class_sizes.values()
        )


def extract(space: AffineSpace, T) -> ExtractionResult:
    """Group T by direction class.

    Unlike a greedy pick, the result does not depend on the order of T:
    classes come back sorted by the code of their representative.
    """
    seen = set()
    counts = Counter()
    for v in T:
        v = space.check_vector(v)
        if v in seen:
            raise SpaceError(f"duplicate vector {list(v)} in T")
        seen.add(v)
        counts[space.canonicalize_direction(v)] += 1
    classes = tuple(sorted(counts))
    return ExtractionResult(
        q=space.q,
        classes=classes,
        class_sizes={d: counts[d] for d in classes},
        M_paper=Fraction(len(seen), space.q - 1),
        M_exact=len(classes),
    )


def full_T(space: AffineSpace) -> list[tuple[int, ...]]:
    """Every nonzero vector of F^n."""
    return list(space.nonzero_vectors())


def class_members(space: AffineSpace, d: DirectionClass) -> list[tuple[int, ...]]:
    """The q - 1 nonzero multiples of d."""
    return [space.scale(a, d.rep) for a in range(1, space.q)]
