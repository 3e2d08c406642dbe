"""Points, directions and lines of the affine space F^n.

A point is stored as its integer code sum(coords[i] * q**i), so coordinate 0
is least significant.  Directions are nonzero vectors up to nonzero scaling;
the canonical representative has its lowest-index nonzero coordinate equal
to 1.  A line is a coset of the span of a direction and is named by its
smallest point code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .field import FieldSpec, make_field

MAX_POINTS = 2**24


class SpaceError(ValueError):
    """Bad vector, zero direction, or a space above the size ceiling."""


@dataclass(frozen=True, order=True)
class DirectionClass:
    """Canonical representative of a projective point.

    Ordering is by the point code of the representative.
    """

    code: int
    rep: tuple[int, ...]


@dataclass(frozen=True)
class LineSpec:
    direction: DirectionClass
    base: int  # smallest point code on the line
    points: tuple[int, ...]  # sorted ascending

    @property
    def mask(self) -> int:
        m = 0
        for c in self.points:
            m |= 1 << c
        return m


class PointSet:
    """Dense membership over [0, q^n), backed by an integer bitmask."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: int, codes=(), mask: int = 0):
        if universe > MAX_POINTS:
            raise SpaceError(f"q^n={universe} exceeds the point ceiling {MAX_POINTS}")
        self.universe = universe
        for c in codes:
            if not 0 <= c < universe:
                raise SpaceError(f"point code {c} outside [0, {universe})")
            mask |= 1 << c
        if mask >> universe:
            raise SpaceError(f"mask has points outside [0, {universe})")
        self.mask = mask

    @classmethod
    def full(cls, universe: int) -> PointSet:
        return cls(universe, mask=(1 << universe) - 1)

    def __len__(self):
        return self.mask.bit_count()

    @property
    def size(self) -> int:
        return len(self)

    def __contains__(self, code):
        return 0 <= code < self.universe and bool(self.mask >> code & 1)

    def __iter__(self):
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.universe == other.universe and self.mask == other.mask

    def __repr__(self):
        return f"PointSet(universe={self.universe}, size={len(self)})"

    def add(self, code: int):
        if not 0 <= code < self.universe:
            raise SpaceError(f"point code {code} outside [0, {self.universe})")
        self.mask |= 1 << code

    def discard(self, code: int):
        self.mask &= ~(1 << code)

    def add_line(self, line: LineSpec):
        self.mask |= line.mask

    def contains_line(self, line: LineSpec) -> bool:
        lm = line.mask
        return self.mask & lm == lm

    def issubset(self, other: PointSet) -> bool:
        return self.mask & ~other.mask == 0

    def copy(self) -> PointSet:
        return PointSet(self.universe, mask=self.mask)

    def codes(self) -> list[int]:
        return list(self)


class AffineSpace:
    """F^n over a fixed field.  Immutable after construction."""

    def __init__(self, field: FieldSpec, n: int):
        if n < 1:
            raise SpaceError(f"dimension n={n} must be >= 1")
        if field.q**n > MAX_POINTS:
            raise SpaceError(f"q^n={field.q}^{n} exceeds the point ceiling {MAX_POINTS}")
        self.field = field
        self.n = n
        self.q = field.q
        self.size = field.q**n
        self._weights = tuple(self.q**i for i in range(n))

    @classmethod
    def of(cls, p: int, m: int, n: int) -> AffineSpace:
        return cls(make_field(p, m), n)

    def __repr__(self):
        return f"AffineSpace({self.field}, n={self.n})"

    def __eq__(self, other):
        return isinstance(other, AffineSpace) and (self.field, self.n) == (other.field, other.n)

    def __hash__(self):
        return hash((self.field, self.n))

    # -- vectors --

    def check_vector(self, v) -> tuple[int, ...]:
        v = tuple(v)
        if len(v) != self.n:
            raise SpaceError(f"vector {list(v)} has length {len(v)}, expected n={self.n}")
        for c in v:
            self.field.check(c)
        return v

    def encode(self, v) -> int:
        return sum(c * w for c, w in zip(v, self._weights))

    def decode(self, code: int) -> tuple[int, ...]:
        if not 0 <= code < self.size:
            raise SpaceError(f"point code {code} outside [0, {self.size})")
        out = []
        for _ in range(self.n):
            code, r = divmod(code, self.q)
            out.append(r)
        return tuple(out)

    def points(self):
        return range(self.size)

    def vectors(self):
        """All vectors of F^n in point-code order."""
        for coords in itertools.product(range(self.q), repeat=self.n):
            yield tuple(reversed(coords))

    def nonzero_vectors(self):
        it = self.vectors()
        next(it)
        return it

    def scale(self, a: int, v) -> tuple[int, ...]:
        f = self.field
        if f.mul_table is not None:
            row = f.mul_table[a]
            return tuple(row[c] for c in v)
        return tuple(f.mul(a, c) for c in v)

    def vadd(self, u, v) -> tuple[int, ...]:
        f = self.field
        if f.add_table is not None:
            t = f.add_table
            return tuple(t[a][b] for a, b in zip(u, v))
        return tuple(f.add(a, b) for a, b in zip(u, v))

    def vsub(self, u, v) -> tuple[int, ...]:
        f = self.field
        return self.vadd(u, tuple(f.neg(c) for c in v))

    # -- directions --

    def canonicalize_direction(self, v) -> DirectionClass:
        v = self.check_vector(v)
        for c in v:
            if c:
                rep = self.scale(self.field.inv(c), v)
                return DirectionClass(self.encode(rep), rep)
        raise SpaceError("zero vector has no direction")

    def are_equivalent(self, u, v) -> bool:
        return self.canonicalize_direction(u) == self.canonicalize_direction(v)

    def direction(self, rep) -> DirectionClass:
        """A DirectionClass for rep, which must already be canonical."""
        d = self.canonicalize_direction(rep)
        if d.rep != tuple(rep):
            raise SpaceError(f"{list(rep)} is not a canonical direction; use {list(d.rep)}")
        return d

    def enumerate_directions(self) -> list[DirectionClass]:
        """All (q^n - 1)/(q - 1) classes, sorted by point code."""
        out = []
        q, n = self.q, self.n
        # canonical reps: zeros below index k, 1 at k, anything above
        for k in range(n):
            for tail in itertools.product(range(q), repeat=n - k - 1):
                rep = (0,) * k + (1,) + tuple(reversed(tail))
                out.append(DirectionClass(self.encode(rep), rep))
        out.sort()
        return out

    # -- lines --

    def _scaled(self, x) -> list[tuple[int, ...]]:
        return [self.scale(a, x) for a in range(self.q)]

    def _offsets(self, scaled, y) -> list[int]:
        """Codes of y + s for each s in scaled."""
        if self.field.p == 2:
            # characteristic 2: coordinate addition is XOR of base-2^m digits
            yc = self.encode(y)
            return [yc ^ self.encode(s) for s in scaled]
        return [self.encode(self.vadd(y, s)) for s in scaled]

    def line_codes(self, x, y) -> list[int]:
        """Codes of y + a*x for a = 0..q-1, in that order."""
        return self._offsets(self._scaled(x), y)

    def line_points(self, x, y) -> LineSpec:
        """The line {y + a*x : a in F}."""
        d = self.canonicalize_direction(x)
        y = self.check_vector(y)
        pts = tuple(sorted(self.line_codes(d.rep, y)))
        return LineSpec(d, pts[0], pts)

    def line_through(self, d: DirectionClass, base: int) -> LineSpec:
        pts = tuple(sorted(self.line_codes(d.rep, self.decode(base))))
        return LineSpec(d, pts[0], pts)

    def coset_lines(self, d: DirectionClass) -> list[LineSpec]:
        """The q^(n-1) parallel lines of direction d, sorted by base."""
        k = next(i for i, c in enumerate(d.rep) if c)
        q, n = self.q, self.n
        lines = []
        if self.field.p == 2:
            offs = [self.encode(s) for s in self._scaled(d.rep)]
        else:
            scaled = self._scaled(d.rep)
        # each coset has exactly one point whose coordinate k is zero
        for rest in itertools.product(range(q), repeat=n - 1):
            y = rest[:k] + (0,) + rest[k:]
            if self.field.p == 2:
                yc = self.encode(y)
                pts = tuple(sorted(yc ^ o for o in offs))
            else:
                pts = tuple(sorted(self._offsets(scaled, y)))
            lines.append(LineSpec(d, pts[0], pts))
        lines.sort(key=lambda ln: ln.base)
        return lines

    def translate(self, pts: PointSet, t) -> PointSet:
        t = self.check_vector(t)
        return PointSet(self.size, (self.encode(self.vadd(self.decode(c), t)) for c in pts))

    def empty_set(self) -> PointSet:
        return PointSet(self.size)
