"""Does a point set contain a full line in every direction of T?"""

from __future__ import annotations

from dataclasses import dataclass

from .space import AffineSpace, DirectionClass, LineSpec, PointSet, SpaceError


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    witness: dict  # DirectionClass -> LineSpec | None
    missing: tuple[DirectionClass, ...]


def _classes(space, T):
    out = set()
    for v in T:
        if isinstance(v, DirectionClass):
            v = v.rep
        out.add(space.canonicalize_direction(v))
    return sorted(out)


def is_kakeya(space: AffineSpace, K: PointSet, T) -> VerifyResult:
    """Scan the parallel lines of each class of T for one lying inside K.

    It suffices to check one vector per class: L(a*x, y) = L(x, y) for a != 0.
    T may hold vectors or DirectionClass objects; zero vectors are rejected.
    """
    if K.universe != space.size:
        raise SpaceError(f"point set universe {K.universe} does not match q^n={space.size}")
    witness: dict[DirectionClass, LineSpec | None] = {}
    missing = []
    km = K.mask
    for d in _classes(space, T):
        found = None
        if len(K) >= space.q:
            for line in space.coset_lines(d):
                lm = line.mask
                if km & lm == lm:
                    found = line
                    break
        witness[d] = found
        if found is None:
            missing.append(d)
    return VerifyResult(not missing, witness, tuple(missing))
