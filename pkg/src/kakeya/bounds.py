"""Lower and upper bounds on the minimum size of a local Kakeya set.

M is always passed explicitly: it is the number of pairwise non-equivalent
directions the bound is applied to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .construct import theta_closed

LB_PAPER_NOTE = "formula as printed; not sound for non-integer √M"


def _check_qM(q, M):
    if q < 2:
        raise ValueError(f"q={q} must be >= 2")
    if M < 1:
        raise ValueError(f"M={M} must be >= 1")


def lower_bound_paper(q: int, M) -> float:
    """q*sqrt(M) + min(0, q - sqrt(M)), i.e. the incidence bound at t = sqrt(M)."""
    _check_qM(q, M)
    r = math.sqrt(M)
    return q * r + min(0.0, q - r)


def lower_bound_integer(q: int, M: int) -> int:
    """Max over integer t in [1, M] of min(ceil(Mq/t), (q-1)(t+1) + 1).

    For each t, either every point of K lies on at most t of the M lines
    (so #K >= Mq/t, and #K is an integer) or some point lies on t+1 lines
    that pairwise meet only there.
    """
    _check_qM(q, M)
    best = 0
    for t in range(1, M + 1):
        v = min(-(-M * q // t), (q - 1) * (t + 1) + 1)
        best = max(best, v)
    return best


def upper_bound_exact(q: int, n: int, M: int) -> Fraction:
    """q + q^n (1 - (1 - 1/q^(n-1))^(M-1)) as a rational."""
    _check_qM(q, M)
    if n < 1:
        raise ValueError(f"n={n} must be >= 1")
    a = 1 - Fraction(1, q ** (n - 1))
    return q + q**n * (1 - a ** (M - 1))


def upper_bound_paper(q: int, n: int, M: int) -> float:
    return float(upper_bound_exact(q, n, M))


@dataclass(frozen=True)
class EpsilonBounds:
    eps: float
    M: float  # eps (q^n - 1)/(q - 1), not rounded
    Delta: float
    ub_eps: float


def epsilon_bounds(q: int, n: int, eps) -> EpsilonBounds:
    """Upper bound q + q^n (1 - e^-Delta) when M = eps (q^n - 1)/(q - 1).

    Delta = q eps/(q - 1) * (1 + 1/q^(n-1)).  Relies on 1 - x >= e^(-x - x^2),
    valid only for 0 < x <= 1/2, hence q^(n-1) >= 2.
    """
    if q < 2 or n < 1:
        raise ValueError(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    if not 0 < eps <= 1:
        raise ValueError(f"eps={eps} must lie in (0, 1]")
    if q ** (n - 1) < 2:
        raise ValueError(
            f"q^(n-1)={q ** (n - 1)} < 2: the estimate 1-x >= exp(-x-x^2) needs x = 1/q^(n-1) <= 1/2"
        )
    e = Fraction(eps)
    M = e * (q**n - 1) / (q - 1)
    delta = Fraction(q) * e / (q - 1) * (1 + Fraction(1, q ** (n - 1)))
    d = float(delta)
    return EpsilonBounds(float(eps), float(M), d, q + q**n * -math.expm1(-d))


def eps_M(q: int, n: int, eps) -> int:
    """Smallest integer M >= eps (q^n - 1)/(q - 1) (and >= 1)."""
    e = Fraction(eps)
    return max(1, math.ceil(e * (q**n - 1) / (q - 1)))


@dataclass(frozen=True)
class BoundsReport:
    q: int
    n: int
    M: int
    lb_paper: float
    lb_integer: int
    theta_M: Fraction
    ub_paper: float
    eps: EpsilonBounds | None = None

    @property
    def ub_existence(self) -> int:
        """A Kakeya set of at most floor(theta_M) points exists."""
        return math.floor(self.theta_M)

    @property
    def lb_paper_unsound(self) -> bool:
        return self.lb_paper > self.lb_integer


def bounds_report(q: int, n: int, M: int, eps=None) -> BoundsReport:
    return BoundsReport(
        q=q,
        n=n,
        M=M,
        lb_paper=lower_bound_paper(q, M),
        lb_integer=lower_bound_integer(q, M),
        theta_M=theta_closed(q, n, M),
        ub_paper=upper_bound_paper(q, n, M),
        eps=None if eps is None else epsilon_bounds(q, n, eps),
    )
