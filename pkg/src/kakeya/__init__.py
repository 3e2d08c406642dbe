"""Construction, verification and bounds for local finite-field Kakeya sets."""

__version__ = "0.1.0"

from .bounds import (bounds_report, epsilon_bounds, lower_bound_integer,
                     lower_bound_paper, upper_bound_paper)
from .construct import build_random_kakeya, monte_carlo, theta_closed, theta_recursive
from .exact import exact_min_kakeya, sandwich_check
from .extraction import extract
from .field import FieldError, FieldSpec, make_field
from .space import AffineSpace, DirectionClass, LineSpec, PointSet, SpaceError
from .verify import is_kakeya

__all__ = [
    "AffineSpace", "DirectionClass", "FieldError", "FieldSpec", "LineSpec", "PointSet",
    "SpaceError", "bounds_report", "build_random_kakeya", "epsilon_bounds",
    "exact_min_kakeya", "extract", "is_kakeya", "lower_bound_integer",
    "lower_bound_paper", "make_field", "monte_carlo", "sandwich_check", "theta_closed",
    "theta_recursive", "upper_bound_paper",
]
