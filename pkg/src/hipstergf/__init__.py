"""Hipster tree enumeration, bounding series and growth-rate intervals."""

from .families import BoundKind, Family
from .known_gfs import KnownGf
from .recurrences import bound_series, exact_series, family_params, sandwich_report, total_series
from .series import PowerSeries, make_series
from .singularity import find_dominant_singularity, growth_interval
from .trees import PlaneTree, count_hipster, count_total, enumerate_trees, is_hipster

__version__ = "0.1.0"

__all__ = [
    "BoundKind",
    "Family",
    "KnownGf",
    "PlaneTree",
    "PowerSeries",
    "bound_series",
    "count_hipster",
    "count_total",
    "enumerate_trees",
    "exact_series",
    "family_params",
    "find_dominant_singularity",
    "growth_interval",
    "is_hipster",
    "make_series",
    "sandwich_report",
    "total_series",
]
