"""Exact algebraic completion of Laurent-polynomial images of the unit circle."""

__version__ = "0.1.0"

from .classify import ClassificationReport, Verdict, classify, condition_b, line_condition, top_form_positive
from .construct import SingletonSpec, build_singleton_example, lagrange_interpolate
from .errors import (
    ConstructionError,
    DegenerateInputError,
    InputError,
    InternalConsistencyError,
    PoleError,
    RealizationError,
)
from .intersect import BoundReport, analyze_pair, common_factor, intersection_bound
from .numcore import GaussianRational
from .poly import BivariatePolynomial, LaurentPolynomial, circle_point, normalize_orientation
from .resultant import compute_h

__all__ = [
    "__version__",
    "GaussianRational",
    "LaurentPolynomial",
    "BivariatePolynomial",
    "circle_point",
    "normalize_orientation",
    "compute_h",
    "classify",
    "line_condition",
    "condition_b",
    "top_form_positive",
    "ClassificationReport",
    "Verdict",
    "SingletonSpec",
    "build_singleton_example",
    "lagrange_interpolate",
    "intersection_bound",
    "common_factor",
    "analyze_pair",
    "BoundReport",
    "InputError",
    "DegenerateInputError",
    "PoleError",
    "InternalConsistencyError",
    "RealizationError",
    "ConstructionError",
]
