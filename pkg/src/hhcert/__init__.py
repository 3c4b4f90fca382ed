"""Certified Hermite-Hadamard type bounds, quadrature certificates and inequality audits."""

__version__ = "0.1.0"

from .errors import ConfigurationError, DomainError, IntegrationError
from .fnmodel import (
    ConvexityReport,
    DifferentiableFunction,
    Interval,
    catalog_get,
    check_concavity,
    check_s_convexity,
    parse_function_spec,
)
from .hhbounds import BoundInput, BoundResult, evaluate_bound, hh_bounds_s, lemma3_residual
from .means import PositivePair, all_means, means_chain_check
from .quadrature import (
    Partition,
    QuadratureResult,
    composite_midpoint,
    composite_trapezoid,
    convergence_study,
    midpoint_error_bound,
    reference_integral,
    trapezoid_error_bound,
    uniform_partition,
)
from .special import beta, jagers_bounds, log_gamma

__all__ = [
    "ConfigurationError",
    "DomainError",
    "IntegrationError",
    "ConvexityReport",
    "DifferentiableFunction",
    "Interval",
    "catalog_get",
    "check_concavity",
    "check_s_convexity",
    "parse_function_spec",
    "BoundInput",
    "BoundResult",
    "evaluate_bound",
    "hh_bounds_s",
    "lemma3_residual",
    "PositivePair",
    "all_means",
    "means_chain_check",
    "Partition",
    "QuadratureResult",
    "composite_midpoint",
    "composite_trapezoid",
    "convergence_study",
    "midpoint_error_bound",
    "reference_integral",
    "trapezoid_error_bound",
    "uniform_partition",
    "beta",
    "jagers_bounds",
    "log_gamma",
]
