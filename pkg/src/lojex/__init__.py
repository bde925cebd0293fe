"""Exact Lojasiewicz exponents of weighted homogeneous polynomials in two real variables."""

from .bipoly import BiPoly, UniPoly, sturm_real_root_count, uni_gcd
from .exponent import (
    INF,
    ExponentResult,
    PathCandidate,
    analyze,
    complex_exponent,
    lojasiewicz_exponent,
    path_oracle,
    sufficiency_degree,
)
from .numeric import EstimateConfig, EstimateReport, check_weighted_bounds, estimate_exponent
from .parse import ParseError, format_polynomial, parse_polynomial
from .signature import CaseClassification, classify, containment_condition, is_nondegenerate
from .wfilter import (
    NotWeightedHomogeneous,
    UnderdeterminedWeights,
    WeightError,
    WeightSystem,
    check_euler_identity,
    infer_weights,
    validate_weights,
    weighted_parts,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "UniPoly",
    "sturm_real_root_count",
    "uni_gcd",
    "INF",
    "ExponentResult",
    "PathCandidate",
    "analyze",
    "complex_exponent",
    "lojasiewicz_exponent",
    "path_oracle",
    "sufficiency_degree",
    "EstimateConfig",
    "EstimateReport",
    "check_weighted_bounds",
    "estimate_exponent",
    "ParseError",
    "format_polynomial",
    "parse_polynomial",
    "CaseClassification",
    "classify",
    "containment_condition",
    "is_nondegenerate",
    "NotWeightedHomogeneous",
    "UnderdeterminedWeights",
    "WeightError",
    "WeightSystem",
    "check_euler_identity",
    "infer_weights",
    "validate_weights",
    "weighted_parts",
]
