"""Rings of polynomials bounded on monomial tentacle sets."""

from .algebra import Polynomial, evaluate, format_polynomial, parse_polynomial, support
from .boundedring import (
    BoundedMonoid,
    MembershipVerdict,
    WitnessResult,
    bounded_monoid,
    exponent_cone,
    fraction_field_contains,
    is_bounded,
    proper_witness,
    trdeg,
    verify_witness,
)
from .completion2d import (
    CompletionReport,
    Fan2D,
    compatible_completion,
    definiteness_verdict,
    initial_fan,
    insert_ray,
    intersection_matrix,
)
from .oracle import certify_unbounded, consistency_check
from .polyhedra import LatticeCone, MultiplicativeSystem, dual_cone, feasible, hilbert_basis
from .setmodel import (
    MonomialConstraint,
    SetSpec,
    SignRegime,
    Tentacle,
    ValidationError,
    log_model,
    recession_cone,
    validate,
)
from .valuation import MonomialValuation, compatible_with, is_regular_along, value

__version__ = "0.1.0"

__all__ = [
    "BoundedMonoid",
    "CompletionReport",
    "Fan2D",
    "LatticeCone",
    "MembershipVerdict",
    "MonomialConstraint",
    "MonomialValuation",
    "MultiplicativeSystem",
    "Polynomial",
    "SetSpec",
    "SignRegime",
    "Tentacle",
    "ValidationError",
    "WitnessResult",
    "bounded_monoid",
    "certify_unbounded",
    "compatible_completion",
    "compatible_with",
    "consistency_check",
    "definiteness_verdict",
    "dual_cone",
    "evaluate",
    "exponent_cone",
    "feasible",
    "format_polynomial",
    "fraction_field_contains",
    "hilbert_basis",
    "initial_fan",
    "insert_ray",
    "intersection_matrix",
    "is_bounded",
    "is_regular_along",
    "log_model",
    "parse_polynomial",
    "proper_witness",
    "recession_cone",
    "support",
    "trdeg",
    "validate",
    "value",
    "verify_witness",
]
