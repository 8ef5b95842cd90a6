"""Ordinal arithmetic below epsilon-zero, interval sets of ordinals, finite
partition calculus, and checked derivations of pair partition statements."""

from .derivation import (
    Derivation,
    Statement,
    em_headline,
    larson_instance,
    verify_derivation,
)
from .expr import parse_ordinal, render
from .intervals import IntervalSet, order_type, parse_interval_set
from .ordinal import OMEGA, ONE, ZERO, Ordinal, from_natural, omega_pow, to_natural

w = OMEGA

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "w",
    "from_natural",
    "to_natural",
    "omega_pow",
    "parse_ordinal",
    "render",
    "IntervalSet",
    "order_type",
    "parse_interval_set",
    "Statement",
    "Derivation",
    "em_headline",
    "larson_instance",
    "verify_derivation",
]
