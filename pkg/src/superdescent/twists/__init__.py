"""Twist equations and the backends that solve them."""

from .bounded import solve_twist_bounded, weierstrass_points_bounded
from .cache import TwistCache, cache_key
from .equations import (
    BINOMIAL_THUE,
    ELLIPTIC_CUBIC,
    GENERIC_DSQUARE,
    QUARTIC_MINUS,
    QUARTIC_PLUS,
    TwistEquation,
    TwistOutcome,
    build_dsquare_twist,
    build_elliptic_twist,
    build_thue_twist,
    outcome_from_dict,
    outcome_to_dict,
)
from .exact import solve_twist_exact
from .external import ExternalAdapterConfig, parse_response, solve_twist_external

__all__ = [
    "BINOMIAL_THUE",
    "ELLIPTIC_CUBIC",
    "GENERIC_DSQUARE",
    "QUARTIC_MINUS",
    "QUARTIC_PLUS",
    "TwistEquation",
    "TwistOutcome",
    "TwistCache",
    "ExternalAdapterConfig",
    "build_dsquare_twist",
    "build_elliptic_twist",
    "build_thue_twist",
    "cache_key",
    "outcome_from_dict",
    "outcome_to_dict",
    "parse_response",
    "solve_twist_bounded",
    "solve_twist_exact",
    "solve_twist_external",
    "weierstrass_points_bounded",
]
