"""Exact classification toolkit for Hodge groups of simple polarizable
rational Hodge structures of extreme bidegree (half-dimension n on each
side), organized around the endomorphism-algebra profile."""

from .core import (
    EndomorphismDescriptor,
    GroupExpr,
    HodgeProfile,
    Violation,
    profile_from_json,
    profile_to_json,
    validate_profile,
)
from .realizability import ExceptionalCase, is_exceptional, realizable
from .lefschetz import group_dim, group_rank, lefschetz_group
from .classifier import (
    Candidate,
    ClassificationOutcome,
    SubfieldDescriptor,
    classify,
    exclude_sl2_product,
    su_constraint,
    table3,
)
from .consequences import AbelianProfile, hodge_status, murty_equal

__version__ = "0.1.0"

__all__ = [
    "AbelianProfile",
    "Candidate",
    "ClassificationOutcome",
    "EndomorphismDescriptor",
    "ExceptionalCase",
    "GroupExpr",
    "HodgeProfile",
    "SubfieldDescriptor",
    "Violation",
    "classify",
    "exclude_sl2_product",
    "group_dim",
    "group_rank",
    "hodge_status",
    "is_exceptional",
    "lefschetz_group",
    "murty_equal",
    "profile_from_json",
    "profile_to_json",
    "realizable",
    "su_constraint",
    "table3",
    "validate_profile",
]
