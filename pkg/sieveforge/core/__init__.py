"""
Core exceptions and checker results.
"""

from sieveforge.core.exceptions import (
    AssociativityViolation,
    BadCodomain,
    BudgetExceeded,
    CarrierMismatch,
    CategoryError,
    CompositionTypeError,
    ConfigurationError,
    EmptyMeetSieve,
    IdentityViolation,
    ImproperFilter,
    LookupFailure,
    MismatchError,
    MissingComposite,
    ModelSyntaxError,
    NoTerminalObject,
    NotABasis,
    NotAFilter,
    NotAFrame,
    NotAFunctor,
    NotALattice,
    NotAPartialOrder,
    NotATopology,
    NotCompactInput,
    OwnerMismatch,
    PointMismatch,
    PreconditionUnmet,
    SieveForgeError,
    UnknownElement,
    UnknownObject,
    UnresolvedReference,
    ValidationError,
)
from sieveforge.core.verdict import Verdict, VerdictStatus, Witness

__all__ = [
    "AssociativityViolation",
    "BadCodomain",
    "BudgetExceeded",
    "CarrierMismatch",
    "CategoryError",
    "CompositionTypeError",
    "ConfigurationError",
    "EmptyMeetSieve",
    "IdentityViolation",
    "ImproperFilter",
    "LookupFailure",
    "MismatchError",
    "MissingComposite",
    "ModelSyntaxError",
    "NoTerminalObject",
    "NotABasis",
    "NotAFilter",
    "NotAFrame",
    "NotAFunctor",
    "NotALattice",
    "NotAPartialOrder",
    "NotATopology",
    "NotCompactInput",
    "OwnerMismatch",
    "PointMismatch",
    "PreconditionUnmet",
    "SieveForgeError",
    "UnknownElement",
    "UnknownObject",
    "UnresolvedReference",
    "ValidationError",
    "Verdict",
    "VerdictStatus",
    "Witness",
]
