"""
Custom exceptions for sieveforge.

Constructors and builders raise these; axiom checkers never do (they
return a :class:`~sieveforge.core.verdict.Verdict` instead).
"""

from typing import Any


class SieveForgeError(Exception):
    """Base exception for all sieveforge errors."""

    def __init__(
        self,
        message: str,
        details: str | None = None,
        witness: dict[str, Any] | None = None,
    ):
        self.message = message
        self.details = details
        self.witness = witness
        super().__init__(self.message)

    def __str__(self):
        if self.details:
            return f"{self.message}: {self.details}"
        return self.message

    def to_dict(self) -> dict[str, Any]:
        """
        Convert the error to a JSON-ready dictionary.

        Returns:
            Error data as dictionary
        """
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
            "witness": self.witness,
        }


class ConfigurationError(SieveForgeError):
    """Raised when configuration is invalid or missing."""

    pass


class ValidationError(SieveForgeError):
    """Raised when a declared structure fails validation."""

    pass


class NotAPartialOrder(ValidationError):
    """Raised when declared order pairs violate antisymmetry."""

    pass


class NotALattice(ValidationError):
    """Raised when some pair of elements lacks a meet or a join."""

    pass


class NotAFrame(ValidationError):
    """Raised when an operation requires a distributive lattice."""

    pass


class CategoryError(ValidationError):
    """Raised when a declared category is not a category."""

    pass


class MissingComposite(CategoryError):
    """Raised when a composable pair has no declared composite."""

    pass


class AssociativityViolation(CategoryError):
    """Raised when f∘(g∘h) differs from (f∘g)∘h."""

    pass


class IdentityViolation(CategoryError):
    """Raised when an identity law fails."""

    pass


class CompositionTypeError(CategoryError):
    """Raised when a composite has the wrong domain or codomain."""

    pass


class NotAFunctor(ValidationError):
    """Raised when a declared object/morphism map is not a functor."""

    pass


class NotATopology(ValidationError):
    """Raised when an operation requires a Grothendieck topology."""

    pass


class NotABasis(ValidationError):
    """Raised when an operation requires a certified filter basis."""

    pass


class NotAFilter(ValidationError):
    """Raised when an operation requires a certified filter."""

    pass


class LookupFailure(SieveForgeError):
    """Raised when an identifier does not resolve."""

    pass


class UnknownElement(LookupFailure):
    """Raised when an element is not part of the lattice."""

    pass


class UnknownObject(LookupFailure):
    """Raised when an object or morphism is not part of the carrier."""

    pass


class UnresolvedReference(LookupFailure):
    """Raised when a model block references an undeclared name."""

    pass


class MismatchError(SieveForgeError):
    """Raised when arguments do not live over the same data."""

    pass


class BadCodomain(MismatchError):
    """Raised when generators do not share the requested codomain."""

    pass


class OwnerMismatch(MismatchError):
    """Raised when a sieve is not owned by the expected object."""

    pass


class PointMismatch(MismatchError):
    """Raised when a point does not belong to the requested object."""

    pass


class CarrierMismatch(MismatchError):
    """Raised when assignments live on different carriers."""

    pass


class NoTerminalObject(SieveForgeError):
    """Raised when points are requested in a category without terminal object."""

    pass


class BudgetExceeded(SieveForgeError):
    """Raised when an enumeration would exceed its configured budget."""

    pass


class ImproperFilter(SieveForgeError):
    """Raised when saturating a subbase manufactures the empty sieve."""

    def __init__(
        self,
        message: str,
        trace: list[dict[str, Any]] | None = None,
        details: str | None = None,
    ):
        self.trace = trace or []
        super().__init__(message, details=details, witness={"trace": self.trace})


class EmptyMeetSieve(SieveForgeError):
    """Raised when a product basis combination intersects to the empty sieve."""

    pass


class NotCompactInput(SieveForgeError):
    """Raised when a Tychonoff check receives a non-compact target."""

    pass


class PreconditionUnmet(SieveForgeError):
    """Raised when a law's hypotheses do not hold for the given data."""

    pass


class ModelSyntaxError(SieveForgeError):
    """Raised when a model file cannot be parsed."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(message, details=f"line {line}, column {column}")
