"""
Custom exceptions hierarchy for hopfcase.
These exceptions provide structured error handling throughout the toolkit.
"""

from typing import Optional, Dict, Any


class HopfCaseError(Exception):
    """Base exception class for all hopfcase errors."""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to a dictionary format for logging and JSON reports."""
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "details": self.details
        }


class ValidationError(HopfCaseError):
    """
    Raised when input data or parameters are invalid.

    Examples:
        - Ambient dimension mismatch between subspaces
        - Matrix shape inconsistent with a linear map
        - Operation preconditions not met (non-grouplike input, d != 2 component)
    """
    pass


class ParseError(ValidationError):
    """
    Raised when a structure file or scalar string cannot be parsed.

    The details always name the offending line and/or field.
    """
    pass


class ConfigurationError(HopfCaseError):
    """
    Raised when there's an error in configuration.

    Examples:
        - Missing configuration files
        - Invalid configuration format
    """
    pass


class MathematicalError(HopfCaseError):
    """Base class for conditions that are mathematical answers rather than misuse."""

    exit_code = 2


class ExtendFieldError(MathematicalError):
    """
    Raised when a polynomial that must split has no root in the current field.

    Details carry the conductor and the polynomial that has to split.
    """

    def __init__(self, polynomial: str, conductor: int, context: str = ""):
        super().__init__(
            f"extend field: {polynomial} does not split over Q(zeta_{conductor})"
            + (f" ({context})" if context else ""),
            {"polynomial": polynomial, "conductor": conductor, "context": context}
        )
        self.polynomial = polynomial
        self.conductor = conductor


class NoAntipodeError(MathematicalError):
    """Raised when the antipode equations are inconsistent (input is only a bialgebra)."""
    pass


class NoAdaptedBasisError(MathematicalError):
    """Raised when no matrix basis with S^2(e_ij) = (-1)^(i+j) e_ij exists over the field."""
    pass


class AxiomViolationError(MathematicalError):
    """
    Raised when a constructed object fails the axioms it was built to satisfy.

    The details carry the violation list of the failing report.
    """
    pass


class InternalInvariantError(HopfCaseError):
    """
    Raised when an identity that holds mathematically fails at runtime.

    Examples:
        - P_n differs from C_n ∩ I
        - A generated Hopf subalgebra whose dimension does not divide dim H
        - The antipode order does not divide 4·lcm(|G(H)|, |G(H*)|)
        - A dimension-14 coradical shape survives every exclusion rule
    """

    exit_code = 3
