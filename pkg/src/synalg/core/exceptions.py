from typing import Any


class SynalgError(Exception):
    """Base exception for all synalg errors."""

    def __init__(
        self,
        message: str,
        component: str = "core",
        original_error: Exception | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.component = component
        self.original_error = original_error
        self.details = details or {}


class SignatureError(SynalgError):
    """Raised when a signature is malformed (duplicate names, negative ranks)."""


class UnknownSymbolError(SynalgError):
    """Raised when an operation symbol is not part of the signature."""


class ArityError(SynalgError):
    """Raised when a symbol is applied to the wrong number of arguments."""


class ElementRangeError(SynalgError):
    """Raised when an element index falls outside the carrier."""


class UnassignedVariableError(SynalgError):
    """Raised when a term mentions a variable the assignment does not cover."""


class MalformedTermError(SynalgError):
    """Raised when a term does not fit the signature it is evaluated over."""


class NotLinearError(SynalgError):
    """Raised when a term is required to be linear in a variable but is not."""


class FormatError(SynalgError):
    """Raised when a text artifact (.alg, .sys, .dfa) cannot be parsed."""

    def __init__(
        self,
        message: str,
        line: int | None = None,
        path: str | None = None,
        component: str = "formats",
        details: dict[str, Any] | None = None,
    ) -> None:
        location = f"{path or '<text>'}:{line}" if line is not None else (path or "<text>")
        super().__init__(f"{location}: {message}", component, None, details)
        self.line = line
        self.path = path


class AlgebraMismatchError(SynalgError):
    """Raised when two objects that must live on the same algebra do not."""


class PartitionError(SynalgError):
    """Raised when a family of blocks is not a partition of the carrier."""


class NotACongruenceError(SynalgError):
    """Raised when a partition is used as a congruence without being one."""


class CompatibilityError(SynalgError):
    """Raised when levelwise congruences are not carried into each other by connecting maps."""


class CarrierTooLargeError(SynalgError):
    """Raised when a brute-force oracle is asked to run on a carrier it refuses."""


class MonoidSizeExceededError(SynalgError):
    """Raised when a composition closure grows past its configured cap."""


class NotDeterminingError(SynalgError):
    """Raised when a set of maps is required to determine a syntactic congruence but does not."""


class NotAHomomorphismError(SynalgError):
    """Raised when a map between algebras does not commute with the operations."""


class NotSurjectiveError(SynalgError):
    """Raised when a homomorphism is required to be onto but is not."""


class LevelOutOfRangeError(SynalgError):
    """Raised when an inverse system level index is outside 1..depth."""


class IncoherentThreadError(SynalgError):
    """Raised when a thread is not coherent under the connecting maps."""


class NonAssociativeError(SynalgError):
    """Raised when a semigroup operation is required but the table is not associative."""


class SearchExhaustedError(SynalgError):
    """Raised when a bounded witness search runs out of room."""


class DfaError(SynalgError):
    """Raised when an automaton is malformed."""


class ConfigurationError(SynalgError):
    """Raised when invalid configuration is provided."""


class SuiteNotFoundError(SynalgError):
    """Raised when an unknown check suite is requested."""


class InvariantViolation(SynalgError):
    """Raised when a mathematical invariant fails; always indicates a bug, never bad input."""


class AlgorithmDisagreementError(InvariantViolation):
    """Raised when two independent computations of the same congruence differ."""


class WellDefinednessError(InvariantViolation):
    """Raised when quotient operations depend on the choice of representatives."""


class SaturationError(InvariantViolation):
    """Raised when a congruence that must saturate a block does not."""


class LiftError(InvariantViolation):
    """Raised when a lifted translation does not commute with the syntactic morphism."""


class PullbackIdentityError(InvariantViolation):
    """Raised when the pullback of a syntactic congruence differs from the syntactic congruence of the preimage."""


class FaithfulnessError(InvariantViolation):
    """Raised when a syntactic monoid is not syntactically faithful."""
