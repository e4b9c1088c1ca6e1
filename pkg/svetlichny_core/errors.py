"""
Svetlichny Core Exceptions
Every error carries the exit code the CLI maps it to.
"""

from typing import Optional


class SvetlichnyError(Exception):
    """Base class for all errors raised by svetlichny_core."""
    exit_code = 1


# Validation errors (exit 2)

class ValidationError(SvetlichnyError):
    """Input rejected before any computation."""
    exit_code = 2


class SpinParseError(ValidationError):
    """Spin text is not an integer or a p/2 fraction."""


class NonZeroSpinRequired(ValidationError):
    """Spin must be strictly positive."""


class InvalidMagneticIndex(ValidationError):
    """Magnetic index outside -j..j or with the wrong parity."""


class InvalidAngle(ValidationError):
    """Angle with a non-positive denominator."""


class WrongArity(ValidationError):
    """Wrong number of phases for the spin."""


class IllegalZeroPhase(ValidationError):
    """The m=0 phase must be exactly 0 or pi."""


class ZeroPhaseForbidden(ValidationError):
    """An m=0 phase was given for a half-integer spin."""


class MissingZeroPhase(ValidationError):
    """Integer spin requires an m=0 phase."""


class AntisymmetryViolation(ValidationError):
    """phase(-m) != -phase(m)."""


class ShapeMismatch(ValidationError):
    """Operator, tuple or state sizes disagree."""


class SpinMismatch(ValidationError):
    """Phase tables or operators built for different spins."""


class InvalidPartyCount(ValidationError):
    """Svetlichny scenarios need at least three parties."""


class NotHalfInteger(ValidationError):
    """Fermion scheme requested for an integer spin."""


class NotInteger(ValidationError):
    """Boson scheme requested for a half-integer spin."""


class NonRationalPhase(ValidationError):
    """An exact check met a float-valued phase."""


class MissingSearchValue(ValidationError):
    """Integer-spin prediction needs the m=0 search maximum."""


class NotHermitian(ValidationError):
    """Operator failed the Hermiticity check."""


class SignParseError(ValidationError):
    """Sign assignment text is malformed."""


class RangeParseError(ValidationError):
    """Range text a..b is malformed."""


class ScenarioParseError(ValidationError):
    """Scenario JSON is unreadable or violates an invariant."""


# Guards (exit 3)

class GuardExceeded(SvetlichnyError):
    """A configured size guard would be exceeded."""
    exit_code = 3


class DimensionGuardExceeded(GuardExceeded):
    """State dimension d^N is larger than the dimension guard."""

    def __init__(self, dimension: int, guard: int):
        self.dimension = dimension
        self.guard = guard
        super().__init__(f"state dimension {dimension} exceeds guard {guard}")


class SearchGuardExceeded(GuardExceeded):
    """Sign search over 2^(2N) assignments refused for large N."""

    def __init__(self, n: int, guard: int):
        self.n = n
        self.guard = guard
        super().__init__(f"sign search for n={n} exceeds guard n <= {guard}")


# Computation errors (exit 4)

class ComputationError(SvetlichnyError):
    """A computed value broke an invariant."""
    exit_code = 4


class ImaginaryResidue(ComputationError):
    """Expectation value kept an imaginary part above tolerance."""

    def __init__(self, residue: float, tolerance: Optional[float] = None):
        self.residue = residue
        message = f"imaginary residue {residue:.3e}"
        if tolerance is not None:
            message += f" exceeds {tolerance:.0e}"
        super().__init__(message)


class InvariantViolation(ComputationError):
    """Internal identity failed (quantum ceiling, f-function identity, ...)."""


class VerificationFailed(SvetlichnyError):
    """One or more reproduction checks failed."""
    exit_code = 4
