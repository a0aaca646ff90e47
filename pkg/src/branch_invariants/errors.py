"""Exception types shared across the package.

Validation failures name the violated admissibility condition so callers
(and the command line front end) can report a one-line diagnostic.
InternalInvariantViolation is reserved for states the algorithms are
supposed to make impossible; seeing one means a bug, not bad input.
"""

from __future__ import annotations

# all arithmetic is checked against this range; Python ints never wrap,
# so exceeding it raises instead of silently producing huge values
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class BranchInvariantError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(BranchInvariantError, ValueError):
    """Input fails an admissibility condition."""


class NotSingularError(ValidationError):
    """The data describes a smooth branch (no characteristic pairs, or n < 2)."""


class NonIncreasingError(ValidationError):
    """Exponents or generators are not strictly increasing where required."""


class DivisibilityViolationError(ValidationError):
    """An exponent is divisible by the running gcd, so it is not characteristic."""


class GcdNotOneError(ValidationError):
    """The gcd chain does not terminate at 1."""


class NotPlaneError(ValidationError):
    """The semigroup is not the value semigroup of a plane branch."""


class DomainError(ValidationError):
    """Argument outside the domain of a numeric helper."""


class OverflowLimitError(BranchInvariantError):
    """An intermediate value left the signed 64-bit range."""


class InternalInvariantViolation(BranchInvariantError):
    """A cross-check that must hold by construction failed."""


class NegativeGapCountError(InternalInvariantViolation):
    """A gap count came out negative, so the report it came from is inconsistent."""


def check_int64(*values: int) -> None:
    """Raise OverflowLimitError unless every value fits in signed 64 bits."""
    for v in values:
        if v < INT64_MIN or v > INT64_MAX:
            raise OverflowLimitError(f"value {v} exceeds the signed 64-bit range")
