"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceLimitError(DomainError):
    """A size parameter exceeds the configured ceiling."""


class UnsupportedOperationError(DomainError):
    """The operation is not defined for the requested parity."""


class NotACharacterError(ValueError):
    """A class function failed to decompose with nonnegative integer multiplicities."""

    def __init__(self, partition, multiplicity):
        self.partition = partition
        self.multiplicity = multiplicity
        super().__init__(
            f"not a genuine character: multiplicity of {list(partition)} is {multiplicity}"
        )


class RecursionMismatchError(ValueError):
    """The recursive character identity left a nonzero residual."""
