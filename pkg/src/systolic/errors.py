"""Shared exception types."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ToleranceError(RuntimeError):
    """A numerical result could not be certified within the working tolerance."""


class SearchBudgetError(RuntimeError):
    """An enumeration exceeded the configured node budget."""
