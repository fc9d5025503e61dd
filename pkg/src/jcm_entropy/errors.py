"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class PrecisionLossError(ArithmeticError):
    """A partial term grew large enough that cancellation would destroy accuracy."""
