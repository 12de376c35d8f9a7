"""Exception types shared across the package."""


class ScsError(Exception):
    """Base class for all package-specific errors."""


class InvalidOrderError(ScsError):
    """A relation failed the completeness/transitivity checks required of it."""


class ReconstructionError(ScsError):
    """Recombining strict and indifference parts did not yield a weak order."""


class DomainSizeError(ScsError):
    """Universe or voter count outside the supported range."""


class ParseError(ScsError):
    """Malformed textual input (ranking, profile, axiom, rule or certificate)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapExceededError(ScsError):
    """Search size above the configured node budget; carries the estimate."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"query needs about {required} search nodes but the budget is {budget}; "
            f"set SCS_MAX_BUDGET={required} or higher to run it anyway"
        )
        self.required = required
        self.budget = budget


class PreconditionError(ScsError):
    """An operation's stated precondition does not hold for the given input."""


class InternalCheckError(ScsError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class VerificationError(ScsError):
    """A certificate failed re-verification."""
