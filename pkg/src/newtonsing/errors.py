"""Exception hierarchy shared by all modules."""


class NewtonSingError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NewtonSingError):
    """Input outside the supported domain (zero polynomial, wrong
    characteristic, non-reduced input where reducedness is required)."""


class TowerMismatchError(NewtonSingError):
    """Operands live over different field towers."""


class ParseError(NewtonSingError):
    """Malformed polynomial expression."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InternalError(NewtonSingError):
    """A defensive invariant failed; indicates a bug, never user error."""


class PaperViolationError(InternalError):
    """A proven theorem evaluated to false on concrete data, which can
    only mean an implementation bug."""
