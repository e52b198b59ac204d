"""Exception types shared across the package."""


class FairnessError(Exception):
    """Base class for every error this package raises deliberately."""


class EmptyGroup(FairnessError):
    """A group has no individuals under the conditioning event, so its
    treatment probability is undefined (division by zero)."""


class TooFewGroups(FairnessError):
    """Fewer than two groups are available for a disparity comparison."""


class OutOfRange(FairnessError):
    """A shape or value lies outside the range an operation supports."""


class DomainError(FairnessError):
    """An argument lies outside the mathematical domain of the function."""


class EmptyInput(FairnessError):
    """An operation that needs at least one element received none."""


class ParseError(FairnessError):
    """Tabular input could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MissingColumn(FairnessError):
    """A column required by the active criterion is absent from the data."""
