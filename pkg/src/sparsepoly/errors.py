"""Exception hierarchy shared across the package."""


class ArityError(ValueError):
    """An exponent vector or operand has the wrong number of dimensions."""


class DomainError(ValueError):
    """An argument is outside an operation's domain (bad dimension index,
    negative power, division by zero, ...)."""


class SingularityError(ZeroDivisionError):
    """A zero coordinate met a negative exponent during evaluation or
    substitution."""


class ParseError(ValueError):
    """Malformed polynomial text.

    Carries ``position``, the 0-based offset of the offending character.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownVariableError(ParseError):
    """A variable name not present in the active name table."""


class FormatError(ValueError):
    """Rendering was asked for with an unusable option set (e.g. fewer
    variable names than dimensions)."""


class HashMismatchError(ValueError):
    """Two unordered views were combined positionally but were not taken
    from the same extraction state."""


class CapacityError(RuntimeError):
    """A dense-oracle bounding box exceeds the cell budget."""
