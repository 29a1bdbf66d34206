"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Invalid vertex id, malformed edge, or otherwise bad input."""


class DisconnectedGraphError(ValueError):
    """Raised where a quantity is only defined for connected graphs."""


class CapacityError(RuntimeError):
    """A configured resource budget would be exceeded."""

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what}: needs {needed}, budget is {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantViolation(AssertionError):
    """An internal identity failed (e.g. a non-divisible orbit sum). Always a bug."""
