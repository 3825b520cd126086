"""Exception hierarchy shared by the library, the harness and the API."""


class MonoregError(Exception):
    """Base class for all monoreg errors."""


class MalformedInputError(MonoregError, ValueError):
    """Exponent tuples of the wrong length or with negative entries."""


class ExponentOverflowError(MalformedInputError):
    """An exponent left the machine-width range."""


class DomainError(MonoregError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class ResourceLimitError(MonoregError):
    """A configured cap was exceeded."""

    def __init__(self, what: str, cap: int, observed: int) -> None:
        self.what = what
        self.cap = cap
        self.observed = observed
        super().__init__(f"{what}: {observed} exceeds cap {cap}")


class IdealParseError(MonoregError, ValueError):
    """A line of an ideal file could not be parsed."""

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class OracleMismatchError(MonoregError):
    """Two exact computations that must agree did not."""
