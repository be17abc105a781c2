"""Exception hierarchy shared by every module of the package."""


class GraphPartError(Exception):
    """Base class for all errors raised by graphpart."""


class InvalidEdge(GraphPartError, ValueError):
    pass


class OutOfRange(GraphPartError, ValueError):
    pass


class OracleSizeExceeded(GraphPartError):
    pass


class BadCertificate(GraphPartError, ValueError):
    """The partition handed to an inductive step does not certify G - v."""


class BoundTooLarge(GraphPartError, OverflowError):
    pass


class BudgetExceeded(GraphPartError):
    pass


class SpecMismatch(GraphPartError, ValueError):
    """A property spec lacks the structure a recognizer needs."""


class UnclassifiedRemainder(GraphPartError):
    pass


class ParseError(GraphPartError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CoverageError(GraphPartError, ValueError):
    pass


class ConfigError(GraphPartError, ValueError):
    pass


class InvariantViolation(GraphPartError, AssertionError):
    """A proven structural bound on a search tree was exceeded."""
