"""
Exception hierarchy for the toolkit.
Input problems subclass ValueError so callers that only know the builtin still catch them.
"""


class DomsetError(Exception):
    """Base class for every error raised on purpose by the toolkit."""


class InputError(DomsetError, ValueError):
    """A precondition on user-supplied input was violated."""


class GraphParseError(InputError):
    """A graph file could not be parsed; carries the first offending line."""

    def __init__(self, line_number: int, reason: str, line: str = ""):
        self.line_number = line_number
        self.reason = reason
        self.line = line
        super().__init__(f"line {line_number}: {reason}")


class ConfigError(InputError):
    """A key=value experiment file line was malformed."""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        super().__init__(f"config line {line_number}: {reason}")


class OracleLimitError(InputError):
    """The exact oracle refused an instance above its vertex cap."""


class SolverError(DomsetError, RuntimeError):
    """The LP engine failed or ran out of budget."""

    def __init__(self, message: str, solution=None):
        self.solution = solution
        super().__init__(message)


class InvalidResultError(DomsetError, AssertionError):
    """An algorithm returned a set that does not dominate its graph."""
