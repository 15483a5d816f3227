"""Exception types shared across lightsout modules."""


class LightsOutError(Exception):
    """Base class for all lightsout errors."""

    pass


class ContractViolation(LightsOutError, ValueError):
    """Raised when an operation is called outside its preconditions."""

    pass


class UnsupportedSize(LightsOutError):
    """Raised when an exhaustive oracle is asked for more than it can enumerate."""

    pass


class GraphFormatError(LightsOutError, ValueError):
    """Raised when an edge list or bitstring cannot be parsed."""

    pass


class CertificateError(LightsOutError, ValueError):
    """Raised when a certificate document has the wrong shape."""

    pass


class InvariantViolation(LightsOutError, RuntimeError):
    """A theorem-backed invariant failed; always indicates a bug.

    The offending graph is kept as edge-list text so the failure can be
    replayed from the log.
    """

    def __init__(self, message: str, graph_dump: str = ""):
        super().__init__(message)
        self.graph_dump = graph_dump

    def __str__(self) -> str:
        text = super().__str__()
        if self.graph_dump:
            return f"{text}\n--- graph ---\n{self.graph_dump}"
        return text
