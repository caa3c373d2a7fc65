class ChainGraphError(ValueError):
    """Base class for every input/domain error raised by the toolkit."""


class GraphValidationError(ChainGraphError):
    pass


class NotAChainGraphError(ChainGraphError):
    def __init__(self, pseudocycle, message=None):
        self.pseudocycle = tuple(pseudocycle)
        if message is None:
            message = "not a chain graph, directed pseudocycle: " + route2str(self.pseudocycle)
        super().__init__(message)


class TripletError(ChainGraphError):
    pass


class ChainError(ChainGraphError):
    pass


class BoundExceededError(ChainGraphError):
    pass


class ParseError(ChainGraphError):
    def __init__(self, message, line, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class RecoveryConflictError(ChainGraphError):
    pass


class InvalidPatternError(ChainGraphError):
    pass


class OracleInvariantError(AssertionError):
    """Raised when a brute-force oracle contradicts a guarantee it relies on."""


def route2str(route):
    return " ".join(map(str, route))
