"""Exception hierarchy shared by all lapspec modules."""


class LapspecError(Exception):
    """Base class for every error raised by lapspec."""


class GraphError(LapspecError, ValueError):
    pass


class InvalidWeight(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateArc(GraphError):
    pass


class BadIndex(GraphError, IndexError):
    pass


class InvariantViolation(LapspecError):
    """A matrix failed the standardized-Laplacian (or stochastic) checks."""


class NotConvex(LapspecError, ValueError):
    pass


class NoConvergence(LapspecError, ArithmeticError):
    """The QR iteration exhausted its sweep budget."""


class NotAnEigenvalue(LapspecError, ValueError):
    pass


class ExactModeRequired(LapspecError, TypeError):
    pass


class ExactOverflow(LapspecError, OverflowError):
    """Exact rational arithmetic exceeded the configured bit budget."""


class OutsidePolygon(LapspecError, ValueError):
    pass


class ParseError(LapspecError, ValueError):
    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)
