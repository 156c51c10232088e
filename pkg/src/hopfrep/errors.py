"""Exception types raised across the package."""


class HopfRepError(Exception):
    pass


class ZeroEvaluationPoint(HopfRepError, ValueError):
    pass


class PresentationError(HopfRepError, ValueError):
    pass


class UnknownGenerator(PresentationError):
    pass


class NonDecreasingRule(PresentationError):
    pass


class NotConfluent(PresentationError):
    pass


class SpaceMismatch(HopfRepError, ValueError):
    pass


class AntipodeAbsent(HopfRepError):
    pass


class ClosureViolation(HopfRepError):
    """An induced structure map left the induced subspace."""


class EvaluationMismatch(HopfRepError):
    """Symbolic and dense verdicts disagree."""


class DSLSyntaxError(SyntaxError, HopfRepError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(message)
        self.line = line
        self.col = col
        self.lineno = line
        self.offset = col

    def __str__(self):
        return f"{self.msg} (line {self.line}, col {self.col})"


# the name used by the DSL front end
NotLocallyConfluent = NotConfluent
