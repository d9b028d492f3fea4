"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class HyperRRError(Exception):
    code = "Error"


class NotPrime(HyperRRError, ValueError):
    code = "NotPrime"


class BadModulus(HyperRRError, ValueError):
    code = "BadModulus"


class DivisionByZero(HyperRRError, ZeroDivisionError):
    code = "DivisionByZero"


class BadDegree(HyperRRError, ValueError):
    code = "BadDegree"


class NonzeroHOddChar(HyperRRError, ValueError):
    code = "NonzeroHOddChar"


class SingularCurve(HyperRRError, ValueError):
    code = "SingularCurve"


class NotOnCurve(HyperRRError, ValueError):
    code = "NotOnCurve"


class SingularSystem(HyperRRError, ValueError):
    code = "SingularSystem"


class PoleAtPoint(HyperRRError, ValueError):
    code = "PoleAtPoint"


class ZeroFunction(HyperRRError, ValueError):
    code = "ZeroFunction"


class NoInterpolant(HyperRRError, ValueError):
    code = "NoInterpolant"


class UnsupportedMultiplicity(HyperRRError, ValueError):
    code = "UnsupportedMultiplicity"


class DegreeTooSmall(HyperRRError, ValueError):
    code = "DegreeTooSmall"


class OutOfRange(HyperRRError, ValueError):
    code = "OutOfRange"


class PointInSupport(HyperRRError, ValueError):
    code = "PointInSupport"


class DuplicatePoint(HyperRRError, ValueError):
    code = "DuplicatePoint"


class RankDeficient(HyperRRError, ValueError):
    code = "RankDeficient"


class BudgetExceeded(HyperRRError, RuntimeError):
    code = "BudgetExceeded"


class ParseError(HyperRRError, ValueError):
    code = "ParseError"

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class SemanticError(HyperRRError, ValueError):
    code = "SemanticError"

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
