"""Exception hierarchy shared by all modules."""


class RamanujanPiError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(RamanujanPiError, ZeroDivisionError):
    pass


class UnsupportedRadicalDepth(RamanujanPiError):
    """Rationalizing a denominator would need more than two independent radicals."""


class ParseError(RamanujanPiError, ValueError):
    """A literal or catalog file could not be parsed.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ValidationError(RamanujanPiError, ValueError):
    pass


class SingularArgument(RamanujanPiError, ValueError):
    pass


class PrecisionLoss(RamanujanPiError, ArithmeticError):
    pass


class DivergentSeries(RamanujanPiError, ValueError):
    pass


class PoleAtPoint(RamanujanPiError, ZeroDivisionError):
    pass


class NoSolutions(RamanujanPiError):
    pass


class NonRealCoefficient(RamanujanPiError, ArithmeticError):
    pass


class OutOfRange(RamanujanPiError, ValueError):
    pass


class MissingDegree(RamanujanPiError, ValueError):
    pass


class IdentificationFailed(RamanujanPiError):
    pass
