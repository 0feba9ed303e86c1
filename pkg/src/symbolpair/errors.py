"""Exception types raised across the package."""


class SymbolPairError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(SymbolPairError, ValueError):
    pass


class NotPrime(FieldError):
    pass


class NotMonic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class FieldTooLarge(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class DlogOfZero(FieldError):
    pass


class ParseError(SymbolPairError, ValueError):
    pass


class CodeError(SymbolPairError, ValueError):
    pass


class DuplicatePoints(CodeError):
    pass


class BadDimension(CodeError):
    pass


class ShortenTooLarge(CodeError):
    pass


class EnumerationTooLarge(CodeError):
    pass


class NotMds(CodeError):
    pass


class MetricError(SymbolPairError, ValueError):
    pass


class BadWindow(MetricError):
    pass


class LengthMismatch(MetricError):
    pass


class TheoryError(SymbolPairError, ValueError):
    pass


class BadDegree(TheoryError):
    pass


class WrongCharacteristic(TheoryError):
    pass


class FormulaUnavailable(TheoryError):
    pass
