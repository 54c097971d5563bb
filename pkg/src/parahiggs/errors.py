"""Exception hierarchy.

``ValidationError`` subclasses mean the input is outside what the formulas
cover; ``InternalMismatch`` subclasses mean two evaluation routes disagreed
or a result had an impossible shape, i.e. a bug rather than bad input.
"""


class ParaHiggsError(Exception):
    pass


class ValidationError(ParaHiggsError, ValueError):
    pass


class InvalidWeights(ValidationError):
    pass


class UnsupportedDelta(ValidationError):
    pass


class NonGenericWeights(ValidationError):
    pass


class UnclassifiableWeights(ValidationError):
    pass


class UnsupportedPunctures(ValidationError):
    pass


class WrongOrientation(ValidationError):
    """Raised when a tau < 0 routine receives a tau > 0 input."""


class InternalMismatch(ParaHiggsError, ArithmeticError):
    pass


class MethodMismatch(InternalMismatch):
    pass


class NonPolynomialResult(InternalMismatch):
    pass


class NonUnitLeadingTerm(ArithmeticError):
    pass


class InexactDivision(ArithmeticError):
    pass
