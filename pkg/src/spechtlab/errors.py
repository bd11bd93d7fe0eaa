"""Exception types shared across the package."""


class SpechtLabError(Exception):
    """Base class for all errors raised by spechtlab."""


class DivisionByZero(SpechtLabError, ZeroDivisionError):
    pass


class FieldMismatch(SpechtLabError, ValueError):
    pass


class InvalidField(SpechtLabError, ValueError):
    pass


class IndexOutOfRange(SpechtLabError, IndexError):
    pass


class InvalidDegree(SpechtLabError, ValueError):
    pass


class ArityMismatch(SpechtLabError, ValueError):
    pass


class DimensionMismatch(SpechtLabError, ValueError):
    pass


class ParseError(SpechtLabError, ValueError):
    pass


class InvalidShape(SpechtLabError, ValueError):
    pass


class ShapeMismatch(SpechtLabError, ValueError):
    pass


class EndpointMismatch(SpechtLabError, ValueError):
    pass


class InvalidEndpoints(SpechtLabError, ValueError):
    pass


class InvalidFilling(SpechtLabError, ValueError):
    pass


class NonTermination(SpechtLabError, RuntimeError):
    pass


class SupportViolation(SpechtLabError, ValueError):
    pass


class DegreeOutOfRange(SpechtLabError, ValueError):
    pass


class CharacteristicTooSmall(SpechtLabError, ValueError):
    pass


class ZeroDivisorInput(SpechtLabError, ValueError):
    pass


class NonHomogeneous(SpechtLabError, ValueError):
    pass


class ZeroDimensional(SpechtLabError, ValueError):
    pass


class ParameterOutOfRange(SpechtLabError, ValueError):
    pass


class TooLarge(SpechtLabError, ValueError):
    pass
