from pyellcop.exceptions import ValidationError


class NonPositiveDiagonal(ValidationError):
    pass


class InvalidCorrelation(ValidationError):
    pass


class InvalidSample(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class UnknownFamily(Exception):
    pass
