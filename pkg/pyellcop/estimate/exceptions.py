from pyellcop.exceptions import ValidationError


class DegenerateSample(ValidationError):
    pass


class ModelMismatch(ValidationError):
    pass


class BracketError(Exception):
    pass
