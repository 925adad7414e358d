from pyellcop.exceptions import ValidationError


class DomainError(ValidationError):
    pass
