from pyellcop.exceptions import ValidationError


class ParseError(ValidationError):
    def __init__(self, row: int, column: int, message: str) -> None:
        self.row = row
        self.column = column
        super().__init__(f"row {row}, column {column}: {message}")


class DimensionError(ValidationError):
    pass


class EmptyInput(ValidationError):
    pass


class UsageError(Exception):
    pass
