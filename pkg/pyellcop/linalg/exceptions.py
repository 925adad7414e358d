from pyellcop.exceptions import ValidationError


class NotPositiveDefinite(Exception):
    def __init__(self, pivot_index: int, message: str | None = None) -> None:
        self.pivot_index = pivot_index
        super().__init__(
            message or f"matrix is not positive-definite (pivot {pivot_index})"
        )


class ConvergenceFailure(Exception):
    pass


class NotSymmetric(ValidationError):
    pass


class NonFiniteEntries(ValidationError):
    pass
