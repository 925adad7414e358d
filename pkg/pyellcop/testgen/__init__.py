from pyellcop.testgen.generator import (
    generate_case,
    random_correlation,
    random_correlation_with_spectrum,
    random_spectrum,
)
from pyellcop.testgen.schemas import CaseSpec

__all__ = [
    "CaseSpec",
    "generate_case",
    "random_correlation",
    "random_correlation_with_spectrum",
    "random_spectrum",
]
