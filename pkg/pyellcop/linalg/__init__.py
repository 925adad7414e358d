from pyellcop.linalg.factor import (
    PD_TOLERANCE,
    cholesky,
    cholesky_lower,
    inverse_and_logdet,
    inverse_from_cholesky,
    is_positive_definite,
    max_abs,
    quad_forms,
    sym_eigen,
)
from pyellcop.linalg.sym import CholeskyFactor, EigenDecomposition, SymMatrix

__all__ = [
    "PD_TOLERANCE",
    "CholeskyFactor",
    "EigenDecomposition",
    "SymMatrix",
    "cholesky",
    "cholesky_lower",
    "inverse_and_logdet",
    "inverse_from_cholesky",
    "is_positive_definite",
    "max_abs",
    "quad_forms",
    "sym_eigen",
]
