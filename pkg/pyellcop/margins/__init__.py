from pyellcop.margins.dof import Dof, nu_value
from pyellcop.margins.univariate import (
    log_gamma,
    norm_cdf,
    norm_logpdf,
    norm_quantile,
    t_cdf,
    t_logpdf,
    t_quantile,
)

__all__ = [
    "Dof",
    "log_gamma",
    "norm_cdf",
    "norm_logpdf",
    "norm_quantile",
    "nu_value",
    "t_cdf",
    "t_logpdf",
    "t_quantile",
]
