from pyellcop.copula.correlation import CorrelationMatrix, project_to_correlation
from pyellcop.copula.derivatives import (
    d_matrix,
    inverse_gradient_direction,
    sigma_gradient,
)
from pyellcop.copula.families import EllipticalFamily, GaussianFamily, StudentTFamily
from pyellcop.copula.likelihood import (
    dispersion_log_likelihood,
    gaussian_log_density,
    log_likelihood,
    per_observation_log_density,
    projected_log_likelihood,
    t_log_density,
)
from pyellcop.copula.model import FAMILY_REGISTRY, CopulaModel, Family
from pyellcop.copula.sample import PseudoSample, TransformedSample, transform
from pyellcop.copula.sampler import (
    kendall_tau_from_correlation,
    kendall_tau_matrix,
    sample_copula,
)

__all__ = [
    "FAMILY_REGISTRY",
    "CopulaModel",
    "CorrelationMatrix",
    "EllipticalFamily",
    "Family",
    "GaussianFamily",
    "PseudoSample",
    "StudentTFamily",
    "TransformedSample",
    "d_matrix",
    "dispersion_log_likelihood",
    "gaussian_log_density",
    "inverse_gradient_direction",
    "kendall_tau_from_correlation",
    "kendall_tau_matrix",
    "log_likelihood",
    "per_observation_log_density",
    "project_to_correlation",
    "projected_log_likelihood",
    "sample_copula",
    "sigma_gradient",
    "t_log_density",
    "transform",
]
