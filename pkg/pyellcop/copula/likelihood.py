"""
Copula log densities and log-likelihoods.

Every evaluation works in log space and reaches ρ⁻¹ only through triangular
solves with the Cholesky factor of ρ. The ``_rows`` / ``_total`` helpers take
raw arrays and a family implementation and are what the estimators call in
their inner loops.
"""

import numpy as np
import numpy.typing as npt

from pyellcop.copula.correlation import CorrelationMatrix, project_with_factor
from pyellcop.copula.exceptions import DimensionMismatch
from pyellcop.copula.families import EllipticalFamily, GaussianFamily, StudentTFamily
from pyellcop.copula.model import CopulaModel
from pyellcop.copula.sample import TransformedSample
from pyellcop.linalg import SymMatrix, cholesky_lower, quad_forms


def log_density_rows(z: np.ndarray, lower: np.ndarray, family: EllipticalFamily) -> np.ndarray:
    """
    Per-row log copula densities for transformed rows z and chol(ρ).

    :param z: n×d transformed observations
    :type z: np.ndarray
    :param lower: the Cholesky factor of the dispersion matrix
    :type lower: np.ndarray
    :param family: the family implementation
    :type family: EllipticalFamily

    :returns: n log densities
    :rtype: np.ndarray
    """
    d = z.shape[1]
    q = quad_forms(lower, z)
    half_logdet = float(np.sum(np.log(np.diag(lower))))
    return (
        family.log_constant(d)
        - half_logdet
        + family.log_kernel(q, d)
        - family.log_margin_kernel(z).sum(axis=1)
    )


def log_likelihood_total(z: np.ndarray, lower: np.ndarray, family: EllipticalFamily) -> float:
    return float(np.sum(log_density_rows(z, lower, family)))


def projected_log_likelihood_array(
    sigma: np.ndarray, z: np.ndarray, family: EllipticalFamily
) -> tuple[float, np.ndarray, np.ndarray]:
    """
    L*(Σ) from a raw Σ, with the projected ρ and its factor.

    :raises NotPositiveDefinite: if Σ is not positive-definite

    :returns: (L*(Σ), ρ, chol(ρ))
    :rtype: tuple[float, np.ndarray, np.ndarray]
    """
    rho, _, lower_rho = project_with_factor(sigma)
    return log_likelihood_total(z, lower_rho, family), rho, lower_rho


def _check_dims(sample: TransformedSample, dim: int) -> None:
    if sample.d != dim:
        raise DimensionMismatch(
            f"sample dimension {sample.d} does not match matrix dimension {dim}"
        )


def _row_and_matrix(row: npt.ArrayLike, rho: CorrelationMatrix) -> np.ndarray:
    z = np.asarray(row, dtype=np.float64).reshape(1, -1)
    if z.shape[1] != rho.dim:
        raise DimensionMismatch(
            f"row dimension {z.shape[1]} does not match matrix dimension {rho.dim}"
        )
    return z


def gaussian_log_density(g_row: npt.ArrayLike, rho: CorrelationMatrix) -> float:
    """
    Log density of the Gaussian copula at a Φ⁻¹-transformed point g:
    −½·log|ρ| − ½·gᵀρ⁻¹g + ½·gᵀg.
    """
    z = _row_and_matrix(g_row, rho)
    return float(log_density_rows(z, rho.lower, GaussianFamily())[0])


def t_log_density(s_row: npt.ArrayLike, rho: CorrelationMatrix, nu: float) -> float:
    """
    Log density of the Student's t copula at a t_ν⁻¹-transformed point s.
    """
    z = _row_and_matrix(s_row, rho)
    return float(log_density_rows(z, rho.lower, StudentTFamily(nu))[0])


def per_observation_log_density(
    sample: TransformedSample, rho: CorrelationMatrix, model: CopulaModel
) -> np.ndarray:
    """
    log c(uₜ; ρ) for every row of the sample.
    """
    _check_dims(sample, rho.dim)
    return log_density_rows(sample.z, rho.lower, model.impl())


def log_likelihood(
    sample: TransformedSample, rho: CorrelationMatrix, model: CopulaModel
) -> float:
    """
    L(ρ) = Σₜ log c(uₜ; ρ). The factorization of ρ is done once per call.

    :param sample: the transformed sample
    :type sample: TransformedSample
    :param rho: the correlation matrix
    :type rho: CorrelationMatrix
    :param model: the copula model
    :type model: CopulaModel

    :returns: the log-likelihood
    :rtype: float
    """
    _check_dims(sample, rho.dim)
    return log_likelihood_total(sample.z, rho.lower, model.impl())


def dispersion_log_likelihood(
    sample: TransformedSample, m: SymMatrix | npt.ArrayLike, model: CopulaModel
) -> float:
    """
    The log-likelihood formula evaluated at any positive-definite matrix in
    place of ρ, unit diagonal or not. Only correlation matrices define valid
    copulas; this is the function whose derivative 𝒟 is.

    :raises NotPositiveDefinite: if m is not positive-definite
    """
    a = m.values if isinstance(m, SymMatrix) else SymMatrix(m).values
    _check_dims(sample, a.shape[0])
    return log_likelihood_total(sample.z, cholesky_lower(a), model.impl())


def projected_log_likelihood(
    sigma: SymMatrix | npt.ArrayLike, sample: TransformedSample, model: CopulaModel
) -> float:
    """
    L*(Σ) = L(Π(Σ)).

    :raises NotPositiveDefinite: if Σ is not positive-definite
    :raises NonPositiveDiagonal: if a diagonal entry of Σ is not positive
    """
    s = sigma.values if isinstance(sigma, SymMatrix) else SymMatrix(sigma).values
    _check_dims(sample, s.shape[0])
    value, _, _ = projected_log_likelihood_array(s, sample.z, model.impl())
    return value
