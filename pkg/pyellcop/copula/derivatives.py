"""
Log-likelihood derivatives.

Matrix derivatives treat every entry of their argument as an independent
variable: 𝒟_ij = ∂L/∂(ρ⁻¹)_ij. A symmetric perturbation of the (i, j) and
(j, i) entries by h therefore changes L by h·(𝒟_ij + 𝒟_ji) off the diagonal.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from pyellcop.copula.correlation import CorrelationMatrix, project_with_factor
from pyellcop.copula.exceptions import DimensionMismatch
from pyellcop.copula.families import EllipticalFamily
from pyellcop.copula.model import CopulaModel
from pyellcop.copula.sample import TransformedSample
from pyellcop.linalg import SymMatrix, inverse_from_cholesky, quad_forms


def _symmetrize(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.T)


def weighted_scatter(
    z: np.ndarray, lower: np.ndarray, family: EllipticalFamily
) -> np.ndarray:
    """
    Σₜ ψ(qₜ)·zₜzₜᵀ with qₜ = zₜᵀρ⁻¹zₜ.
    """
    q = quad_forms(lower, z)
    w = family.weights(q, z.shape[1])
    return _symmetrize((z * w[:, None]).T @ z)


def d_matrix_array(
    z: np.ndarray, rho: np.ndarray, lower: np.ndarray, family: EllipticalFamily
) -> np.ndarray:
    """
    𝒟(ρ) = (n/2)·ρ − ½·Σₜ ψ(qₜ)·zₜzₜᵀ.
    """
    n = z.shape[0]
    return 0.5 * n * rho - 0.5 * weighted_scatter(z, lower, family)


@dataclass(frozen=True)
class GradientState:
    """
    Everything the ascent loop needs at one Σ: the projection ρ = Π(Σ), its
    factor, A's diagonal and ∂L*/∂Σ⁻¹.
    """

    rho: np.ndarray
    lower_rho: np.ndarray
    a: np.ndarray
    grad_inv: np.ndarray

    @property
    def direction(self) -> np.ndarray:
        """V = −∂L*/∂Σ⁻¹."""
        return -self.grad_inv


def gradient_state(
    sigma: np.ndarray, z: np.ndarray, family: EllipticalFamily
) -> GradientState:
    """
    ∂L*/∂Σ⁻¹ = A⁻¹·(𝒟(ρ) − ρ·diag(𝒟(ρ)·ρ⁻¹)·ρ)·A⁻¹ at ρ = Π(Σ), where
    diag(·) zeroes the off-diagonal entries.

    :raises NotPositiveDefinite: if Σ is not positive-definite
    """
    rho, a, lower_rho = project_with_factor(sigma)
    d = d_matrix_array(z, rho, lower_rho, family)
    rho_inv = inverse_from_cholesky(lower_rho)
    # (𝒟ρ⁻¹)_kk as a row-wise inner product, both factors symmetric
    delta = np.einsum("kl,kl->k", d, rho_inv)
    inner = d - (rho * delta[None, :]) @ rho
    a_inv = 1.0 / a
    grad_inv = _symmetrize(inner * np.outer(a_inv, a_inv))
    return GradientState(rho=rho, lower_rho=lower_rho, a=a, grad_inv=grad_inv)


def _sigma_array(sigma: SymMatrix | npt.ArrayLike, sample: TransformedSample) -> np.ndarray:
    s = sigma.values if isinstance(sigma, SymMatrix) else SymMatrix(sigma).values
    if s.shape[0] != sample.d:
        raise DimensionMismatch(
            f"sample dimension {sample.d} does not match matrix dimension {s.shape[0]}"
        )
    return s


def d_matrix(
    sample: TransformedSample, rho: CorrelationMatrix, model: CopulaModel
) -> SymMatrix:
    """
    The log-likelihood derivative 𝒟(ρ) = ∂L(ρ)/∂ρ⁻¹ in closed form.

    :param sample: the transformed sample
    :type sample: TransformedSample
    :param rho: the correlation matrix
    :type rho: CorrelationMatrix
    :param model: the copula model
    :type model: CopulaModel

    :returns: 𝒟(ρ)
    :rtype: SymMatrix
    """
    if sample.d != rho.dim:
        raise DimensionMismatch(
            f"sample dimension {sample.d} does not match matrix dimension {rho.dim}"
        )
    return SymMatrix(d_matrix_array(sample.z, rho.values, rho.lower, model.impl()))


def inverse_gradient_direction(
    sigma: SymMatrix | npt.ArrayLike, sample: TransformedSample, model: CopulaModel
) -> SymMatrix:
    """
    The inverse gradient direction V = −∂L*/∂Σ⁻¹ at Σ.

    :raises NotPositiveDefinite: if Σ is not positive-definite

    :returns: V
    :rtype: SymMatrix
    """
    state = gradient_state(_sigma_array(sigma, sample), sample.z, model.impl())
    return SymMatrix(state.direction)


def sigma_gradient(
    sigma: SymMatrix | npt.ArrayLike, sample: TransformedSample, model: CopulaModel
) -> SymMatrix:
    """
    ∂L*/∂Σ = −Σ⁻¹·(∂L*/∂Σ⁻¹)·Σ⁻¹.

    :raises NotPositiveDefinite: if Σ is not positive-definite

    :returns: the gradient of L* with respect to the entries of Σ
    :rtype: SymMatrix
    """
    state = gradient_state(_sigma_array(sigma, sample), sample.z, model.impl())
    # Σ⁻¹ = A·ρ⁻¹·A
    sigma_inv = inverse_from_cholesky(state.lower_rho) * np.outer(state.a, state.a)
    return SymMatrix(_symmetrize(-sigma_inv @ state.grad_inv @ sigma_inv))
