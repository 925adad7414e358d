from __future__ import annotations

import numpy as np
import numpy.typing as npt

from pyellcop.copula.exceptions import InvalidCorrelation, NonPositiveDiagonal
from pyellcop.linalg import SymMatrix, cholesky_lower
from pyellcop.linalg.exceptions import NotPositiveDefinite


class CorrelationMatrix(SymMatrix):
    """
    Symmetric positive-definite matrix with unit diagonal. Keeps the lower
    Cholesky factor computed while validating it.
    """

    __slots__ = ("_lower",)

    def __init__(self, values: npt.ArrayLike) -> None:
        """
        :raises InvalidCorrelation: on a non-unit diagonal or entries outside [-1, 1]
        :raises NotPositiveDefinite: if the matrix is not positive-definite
        """
        super().__init__(values)
        a = self.values
        if not np.all(np.diag(a) == 1.0):
            raise InvalidCorrelation("correlation matrix must have a unit diagonal")
        if np.any(np.abs(a) > 1.0):
            raise InvalidCorrelation("correlation entries must lie in [-1, 1]")
        self._lower = cholesky_lower(a)

    @property
    def lower(self) -> np.ndarray:
        return self._lower

    @property
    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.values)[0])


def _project_array(sigma: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    diag = np.diag(sigma)
    if not np.all(diag > 0.0):
        raise NonPositiveDiagonal("projection requires a strictly positive diagonal")
    a = 1.0 / np.sqrt(diag)
    rho = sigma * np.outer(a, a)
    np.clip(rho, -1.0, 1.0, out=rho)
    np.fill_diagonal(rho, 1.0)
    return rho, a


def project_with_factor(
    sigma: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Π(Σ) together with A's diagonal and the Cholesky factor of Π(Σ), obtained
    as A·chol(Σ) so that a single factorization tests Σ and factors ρ.

    :raises NotPositiveDefinite: if Σ is not positive-definite
    :raises NonPositiveDiagonal: if a diagonal entry of Σ is not positive

    :returns: (ρ, a, chol(ρ)) with a_i = 1/√Σ_ii
    :rtype: tuple[np.ndarray, np.ndarray, np.ndarray]
    """
    rho, a = _project_array(sigma)
    lower_sigma = cholesky_lower(sigma)
    return rho, a, lower_sigma * a[:, None]


def project_to_correlation(sigma: SymMatrix | npt.ArrayLike) -> CorrelationMatrix:
    """
    The projector Π(Σ) = A·Σ·A with A = diag(1/√Σ_ii).

    :param sigma: a positive-definite matrix with a positive diagonal
    :type sigma: SymMatrix | array-like

    :raises NonPositiveDiagonal: if a diagonal entry is not positive
    :raises NotPositiveDefinite: if sigma is not positive-definite

    :returns: the correlation matrix
    :rtype: CorrelationMatrix
    """
    s = sigma.values if isinstance(sigma, SymMatrix) else SymMatrix(sigma).values
    rho, _ = _project_array(s)
    try:
        return CorrelationMatrix(rho)
    except NotPositiveDefinite as e:
        raise NotPositiveDefinite(e.pivot_index, "cannot project a matrix that is not positive-definite")
