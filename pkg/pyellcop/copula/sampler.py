import logging

import numpy as np
import numpy.typing as npt
import scipy.stats as st

from pyellcop.copula.correlation import CorrelationMatrix
from pyellcop.copula.model import CopulaModel
from pyellcop.copula.sample import PseudoSample
from pyellcop.linalg import SymMatrix

logger = logging.getLogger(__name__)

_U_LOW = np.finfo(np.float64).tiny
_U_HIGH = np.nextafter(1.0, 0.0)


def sample_copula(
    rho: CorrelationMatrix, model: CopulaModel, n: int, rng_seed: int
) -> PseudoSample:
    """
    Draw n observations from a Gaussian or Student's t copula.

    Rows are yₜ = L·zₜ with zₜ iid standard normal and L = chol(ρ); the
    Student's t additionally scales each row by √(ν/χ²_ν). The margins'
    distribution function maps yₜ to the unit cube. The generator is private
    to the call (PCG64 seeded with rng_seed), so output is a pure function of
    the arguments.

    :param rho: the correlation matrix
    :type rho: CorrelationMatrix
    :param model: the copula model
    :type model: CopulaModel
    :param n: the number of observations
    :type n: int
    :param rng_seed: the seed of the private generator
    :type rng_seed: int

    :returns: the pseudo-observations
    :rtype: PseudoSample
    """
    if n < 1:
        raise ValueError(f"sample size must be positive, got {n}")
    family = model.impl()
    rng = np.random.default_rng(rng_seed)

    y = rng.standard_normal((n, rho.dim)) @ rho.lower.T
    mixing = family.radial_mixing(rng, n)
    if mixing is not None:
        y *= mixing[:, None]

    u = family.cdf(y)
    # the distribution function rounds to 0 or 1 far in the tails
    clipped = int(np.count_nonzero((u <= 0.0) | (u >= 1.0)))
    if clipped:
        logger.debug(f"{clipped} simulated values rounded to the boundary of (0, 1)")
    return PseudoSample(np.clip(u, _U_LOW, _U_HIGH))


def kendall_tau_matrix(u: PseudoSample | npt.ArrayLike) -> SymMatrix:
    """
    Pairwise Kendall's τ (tau-b, ties accounted) between the columns of a sample.

    :param u: the observations, any monotone transform of the copula scale
    :type u: PseudoSample | array-like

    :returns: the d×d matrix of Kendall's τ with a unit diagonal
    :rtype: SymMatrix
    """
    a = u.u if isinstance(u, PseudoSample) else np.asarray(u, dtype=np.float64)
    d = a.shape[1]
    tau = np.eye(d)
    for i in range(d):
        for j in range(i + 1, d):
            tau[i, j] = tau[j, i] = st.kendalltau(a[:, i], a[:, j]).statistic
    return SymMatrix(tau)


def kendall_tau_from_correlation(rho: npt.ArrayLike) -> np.ndarray:
    """
    τ = (2/π)·arcsin(ρ), the identity shared by all elliptical copulas.
    """
    return 2.0 / np.pi * np.arcsin(np.asarray(rho, dtype=np.float64))
