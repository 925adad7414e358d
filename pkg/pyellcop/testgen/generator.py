import logging

import numpy as np
import scipy.stats as st

from pyellcop.copula import CorrelationMatrix, PseudoSample, sample_copula
from pyellcop.testgen.exceptions import DegenerateSpectrum
from pyellcop.testgen.schemas import CaseSpec
from pyellcop.tools.utils import derive_seed

logger = logging.getLogger(__name__)

MIN_EIGENVALUE = 1e-12
MAX_ATTEMPTS = 100


def random_spectrum(dim: int, rng: np.random.Generator) -> np.ndarray:
    """
    d eigenvalues drawn iid Uniform(0, 1) and rescaled to sum to d.

    :raises DegenerateSpectrum: if no draw in MAX_ATTEMPTS keeps every
        eigenvalue above MIN_EIGENVALUE
    """
    for attempt in range(MAX_ATTEMPTS):
        eigs = rng.uniform(0.0, 1.0, size=dim)
        eigs *= dim / eigs.sum()
        if eigs.min() >= MIN_EIGENVALUE:
            return eigs
        logger.debug(f"resampling spectrum, attempt {attempt + 1} gave {eigs.min():.3e}")
    raise DegenerateSpectrum(
        f"no spectrum with all eigenvalues >= {MIN_EIGENVALUE} in {MAX_ATTEMPTS} attempts"
    )


def random_correlation_with_spectrum(
    dim: int, rng_seed: int
) -> tuple[CorrelationMatrix, np.ndarray]:
    """
    A random correlation matrix together with its prescribed spectrum.

    A = O·Λ·Oᵀ is built with a Haar orthogonal O; Givens rotations then drive
    each diagonal entry to 1 while keeping the eigenvalues
    (scipy.stats.random_correlation). The diagonal is finally set to exactly 1.

    :param dim: the dimension, at least 2
    :type dim: int
    :param rng_seed: the seed of the private generator
    :type rng_seed: int

    :returns: the matrix and its eigenvalues in descending order
    :rtype: tuple[CorrelationMatrix, np.ndarray]
    """
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    rng = np.random.default_rng(rng_seed)
    eigs = random_spectrum(dim, rng)
    m = st.random_correlation.rvs(eigs, random_state=rng, tol=1e-10 * dim)
    m = 0.5 * (m + m.T)
    np.clip(m, -1.0, 1.0, out=m)
    np.fill_diagonal(m, 1.0)
    return CorrelationMatrix(m), np.sort(eigs)[::-1]


def random_correlation(dim: int, rng_seed: int) -> CorrelationMatrix:
    """
    Random correlation matrix with a uniformly drawn spectrum, rescaled so
    that the eigenvalues sum to the dimension.

    :param dim: the dimension, at least 2
    :type dim: int
    :param rng_seed: the seed of the private generator
    :type rng_seed: int

    :raises DegenerateSpectrum: if no usable spectrum is drawn

    :returns: the correlation matrix
    :rtype: CorrelationMatrix
    """
    return random_correlation_with_spectrum(dim, rng_seed)[0]


def generate_case(spec: CaseSpec) -> tuple[CorrelationMatrix, PseudoSample]:
    """
    The generator correlation matrix of a case and a sample drawn from the
    case's copula with it. The matrix uses ``spec.seed``, the sample an
    independent seed derived from it.

    :param spec: the case
    :type spec: CaseSpec

    :returns: (ρ, pseudo-observations)
    :rtype: tuple[CorrelationMatrix, PseudoSample]
    """
    rho = random_correlation(spec.dim, spec.seed)
    sample = sample_copula(rho, spec.model, spec.n_obs, derive_seed(spec.seed, 1))
    return rho, sample
