import logging

import numpy as np

from pyellcop.copula import Family, TransformedSample
from pyellcop.estimate.exceptions import DegenerateSample
from pyellcop.linalg import SymMatrix, cholesky_lower
from pyellcop.linalg.exceptions import NotPositiveDefinite
from pyellcop.margins import norm_quantile

logger = logging.getLogger(__name__)

# relative size of the ridge added to a singular moment matrix
REGULARIZATION = 1e-8


def _moment_sigma(g: np.ndarray) -> SymMatrix:
    n, d = g.shape
    if n < 2:
        raise DegenerateSample(f"at least two observations are required, got {n}")
    sigma = (g.T @ g) / n
    sigma = 0.5 * (sigma + sigma.T)
    try:
        cholesky_lower(sigma)
        return SymMatrix(sigma)
    except NotPositiveDefinite:
        pass

    eps = REGULARIZATION * float(np.trace(sigma)) / d
    regularized = sigma + eps * np.eye(d)
    logger.debug(f"moment matrix is singular (n={n}, d={d}), adding {eps:.3e}·I")
    try:
        cholesky_lower(regularized)
    except NotPositiveDefinite as e:
        raise DegenerateSample(
            f"moment matrix stays singular after regularization at pivot {e.pivot_index}"
        )
    return SymMatrix(regularized)


def gaussian_scores(sample: TransformedSample) -> np.ndarray:
    """
    The normal scores g = Φ⁻¹(u) of a transformed sample.
    """
    if sample.model.family is Family.GAUSSIAN:
        return sample.z
    if sample.source is not None:
        u = sample.source.u
    else:
        u = np.clip(sample.model.impl().cdf(sample.z), np.finfo(np.float64).tiny, np.nextafter(1.0, 0.0))
    return norm_quantile(u)


def gaussian_closed_form_sigma(sample: TransformedSample) -> SymMatrix:
    """
    Unconstrained maximizer of the Gaussian copula likelihood over covariance
    matrices, Σ = (1/n)·Σₜ gₜgₜᵀ, regularized with a small ridge when singular.

    :param sample: the transformed sample
    :type sample: TransformedSample

    :raises DegenerateSample: for fewer than two observations or a moment
        matrix that stays singular

    :returns: the moment matrix
    :rtype: SymMatrix
    """
    return _moment_sigma(gaussian_scores(sample))


def initial_sigma(sample: TransformedSample) -> SymMatrix:
    """
    Seed Σ₀ of the iterative estimators, the Gaussian moment matrix of the
    sample's normal scores for every family.
    """
    return gaussian_closed_form_sigma(sample)
