import numpy as np

from pyellcop.copula import (
    CopulaModel,
    PseudoSample,
    kendall_tau_matrix,
    log_likelihood,
    project_to_correlation,
    transform,
)
from pyellcop.estimate.result import FitResult, FitStatus, TraceEntry
from pyellcop.linalg import SymMatrix, is_positive_definite, sym_eigen

# eigenvalue floor used to repair an inverted τ matrix that is not positive-definite
EIGENVALUE_FLOOR = 1e-8


def fit_moments(sample: PseudoSample, model: CopulaModel) -> FitResult:
    """
    Method-of-moments estimate through Kendall's τ inversion,
    ρᵢⱼ = sin(π·τᵢⱼ/2). An inverted matrix that is not positive-definite has
    its eigenvalues floored before being projected back to unit diagonal.

    :param sample: the pseudo-observations
    :type sample: PseudoSample
    :param model: the copula model the log-likelihood is reported for
    :type model: CopulaModel

    :returns: the fit, always with status Converged
    :rtype: FitResult
    """
    tau = kendall_tau_matrix(sample).values
    r = np.sin(0.5 * np.pi * tau)
    np.fill_diagonal(r, 1.0)
    if not is_positive_definite(r):
        eig = sym_eigen(r)
        floored = np.maximum(eig.values, EIGENVALUE_FLOOR)
        r = (eig.vectors * floored) @ eig.vectors.T
    seed = SymMatrix(r)
    rho = project_to_correlation(seed)
    loglik = log_likelihood(transform(sample, model), rho, model)
    return FitResult(
        method="moments",
        model=model,
        rho_hat=rho,
        loglik=loglik,
        iterations=0,
        status=FitStatus.CONVERGED,
        lambda_trace=[TraceEntry(0, 0.0, loglik)],
        seed_sigma=seed,
    )
