import numpy as np

from pyellcop.copula import CopulaModel, CorrelationMatrix, Family, TransformedSample
from pyellcop.copula.correlation import project_with_factor
from pyellcop.copula.derivatives import weighted_scatter
from pyellcop.copula.exceptions import NonPositiveDiagonal
from pyellcop.copula.likelihood import log_likelihood_total
from pyellcop.estimate.exceptions import ModelMismatch
from pyellcop.estimate.initial import gaussian_closed_form_sigma, initial_sigma
from pyellcop.estimate.result import FitResult, FitStatus, TraceEntry
from pyellcop.linalg import SymMatrix, max_abs
from pyellcop.linalg.exceptions import NotPositiveDefinite
from pyellcop.tools.base_logger import BaseLogger


def check_model(sample: TransformedSample, model: CopulaModel) -> None:
    if sample.model != model:
        raise ModelMismatch(
            f"sample was transformed for {sample.model.label}, not {model.label}"
        )


def fixed_point_step(
    rho: CorrelationMatrix, sample: TransformedSample, model: CopulaModel
) -> SymMatrix:
    """
    One unprojected fixed-point update of the approximate method,
    Σ = (1 + d/ν)·(1/n)·Σₜ sₜsₜᵀ / (1 + sₜᵀρ⁻¹sₜ/ν); for the Gaussian copula
    the moment matrix.

    :returns: the next Σ, before projection
    :rtype: SymMatrix
    """
    check_model(sample, model)
    return SymMatrix(weighted_scatter(sample.z, rho.lower, model.impl()) / sample.n)


class ApproximateFixedPoint(BaseLogger):
    """
    Projected fixed-point iteration on the critical-point condition of the
    unconstrained problem. Fast, but its fixed point is not the constrained
    maximizer in general.
    """

    method = "approx"

    def __init__(
        self,
        sample: TransformedSample,
        model: CopulaModel,
        max_iters: int = 10_000,
        tol: float = 1e-9,
    ) -> None:
        check_model(sample, model)
        self.sample = sample
        self.model = model
        self.max_iters = max_iters
        self.tol = tol

    def fit(self) -> FitResult:
        z = self.sample.z
        family = self.model.impl()
        scope = f"{self.method}:{self.model.label}"

        if self.model.family is Family.GAUSSIAN:
            seed = gaussian_closed_form_sigma(self.sample)
            rho, _, lower = project_with_factor(seed.values)
            loglik = log_likelihood_total(z, lower, family)
            return FitResult(
                method=self.method,
                model=self.model,
                rho_hat=CorrelationMatrix(rho),
                loglik=loglik,
                iterations=0,
                status=FitStatus.CONVERGED,
                lambda_trace=[TraceEntry(0, 0.0, loglik)],
                seed_sigma=seed,
            )

        seed = initial_sigma(self.sample)
        rho, _, lower = project_with_factor(seed.values)
        status = FitStatus.MAX_ITERS
        iterations = 0
        n = self.sample.n

        for m in range(1, self.max_iters + 1):
            sigma_next = weighted_scatter(z, lower, family) / n
            try:
                rho_next, _, lower_next = project_with_factor(sigma_next)
            except (NotPositiveDefinite, NonPositiveDiagonal) as e:
                self._log_warning(scope, f"iterate {m} is not positive-definite: {e}")
                status = FitStatus.DIVERGED
                break
            change = max_abs(rho_next - rho)
            rho, lower = rho_next, lower_next
            iterations = m
            if change < self.tol:
                status = FitStatus.CONVERGED
                break

        loglik = log_likelihood_total(z, lower, family)
        if not np.isfinite(loglik):
            status = FitStatus.DIVERGED
        if status is not FitStatus.CONVERGED:
            self._log_warning(scope, f"stopped with {status.value} after {iterations} iterations")
        else:
            self._log_debug(scope, f"converged in {iterations} iterations, loglik={loglik:.6f}")

        return FitResult(
            method=self.method,
            model=self.model,
            rho_hat=CorrelationMatrix(rho),
            loglik=loglik,
            iterations=iterations,
            status=status,
            lambda_trace=[TraceEntry(iterations, 0.0, loglik)],
            seed_sigma=seed,
        )


def fit_approximate(
    sample: TransformedSample,
    model: CopulaModel,
    max_iters: int = 10_000,
    tol: float = 1e-9,
) -> FitResult:
    """
    Approximate estimator: the projected fixed-point iteration for the Student's
    t copula, a single projection of the moment matrix for the Gaussian copula.
    A non positive-definite iterate ends the run with status Diverged; no
    tolerance-level convergence within max_iters ends it with MaxIters.

    :param sample: the transformed sample
    :type sample: TransformedSample
    :param model: the copula model the sample was transformed for
    :type model: CopulaModel
    :param max_iters: iteration limit
    :type max_iters: int
    :param tol: max-abs change in ρ that stops the iteration
    :type tol: float

    :returns: the fit
    :rtype: FitResult
    """
    return ApproximateFixedPoint(sample, model, max_iters, tol).fit()
