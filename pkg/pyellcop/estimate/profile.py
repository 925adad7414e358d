import math

from pyellcop.copula import CopulaModel, PseudoSample, transform
from pyellcop.estimate.ascent import fit_inverse_gradient
from pyellcop.estimate.exceptions import BracketError
from pyellcop.estimate.result import FitResult, FitStatus
from pyellcop.estimate.schemas import StepConfig
from pyellcop.margins import Dof
from pyellcop.tools.base_logger import BaseLogger

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class ProfileLikelihood(BaseLogger):
    """
    Golden-section search over ν of the profile log-likelihood
    ν ↦ max_ρ L(ρ; ν), each evaluation being a full inverse gradient fit on
    the sample re-transformed with t_ν⁻¹.
    """

    def __init__(
        self,
        sample: PseudoSample,
        nu_bracket: tuple[float, float],
        cfg: StepConfig | None = None,
        rel_width: float = 1e-3,
        max_probes: int = 200,
    ) -> None:
        lo, hi = nu_bracket
        if not (0.0 < lo < hi):
            raise ValueError(f"the bracket must satisfy 0 < lo < hi, got {nu_bracket}")
        self.sample = sample
        self.lo, self.hi = float(lo), float(hi)
        self.cfg = cfg
        self.rel_width = rel_width
        self.max_probes = max_probes
        self.fits: dict[float, FitResult] = {}

    def profile(self, nu: float) -> float:
        if nu not in self.fits:
            model = CopulaModel.student_t(nu)
            fit = fit_inverse_gradient(transform(self.sample, model), model, self.cfg)
            self._log_debug("full-t", f"nu={nu:.6g} loglik={fit.loglik:.10g} {fit.status.value}")
            self.fits[nu] = fit
        return self.fits[nu].loglik

    def search(self) -> tuple[FitResult, Dof]:
        a, b = self.lo, self.hi
        fa, fb = self.profile(a), self.profile(b)
        c = b - _INV_PHI * (b - a)
        d = a + _INV_PHI * (b - a)
        fc, fd = self.profile(c), self.profile(d)

        if fa > max(fc, fd) and fb > max(fc, fd):
            raise BracketError(
                f"profile likelihood is higher at both ends of [{a}, {b}] than inside"
            )

        for _ in range(self.max_probes):
            nu_hat = c if fc >= fd else d
            if b - a < self.rel_width * nu_hat:
                break
            if fc >= fd:
                b, d, fd = d, c, fc
                c = b - _INV_PHI * (b - a)
                fc = self.profile(c)
            else:
                a, c, fc = c, d, fd
                d = a + _INV_PHI * (b - a)
                fd = self.profile(d)

        converged = [nu for nu, fit in self.fits.items() if fit.status is FitStatus.CONVERGED]
        nu_best = max(converged or self.fits, key=lambda nu: self.fits[nu].loglik)
        best = self.fits[nu_best]
        if best.status is not FitStatus.CONVERGED:
            self._log_warning(
                "full-t", f"no fit converged, nu_hat={nu_best:.6g} ended {best.status.value}"
            )
        self._log_info(
            "full-t",
            f"nu_hat={nu_best:.6g} loglik={best.loglik:.10g} after {len(self.fits)} probes",
        )
        return best, Dof(nu=nu_best)


def fit_t_full(
    sample: PseudoSample,
    nu_bracket: tuple[float, float] = (0.5, 100.0),
    cfg: StepConfig | None = None,
) -> tuple[FitResult, Dof]:
    """
    Joint estimate of ρ and ν for the Student's t copula by maximizing the
    profile log-likelihood over ν in the bracket. The search stops when the
    bracket is narrower than 1e-3·ν̂; the best evaluated point is returned,
    an endpoint included. Converged fits are preferred over fits that
    ended on MaxIters or StepUnderflow.

    :param sample: the pseudo-observations
    :type sample: PseudoSample
    :param nu_bracket: (lo, hi) with 0 < lo < hi
    :type nu_bracket: tuple[float, float]
    :param cfg: configuration of the inner inverse gradient fits
    :type cfg: StepConfig | None

    :raises BracketError: if both ends beat the first interior probes

    :returns: the fit at ν̂ and ν̂
    :rtype: tuple[FitResult, Dof]
    """
    return ProfileLikelihood(sample, nu_bracket, cfg).search()
