from pyellcop.estimate.approximate import ApproximateFixedPoint, fit_approximate, fixed_point_step
from pyellcop.estimate.ascent import (
    InverseGradientAscent,
    NaiveGradientAscent,
    ProjectedAscent,
    fit_inverse_gradient,
    fit_naive_gradient,
)
from pyellcop.estimate.initial import gaussian_closed_form_sigma, initial_sigma
from pyellcop.estimate.moments import fit_moments
from pyellcop.estimate.profile import ProfileLikelihood, fit_t_full
from pyellcop.estimate.result import FitResult, FitStatus, TraceEntry
from pyellcop.estimate.schemas import StepConfig

__all__ = [
    "ApproximateFixedPoint",
    "FitResult",
    "FitStatus",
    "InverseGradientAscent",
    "NaiveGradientAscent",
    "ProfileLikelihood",
    "ProjectedAscent",
    "StepConfig",
    "TraceEntry",
    "fit_approximate",
    "fit_inverse_gradient",
    "fit_moments",
    "fit_naive_gradient",
    "fit_t_full",
    "fixed_point_step",
    "gaussian_closed_form_sigma",
    "initial_sigma",
]
