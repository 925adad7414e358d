"""
Univariate standard normal and Student's t distribution functions.

All functions accept scalars or arrays; a scalar input yields a Python float.
Inputs outside the mathematical domain raise DomainError here: clamping of
probabilities is an ingestion concern, never a concern of this module.
"""

import math

import numpy as np
import numpy.typing as npt
import scipy.special as sp

from pyellcop.margins.dof import Dof, nu_value
from pyellcop.margins.exceptions import DomainError

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _wrap(value: np.ndarray, scalar: bool) -> float | np.ndarray:
    return float(value) if scalar else value


def _finite(x: npt.ArrayLike) -> tuple[np.ndarray, bool]:
    a = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise DomainError("argument must be finite")
    return a, a.ndim == 0


def _probability(u: npt.ArrayLike) -> tuple[np.ndarray, bool]:
    a = np.asarray(u, dtype=np.float64)
    if not np.all((a > 0.0) & (a < 1.0)):
        raise DomainError("probability must lie in the open interval (0, 1)")
    return a, a.ndim == 0


def norm_cdf(x: npt.ArrayLike) -> float | np.ndarray:
    """
    Standard normal distribution function Φ.
    """
    a, scalar = _finite(x)
    return _wrap(sp.ndtr(a), scalar)


def norm_quantile(u: npt.ArrayLike) -> float | np.ndarray:
    """
    Standard normal quantile Φ⁻¹.

    :raises DomainError: for u outside (0, 1)
    """
    a, scalar = _probability(u)
    return _wrap(sp.ndtri(a), scalar)


def norm_logpdf(x: npt.ArrayLike) -> float | np.ndarray:
    a, scalar = _finite(x)
    return _wrap(-0.5 * a * a - _HALF_LOG_2PI, scalar)


def t_cdf(x: npt.ArrayLike, nu: Dof | float) -> float | np.ndarray:
    """
    Student's t distribution function t_ν, evaluated through the regularized
    incomplete beta function.
    """
    a, scalar = _finite(x)
    return _wrap(sp.stdtr(nu_value(nu), a), scalar)


def _t_logpdf(a: np.ndarray, v: float) -> np.ndarray:
    const = sp.gammaln(0.5 * (v + 1.0)) - sp.gammaln(0.5 * v) - 0.5 * math.log(v * math.pi)
    return const - 0.5 * (v + 1.0) * np.log1p(a * a / v)


def t_quantile(u: npt.ArrayLike, nu: Dof | float) -> float | np.ndarray:
    """
    Student's t quantile t_ν⁻¹.

    The lower tail is inverted with the incomplete beta inverse and refined by
    one Newton step on t_ν; the upper half is its mirror image, so that
    t_ν⁻¹(1 - u) = -t_ν⁻¹(u) and t_ν⁻¹(1/2) = 0 hold exactly.

    :raises DomainError: for u outside (0, 1) or an invalid ν
    """
    a, scalar = _probability(u)
    v = nu_value(nu)
    # 1 - a is exact for a >= 1/2
    tail = np.where(a > 0.5, 1.0 - a, a)
    x = sp.stdtrit(v, tail)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        step = (sp.stdtr(v, x) - tail) / np.exp(_t_logpdf(x, v))
    x = np.where(np.isfinite(step), x - step, x)
    x = np.where(a > 0.5, -x, x)
    x = np.where(a == 0.5, 0.0, x)
    return _wrap(x, scalar)


def t_logpdf(x: npt.ArrayLike, nu: Dof | float) -> float | np.ndarray:
    a, scalar = _finite(x)
    return _wrap(_t_logpdf(a, nu_value(nu)), scalar)


def log_gamma(x: npt.ArrayLike) -> float | np.ndarray:
    """
    Natural logarithm of the gamma function for positive arguments.

    :raises DomainError: for x <= 0
    """
    a = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(a) & (a > 0.0)):
        raise DomainError("log_gamma is defined here for positive finite arguments only")
    return _wrap(sp.gammaln(a), a.ndim == 0)
