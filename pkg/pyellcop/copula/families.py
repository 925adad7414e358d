"""
Elliptical copula families.

An elliptical copula density with correlation ρ factors as

    log c(u; ρ) = C_d − ½·log|ρ| + k(zᵀρ⁻¹z) − Σᵢ m(zᵢ),   zᵢ = F⁻¹(uᵢ)

where k is the log density generator of the joint law, m the log kernel of
the univariate margin and C_d the normalization left once the margins are
divided out. The derivative of the log-likelihood with respect to the
entries of ρ⁻¹ is then

    𝒟(ρ) = (n/2)·ρ − ½·Σₜ ψ(qₜ)·zₜzₜᵀ,   ψ(q) = −2·k'(q),

so a family only has to provide F⁻¹, F, C_d, k, m, ψ and a radial mixing
variable for simulation. Every estimator in the package is written against
this interface.
"""

from abc import ABC, abstractmethod

import numpy as np

from pyellcop.margins import log_gamma, norm_cdf, norm_quantile, t_cdf, t_quantile
from pyellcop.margins.dof import nu_value


class EllipticalFamily(ABC):
    """
    Interface of an elliptical copula family.
    """

    name: str = ""

    @abstractmethod
    def quantile(self, u: np.ndarray) -> np.ndarray:
        """Univariate margin quantile F⁻¹, elementwise."""

    @abstractmethod
    def cdf(self, x: np.ndarray) -> np.ndarray:
        """Univariate margin distribution function F, elementwise."""

    @abstractmethod
    def log_constant(self, d: int) -> float:
        """Normalization C_d of the copula density in dimension d."""

    @abstractmethod
    def log_kernel(self, q: np.ndarray, d: int) -> np.ndarray:
        """Log density generator k(q) at the quadratic forms q."""

    @abstractmethod
    def log_margin_kernel(self, z: np.ndarray) -> np.ndarray:
        """Univariate log kernel m(z), elementwise."""

    @abstractmethod
    def weights(self, q: np.ndarray, d: int) -> np.ndarray:
        """ψ(q) = −2·k'(q) at the quadratic forms q."""

    @abstractmethod
    def radial_mixing(self, rng: np.random.Generator, n: int) -> np.ndarray | None:
        """
        Per-row scale multiplying a standard multivariate normal draw, or
        None when the joint law is itself normal.
        """

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}()"


class GaussianFamily(EllipticalFamily):
    name = "gaussian"

    def quantile(self, u: np.ndarray) -> np.ndarray:
        return norm_quantile(u)

    def cdf(self, x: np.ndarray) -> np.ndarray:
        return norm_cdf(x)

    def log_constant(self, d: int) -> float:
        return 0.0

    def log_kernel(self, q: np.ndarray, d: int) -> np.ndarray:
        return -0.5 * q

    def log_margin_kernel(self, z: np.ndarray) -> np.ndarray:
        return -0.5 * z * z

    def weights(self, q: np.ndarray, d: int) -> np.ndarray:
        return np.ones_like(q)

    def radial_mixing(self, rng: np.random.Generator, n: int) -> None:
        return None


class StudentTFamily(EllipticalFamily):
    name = "t"

    def __init__(self, nu: float) -> None:
        self.nu = nu_value(nu)

    def quantile(self, u: np.ndarray) -> np.ndarray:
        return t_quantile(u, self.nu)

    def cdf(self, x: np.ndarray) -> np.ndarray:
        return t_cdf(x, self.nu)

    def log_constant(self, d: int) -> float:
        nu = self.nu
        return float(
            log_gamma(0.5 * (nu + d))
            + (d - 1) * log_gamma(0.5 * nu)
            - d * log_gamma(0.5 * (nu + 1.0))
        )

    def log_kernel(self, q: np.ndarray, d: int) -> np.ndarray:
        return -0.5 * (self.nu + d) * np.log1p(q / self.nu)

    def log_margin_kernel(self, z: np.ndarray) -> np.ndarray:
        return -0.5 * (self.nu + 1.0) * np.log1p(z * z / self.nu)

    def weights(self, q: np.ndarray, d: int) -> np.ndarray:
        return ((self.nu + d) / self.nu) / (1.0 + q / self.nu)

    def radial_mixing(self, rng: np.random.Generator, n: int) -> np.ndarray:
        # χ²_ν as Gamma(ν/2, 2); the Marsaglia–Tsang sampler covers shape < 1
        chi2 = rng.gamma(shape=0.5 * self.nu, scale=2.0, size=n)
        chi2 = np.maximum(chi2, np.finfo(np.float64).tiny)
        return np.sqrt(self.nu / chi2)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(nu={self.nu!r})"
