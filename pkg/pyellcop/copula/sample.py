from __future__ import annotations

import numpy as np
import numpy.typing as npt

from pyellcop.copula.exceptions import InvalidSample
from pyellcop.copula.model import CopulaModel


class PseudoSample:
    """
    n×d copula-scale observations, every entry strictly inside (0, 1).
    """

    __slots__ = ("_u",)

    def __init__(self, u: npt.ArrayLike) -> None:
        """
        :raises InvalidSample: if the array is not n×d with n >= 1, d >= 2 and
            all entries in the open unit interval
        """
        a = np.array(u, dtype=np.float64)
        if a.ndim != 2:
            raise InvalidSample(f"expected an n×d array, got shape {a.shape}")
        if a.shape[0] < 1 or a.shape[1] < 2:
            raise InvalidSample(
                f"a pseudo-sample needs n >= 1 rows and d >= 2 columns, got {a.shape}"
            )
        if not np.all((a > 0.0) & (a < 1.0)):
            raise InvalidSample("pseudo-observations must lie in the open interval (0, 1)")
        a.setflags(write=False)
        self._u = a

    @property
    def u(self) -> np.ndarray:
        return self._u

    @property
    def n(self) -> int:
        return self._u.shape[0]

    @property
    def d(self) -> int:
        return self._u.shape[1]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"PseudoSample(n={self.n}, d={self.d})"


class TransformedSample:
    """
    Pseudo-observations mapped through the margin quantile of a model:
    g = Φ⁻¹(u) for the Gaussian copula, s = t_ν⁻¹(u) for the Student's t.
    """

    __slots__ = ("_z", "_model", "_source")

    def __init__(
        self, z: npt.ArrayLike, model: CopulaModel, source: PseudoSample | None = None
    ) -> None:
        a = np.array(z, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 2:
            raise InvalidSample(f"expected an n×d array with d >= 2, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InvalidSample("transformed sample contains non-finite values")
        a.setflags(write=False)
        self._z = a
        self._model = model
        self._source = source

    @property
    def z(self) -> np.ndarray:
        return self._z

    @property
    def model(self) -> CopulaModel:
        return self._model

    @property
    def source(self) -> PseudoSample | None:
        """The pseudo-observations this sample was transformed from, if known."""
        return self._source

    @property
    def n(self) -> int:
        return self._z.shape[0]

    @property
    def d(self) -> int:
        return self._z.shape[1]

    def scatter(self) -> np.ndarray:
        """Σₜ zₜzₜᵀ."""
        return self._z.T @ self._z

    def __repr__(self) -> str:
        return f"TransformedSample(n={self.n}, d={self.d}, model={self._model.label})"


def transform(sample: PseudoSample, model: CopulaModel) -> TransformedSample:
    """
    Map pseudo-observations through the model's inverse margin.

    :param sample: the pseudo-observations
    :type sample: PseudoSample
    :param model: the copula model whose margin is used
    :type model: CopulaModel

    :returns: the transformed sample
    :rtype: TransformedSample
    """
    return TransformedSample(model.impl().quantile(sample.u), model, source=sample)
