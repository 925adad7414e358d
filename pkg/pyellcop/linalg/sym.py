from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from pyellcop.exceptions import ValidationError
from pyellcop.linalg.exceptions import NonFiniteEntries, NotSymmetric

SYMMETRY_RTOL = 1e-12


def as_square_array(values: npt.ArrayLike) -> np.ndarray:
    """
    Convert the input into a finite, square float64 array.

    :param values: the matrix entries
    :type values: array-like

    :raises ValidationError: if the input is not a non-empty square matrix
    :raises NonFiniteEntries: if any entry is NaN or infinite

    :returns: a fresh float64 array
    :rtype: np.ndarray
    """
    a = np.array(values, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValidationError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFiniteEntries("matrix contains NaN or infinite entries")
    return a


class SymMatrix:
    """
    Dense symmetric matrix. Symmetry is checked on construction and then
    enforced exactly, so that entry(i, j) == entry(j, i) bit for bit.
    The underlying array is read-only.
    """

    __slots__ = ("_values",)

    def __init__(self, values: npt.ArrayLike, rtol: float = SYMMETRY_RTOL) -> None:
        """
        :param values: a d×d array-like
        :param rtol: tolerated asymmetry relative to the largest absolute entry

        :raises NotSymmetric: if the input is not symmetric within rtol
        """
        a = values.values.copy() if isinstance(values, SymMatrix) else as_square_array(values)
        scale = max(float(np.max(np.abs(a))), np.finfo(np.float64).tiny)
        asym = float(np.max(np.abs(a - a.T)))
        if asym > rtol * scale:
            raise NotSymmetric(f"matrix is not symmetric (max asymmetry {asym:.3e})")
        a = 0.5 * (a + a.T)
        a.setflags(write=False)
        self._values = a

    @classmethod
    def identity(cls, dim: int) -> SymMatrix:
        return cls(np.eye(dim))

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def dim(self) -> int:
        return self._values.shape[0]

    def entry(self, i: int, j: int) -> float:
        return float(self._values[i, j])

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        a = self._values if dtype is None else self._values.astype(dtype)
        return a.copy() if copy else a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return np.array_equal(self._values, other._values)

    def __hash__(self) -> int:
        return hash(self._values.tobytes())

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(dim={self.dim})"

    def tolist(self) -> list[list[float]]:
        return self._values.tolist()


@dataclass(frozen=True)
class CholeskyFactor:
    """
    Lower-triangular factor L with m = L·Lᵀ.
    """

    lower: np.ndarray

    @property
    def dim(self) -> int:
        return self.lower.shape[0]

    @property
    def logdet(self) -> float:
        return 2.0 * float(np.sum(np.log(np.diag(self.lower))))


@dataclass(frozen=True)
class EigenDecomposition:
    """
    Eigenvalues in descending order and the orthogonal matrix of eigenvectors
    (one per column).
    """

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.T

    @property
    def min_value(self) -> float:
        return float(self.values[-1])
