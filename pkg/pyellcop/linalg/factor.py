import numpy as np
import numpy.typing as npt
from scipy.linalg import lapack, solve_triangular

from pyellcop.linalg.exceptions import ConvergenceFailure, NotPositiveDefinite
from pyellcop.linalg.sym import (
    CholeskyFactor,
    EigenDecomposition,
    SymMatrix,
    as_square_array,
)

# a Cholesky pivot must exceed PD_TOLERANCE times the largest diagonal entry
PD_TOLERANCE = 1e-12


def _as_array(m: SymMatrix | npt.ArrayLike) -> np.ndarray:
    if isinstance(m, SymMatrix):
        return m.values
    if isinstance(m, np.ndarray) and m.dtype == np.float64 and m.ndim == 2:
        return m
    return as_square_array(m)


def cholesky_lower(a: np.ndarray) -> np.ndarray:
    """
    Lower Cholesky factor of a symmetric array, without building a SymMatrix.
    Only the lower triangle of ``a`` is read.

    :param a: a d×d float64 array
    :type a: np.ndarray

    :raises NotPositiveDefinite: if a pivot is not above the pd tolerance

    :returns: the lower-triangular factor
    :rtype: np.ndarray
    """
    lower, info = lapack.dpotrf(a, lower=1, clean=1)
    if info > 0:
        raise NotPositiveDefinite(info - 1)
    if info < 0:
        raise ValueError(f"illegal argument {-info} passed to dpotrf")

    pivots = np.diag(lower) ** 2
    threshold = PD_TOLERANCE * float(np.max(np.diag(a)))
    small = np.flatnonzero(~(pivots > threshold))
    if small.size:
        raise NotPositiveDefinite(int(small[0]))
    return lower


def cholesky(m: SymMatrix | npt.ArrayLike) -> CholeskyFactor:
    """
    Cholesky factorization m = L·Lᵀ. Failure is the positive-definiteness test
    used throughout the package.

    :param m: the symmetric matrix to factor
    :type m: SymMatrix | array-like

    :raises NotPositiveDefinite: with the index of the first failing pivot

    :returns: the factor
    :rtype: CholeskyFactor
    """
    return CholeskyFactor(lower=cholesky_lower(_as_array(m)))


def is_positive_definite(m: SymMatrix | npt.ArrayLike) -> bool:
    try:
        cholesky_lower(_as_array(m))
    except NotPositiveDefinite:
        return False
    return True


def inverse_from_cholesky(lower: np.ndarray) -> np.ndarray:
    inv, info = lapack.dpotri(lower, lower=1)
    if info != 0:
        raise NotPositiveDefinite(max(info - 1, 0))
    inv = np.tril(inv)
    return inv + np.tril(inv, -1).T


def inverse_and_logdet(m: SymMatrix | npt.ArrayLike) -> tuple[SymMatrix, float]:
    """
    Inverse and log-determinant of a positive-definite matrix, both from its
    Cholesky factor.

    :param m: the symmetric matrix
    :type m: SymMatrix | array-like

    :raises NotPositiveDefinite: if m is not positive-definite

    :returns: (m⁻¹, log|m|)
    :rtype: tuple[SymMatrix, float]
    """
    factor = cholesky(m)
    return SymMatrix(inverse_from_cholesky(factor.lower)), factor.logdet


def quad_forms(lower: np.ndarray, z: np.ndarray) -> np.ndarray:
    """
    Row-wise quadratic forms zₜᵀ(L·Lᵀ)⁻¹zₜ through one triangular solve.

    :param lower: the Cholesky factor of the quadratic form's matrix
    :type lower: np.ndarray
    :param z: n×d array of rows
    :type z: np.ndarray

    :returns: the n quadratic forms
    :rtype: np.ndarray
    """
    y = solve_triangular(lower, z.T, lower=True, check_finite=False)
    return np.einsum("ij,ij->j", y, y)


def sym_eigen(m: SymMatrix | npt.ArrayLike) -> EigenDecomposition:
    """
    Symmetric eigendecomposition with eigenvalues in descending order.

    :param m: the symmetric matrix
    :type m: SymMatrix | array-like

    :raises ConvergenceFailure: if the LAPACK solver does not converge

    :returns: eigenvalues and orthogonal eigenvectors
    :rtype: EigenDecomposition
    """
    a = _as_array(m)
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as e:
        raise ConvergenceFailure(f"symmetric eigensolver did not converge: {e}")
    return EigenDecomposition(
        values=values[::-1].copy(), vectors=vectors[:, ::-1].copy()
    )


def max_abs(a: npt.ArrayLike) -> float:
    return float(np.max(np.abs(a)))
