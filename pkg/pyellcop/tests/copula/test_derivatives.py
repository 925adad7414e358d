import numpy as np
import pytest

from pyellcop.copula import (
    CopulaModel,
    CorrelationMatrix,
    TransformedSample,
    d_matrix,
    dispersion_log_likelihood,
    inverse_gradient_direction,
    project_to_correlation,
    projected_log_likelihood,
    sigma_gradient,
)
from pyellcop.linalg import SymMatrix, sym_eigen
from pyellcop.tests.settings import FD_STEP, GAUSSIAN, T5, random_spd, synthetic_case, unit

FAMILIES = [GAUSSIAN, CopulaModel.student_t(0.5), T5]


def _fd_d_matrix(sample, rho, model, h=FD_STEP):
    """Central differences of L in the entries of P = ρ⁻¹, perturbed symmetrically."""
    d = rho.dim
    p = np.linalg.inv(rho.values)
    out = np.empty((d, d))
    for i in range(d):
        for j in range(i, d):
            e = unit(d, i, j)
            up = dispersion_log_likelihood(sample, np.linalg.inv(p + h * e), model)
            down = dispersion_log_likelihood(sample, np.linalg.inv(p - h * e), model)
            out[i, j] = out[j, i] = (up - down) / (2.0 * h)
    return out


def _symmetric_sum(m):
    """m_ij + m_ji off the diagonal, m_ii on it."""
    return m + m.T - np.diag(np.diag(m))


def _fd_sigma_gradient(sample, sigma, model, h=FD_STEP):
    d = sigma.shape[0]
    out = np.empty((d, d))
    for i in range(d):
        for j in range(i, d):
            e = unit(d, i, j)
            up = projected_log_likelihood(sigma + h * e, sample, model)
            down = projected_log_likelihood(sigma - h * e, sample, model)
            out[i, j] = out[j, i] = (up - down) / (2.0 * h)
    return out


def _assert_relative(actual, expected, rtol):
    scale = max(1.0, float(np.max(np.abs(expected))))
    assert float(np.max(np.abs(actual - expected))) < rtol * scale


def test_d_matrix_gaussian_trivial():
    sample = TransformedSample(np.zeros((1, 3)), GAUSSIAN)
    d = d_matrix(sample, CorrelationMatrix(np.eye(3)), GAUSSIAN)
    assert np.allclose(d.values, 0.5 * np.eye(3))


def test_d_matrix_vanishes_at_moment_matrix():
    # rows ±2·e_i in four dimensions give (1/n)·Σ g gᵀ = I exactly
    rows = np.vstack([2.0 * np.eye(4), -2.0 * np.eye(4)])
    sample = TransformedSample(rows, GAUSSIAN)
    moment = sample.scatter() / sample.n
    rho = CorrelationMatrix(moment)
    assert np.all(d_matrix(sample, rho, GAUSSIAN).values == 0.0)
    assert np.allclose(inverse_gradient_direction(moment, sample, GAUSSIAN).values, 0.0, atol=1e-12)


@pytest.mark.parametrize("model", FAMILIES)
@pytest.mark.parametrize("dim, seed", [(2, 1), (3, 2), (5, 3)])
def test_d_matrix_finite_differences(model, dim, seed):
    rho, _, sample = synthetic_case(dim, model, 50, seed)
    analytic = d_matrix(sample, rho, model).values
    _assert_relative(_symmetric_sum(analytic), _fd_d_matrix(sample, rho, model), 1e-5)


@pytest.mark.parametrize("model", FAMILIES)
@pytest.mark.parametrize("dim, seed", [(2, 4), (3, 5), (5, 6)])
def test_sigma_gradient_finite_differences(model, dim, seed):
    _, _, sample = synthetic_case(dim, model, 50, seed)
    sigma = random_spd(dim, seed)
    analytic = sigma_gradient(sigma, sample, model).values
    _assert_relative(_symmetric_sum(analytic), _fd_sigma_gradient(sample, sigma, model), 1e-5)


def test_sigma_gradient_congruence():
    _, _, sample = synthetic_case(4, T5, 60, seed=8)
    sigma = random_spd(4, seed=9)
    g = sigma_gradient(sigma, sample, T5).values
    v = inverse_gradient_direction(sigma, sample, T5).values
    # −Σ·G·Σ = ∂L*/∂Σ⁻¹ = −V
    assert np.allclose(-sigma @ g @ sigma, -v, atol=1e-10)


def test_zero_direction_gives_zero_gradient():
    rows = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]]) * np.sqrt(2.0)
    sample = TransformedSample(rows, GAUSSIAN)
    sigma = SymMatrix(sample.scatter() / sample.n)
    assert np.allclose(inverse_gradient_direction(sigma, sample, GAUSSIAN).values, 0.0, atol=1e-12)
    assert np.allclose(sigma_gradient(sigma, sample, GAUSSIAN).values, 0.0, atol=1e-12)


def test_direction_scales_with_sigma():
    _, _, sample = synthetic_case(4, T5, 80, seed=10)
    sigma = random_spd(4, seed=11)
    v = inverse_gradient_direction(sigma, sample, T5).values
    v7 = inverse_gradient_direction(7.0 * sigma, sample, T5).values
    assert np.allclose(v7, 7.0 * v, rtol=1e-10, atol=1e-10)

    lam = 1e-3
    step = project_to_correlation(sigma + lam * v)
    step7 = project_to_correlation(7.0 * sigma + lam * v7)
    assert np.allclose(step.values, step7.values, atol=1e-12)


@pytest.mark.parametrize("seed", range(200))
def test_directional_derivative_nonnegative(seed):
    model = GAUSSIAN if seed % 2 else CopulaModel.student_t(1.0 + seed % 7)
    dim = 2 + seed % 4
    rng = np.random.default_rng(seed)
    sample = TransformedSample(rng.standard_normal((30, dim)), model)
    sigma = random_spd(dim, seed + 1000)

    g = sigma_gradient(sigma, sample, model).values
    trace_form = float(np.trace(g @ sigma @ g @ sigma))
    assert trace_form >= -1e-12

    eig = sym_eigen(sigma)
    m = eig.vectors.T @ g @ eig.vectors
    eigen_form = float(np.sum(np.outer(eig.values, eig.values) * m * m))
    assert eigen_form == pytest.approx(trace_form, abs=1e-9, rel=1e-9)
