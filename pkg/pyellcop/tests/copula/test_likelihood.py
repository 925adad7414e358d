import math

import numpy as np
import pytest
import scipy.stats as st

from pyellcop.copula import (
    CopulaModel,
    CorrelationMatrix,
    TransformedSample,
    dispersion_log_likelihood,
    gaussian_log_density,
    log_likelihood,
    per_observation_log_density,
    project_to_correlation,
    projected_log_likelihood,
    t_log_density,
)
from pyellcop.copula.exceptions import DimensionMismatch
from pyellcop.margins import log_gamma, norm_logpdf, t_logpdf
from pyellcop.tests.settings import GAUSSIAN, RHO_2D, RHO_3D, T5, random_spd, synthetic_case


def test_gaussian_density_at_center():
    assert gaussian_log_density([0.0, 0.0], CorrelationMatrix(np.eye(2))) == 0.0
    assert gaussian_log_density([0.0, 0.0], RHO_2D) == pytest.approx(
        -0.5 * math.log(0.75), abs=1e-14
    )


def test_t_density_at_center():
    assert t_log_density([0.0, 0.0], CorrelationMatrix(np.eye(2)), 1.0) == pytest.approx(
        math.log(math.pi / 2.0), abs=1e-14
    )
    for d, nu in [(3, 0.5), (5, 7.0)]:
        expected = (
            log_gamma(0.5 * (nu + d))
            + (d - 1) * log_gamma(0.5 * nu)
            - d * log_gamma(0.5 * (nu + 1.0))
        )
        got = t_log_density(np.zeros(d), CorrelationMatrix(np.eye(d)), nu)
        assert got == pytest.approx(expected, abs=1e-12)


def test_gaussian_density_definition():
    rng = np.random.default_rng(4)
    for _ in range(5):
        g = rng.standard_normal(3)
        expected = st.multivariate_normal(mean=np.zeros(3), cov=RHO_3D.values).logpdf(g)
        expected -= float(np.sum(norm_logpdf(g)))
        assert gaussian_log_density(g, RHO_3D) == pytest.approx(expected, abs=1e-10)


def test_t_density_definition():
    rng = np.random.default_rng(5)
    for _ in range(5):
        s = 2.0 * rng.standard_normal(3)
        expected = st.multivariate_t(loc=np.zeros(3), shape=RHO_3D.values, df=5.0).logpdf(s)
        expected -= float(np.sum(t_logpdf(s, 5.0)))
        assert t_log_density(s, RHO_3D, 5.0) == pytest.approx(expected, abs=1e-10)


def test_t_approaches_gaussian():
    rng = np.random.default_rng(6)
    for _ in range(5):
        z = rng.standard_normal(3)
        assert t_log_density(z, RHO_3D, 1e8) == pytest.approx(
            gaussian_log_density(z, RHO_3D), abs=1e-4
        )


def test_log_likelihood_single_row_and_additivity():
    rng = np.random.default_rng(7)
    z = rng.standard_normal((9, 3))
    one = TransformedSample(z[:1], T5)
    assert log_likelihood(one, RHO_3D, T5) == pytest.approx(t_log_density(z[0], RHO_3D, 5.0))

    whole = log_likelihood(TransformedSample(z, T5), RHO_3D, T5)
    parts = log_likelihood(TransformedSample(z[:4], T5), RHO_3D, T5) + log_likelihood(
        TransformedSample(z[4:], T5), RHO_3D, T5
    )
    assert whole == pytest.approx(parts, abs=1e-12)


def test_log_likelihood_matches_row_sum():
    rho, _, sample = synthetic_case(10, T5, 100, seed=21)
    naive = sum(t_log_density(row, rho, 5.0) for row in sample.z)
    assert log_likelihood(sample, rho, T5) == pytest.approx(naive, abs=1e-10)
    rows = per_observation_log_density(sample, rho, T5)
    assert rows.shape == (100,)
    assert float(np.sum(rows)) == pytest.approx(naive, abs=1e-10)


def test_dimension_mismatch():
    sample = TransformedSample(np.zeros((3, 2)), GAUSSIAN)
    with pytest.raises(DimensionMismatch):
        log_likelihood(sample, RHO_3D, GAUSSIAN)


def test_projected_log_likelihood():
    rho, _, sample = synthetic_case(4, T5, 50, seed=3)
    assert projected_log_likelihood(rho, sample, T5) == pytest.approx(
        log_likelihood(sample, rho, T5), abs=1e-12
    )
    sigma = random_spd(4, seed=8)
    composed = log_likelihood(sample, project_to_correlation(sigma), T5)
    value = projected_log_likelihood(sigma, sample, T5)
    assert value == pytest.approx(composed, abs=1e-10)
    for c in (0.1, 7.0, 100.0):
        assert abs(projected_log_likelihood(c * sigma, sample, T5) - value) < 1e-9


def test_dispersion_log_likelihood_at_correlation():
    rho, _, sample = synthetic_case(3, GAUSSIAN, 40, seed=9)
    assert dispersion_log_likelihood(sample, rho, GAUSSIAN) == pytest.approx(
        log_likelihood(sample, rho, GAUSSIAN), abs=1e-12
    )


def test_likelihood_prefers_generator():
    rho, _, sample = synthetic_case(5, CopulaModel.student_t(4.0), 5000, seed=12)
    model = CopulaModel.student_t(4.0)
    far = CorrelationMatrix(np.eye(5))
    assert log_likelihood(sample, rho, model) > log_likelihood(sample, far, model)
