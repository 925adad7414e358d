import numpy as np
import pytest

from pyellcop.copula import PseudoSample, TransformedSample, project_to_correlation, transform
from pyellcop.estimate import gaussian_closed_form_sigma, initial_sigma
from pyellcop.estimate.exceptions import DegenerateSample
from pyellcop.estimate.initial import REGULARIZATION, gaussian_scores
from pyellcop.tests.settings import GAUSSIAN, T5, synthetic_case


def test_moment_matrix():
    _, _, sample = synthetic_case(3, GAUSSIAN, 50, seed=1)
    sigma = gaussian_closed_form_sigma(sample)
    assert np.allclose(sigma.values, sample.scatter() / sample.n, atol=1e-15)


def test_singular_moment_matrix_is_regularized():
    x = np.linspace(0.05, 0.95, 19)
    sample = transform(PseudoSample(np.column_stack([x, x])), GAUSSIAN)
    s = sample.scatter() / sample.n
    eps = REGULARIZATION * float(np.trace(s)) / 2
    sigma = gaussian_closed_form_sigma(sample)
    assert np.allclose(sigma.values, s + eps * np.eye(2), rtol=0.0, atol=1e-15)
    assert np.linalg.eigvalsh(sigma.values)[0] > 0.0


def test_single_row_is_degenerate():
    with pytest.raises(DegenerateSample):
        gaussian_closed_form_sigma(TransformedSample([[0.1, 0.2]], GAUSSIAN))


def test_zero_sample_is_degenerate():
    with pytest.raises(DegenerateSample):
        gaussian_closed_form_sigma(TransformedSample(np.zeros((5, 2)), GAUSSIAN))


def test_seed_uses_normal_scores():
    rho, u, sample = synthetic_case(3, T5, 200, seed=2)
    expected = gaussian_closed_form_sigma(transform(u, GAUSSIAN))
    assert np.allclose(initial_sigma(sample).values, expected.values, atol=1e-14)


def test_normal_scores_without_source():
    _, u, sample = synthetic_case(2, T5, 30, seed=3)
    detached = TransformedSample(sample.z, T5)
    assert np.allclose(gaussian_scores(detached), gaussian_scores(sample), atol=1e-8)


def test_moment_matrix_consistent():
    rho, _, sample = synthetic_case(4, GAUSSIAN, 20_000, seed=4)
    estimate = project_to_correlation(gaussian_closed_form_sigma(sample))
    assert np.max(np.abs(estimate.values - rho.values)) < 0.05
