import logging
import math
from types import SimpleNamespace

import pytest

from pyellcop.estimate import FitStatus, ProfileLikelihood, StepConfig, fit_t_full
from pyellcop.estimate.exceptions import BracketError
from pyellcop.margins import Dof
from pyellcop.tests.settings import T5, synthetic_case


def _fake_fit(peak):
    def fake(sample, model, cfg=None):
        loglik = -((math.log(model.nu) - math.log(peak)) ** 2)
        return SimpleNamespace(loglik=loglik, status=FitStatus.CONVERGED, model=model)

    return fake


def test_golden_section_finds_peak(monkeypatch):
    monkeypatch.setattr("pyellcop.estimate.profile.fit_inverse_gradient", _fake_fit(7.0))
    _, u, _ = synthetic_case(2, T5, 20, seed=1)
    search = ProfileLikelihood(u, (0.5, 100.0))
    best, nu_hat = search.search()
    assert isinstance(nu_hat, Dof)
    assert nu_hat.nu == pytest.approx(7.0, rel=2e-3)
    assert best.model.nu == nu_hat.nu
    assert len(search.fits) < 40


def test_endpoint_is_returned(monkeypatch):
    monkeypatch.setattr("pyellcop.estimate.profile.fit_inverse_gradient", _fake_fit(500.0))
    _, u, _ = synthetic_case(2, T5, 20, seed=2)
    _, nu_hat = fit_t_full(u, (0.5, 100.0))
    assert nu_hat.nu == pytest.approx(100.0, rel=2e-3)


def test_bracket_error(monkeypatch):
    def valley(sample, model, cfg=None):
        loglik = (math.log(model.nu) - math.log(7.0)) ** 2
        return SimpleNamespace(loglik=loglik, status=FitStatus.CONVERGED, model=model)

    monkeypatch.setattr("pyellcop.estimate.profile.fit_inverse_gradient", valley)
    _, u, _ = synthetic_case(2, T5, 20, seed=3)
    with pytest.raises(BracketError):
        fit_t_full(u, (0.5, 100.0))


def test_converged_fits_are_preferred(monkeypatch):
    def stalls_near_peak(sample, model, cfg=None):
        loglik = -((math.log(model.nu) - math.log(7.0)) ** 2)
        status = FitStatus.MAX_ITERS if 6.0 < model.nu < 8.0 else FitStatus.CONVERGED
        return SimpleNamespace(loglik=loglik, status=status, model=model)

    monkeypatch.setattr("pyellcop.estimate.profile.fit_inverse_gradient", stalls_near_peak)
    _, u, _ = synthetic_case(2, T5, 20, seed=8)
    search = ProfileLikelihood(u, (0.5, 100.0))
    best, nu_hat = search.search()
    assert any(6.0 < nu < 8.0 for nu in search.fits)
    assert best.status is FitStatus.CONVERGED
    assert not 6.0 < nu_hat.nu < 8.0


def test_unconverged_choice_is_logged(monkeypatch, caplog):
    def never_converges(sample, model, cfg=None):
        loglik = -((math.log(model.nu) - math.log(7.0)) ** 2)
        return SimpleNamespace(loglik=loglik, status=FitStatus.STEP_UNDERFLOW, model=model)

    monkeypatch.setattr("pyellcop.estimate.profile.fit_inverse_gradient", never_converges)
    caplog.set_level(logging.WARNING, logger="pyellcop.tools.base_logger")
    _, u, _ = synthetic_case(2, T5, 20, seed=9)
    best, nu_hat = fit_t_full(u, (0.5, 100.0))
    assert best.status is FitStatus.STEP_UNDERFLOW
    assert nu_hat.nu == pytest.approx(7.0, rel=2e-3)
    assert any("StepUnderflow" in r.getMessage() for r in caplog.records)


@pytest.mark.parametrize("bracket", [(0.0, 10.0), (5.0, 5.0), (10.0, 1.0)])
def test_invalid_bracket(bracket):
    _, u, _ = synthetic_case(2, T5, 20, seed=4)
    with pytest.raises(ValueError):
        ProfileLikelihood(u, bracket)


def test_profile_is_cached():
    _, u, _ = synthetic_case(2, T5, 100, seed=5)
    search = ProfileLikelihood(u, (1.0, 50.0))
    first = search.profile(5.0)
    assert search.profile(5.0) == first
    assert list(search.fits) == [5.0]
    assert search.fits[5.0].model.nu == 5.0


def test_recovers_nu_in_two_dimensions():
    _, u, _ = synthetic_case(2, T5, 1500, seed=6)
    fit, nu_hat = fit_t_full(u, (0.5, 100.0), StepConfig(tol_param=1e-7))
    assert fit.converged
    assert 1.5 < nu_hat.nu < 30.0


@pytest.mark.slow
def test_recovers_nu():
    _, u, _ = synthetic_case(5, T5, 5000, seed=7)
    fit, nu_hat = fit_t_full(u)
    assert fit.converged
    assert 3.0 < nu_hat.nu < 9.0
