import pydantic
import pytest

from pyellcop.copula import (
    FAMILY_REGISTRY,
    CopulaModel,
    Family,
    GaussianFamily,
    PseudoSample,
    StudentTFamily,
    transform,
)
from pyellcop.copula.exceptions import InvalidSample, UnknownFamily


def test_constructors():
    assert CopulaModel.gaussian().family is Family.GAUSSIAN
    t = CopulaModel.student_t(4.0)
    assert t.nu == 4.0
    assert t.label == "t(nu=4)"
    assert CopulaModel.gaussian().label == "gaussian"


@pytest.mark.parametrize(
    "family, nu",
    [
        ("t", None),
        ("t", 0.0),
        ("t", float("inf")),
        ("gaussian", 3.0),
    ],
)
def test_invalid_models(family, nu):
    with pytest.raises(pydantic.ValidationError):
        CopulaModel(family=family, nu=nu)


def test_impl_resolution():
    assert isinstance(CopulaModel.gaussian().impl(), GaussianFamily)
    impl = CopulaModel.student_t(2.5).impl()
    assert isinstance(impl, StudentTFamily)
    assert impl.nu == 2.5


def test_unknown_family(monkeypatch):
    monkeypatch.delitem(FAMILY_REGISTRY, "t")
    with pytest.raises(UnknownFamily):
        CopulaModel.student_t(3.0).impl()


def test_models_hashable_and_equal():
    assert CopulaModel.student_t(5.0) == CopulaModel.student_t(5.0)
    assert CopulaModel.student_t(5.0) != CopulaModel.student_t(6.0)
    assert len({CopulaModel.gaussian(), CopulaModel.gaussian()}) == 1


@pytest.mark.parametrize(
    "u",
    [
        [[0.5, 0.5]],
        [[0.1, 0.2, 0.3], [0.4, 0.5, 0.6]],
    ],
)
def test_pseudo_sample_valid(u):
    sample = PseudoSample(u)
    assert len(sample) == len(u)
    assert sample.d == len(u[0])


@pytest.mark.parametrize(
    "u",
    [
        [[0.5], [0.2]],
        [[0.0, 0.5]],
        [[0.5, 1.0]],
        [0.1, 0.2],
        [],
    ],
)
def test_pseudo_sample_invalid(u):
    with pytest.raises(InvalidSample):
        PseudoSample(u)


def test_transform():
    zeros = transform(PseudoSample([[0.5, 0.5], [0.5, 0.5]]), CopulaModel.gaussian())
    assert (zeros.z == 0.0).all()

    g = transform(PseudoSample([[0.975, 0.5]]), CopulaModel.gaussian())
    assert g.z[0, 0] == pytest.approx(1.959963984540054, abs=1e-9)

    s = transform(PseudoSample([[0.75, 0.5]]), CopulaModel.student_t(1.0))
    assert s.z[0, 0] == pytest.approx(1.0, abs=1e-12)
    assert s.source is not None
    assert s.model == CopulaModel.student_t(1.0)
