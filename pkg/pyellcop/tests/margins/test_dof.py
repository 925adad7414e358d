import math

import pydantic
import pytest

from pyellcop.margins import Dof, nu_value
from pyellcop.margins.exceptions import DomainError


def test_dof_valid():
    assert Dof(nu=0.5).nu == 0.5
    assert nu_value(Dof(nu=3.0)) == 3.0
    assert nu_value(7) == 7.0


@pytest.mark.parametrize("nu", [0.0, -2.0, math.inf, math.nan])
def test_dof_invalid(nu):
    with pytest.raises(pydantic.ValidationError):
        Dof(nu=nu)
    with pytest.raises(DomainError):
        nu_value(nu)


def test_dof_frozen():
    dof = Dof(nu=2.0)
    with pytest.raises(pydantic.ValidationError):
        dof.nu = 3.0
