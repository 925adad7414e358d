import math

from pydantic import BaseModel, ConfigDict, field_validator

from pyellcop.margins.exceptions import DomainError


class Dof(BaseModel):
    model_config = ConfigDict(frozen=True)

    nu: float

    @field_validator("nu")
    def validate_nu(cls, v: float) -> float:
        if not (math.isfinite(v) and v > 0):
            raise ValueError(f"degrees of freedom must be positive and finite, got {v}")
        return v


def nu_value(nu: "Dof | float") -> float:
    """
    Unwrap a degrees-of-freedom value, validating bare numbers.

    :param nu: a Dof or a positive finite number
    :type nu: Dof | float

    :raises DomainError: if nu is not positive and finite

    :returns: the numeric degrees of freedom
    :rtype: float
    """
    if isinstance(nu, Dof):
        return nu.nu
    v = float(nu)
    if not (math.isfinite(v) and v > 0):
        raise DomainError(f"degrees of freedom must be positive and finite, got {nu}")
    return v
