import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Self

from pyellcop.copula.exceptions import UnknownFamily
from pyellcop.copula.families import EllipticalFamily
from pyellcop.tools.utils import dynamic_class_loader


class Family(str, Enum):
    GAUSSIAN = "gaussian"
    STUDENT_T = "t"


# family tag -> (module, class) implementing EllipticalFamily
FAMILY_REGISTRY: dict[str, tuple[str, str]] = {
    Family.GAUSSIAN.value: ("pyellcop.copula.families", "GaussianFamily"),
    Family.STUDENT_T.value: ("pyellcop.copula.families", "StudentTFamily"),
}


class CopulaModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: Family
    nu: float | None = None

    @model_validator(mode="after")
    def check_nu(self) -> Self:
        if self.family is Family.STUDENT_T:
            if self.nu is None or not (math.isfinite(self.nu) and self.nu > 0):
                raise ValueError("a Student's t copula requires nu > 0")
        elif self.nu is not None:
            raise ValueError("nu is only meaningful for the Student's t copula")
        return self

    @classmethod
    def gaussian(cls) -> "CopulaModel":
        return cls(family=Family.GAUSSIAN)

    @classmethod
    def student_t(cls, nu: float) -> "CopulaModel":
        return cls(family=Family.STUDENT_T, nu=nu)

    @property
    def label(self) -> str:
        return "gaussian" if self.family is Family.GAUSSIAN else f"t(nu={self.nu:g})"

    def impl(self) -> EllipticalFamily:
        """
        Instantiate the family implementation registered for this model.

        :raises UnknownFamily: if no implementation is registered

        :returns: the family implementation
        :rtype: EllipticalFamily
        """
        try:
            module_name, class_name = FAMILY_REGISTRY[self.family.value]
        except KeyError:
            raise UnknownFamily(f"no implementation registered for {self.family}")
        init_params = {"nu": self.nu} if self.nu is not None else {}
        return dynamic_class_loader(module_name, class_name, init_params)
