from pydantic import BaseModel, ConfigDict, PositiveFloat, PositiveInt, model_validator
from typing_extensions import Self


class StepConfig(BaseModel):
    """
    Adaptive step-size and stopping configuration of the ascent estimators.

    ``lambda0`` left unset means 1/n, resolved at fit time from the sample size.
    """

    model_config = ConfigDict(frozen=True)

    lambda0: PositiveFloat | None = None
    k1: PositiveFloat = 0.5
    k2: PositiveFloat = 4.0 / 3.0
    lambda_min: PositiveFloat = 1e-14
    max_iters: PositiveInt = 10_000
    tol_param: PositiveFloat = 1e-9
    tol_loglik: PositiveFloat = 1e-11
    keep_sigma_trace: bool = False

    @model_validator(mode="after")
    def check_step_factors(self) -> Self:
        if not (0.0 < self.k1 < 1.0 < self.k2):
            raise ValueError(
                f"step factors must satisfy 0 < k1 < 1 < k2, got k1={self.k1}, k2={self.k2}"
            )
        if self.lambda0 is not None and not (self.lambda_min < self.lambda0):
            raise ValueError(
                f"lambda_min ({self.lambda_min}) must be smaller than lambda0 ({self.lambda0})"
            )
        return self

    def resolve(self, n: int) -> "StepConfig":
        """
        Return a configuration with a concrete initial step, 1/n when unset.

        :param n: the sample size
        :type n: int

        :returns: the resolved configuration
        :rtype: StepConfig
        """
        if self.lambda0 is not None:
            return self
        return StepConfig.model_validate({**self.model_dump(), "lambda0": 1.0 / n})
