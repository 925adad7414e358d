from enum import Enum
from typing import NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from pyellcop.copula import CopulaModel, CorrelationMatrix
from pyellcop.linalg import SymMatrix


class FitStatus(str, Enum):
    CONVERGED = "Converged"
    MAX_ITERS = "MaxIters"
    STEP_UNDERFLOW = "StepUnderflow"
    DIVERGED = "Diverged"


class TraceEntry(NamedTuple):
    iteration: int
    lam: float
    loglik: float


class FitResult(BaseModel):
    """
    Outcome of an estimator. ``lambda_trace`` starts with the entry of the
    initial point (iteration 0) followed by one entry per accepted iteration.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    method: str
    model: CopulaModel
    rho_hat: CorrelationMatrix
    loglik: float
    iterations: int
    status: FitStatus
    lambda_trace: list[TraceEntry] = []
    seed_sigma: SymMatrix | None = None
    sigma_trace: list[np.ndarray] | None = None

    @property
    def converged(self) -> bool:
        return self.status is FitStatus.CONVERGED

    def as_dict(self, include_trace: bool = False) -> dict:
        """
        JSON-ready view of the result.

        :param include_trace: whether to include the step-size trace
        :type include_trace: bool

        :returns: the result as plain Python types
        :rtype: dict
        """
        out = {
            "method": self.method,
            "family": self.model.family.value,
            "nu": self.model.nu,
            "rho_hat": self.rho_hat.tolist(),
            "loglik": self.loglik,
            "iterations": self.iterations,
            "status": self.status.value,
        }
        if include_trace:
            out["lambda_trace"] = [list(entry) for entry in self.lambda_trace]
        return out
