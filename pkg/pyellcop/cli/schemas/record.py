from pydantic import BaseModel, ConfigDict

# column order of the experiment CSV; never reorder
EXPERIMENT_COLUMNS = (
    "case_id",
    "d",
    "nu",
    "seed",
    "min_eig",
    "loglik_ig",
    "loglik_approx",
    "norm_diff",
    "status_ig",
    "status_approx",
    "iters_ig",
    "iters_approx",
)


class ExperimentRecord(BaseModel):
    """
    One experiment case: the inverse gradient fit against the approximate
    fit on the same sample. ``nu`` is None for Gaussian cases. Failed cases
    carry an ``Error:<name>`` status and NaN log-likelihoods.
    """

    model_config = ConfigDict(frozen=True)

    case_id: int
    d: int
    nu: float | None
    seed: int
    min_eig: float
    loglik_ig: float
    loglik_approx: float
    norm_diff: float
    status_ig: str
    status_approx: str
    iters_ig: int
    iters_approx: int

    @property
    def converged_both(self) -> bool:
        return self.status_ig == "Converged" and self.status_approx == "Converged"

    def row(self) -> list:
        return [getattr(self, column) for column in EXPERIMENT_COLUMNS]
