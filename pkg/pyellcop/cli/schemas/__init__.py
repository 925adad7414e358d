from pyellcop.cli.schemas.manifest import RunManifest
from pyellcop.cli.schemas.record import EXPERIMENT_COLUMNS, ExperimentRecord

__all__ = ["EXPERIMENT_COLUMNS", "ExperimentRecord", "RunManifest"]
