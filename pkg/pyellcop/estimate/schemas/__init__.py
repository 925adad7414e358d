from pyellcop.estimate.schemas.step_config import StepConfig

__all__ = ["StepConfig"]
