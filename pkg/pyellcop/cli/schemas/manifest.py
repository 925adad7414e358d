from typing import Any

from pydantic import BaseModel, Field

from pyellcop import __version__


class RunManifest(BaseModel):
    """
    Provenance of a command run: everything needed to reproduce its output.
    Only ``timings`` differs between two identical invocations.
    """

    command: str
    parameters: dict[str, Any]
    seeds: dict[str, int] = Field(default_factory=dict)
    version: str = __version__
    timings: dict[str, float] = Field(default_factory=dict)
