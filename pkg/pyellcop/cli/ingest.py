import csv
import logging
import math
from enum import Enum
from typing import NamedTuple

import numpy as np
import scipy.stats as st

from pyellcop.cli.exceptions import DimensionError, EmptyInput, ParseError
from pyellcop.copula import PseudoSample

logger = logging.getLogger(__name__)

CLAMP_LOW = 1e-12
CLAMP_HIGH = 1.0 - 1e-12


class InputFormat(str, Enum):
    UNIFORM = "uniform"
    RANKS = "ranks"


class Ingested(NamedTuple):
    sample: PseudoSample
    clamped: int
    header: list[str] | None


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def read_numeric_csv(path: str) -> tuple[np.ndarray, list[str] | None]:
    """
    Read a comma-separated numeric table. A first row that is entirely
    non-numeric is taken as a header; a first row with any numeric cell is data.
    Row numbers in errors are 1-based file lines.

    :raises ParseError: on a non-numeric or non-finite cell
    :raises DimensionError: on rows of different lengths
    :raises EmptyInput: when there are no data rows
    """
    with open(path, newline="", encoding="utf-8") as fp:
        raw = [row for row in csv.reader(fp) if any(cell.strip() for cell in row)]
    if not raw:
        raise EmptyInput(f"{path} contains no rows")

    header = None
    first_line = 1
    if not any(_is_number(cell) for cell in raw[0]):
        header = [cell.strip() for cell in raw[0]]
        raw = raw[1:]
        first_line = 2
    if not raw:
        raise EmptyInput(f"{path} contains a header but no data rows")

    width = len(header) if header is not None else len(raw[0])
    values = np.empty((len(raw), width), dtype=np.float64)
    for r, row in enumerate(raw):
        line = first_line + r
        if len(row) != width:
            raise DimensionError(f"row {line} has {len(row)} columns, expected {width}")
        for c, cell in enumerate(row):
            try:
                x = float(cell)
            except ValueError:
                raise ParseError(line, c + 1, f"not a number: {cell!r}")
            if not math.isfinite(x):
                raise ParseError(line, c + 1, f"not a finite number: {cell!r}")
            values[r, c] = x
    return values, header


def to_pseudo_observations(x: np.ndarray) -> np.ndarray:
    """u = rank/(n+1) per column, ties given their average rank."""
    return st.rankdata(x, method="average", axis=0) / (x.shape[0] + 1)


def ingest(path: str, fmt: InputFormat | str = InputFormat.UNIFORM) -> Ingested:
    """
    Load pseudo-observations from a CSV file.

    With ``uniform`` the values are used as they are, entries outside (0, 1)
    being clamped to [1e-12, 1 - 1e-12] and counted. With ``ranks`` each
    column of raw data is replaced by its rescaled ranks.

    :param path: the CSV file
    :type path: str
    :param fmt: the input format
    :type fmt: InputFormat | str

    :raises ParseError: on a non-numeric cell
    :raises DimensionError: on ragged rows
    :raises EmptyInput: when the file holds no data

    :returns: the sample, the number of clamped entries and the header if any
    :rtype: Ingested
    """
    fmt = InputFormat(fmt)
    values, header = read_numeric_csv(path)

    clamped = 0
    if fmt is InputFormat.RANKS:
        u = to_pseudo_observations(values)
    else:
        outside = (values <= 0.0) | (values >= 1.0)
        clamped = int(np.count_nonzero(outside))
        u = np.where(outside, np.clip(values, CLAMP_LOW, CLAMP_HIGH), values)
        if clamped:
            logger.warning(f"{clamped} values of {path} outside (0, 1) were clamped")
    return Ingested(PseudoSample(u), clamped, header)
