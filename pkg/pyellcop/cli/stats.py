import math
from typing import Sequence

import numpy as np
import scipy.stats as st

from pyellcop.cli.schemas import ExperimentRecord


def nearest_rank_percentile(values: Sequence[float], p: float) -> float:
    """
    The p-th percentile by nearest rank: the value at 1-based position
    ceil(p/100·N) of the sorted values, the smallest value for p = 0.
    """
    if not 0.0 <= p <= 100.0:
        raise ValueError(f"percentile must be in [0, 100], got {p}")
    ordered = sorted(values)
    if not ordered:
        raise ValueError("percentile of an empty sequence")
    rank = max(math.ceil(p * len(ordered) / 100.0), 1)
    return ordered[rank - 1]


def _spread(values: Sequence[float]) -> dict:
    if not values:
        return {"mean": None, "p5": None, "p95": None}
    return {
        "mean": float(np.mean(values)),
        "p5": nearest_rank_percentile(values, 5),
        "p95": nearest_rank_percentile(values, 95),
    }


def rank_correlation(x: Sequence[float], y: Sequence[float]) -> float | None:
    """Spearman's rank correlation, None when it is undefined."""
    if len(x) < 3 or len(set(x)) < 2 or len(set(y)) < 2:
        return None
    return float(st.spearmanr(x, y).statistic)


def eigenvalue_bins(records: Sequence[ExperimentRecord], bins: int) -> list[dict]:
    """
    Spread of norm_diff within equal-count bins of the generator's minimum
    eigenvalue, bins ordered by increasing eigenvalue.
    """
    ordered = sorted(records, key=lambda r: r.min_eig)
    out = []
    for chunk in np.array_split(np.arange(len(ordered)), bins):
        if chunk.size == 0:
            continue
        members = [ordered[i] for i in chunk]
        out.append(
            {
                "min_eig_low": members[0].min_eig,
                "min_eig_high": members[-1].min_eig,
                "count": len(members),
                **_spread([r.norm_diff for r in members]),
            }
        )
    return out


def summarize_cell(
    records: Sequence[ExperimentRecord], eig_bins: int | None = None
) -> dict:
    """
    Statistics of one (d, ν) cell. The norm_diff statistics cover the cases in
    which both methods converged; the non-convergence rates cover all cases.
    """
    count = len(records)
    both = [r for r in records if r.converged_both]
    diffs = [r.norm_diff for r in both]
    summary = {
        "count": count,
        "converged_both": len(both),
        **_spread(diffs),
        "nonconv_rate_ig": (
            sum(r.status_ig != "Converged" for r in records) / count if count else None
        ),
        "nonconv_rate_approx": (
            sum(r.status_approx != "Converged" for r in records) / count if count else None
        ),
        "spearman_min_eig": rank_correlation([r.min_eig for r in both], diffs),
    }
    if eig_bins:
        summary["eig_bins"] = eigenvalue_bins(both, eig_bins)
    return summary
