"""Growth of the coverage computation on gapped n-gons.

Evidence of polynomial growth at desk scale, not an asymptotic bound.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Iterable, List

import pandas as pd

from app.barrier import validate_and_build
from app.coverage import compute_coverage
from app.generator import gapped_ngon

logger = logging.getLogger(__name__)

STAGES = ["wedges", "arrangement", "depths", "regions", "isolated"]


def trend_report(sizes: Iterable[int], gap: Fraction) -> pd.DataFrame:
    rows = []
    for n in sizes:
        barrier = validate_and_build(gapped_ngon(n, gap))
        result = compute_coverage(barrier, with_timings=True)
        stats = result.stats
        row = {
            "n": n,
            "segments": stats["n"],
            "components": stats["m"],
            "hull_vertices": stats["hull_vertices"],
            "lines": stats["lines"],
            "faces": stats["faces"],
            "full_depth_faces": stats["full_depth_faces"],
            "regions": stats["regions"],
            "isolated_points": stats["isolated_points"],
        }
        row.update({f"{stage}_s": stats["timings"][stage] for stage in STAGES})
        logger.info("n=%d: %d faces, %d full-depth", n, row["faces"], row["full_depth_faces"])
        rows.append(row)
    frame = pd.DataFrame(rows)
    if not frame.empty:
        frame["total_s"] = frame[[f"{stage}_s" for stage in STAGES]].sum(axis=1)
    return frame


def loglog_slopes(frame: pd.DataFrame, column: str) -> List[float]:
    """Slopes of log(column) against log(n) between consecutive rows."""
    slopes = []
    for (_, a), (_, b) in zip(frame.iterrows(), frame.iloc[1:].iterrows()):
        if a[column] <= 0 or b[column] <= 0:
            raise ValueError(f"{column} must be positive for a log-log slope")
        slopes.append((math.log(b[column]) - math.log(a[column])) / (math.log(b["n"]) - math.log(a["n"])))
    return slopes
