"""
The dictionary between projective dimension-3 codes and point sets of
PG(2,q): generator columns are points, and the codeword of the functional
u has a zero exactly at the columns lying on the line u.
"""

from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from src.coding.dual import is_projective
from src.coding.linear_code import LinearCode
from src.core.config import settings
from src.core.exceptions import CodeConstructionError, SizeCapError
from src.core.metrics import track_enumeration
from src.geometry.arcs import MaximalArc
from src.geometry.plane import ProjectivePlane

logger = logging.getLogger(__name__)


@dataclass
class WeightLineReport:
    """wt(u G) = length - |line u meets the columns| checked on every line"""

    lines_checked: int
    mismatches: int
    weights: dict

    @property
    def passed(self) -> bool:
        return self.mismatches == 0


def arc_from_code(plane: ProjectivePlane, code: LinearCode, degree: Optional[int] = None) -> MaximalArc:
    """Columns of a projective [len, 3] code as a point set, in column order

    The degree is the largest line intersection unless given.

    Raises:
        CodeConstructionError: If the code is not projective of dimension 3
    """
    if code.dimension != 3:
        raise CodeConstructionError("Arc recovery needs dimension 3", detail=code.dimension)
    if not is_projective(code):
        raise CodeConstructionError(f"{code.name} is not projective")

    rows = plane.normalize_array(code.columns)
    points = plane.points_from_array(rows)
    if degree is None:
        incidence = plane.line_incidences(rows)
        degree = int(incidence.counts.max())
    logger.info(
        "Arc recovered from code",
        extra={"code": code.name, "points": len(points), "degree": degree}
    )
    return MaximalArc(points=points, degree=degree, q=plane.q)


def arc_to_code(plane: ProjectivePlane, arc: MaximalArc, name: str = "arc_code") -> LinearCode:
    """The [|arc|, 3] code whose generator columns are the arc points"""
    return LinearCode(plane.tower, arc.as_array().T, name=name)


def verify_weight_line_duality(plane: ProjectivePlane, code: LinearCode) -> WeightLineReport:
    """Every nonzero codeword is a multiple of u G for a normalized line u"""
    if code.dimension != 3:
        raise CodeConstructionError("Weight/line duality needs dimension 3", detail=code.dimension)
    total = plane.num_points * code.length
    if total > settings.CODEWORD_WORK_CAP:
        raise SizeCapError("codeword coordinates", total, settings.CODEWORD_WORK_CAP)

    columns = plane.normalize_array(code.columns)
    incidence = plane.line_incidences(columns)
    lines = plane.all_triples
    expected = code.length - incidence.count_for(plane.keys(lines))

    chunk = max(1, settings.CODEWORD_CHUNK_ELEMENTS // code.length)
    weights = []
    for start in range(0, len(lines), chunk):
        values = plane.dot_array(lines[start:start + chunk, None, :], code.columns[None, :, :])
        weights.append(np.count_nonzero(values, axis=1))
    weights = np.concatenate(weights)
    track_enumeration("codewords", len(lines))

    found, counts = np.unique(weights, return_counts=True)
    return WeightLineReport(
        lines_checked=len(lines),
        mismatches=int(np.count_nonzero(weights != expected)),
        weights={int(w): int(c) for w, c in zip(found, counts)},
    )
