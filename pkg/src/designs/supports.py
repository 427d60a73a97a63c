"""
Designs carried by codes and arcs: supports of fixed-weight codewords,
line intersections of a maximal arc, and the weight-3 words of the dual.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple
import logging

import numpy as np

from src.coding.dual import dependent_triples, is_projective
from src.coding.linear_code import LinearCode
from src.core.config import settings
from src.core.exceptions import CodeConstructionError, SizeCapError
from src.core.metrics import track_enumeration
from src.designs.design import Design, DesignParameters
from src.geometry.arcs import MaximalArc
from src.geometry.plane import ProjectivePlane

logger = logging.getLogger(__name__)


@dataclass
class SupportExtraction:
    """
    Bookkeeping of one support extraction.

    Attributes:
        weight: Target codeword weight
        codewords: Codewords of that weight
        classes: Scalar classes (codewords with leading nonzero entry 1)
        distinct_supports: Distinct supports among the classes
    """

    q: int
    weight: int
    codewords: int
    classes: int
    distinct_supports: int

    @property
    def class_count_consistent(self) -> bool:
        return self.codewords == self.classes * (self.q - 1)

    @property
    def repeated_supports(self) -> int:
        return self.classes - self.distinct_supports


def supports_of_weight(
    code: LinearCode,
    weight: int,
    dedup: bool = True,
    declared: Optional[DesignParameters] = None,
) -> Tuple[Design, SupportExtraction]:
    """One block per scalar class of weight-w codewords

    With dedup (default) equal supports from different classes collapse to
    one block; otherwise the blocks form a multiset, one per class.
    """
    if code.length > settings.DESIGN_MAX_POINTS:
        raise SizeCapError("design points", code.length, settings.DESIGN_MAX_POINTS)
    code.check_enumeration_caps()

    total = 0
    masks = []
    for _, block in code.iter_blocks():
        nonzero = block != 0
        hit = nonzero.sum(axis=1) == weight
        if not hit.any():
            continue
        total += int(hit.sum())
        rows = block[hit]
        lead = rows[np.arange(len(rows)), np.argmax(rows != 0, axis=1)]
        masks.append(nonzero[hit][lead == 1])
    track_enumeration("codewords", code.q ** code.dimension)

    supports = np.concatenate(masks) if masks else np.zeros((0, code.length), dtype=bool)
    distinct = np.unique(supports, axis=0) if len(supports) else supports
    chosen = distinct if dedup else supports
    blocks = [tuple(int(i) for i in np.flatnonzero(row)) for row in chosen]

    extraction = SupportExtraction(
        q=code.q,
        weight=weight,
        codewords=total,
        classes=len(supports),
        distinct_supports=len(distinct),
    )
    logger.info(
        "Supports extracted",
        extra={
            "code": code.name,
            "weight": weight,
            "codewords": total,
            "classes": extraction.classes,
            "distinct": extraction.distinct_supports,
        }
    )
    design = Design(
        v=code.length,
        blocks=blocks,
        declared=declared,
        name=f"{code.name}_w{weight}",
    )
    return design, extraction


def complementary_steiner(plane: ProjectivePlane, arc: MaximalArc) -> Design:
    """Blocks are the nonempty line intersections, indexed by arc position"""
    incidence = plane.line_incidences(arc.as_array(), keep_members=True)
    blocks = [tuple(members) for members in incidence.members.values()]
    n_plus_1 = len(arc)
    return Design(
        v=n_plus_1,
        blocks=blocks,
        declared=DesignParameters(t=2, v=n_plus_1, k=arc.degree, lam=1),
        name="steiner",
    )


def dual_weight3_design(code: LinearCode) -> Design:
    """Supports of the weight-3 dual words: the dependent column triples

    A projective code with no such triple (every line meets the columns in
    at most 2 points, as for a hyperoval) gives an empty design flagged with
    the reason.
    """
    if code.length > settings.DESIGN_MAX_POINTS:
        raise SizeCapError("design points", code.length, settings.DESIGN_MAX_POINTS)
    if not is_projective(code):
        raise CodeConstructionError(f"{code.name} is not projective")
    triples = dependent_triples(code)
    design = Design(v=code.length, blocks=triples, name=f"{code.name}_dual_w3")
    if not triples:
        design.empty_reason = "no three generator columns are dependent"
    return design


def all_triples_of_blocks(design: Design) -> List[Tuple[int, int, int]]:
    return sorted({t for block in design.blocks for t in combinations(block, 3)})
