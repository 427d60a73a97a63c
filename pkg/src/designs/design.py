"""
Block designs on points 0..v-1 and exhaustive t-subset counting.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple
import logging

import numpy as np

from src.core.config import settings
from src.core.exceptions import SizeCapError
from src.core.metrics import track_enumeration

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


@dataclass(frozen=True)
class DesignParameters:
    """Claimed t-(v, k, lambda)"""

    t: int
    v: int
    k: int
    lam: int

    def describe(self) -> str:
        return f"{self.t}-({self.v}, {self.k}, {self.lam})"


@dataclass
class Design:
    """
    A multiset of blocks over the points 0..v-1.

    Attributes:
        v: Number of points
        blocks: Sorted index tuples, sorted lexicographically
        declared: The parameters the design is claimed to have
        empty_reason: Why the block list is empty, when it is expected to be
    """

    v: int
    blocks: List[Block]
    declared: Optional[DesignParameters] = None
    name: str = "design"
    empty_reason: Optional[str] = None

    def __post_init__(self):
        self.blocks = sorted(tuple(sorted(int(p) for p in b)) for b in self.blocks)

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> List[int]:
        return sorted({len(b) for b in self.blocks})

    @property
    def k(self) -> Optional[int]:
        sizes = self.block_sizes
        return sizes[0] if len(sizes) == 1 else None

    @property
    def repeated_blocks(self) -> int:
        return len(self.blocks) - len(set(self.blocks))

    def incidence_matrix(self) -> np.ndarray:
        matrix = np.zeros((len(self.blocks), self.v), dtype=np.int64)
        for row, block in enumerate(self.blocks):
            matrix[row, list(block)] = 1
        return matrix


@dataclass
class DesignCheck:
    """
    Outcome of counting blocks through every t-subset.

    Attributes:
        is_design: Every t-subset lies in the same number of blocks
        lam: That number, when constant
        min_count / max_count: Spread of the counts
        repeated_blocks: Blocks equal to an earlier block (a 2-design may be a multiset)
    """

    t: int
    is_design: bool
    lam: Optional[int]
    min_count: Optional[int]
    max_count: Optional[int]
    subsets_checked: int
    repeated_blocks: int = 0


@dataclass(frozen=True)
class DesignSummary:
    """(v, b, r, k, lambda) together with the double-counting identities"""

    v: int
    b: int
    r: Optional[int]
    k: Optional[int]
    lam: Optional[int]

    @property
    def replication_identity(self) -> bool:
        """b k = v r"""
        return None not in (self.r, self.k) and self.b * self.k == self.v * self.r

    @property
    def pair_identity(self) -> bool:
        """r (k - 1) = lambda (v - 1)"""
        return None not in (self.r, self.k, self.lam) and self.r * (self.k - 1) == self.lam * (self.v - 1)

    @property
    def flag_identity(self) -> bool:
        """b k (k - 1) = lambda v (v - 1)"""
        return None not in (self.k, self.lam) and self.b * self.k * (self.k - 1) == self.lam * self.v * (self.v - 1)


def _subset_counts(design: Design, t: int) -> np.ndarray:
    """Blocks through each t-subset, flattened in no particular order"""
    incidence = design.incidence_matrix()
    v = design.v
    if t == 0:
        return np.array([design.b])
    if t == 1:
        return incidence.sum(axis=0)

    counts = []
    for head in combinations(range(v), t - 2):
        start = head[-1] + 1 if head else 0
        rows = incidence[np.all(incidence[:, list(head)] == 1, axis=1)] if head else incidence
        tail = rows[:, start:]
        pairs = tail.T @ tail
        upper = np.triu_indices(v - start, k=1)
        counts.append(pairs[upper])
    return np.concatenate(counts) if counts else np.zeros(0, dtype=np.int64)


def verify_design(design: Design, t: int) -> DesignCheck:
    """Exhaustive t-subset count; is_design iff the count is constant

    An empty block list is never a design.

    Raises:
        SizeCapError: If v exceeds settings.DESIGN_MAX_POINTS
    """
    if design.v > settings.DESIGN_MAX_POINTS:
        raise SizeCapError("design points", design.v, settings.DESIGN_MAX_POINTS)
    if not design.blocks or design.k is None or t > design.k:
        return DesignCheck(
            t=t,
            is_design=False,
            lam=None,
            min_count=None,
            max_count=None,
            subsets_checked=0,
            repeated_blocks=design.repeated_blocks,
        )

    counts = _subset_counts(design, t)
    track_enumeration("design_subsets", len(counts))
    low, high = int(counts.min()), int(counts.max())
    check = DesignCheck(
        t=t,
        is_design=low == high,
        lam=low if low == high else None,
        min_count=low,
        max_count=high,
        subsets_checked=len(counts),
        repeated_blocks=design.repeated_blocks,
    )
    logger.debug(
        "Design checked",
        extra={"design": design.name, "t": t, "is_design": check.is_design, "lambda": check.lam}
    )
    return check


def design_parameters(design: Design) -> DesignSummary:
    replication = verify_design(design, 1)
    pairs = verify_design(design, 2)
    return DesignSummary(
        v=design.v,
        b=design.b,
        r=replication.lam,
        k=design.k,
        lam=pairs.lam,
    )


def remove_block(design: Design, index: int) -> Design:
    blocks = design.blocks[:index] + design.blocks[index + 1:]
    return Design(v=design.v, blocks=blocks, declared=design.declared, name=f"{design.name}_minus_{index}")


def complement_blocks(design: Design) -> List[Block]:
    points = set(range(design.v))
    return sorted(tuple(sorted(points - set(b))) for b in design.blocks)
