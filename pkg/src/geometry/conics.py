"""
The pencil of conics x^2 + bxy + y^2 + lz^2 = 0 with common nucleus (0,0,1).

For l != 0 every point of F_l is affine (z = 1) because x^2 + bxy + y^2 has
no nontrivial zero when x^2 + bx + 1 is irreducible. F_0 degenerates to the
nucleus alone.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List
import logging

import numpy as np

from src.core.exceptions import FieldDomainError
from src.core.metrics import track_enumeration
from src.fields.binary_field import ELEMENT_DTYPE, FieldElement
from src.geometry.plane import ProjectivePlane, ProjPoint

logger = logging.getLogger(__name__)

NUCLEUS = ProjPoint((0, 0, 1))


@dataclass
class Conic:
    """
    One member F_l of the pencil.

    Attributes:
        l: Level of the pencil
        b: Pencil parameter
        points: Points in canonical order
        degenerate: True only for l = 0, where the conic is the nucleus
    """

    l: int
    b: int
    points: List[ProjPoint]
    degenerate: bool = False

    def __len__(self) -> int:
        return len(self.points)


def has_root(plane: ProjectivePlane, b: FieldElement) -> bool:
    """Whether x^2 + bx + 1 has a root in GF(q) (exhaustive)"""
    field = plane.field
    e = plane.elements
    values = field.mul_array(e, e) ^ field.mul_array(b, e) ^ 1
    return bool(np.any(values == 0))


def pencil_parameter(plane: ProjectivePlane) -> FieldElement:
    """Smallest b in GF(q)* with x^2 + bx + 1 irreducible over GF(q)"""
    for b in plane.elements[1:]:
        if not has_root(plane, int(b)):
            logger.debug("Pencil parameter found", extra={"q": plane.q, "b": int(b)})
            return int(b)
    raise FieldDomainError(f"No irreducible x^2 + bx + 1 over GF({plane.q})")


class ConicPencil:
    """
    Levels Q(x, y) = x^2 + bxy + y^2 over all affine points of PG(2,q).

    The affine point (x, y, 1) lies on F_l exactly when Q(x, y) = l, so the
    pencil partitions AG(2,q) by level.

    Attributes:
        plane: The ambient plane
        b: Pencil parameter
    """

    def __init__(self, plane: ProjectivePlane, b: FieldElement):
        if has_root(plane, b):
            raise FieldDomainError(f"x^2 + {b}x + 1 is reducible over GF({plane.q})")
        self.plane = plane
        self.b = b

    @cached_property
    def affine(self) -> np.ndarray:
        """All q^2 affine points (x, y, 1), x-major in sorted GF(q) order"""
        e = self.plane.elements
        xs, ys = np.meshgrid(e, e, indexing="ij")
        ones = np.ones(xs.size, dtype=ELEMENT_DTYPE)
        return np.stack([xs.ravel(), ys.ravel(), ones], axis=1)

    @cached_property
    def levels(self) -> np.ndarray:
        field = self.plane.field
        x, y = self.affine[:, 0], self.affine[:, 1]
        track_enumeration("plane_points", len(x))
        return field.mul_array(x, x) ^ field.mul_array(self.b, field.mul_array(x, y)) ^ field.mul_array(y, y)

    def level_of(self, points) -> np.ndarray:
        """Q(x/z, y/z) for affine points in any scaling"""
        points = self.plane.affine_array(points)
        field = self.plane.field
        x, y = points[:, 0], points[:, 1]
        return field.mul_array(x, x) ^ field.mul_array(self.b, field.mul_array(x, y)) ^ field.mul_array(y, y)

    def points_with_levels(self, levels) -> np.ndarray:
        """Normalized points whose level lies in the given set, canonical order"""
        mask = np.isin(self.levels, np.asarray(levels, dtype=ELEMENT_DTYPE))
        return self.plane.canonical_array(self.affine[mask])

    def conic(self, l: FieldElement) -> Conic:
        if not self.plane.tower.in_gf_q(l):
            raise FieldDomainError(f"Level {l} is not in GF({self.plane.q})")
        if l == 0:
            return Conic(l=0, b=self.b, points=[NUCLEUS], degenerate=True)
        rows = self.points_with_levels([l])
        return Conic(l=l, b=self.b, points=self.plane.points_from_array(rows))


def conic_points(plane: ProjectivePlane, b: FieldElement, l: FieldElement) -> Conic:
    return ConicPencil(plane, b).conic(l)
