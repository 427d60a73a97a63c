"""
The Desarguesian plane PG(2,q) over the subfield GF(q) of a tower.

Points and lines are normalized homogeneous triples (first nonzero
coordinate equal to 1). Each normalized triple has an integer key
i0*q^2 + i1*q + i2, where i is the position of a coordinate in sorted GF(q);
key order equals the canonical (bitmask tuple) order.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple, Union
import logging

import numpy as np

from src.core.config import settings
from src.core.exceptions import FieldDomainError, SizeCapError
from src.core.metrics import track_enumeration
from src.fields.binary_field import ELEMENT_DTYPE, FieldElement
from src.fields.tower import FieldTower

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


@dataclass(frozen=True, order=True)
class ProjPoint:
    """Normalized homogeneous coordinates of a point"""

    coords: Triple

    def to_list(self) -> List[int]:
        return list(self.coords)


@dataclass(frozen=True, order=True)
class ProjLine:
    """Normalized coefficients (a, b, c) of the line ax + by + cz = 0"""

    coeffs: Triple

    def to_list(self) -> List[int]:
        return list(self.coeffs)


@dataclass
class LineIncidence:
    """
    Result of scanning every line through every point of a set.

    Attributes:
        total_lines: q^2 + q + 1
        line_keys: Keys of lines meeting the set, ascending
        counts: Intersection size of each of those lines
        members: Point indices on each hit line (only when requested)
    """

    total_lines: int
    line_keys: np.ndarray
    counts: np.ndarray
    members: Dict[int, List[int]] = field(default_factory=dict)

    def census(self) -> Dict[int, int]:
        """Multiset of intersection sizes over all lines, zeros included"""
        sizes, multiplicity = np.unique(self.counts, return_counts=True)
        result = {int(s): int(c) for s, c in zip(sizes, multiplicity)}
        missed = self.total_lines - len(self.line_keys)
        if missed:
            result[0] = missed
        return dict(sorted(result.items()))

    def count_for(self, keys: np.ndarray) -> np.ndarray:
        """Intersection size for arbitrary line keys (0 for lines not hit)"""
        keys = np.asarray(keys, dtype=ELEMENT_DTYPE)
        if len(self.line_keys) == 0:
            return np.zeros(keys.shape, dtype=ELEMENT_DTYPE)
        pos = np.clip(np.searchsorted(self.line_keys, keys), 0, len(self.line_keys) - 1)
        return np.where(self.line_keys[pos] == keys, self.counts[pos], 0)


class ProjectivePlane:
    """
    PG(2,q) realized inside the field GF(r) of a tower.

    Attributes:
        tower: The field tower providing GF(q)
        q: Order of the plane
        elements: Sorted GF(q) elements (bitmasks in GF(r))
    """

    def __init__(self, tower: FieldTower):
        self.tower = tower
        self.field = tower.field
        self.q = tower.q
        self.elements = tower.gf_q
        self.num_points = self.q * self.q + self.q + 1

        logger.debug("ProjectivePlane initialized", extra={"q": self.q})

    # ------------------------------------------------------------------
    # normalization and keys
    # ------------------------------------------------------------------

    def normalize_array(self, coords) -> np.ndarray:
        """Scale each row so its first nonzero coordinate is 1"""
        c = np.asarray(coords, dtype=ELEMENT_DTYPE).reshape(-1, 3)
        lead = np.where(c[:, 0] != 0, c[:, 0], np.where(c[:, 1] != 0, c[:, 1], c[:, 2]))
        if np.any(lead == 0):
            raise FieldDomainError("The zero vector is not a projective point")
        return self.field.mul_array(c, self.field.inv_array(lead)[:, None])

    def keys(self, normalized: np.ndarray) -> np.ndarray:
        idx = self.tower.q_index_array(np.asarray(normalized, dtype=ELEMENT_DTYPE).reshape(-1, 3))
        return (idx[:, 0] * self.q + idx[:, 1]) * self.q + idx[:, 2]

    def key_of(self, obj: Union[ProjPoint, ProjLine]) -> int:
        triple = obj.coords if isinstance(obj, ProjPoint) else obj.coeffs
        return int(self.keys(np.array([triple]))[0])

    def triples_from_keys(self, keys) -> np.ndarray:
        keys = np.asarray(keys, dtype=ELEMENT_DTYPE)
        q = self.q
        return np.stack(
            [self.elements[keys // (q * q)], self.elements[(keys // q) % q], self.elements[keys % q]],
            axis=1,
        )

    def _check_coords(self, triple: Sequence[int]) -> None:
        for value in triple:
            if not self.tower.in_gf_q(int(value)):
                raise FieldDomainError(f"Coordinate {value} is not in GF({self.q})")

    def point(self, x: FieldElement, y: FieldElement, z: FieldElement) -> ProjPoint:
        self._check_coords((x, y, z))
        row = self.normalize_array([[x, y, z]])[0]
        return ProjPoint(tuple(int(v) for v in row))

    def line(self, a: FieldElement, b: FieldElement, c: FieldElement) -> ProjLine:
        self._check_coords((a, b, c))
        row = self.normalize_array([[a, b, c]])[0]
        return ProjLine(tuple(int(v) for v in row))

    def canonical_array(self, coords) -> np.ndarray:
        """Normalized, deduplicated rows sorted in canonical order"""
        rows = self.normalize_array(coords)
        _, first = np.unique(self.keys(rows), return_index=True)
        return rows[first]

    def canonical_points(self, coords) -> List[ProjPoint]:
        return self.points_from_array(self.canonical_array(coords))

    def affine_array(self, coords) -> np.ndarray:
        """Rows rescaled to z = 1 (all must be affine)"""
        c = np.asarray(coords, dtype=ELEMENT_DTYPE).reshape(-1, 3)
        if np.any(c[:, 2] == 0):
            raise FieldDomainError("Point on the line z = 0 has no affine representative")
        return self.field.mul_array(c, self.field.inv_array(c[:, 2])[:, None])

    @staticmethod
    def points_from_array(rows: np.ndarray) -> List[ProjPoint]:
        return [ProjPoint((int(r[0]), int(r[1]), int(r[2]))) for r in rows]

    @staticmethod
    def as_array(points: Iterable[Union[ProjPoint, ProjLine]]) -> np.ndarray:
        rows = [p.coords if isinstance(p, ProjPoint) else p.coeffs for p in points]
        return np.array(rows, dtype=ELEMENT_DTYPE).reshape(-1, 3)

    # ------------------------------------------------------------------
    # enumeration
    # ------------------------------------------------------------------

    @cached_property
    def all_triples(self) -> np.ndarray:
        """All q^2+q+1 normalized triples in canonical order"""
        e = self.elements
        one = np.ones(1, dtype=ELEMENT_DTYPE)
        zero = np.zeros(1, dtype=ELEMENT_DTYPE)
        head = np.array([[0, 0, 1]], dtype=ELEMENT_DTYPE)
        middle = np.stack(np.broadcast_arrays(zero, one, e), axis=1)
        yy, zz = np.meshgrid(e, e, indexing="ij")
        tail = np.stack(np.broadcast_arrays(one, yy.ravel(), zz.ravel()), axis=1)
        triples = np.concatenate([head, middle, tail])
        track_enumeration("plane_points", len(triples))
        return triples

    def enumerate_points(self) -> List[ProjPoint]:
        return self.points_from_array(self.all_triples)

    def enumerate_lines(self) -> List[ProjLine]:
        return [ProjLine(p.coords) for p in self.enumerate_points()]

    # ------------------------------------------------------------------
    # incidence
    # ------------------------------------------------------------------

    def dot_array(self, lines, points) -> np.ndarray:
        """Bilinear form ax + by + cz, broadcast over leading axes"""
        lines = np.asarray(lines, dtype=ELEMENT_DTYPE)
        points = np.asarray(points, dtype=ELEMENT_DTYPE)
        products = self.field.mul_array(lines, points)
        return products[..., 0] ^ products[..., 1] ^ products[..., 2]

    def cross_array(self, u, v) -> np.ndarray:
        u = np.asarray(u, dtype=ELEMENT_DTYPE)
        v = np.asarray(v, dtype=ELEMENT_DTYPE)
        mul = self.field.mul_array
        return np.stack(
            [
                mul(u[..., 1], v[..., 2]) ^ mul(u[..., 2], v[..., 1]),
                mul(u[..., 2], v[..., 0]) ^ mul(u[..., 0], v[..., 2]),
                mul(u[..., 0], v[..., 1]) ^ mul(u[..., 1], v[..., 0]),
            ],
            axis=-1,
        )

    def incident(self, p: ProjPoint, line: ProjLine) -> bool:
        return int(self.dot_array(np.array(line.coeffs), np.array(p.coords))) == 0

    def line_through(self, p1: ProjPoint, p2: ProjPoint) -> ProjLine:
        if p1 == p2:
            raise FieldDomainError("A line needs two distinct points")
        row = self.normalize_array(self.cross_array(np.array(p1.coords), np.array(p2.coords)))[0]
        return ProjLine(tuple(int(v) for v in row))

    def points_on_line(self, line: ProjLine) -> List[ProjPoint]:
        on = self.dot_array(np.array(line.coeffs)[None, :], self.all_triples) == 0
        return self.points_from_array(self.all_triples[on])

    @cached_property
    def _reference_pencils(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Points of z=0, x=0 and y=0, each q+1 rows"""
        e = self.elements
        zero = np.zeros_like(e)
        one = np.ones_like(e)
        on_z = np.concatenate([np.stack([one, e, zero], axis=1), [[0, 1, 0]]])
        on_x = np.concatenate([np.stack([zero, one, e], axis=1), [[0, 0, 1]]])
        on_y = np.concatenate([np.stack([one, zero, e], axis=1), [[0, 0, 1]]])
        return on_z, on_x, on_y

    def lines_through_array(self, points: np.ndarray) -> np.ndarray:
        """Normalized q+1 lines through each point, shape (len, q+1, 3)

        Each point is joined to the points of a reference line not
        containing it (z=0, else x=0, else y=0).
        """
        points = np.asarray(points, dtype=ELEMENT_DTYPE).reshape(-1, 3)
        on_z, on_x, on_y = self._reference_pencils
        use_z = (points[:, 2] != 0)[:, None, None]
        use_x = (points[:, 0] != 0)[:, None, None]
        partners = np.where(use_z, on_z[None], np.where(use_x, on_x[None], on_y[None]))
        lines = self.cross_array(points[:, None, :], partners)
        return self.normalize_array(lines).reshape(len(points), self.q + 1, 3)

    def line_incidences(self, points, keep_members: bool = False) -> LineIncidence:
        """Exhaustive scan of all lines through all points of a set

        Args:
            points: (N, 3) normalized triples (duplicates are not removed)
            keep_members: Also record which point indices lie on each line

        Returns:
            LineIncidence with the size of every nonempty intersection

        Raises:
            SizeCapError: If N*(q+1) exceeds settings.INCIDENCE_CAP
        """
        points = np.asarray(points, dtype=ELEMENT_DTYPE).reshape(-1, 3)
        total = len(points) * (self.q + 1)
        if total > settings.INCIDENCE_CAP:
            raise SizeCapError("incidences", total, settings.INCIDENCE_CAP)

        chunk = max(1, settings.INCIDENCE_CHUNK_SIZE // (self.q + 1))
        partial_keys, partial_counts = [], []
        member_keys, member_points = [], []
        for start in range(0, len(points), chunk):
            block = points[start:start + chunk]
            keys = self.keys(self.lines_through_array(block).reshape(-1, 3))
            found, counts = np.unique(keys, return_counts=True)
            partial_keys.append(found)
            partial_counts.append(counts)
            if keep_members:
                member_keys.append(keys)
                member_points.append(np.repeat(np.arange(start, start + len(block)), self.q + 1))
        track_enumeration("incidences", total)

        if partial_keys:
            all_keys = np.concatenate(partial_keys)
            all_counts = np.concatenate(partial_counts)
            line_keys, inverse = np.unique(all_keys, return_inverse=True)
            counts = np.bincount(inverse, weights=all_counts).astype(ELEMENT_DTYPE)
        else:
            line_keys = np.zeros(0, dtype=ELEMENT_DTYPE)
            counts = np.zeros(0, dtype=ELEMENT_DTYPE)

        members: Dict[int, List[int]] = {}
        if keep_members and member_keys:
            keys = np.concatenate(member_keys)
            owners = np.concatenate(member_points)
            order = np.lexsort((owners, keys))
            keys, owners = keys[order], owners[order]
            boundaries = np.flatnonzero(np.diff(keys)) + 1
            for group_keys, group_owners in zip(np.split(keys, boundaries), np.split(owners, boundaries)):
                members[int(group_keys[0])] = [int(i) for i in group_owners]

        return LineIncidence(
            total_lines=self.num_points,
            line_keys=line_keys,
            counts=counts,
            members=members,
        )

    def verify_oval(self, points) -> bool:
        """No line meets the set in more than 2 points"""
        incidence = self.line_incidences(points)
        return bool(len(incidence.counts) == 0 or incidence.counts.max() <= 2)

    def __repr__(self) -> str:
        return f"ProjectivePlane(q={self.q})"


def enumerate_points(plane: ProjectivePlane) -> List[ProjPoint]:
    return plane.enumerate_points()


def enumerate_lines(plane: ProjectivePlane) -> List[ProjLine]:
    return plane.enumerate_lines()
