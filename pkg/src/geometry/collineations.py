"""
Linear collineations of PG(2,q): invertible 3x3 matrices over GF(q).

Matrices act on column coordinate triples; lines transform by the inverse
transpose so incidence is preserved. Group elements are compared as
matrices, not up to scalars.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple
import logging

import numpy as np

from src.core.config import settings
from src.core.exceptions import FieldDomainError, SizeCapError
from src.core.metrics import track_enumeration
from src.fields.binary_field import ELEMENT_DTYPE, FieldElement, factor_integer
from src.geometry.plane import ProjectivePlane, ProjPoint, ProjLine

logger = logging.getLogger(__name__)

Matrix = Tuple[int, int, int, int, int, int, int, int, int]

IDENTITY: Matrix = (1, 0, 0, 0, 1, 0, 0, 0, 1)


@dataclass(frozen=True, order=True)
class Collineation:
    """Row-major 3x3 matrix over GF(q)"""

    matrix: Matrix

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=ELEMENT_DTYPE).reshape(3, 3)

    def to_list(self) -> List[int]:
        return list(self.matrix)

    @property
    def is_identity(self) -> bool:
        return self.matrix == IDENTITY


@dataclass
class GroupClosure:
    """
    Multiplicative closure of a generating set.

    Attributes:
        elements: All group elements, sorted
        order: len(elements)
        generator: An element of full order, if the group is cyclic
    """

    elements: List[Collineation]
    order: int
    generator: Optional[Collineation]

    @property
    def is_cyclic(self) -> bool:
        return self.generator is not None


def _xor_reduce(values: np.ndarray, axis: int) -> np.ndarray:
    return np.bitwise_xor.reduce(values, axis=axis)


def compose(plane: ProjectivePlane, g: Collineation, h: Collineation) -> Collineation:
    """Matrix product g*h (apply h first)"""
    a = g.as_array()
    b = h.as_array()
    product = _xor_reduce(plane.field.mul_array(a[:, :, None], b[None, :, :]), axis=1)
    return Collineation(tuple(int(v) for v in product.ravel()))


def determinant(plane: ProjectivePlane, g: Collineation) -> FieldElement:
    mul = plane.field.mul
    a, b, c, d, e, f, g_, h, i = g.matrix
    return (
        mul(a, mul(e, i) ^ mul(f, h))
        ^ mul(b, mul(d, i) ^ mul(f, g_))
        ^ mul(c, mul(d, h) ^ mul(e, g_))
    )


def inverse(plane: ProjectivePlane, g: Collineation) -> Collineation:
    """Adjugate over the determinant (signs vanish in characteristic 2)"""
    det = determinant(plane, g)
    if det == 0:
        raise FieldDomainError("Singular matrix is not a collineation")
    mul = plane.field.mul
    a, b, c, d, e, f, g_, h, i = g.matrix
    adjugate = (
        mul(e, i) ^ mul(f, h), mul(c, h) ^ mul(b, i), mul(b, f) ^ mul(c, e),
        mul(f, g_) ^ mul(d, i), mul(a, i) ^ mul(c, g_), mul(c, d) ^ mul(a, f),
        mul(d, h) ^ mul(e, g_), mul(b, g_) ^ mul(a, h), mul(a, e) ^ mul(b, d),
    )
    det_inv = plane.field.inv(det)
    return Collineation(tuple(mul(v, det_inv) for v in adjugate))


def transpose(g: Collineation) -> Collineation:
    a, b, c, d, e, f, g_, h, i = g.matrix
    return Collineation((a, d, g_, b, e, h, c, f, i))


def matrix_power(plane: ProjectivePlane, g: Collineation, exponent: int) -> Collineation:
    result = Collineation(IDENTITY)
    base = g
    while exponent:
        if exponent & 1:
            result = compose(plane, result, base)
        base = compose(plane, base, base)
        exponent >>= 1
    return result


def apply_array(plane: ProjectivePlane, matrices: np.ndarray, coords: np.ndarray) -> np.ndarray:
    """Images of coordinate rows under stacked matrices, normalized

    Args:
        matrices: (..., 3, 3) matrices
        coords: (..., 3) column triples broadcast against the matrices
    """
    images = _xor_reduce(plane.field.mul_array(matrices, coords[..., None, :]), axis=-1)
    return plane.normalize_array(images).reshape(images.shape)


def apply_to_point(plane: ProjectivePlane, g: Collineation, p: ProjPoint) -> ProjPoint:
    row = apply_array(plane, g.as_array(), np.array(p.coords, dtype=ELEMENT_DTYPE))
    return ProjPoint(tuple(int(v) for v in row.ravel()))


def apply_to_line(plane: ProjectivePlane, g: Collineation, line: ProjLine) -> ProjLine:
    """Contragredient action: coefficients transform by (g^-1)^T"""
    dual = transpose(inverse(plane, g))
    row = apply_array(plane, dual.as_array(), np.array(line.coeffs, dtype=ELEMENT_DTYPE))
    return ProjLine(tuple(int(v) for v in row.ravel()))


def stack(group: Sequence[Collineation]) -> np.ndarray:
    return np.array([g.matrix for g in group], dtype=ELEMENT_DTYPE).reshape(-1, 3, 3)


def element_order(
    plane: ProjectivePlane,
    g: Collineation,
    group_order: Optional[int] = None,
    cap: Optional[int] = None,
) -> int:
    """Order of g; uses the prime factors of group_order when it is known"""
    if group_order is not None:
        order = group_order
        for p in factor_integer(group_order):
            while order % p == 0 and matrix_power(plane, g, order // p).is_identity:
                order //= p
        return order

    cap = cap or settings.GROUP_CLOSURE_CAP
    current, order = g, 1
    while not current.is_identity:
        current = compose(plane, current, g)
        order += 1
        if order > cap:
            raise SizeCapError("element order", order, cap)
    return order


# ----------------------------------------------------------------------
# the groups acting on the pencil
# ----------------------------------------------------------------------


def group_G1(plane: ProjectivePlane, b: FieldElement) -> List[Collineation]:
    """All [[x+b*y, y, 0], [y, x, 0], [0, 0, 1]] with x^2 + b*x*y + y^2 = 1"""
    field = plane.field
    e = plane.elements
    xs, ys = np.meshgrid(e, e, indexing="ij")
    xs, ys = xs.ravel(), ys.ravel()
    form = field.mul_array(xs, xs) ^ field.mul_array(b, field.mul_array(xs, ys)) ^ field.mul_array(ys, ys)
    track_enumeration("field_pairs", len(xs))
    solutions = np.flatnonzero(form == 1)

    group = []
    for index in solutions:
        x, y = int(xs[index]), int(ys[index])
        group.append(Collineation((x ^ field.mul(b, y), y, 0, y, x, 0, 0, 0, 1)))
    logger.debug("G1 built", extra={"q": plane.q, "b": b, "order": len(group)})
    return sorted(group)


def group_G2(plane: ProjectivePlane) -> List[Collineation]:
    """diag(1, 1, c) for c in GF(d)*"""
    return sorted(Collineation((1, 0, 0, 0, 1, 0, 0, 0, int(c))) for c in plane.tower.gf_d[1:])


def group_closure(
    plane: ProjectivePlane,
    gens: Iterable[Collineation],
    cap: Optional[int] = None,
) -> GroupClosure:
    """Full multiplicative closure of gens plus a cyclicity certificate

    Generators already inside the current closure are skipped, so the cost
    is about |G| products per independent generator.

    Raises:
        SizeCapError: If the closure grows past cap
    """
    cap = cap or settings.GROUP_CLOSURE_CAP
    elements: Set[Matrix] = {IDENTITY}
    accepted: List[Collineation] = []

    for g in gens:
        if g.matrix in elements:
            continue
        accepted.append(g)
        frontier = [Collineation(m) for m in elements]
        while frontier:
            discovered = []
            for h in frontier:
                for s in accepted:
                    product = compose(plane, h, s)
                    if product.matrix not in elements:
                        elements.add(product.matrix)
                        discovered.append(product)
                        if len(elements) > cap:
                            raise SizeCapError("group order", len(elements), cap)
            frontier = discovered

    members = sorted(Collineation(m) for m in elements)
    order = len(members)
    generator = None
    for candidate in members:
        if element_order(plane, candidate, group_order=order) == order:
            generator = candidate
            break

    logger.info(
        "Group closure computed",
        extra={
            "order": order,
            "generators_used": len(accepted),
            "cyclic": generator is not None,
        }
    )
    return GroupClosure(elements=members, order=order, generator=generator)


def orbit(plane: ProjectivePlane, group: Sequence[Collineation], p: ProjPoint) -> Set[ProjPoint]:
    images = apply_array(plane, stack(group), np.array(p.coords, dtype=ELEMENT_DTYPE)[None, :])
    return set(plane.points_from_array(images.reshape(-1, 3)))


def orbits(
    plane: ProjectivePlane,
    group: Sequence[Collineation],
    points: Iterable[ProjPoint],
) -> List[Set[ProjPoint]]:
    """Partition of a point set into orbits; points are visited in sorted order"""
    remaining = sorted(set(points))
    seen: Set[ProjPoint] = set()
    result = []
    for p in remaining:
        if p in seen:
            continue
        o = orbit(plane, group, p)
        seen |= o
        result.append(o)
    return result


def point_stabilizer(plane: ProjectivePlane, group: Sequence[Collineation], p: ProjPoint) -> List[Collineation]:
    images = apply_array(plane, stack(group), np.array(p.coords, dtype=ELEMENT_DTYPE)[None, :])
    fixed = np.all(images.reshape(-1, 3) == np.array(p.coords), axis=1)
    return [g for g, keep in zip(group, fixed) if keep]


def line_stabilizer(plane: ProjectivePlane, group: Sequence[Collineation], line: ProjLine) -> List[Collineation]:
    """Elements mapping the line onto itself"""
    return [g for g in group if apply_to_line(plane, g, line) == line]


def groups_commute(plane: ProjectivePlane, first: Sequence[Collineation], second: Sequence[Collineation]) -> bool:
    return all(compose(plane, g, h) == compose(plane, h, g) for g in first for h in second)
