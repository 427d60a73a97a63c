"""
Denniston maximal arcs, the partition of AG(2,q) they induce, the cyclotomic
model in GF(q^2), and exhaustive verification of maximality and of the
cyclic group acting on an arc.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional
import logging

import numpy as np

from src.core.config import settings
from src.core.exceptions import FieldDomainError, InvalidSubgroupError, SizeCapError
from src.core.metrics import track_enumeration
from src.fields.binary_field import ELEMENT_DTYPE, FieldElement
from src.fields.tower import FieldTower
from src.geometry.collineations import (
    Collineation,
    GroupClosure,
    apply_array,
    element_order,
    line_stabilizer,
    orbit,
    stack,
)
from src.geometry.conics import NUCLEUS, ConicPencil
from src.geometry.plane import ProjectivePlane, ProjLine, ProjPoint

logger = logging.getLogger(__name__)


# ============================================================================
# TYPES
# ============================================================================


@dataclass(frozen=True)
class AdditiveSubgroupSet:
    """A set of GF(q) elements containing 0 and closed under addition"""

    elements: FrozenSet[int]

    @classmethod
    def validate(cls, elements: Iterable[int], size: Optional[int] = None) -> "AdditiveSubgroupSet":
        """Check the subgroup axioms exhaustively

        Raises:
            InvalidSubgroupError: Naming a pair whose sum leaves the set, or
                the missing zero / wrong size
        """
        values = np.unique(np.asarray(list(elements), dtype=ELEMENT_DTYPE))
        if size is not None and len(values) != size:
            raise InvalidSubgroupError(f"Expected {size} elements, got {len(values)}")
        if len(values) == 0 or values[0] != 0:
            raise InvalidSubgroupError("Set does not contain 0")

        chunk = max(1, settings.INCIDENCE_CHUNK_SIZE // len(values))
        for start in range(0, len(values), chunk):
            rows = values[start:start + chunk]
            sums = rows[:, None] ^ values[None, :]
            outside = ~np.isin(sums, values)
            if outside.any():
                i, j = np.argwhere(outside)[0]
                pair = (int(rows[i]), int(values[j]))
                raise InvalidSubgroupError(
                    f"{pair[0]} + {pair[1]} = {pair[0] ^ pair[1]} is not in the set",
                    pair=pair,
                )
        return cls(frozenset(int(v) for v in values))

    def sorted(self) -> List[int]:
        return sorted(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass
class MaximalArc:
    """
    A point set claimed to be a maximal arc of a given degree.

    Attributes:
        points: Point list; the order defines point indices
        degree: Claimed intersection size of every secant line
        q: Order of the ambient plane
        nucleus: Common point of the pencil (None for recovered or dual arcs)
        levels: The additive subgroup indexing the pencil, if any
    """

    points: List[ProjPoint]
    degree: int
    q: int
    nucleus: Optional[ProjPoint] = None
    levels: Optional[List[int]] = None

    @property
    def s(self) -> int:
        return self.q // self.degree

    @property
    def expected_size(self) -> int:
        return (self.q + 1) * (self.degree - 1) + 1

    def as_array(self) -> np.ndarray:
        return ProjectivePlane.as_array(self.points)

    def without_point(self, index: int) -> "MaximalArc":
        kept = self.points[:index] + self.points[index + 1:]
        return MaximalArc(points=kept, degree=self.degree, q=self.q, nucleus=self.nucleus, levels=self.levels)

    def __len__(self) -> int:
        return len(self.points)


@dataclass
class ArcReport:
    """
    Outcome of the exhaustive line scan.

    Attributes:
        passed: Every line meets the set in 0 or degree points
        census: Intersection size -> number of lines
        secant_lines: Lines meeting the set in degree points
        expected_secant_lines: (size)(q+1)/degree, None if not integral
        witness_line: A line with a forbidden intersection size
    """

    passed: bool
    degree: int
    size: int
    expected_size: int
    census: Dict[int, int]
    secant_lines: int
    external_lines: int
    expected_secant_lines: Optional[int]
    witness_line: Optional[ProjLine] = None


@dataclass
class ArcPartition:
    """The (q-1)/(d-1) arcs A_i = union of F_l over l in H_i, one shared nucleus"""

    arcs: List[MaximalArc]
    cosets: List[AdditiveSubgroupSet]
    nucleus: ProjPoint
    q: int


@dataclass
class PartitionReport:
    cosets_are_subgroups: bool
    cosets_meet_in_zero: bool
    pairwise_nucleus_only: bool
    covers_affine_plane: bool
    arc_count: int
    covered_points: int

    @property
    def passed(self) -> bool:
        return (
            self.cosets_are_subgroups
            and self.cosets_meet_in_zero
            and self.pairwise_nucleus_only
            and self.covers_affine_plane
        )


@dataclass
class GroupActionReport:
    """
    How a group acts on an arc.

    Attributes:
        preserves_arc: The group maps the arc onto itself
        nucleus_fixed: Every element fixes the nucleus
        orbit_sizes: Sizes of the orbits on the arc minus its nucleus
        transitive: A single orbit
        sharp: Transitive and group order equal to the orbit size
        generator: An element of full order, when cyclic
    """

    group_order: int
    preserves_arc: bool
    nucleus_fixed: bool
    orbit_sizes: List[int]
    transitive: bool
    sharp: bool
    cyclic: bool
    generator: Optional[Collineation] = None
    generator_order: Optional[int] = None


@dataclass
class LineStabilizerReport:
    line: ProjLine
    order: int
    cyclic: bool
    fixed_points: List[ProjPoint]
    orbit: List[ProjPoint]
    expected_orbit: List[ProjPoint]

    @property
    def orbit_matches(self) -> bool:
        return self.orbit == self.expected_orbit


@dataclass
class FieldModelOrbitReport:
    """Orbits of the order-(q+1) subgroup of GF(q^2)* on the nonzero elements"""

    subgroup_order: int
    orbit_count: int
    orbit_sizes: List[int]
    tiles_nonzero: bool
    all_ovals: bool


# ============================================================================
# CONSTRUCTION
# ============================================================================


def denniston_arc(
    plane: ProjectivePlane,
    H: AdditiveSubgroupSet,
    b: FieldElement,
) -> MaximalArc:
    """Union of the conics F_l, l in H; F_0 contributes the nucleus"""
    if not all(plane.tower.in_gf_q(h) for h in H.elements):
        raise InvalidSubgroupError(f"Levels must lie in GF({plane.q})")
    pencil = ConicPencil(plane, b)
    rows = pencil.points_with_levels(H.sorted())
    arc = MaximalArc(
        points=plane.points_from_array(rows),
        degree=len(H),
        q=plane.q,
        nucleus=NUCLEUS,
        levels=H.sorted(),
    )
    logger.info(
        "Denniston arc built",
        extra={"q": plane.q, "degree": arc.degree, "size": len(arc)}
    )
    return arc


def base_subgroup(tower: FieldTower) -> AdditiveSubgroupSet:
    """H = GF(d) inside GF(q)"""
    return AdditiveSubgroupSet.validate(tower.gf_d, size=tower.d)


def partition_cosets(tower: FieldTower) -> List[AdditiveSubgroupSet]:
    """H_i = {0} + gamma^i GF(d)*, gamma = alpha^(q+1), i = 0..N-1"""
    field = tower.field
    gamma_log = tower.q + 1
    d_star_logs = field.log_table[tower.gf_d[1:]]
    cosets = []
    for i in range(tower.N):
        logs = (d_star_logs + i * gamma_log) % field.group_order
        values = np.concatenate([np.zeros(1, dtype=ELEMENT_DTYPE), field.exp_table[logs]])
        cosets.append(AdditiveSubgroupSet.validate(values, size=tower.d))
    return cosets


def build_partition(plane: ProjectivePlane, b: FieldElement) -> ArcPartition:
    tower = plane.tower
    cosets = partition_cosets(tower)
    arcs = [denniston_arc(plane, H, b) for H in cosets]
    logger.info("Arc partition built", extra={"q": plane.q, "arcs": len(arcs)})
    return ArcPartition(arcs=arcs, cosets=cosets, nucleus=NUCLEUS, q=plane.q)


def field_model_basis(tower: FieldTower, theta: Optional[FieldElement] = None) -> FieldElement:
    """Second basis element of GF(r) over GF(q); alpha unless overridden"""
    theta = tower.alpha if theta is None else theta
    tower.field.check(theta)
    if tower.in_gf_q(theta):
        raise FieldDomainError(f"theta = {theta} lies in GF(q) and cannot complete a basis")
    return theta


def field_to_affine(tower: FieldTower, values, theta: FieldElement) -> np.ndarray:
    """x = u + v theta  |->  (u, v, 1), with v = Tr(x)/Tr(theta)"""
    field = tower.field
    values = np.asarray(values, dtype=ELEMENT_DTYPE)
    trace_theta_inv = field.inv(tower.trace(theta))
    v = field.mul_array(tower.trace_array(values), trace_theta_inv)
    u = values ^ field.mul_array(v, theta)
    return np.stack([u, v, np.ones_like(values)], axis=-1)


def cyclotomic_arc(
    plane: ProjectivePlane,
    theta: Optional[FieldElement] = None,
) -> MaximalArc:
    """C_0 = <beta> together with 0, mapped into AG(2,q) along {1, theta}"""
    tower = plane.tower
    theta = field_model_basis(tower, theta)
    values = np.concatenate([np.zeros(1, dtype=ELEMENT_DTYPE), tower.cyclotomic_class(0)])
    rows = plane.canonical_array(field_to_affine(tower, values, theta))
    arc = MaximalArc(points=plane.points_from_array(rows), degree=tower.d, q=plane.q, nucleus=NUCLEUS)
    logger.info(
        "Cyclotomic arc built",
        extra={"q": plane.q, "theta": theta, "size": len(arc)}
    )
    return arc


def multiplication_collineation(
    tower: FieldTower,
    c: FieldElement,
    theta: Optional[FieldElement] = None,
) -> Collineation:
    """The GF(q)-linear map x -> c x of GF(r), written on (u, v, 1)"""
    theta = field_model_basis(tower, theta)
    images = field_to_affine(tower, [c, tower.field.mul(c, theta)], theta)
    (u1, v1, _), (u2, v2, _) = images.tolist()
    return Collineation((u1, u2, 0, v1, v2, 0, 0, 0, 1))


def cyclotomic_class_is_invariant(tower: FieldTower) -> bool:
    """beta C_0 = C_0, so every element of C_0 permutes C_0 and fixes 0"""
    klass = tower.cyclotomic_class(0)
    shifted = np.sort(tower.field.mul_array(tower.beta, klass))
    return bool(np.array_equal(shifted, klass))


# ============================================================================
# VERIFICATION
# ============================================================================


def verify_maximal(plane: ProjectivePlane, arc: MaximalArc) -> ArcReport:
    """Scan every line: pass iff each meets the set in 0 or arc.degree points"""
    points = arc.as_array()
    incidence = plane.line_incidences(points)
    census = incidence.census()
    bad = np.flatnonzero(incidence.counts != arc.degree)
    witness = None
    if len(bad):
        witness = ProjLine(tuple(int(v) for v in plane.triples_from_keys(incidence.line_keys[bad[:1]])[0]))

    secant = int(np.count_nonzero(incidence.counts == arc.degree))
    numerator = len(points) * (plane.q + 1)
    expected_secant = numerator // arc.degree if numerator % arc.degree == 0 else None
    report = ArcReport(
        passed=witness is None,
        degree=arc.degree,
        size=len(points),
        expected_size=arc.expected_size,
        census=census,
        secant_lines=secant,
        external_lines=census.get(0, 0),
        expected_secant_lines=expected_secant,
        witness_line=witness,
    )
    logger.debug(
        "Arc verified",
        extra={"q": plane.q, "degree": arc.degree, "passed": report.passed, "census": census}
    )
    return report


def verify_partition(plane: ProjectivePlane, partition: ArcPartition) -> PartitionReport:
    tower = plane.tower
    subgroups_ok = True
    for H in partition.cosets:
        try:
            AdditiveSubgroupSet.validate(H.elements, size=tower.d)
        except InvalidSubgroupError:
            subgroups_ok = False

    nonzero = [H.elements - {0} for H in partition.cosets]
    seen: set = set()
    meet_in_zero = True
    for part in nonzero:
        if seen & part:
            meet_in_zero = False
        seen |= part

    keys = [set(plane.keys(arc.as_array()).tolist()) for arc in partition.arcs]
    nucleus_key = plane.key_of(partition.nucleus)
    pairwise_ok = all(
        keys[i] & keys[j] == {nucleus_key}
        for i in range(len(keys))
        for j in range(i + 1, len(keys))
    )
    union = set().union(*keys) if keys else set()
    covered = len(union)
    # nothing on z = 0
    union_rows = plane.triples_from_keys(np.array(sorted(union), dtype=ELEMENT_DTYPE))
    all_affine = bool(len(union_rows) == 0 or np.all(union_rows[:, 2] != 0))
    covers = all_affine and covered == plane.q * plane.q

    return PartitionReport(
        cosets_are_subgroups=subgroups_ok,
        cosets_meet_in_zero=meet_in_zero,
        pairwise_nucleus_only=pairwise_ok,
        covers_affine_plane=covers,
        arc_count=len(partition.arcs),
        covered_points=covered,
    )


def _maps_set_onto_itself(plane: ProjectivePlane, matrices: np.ndarray, points: np.ndarray) -> bool:
    total = len(matrices) * len(points)
    if total > settings.INCIDENCE_CAP:
        raise SizeCapError("group images", total, settings.INCIDENCE_CAP)
    target = np.sort(plane.keys(points))
    images = apply_array(plane, matrices[:, None, :, :], points[None, :, :])
    image_keys = np.sort(plane.keys(images.reshape(-1, 3)).reshape(len(matrices), -1), axis=1)
    track_enumeration("group_images", total)
    return bool(np.all(image_keys == target[None, :]))


def verify_group_action(
    plane: ProjectivePlane,
    arc: MaximalArc,
    group: GroupClosure,
) -> GroupActionReport:
    """Orbit structure of a closed group on an arc with a nucleus"""
    if arc.nucleus is None:
        raise FieldDomainError("Group action is verified relative to the nucleus")
    points = arc.as_array()
    movers = [group.generator] if group.is_cyclic else group.elements
    preserves = _maps_set_onto_itself(plane, stack(movers), points)

    nucleus_fixed = orbit(plane, group.elements, arc.nucleus) == {arc.nucleus}
    rest = [p for p in arc.points if p != arc.nucleus]
    sizes = []
    remaining = set(rest)
    for p in rest:
        if p not in remaining:
            continue
        o = orbit(plane, group.elements, p)
        sizes.append(len(o))
        remaining -= o
    sizes.sort(reverse=True)
    transitive = len(sizes) == 1 and sizes[0] == len(rest)

    generator_order = None
    if group.is_cyclic:
        generator_order = element_order(plane, group.generator, group_order=group.order)

    return GroupActionReport(
        group_order=group.order,
        preserves_arc=preserves,
        nucleus_fixed=nucleus_fixed,
        orbit_sizes=sizes,
        transitive=transitive,
        sharp=transitive and group.order == len(rest),
        cyclic=group.is_cyclic,
        generator=group.generator,
        generator_order=generator_order,
    )


def dual_arc(plane: ProjectivePlane, arc: MaximalArc) -> MaximalArc:
    """The external lines of a maximal arc, a maximal arc of degree q/d in the dual plane"""
    incidence = plane.line_incidences(arc.as_array())
    all_keys = np.arange(plane.num_points, dtype=ELEMENT_DTYPE)
    external = np.setdiff1d(all_keys, incidence.line_keys)
    rows = plane.triples_from_keys(external)
    return MaximalArc(points=plane.points_from_array(rows), degree=arc.s, q=plane.q)


def verify_line_stabilizer(
    plane: ProjectivePlane,
    arc: MaximalArc,
    group: GroupClosure,
) -> LineStabilizerReport:
    """Stabilizer of the secant x = 0 through the nucleus

    It fixes (0,0,1) and (0,1,0) on that line and moves (0,1,1) around
    {(0,h,1) : h in H*}.
    """
    line = ProjLine((1, 0, 0))
    stabilizer = line_stabilizer(plane, group.elements, line)
    on_line = plane.points_on_line(line)
    fixed = [p for p in on_line if orbit(plane, stabilizer, p) == {p}]

    start = plane.point(0, 1, 1)
    moved = sorted(orbit(plane, stabilizer, start))
    levels = arc.levels if arc.levels is not None else [int(v) for v in plane.tower.gf_d]
    expected = sorted(plane.point(0, h, 1) for h in levels if h != 0)

    order = len(stabilizer)
    cyclic = any(element_order(plane, g, group_order=order) == order for g in stabilizer)
    return LineStabilizerReport(
        line=line,
        order=order,
        cyclic=cyclic,
        fixed_points=fixed,
        orbit=moved,
        expected_orbit=expected,
    )


def verify_field_model_orbits(
    plane: ProjectivePlane,
    theta: Optional[FieldElement] = None,
) -> FieldModelOrbitReport:
    """The subgroup <alpha^(q-1)> of GF(q^2)* acting by multiplication"""
    tower = plane.tower
    theta = field_model_basis(tower, theta)
    q = tower.q
    total = (q - 1) * (q + 1) * (q + 1)
    if total > settings.INCIDENCE_CAP:
        raise SizeCapError("oval incidences", total, settings.INCIDENCE_CAP)

    field = tower.field
    subgroup_logs = np.arange(q + 1, dtype=ELEMENT_DTYPE) * (q - 1)
    subgroup = field.exp_table[subgroup_logs % field.group_order]
    sizes = []
    leaders = set()
    covered = []
    ovals = True
    for i in range(q - 1):
        values = field.exp_table[(subgroup_logs + i) % field.group_order]
        leaders.add(int(values.min()))
        covered.append(values)
        rows = plane.canonical_array(field_to_affine(tower, values, theta))
        sizes.append(len(rows))
        ovals = ovals and plane.verify_oval(rows)

    covered = np.concatenate(covered)
    tiles_nonzero = bool(
        np.all(covered != 0) and len(covered) == field.group_order and len(np.unique(covered)) == len(covered)
    )

    return FieldModelOrbitReport(
        subgroup_order=len(np.unique(subgroup)),
        orbit_count=len(leaders),
        orbit_sizes=sizes,
        tiles_nonzero=tiles_nonzero,
        all_ovals=ovals,
    )
