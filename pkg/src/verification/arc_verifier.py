"""
Plane and arc claims: incidence axioms, the conic pencil, maximality of the
pencil and cyclotomic arcs, the line census, the dual arc and the
single-deletion perturbations.
"""

from typing import Dict, List
import logging

import numpy as np

from src.core.config import settings
from src.core.exceptions import InvalidSubgroupError, SizeCapError
from src.fields.binary_field import ELEMENT_DTYPE
from src.fields.tower import FieldTower
from src.geometry.arcs import (
    AdditiveSubgroupSet,
    MaximalArc,
    cyclotomic_arc,
    cyclotomic_class_is_invariant,
    dual_arc,
    multiplication_collineation,
    verify_group_action,
    verify_maximal,
)
from src.geometry.collineations import Collineation, apply_array, compose, group_closure, inverse, transpose
from src.geometry.conics import NUCLEUS, ConicPencil, has_root
from src.geometry.plane import ProjectivePlane
from src.verification import formulas
from src.verification.base_verifier import BaseVerifier, Deferred
from src.verification.context import RunContext

logger = logging.getLogger(__name__)


def check_conic_cap(plane: ProjectivePlane) -> None:
    """Every-level conic checks run up to settings.CONIC_CHECK_MAX_ORDER"""
    if plane.q > settings.CONIC_CHECK_MAX_ORDER:
        raise SizeCapError("conic check order", plane.q, settings.CONIC_CHECK_MAX_ORDER)


def incidence_matrix_census(plane: ProjectivePlane) -> Dict[str, List[int]]:
    """Row sums, column sums and pair counts of the full incidence matrix"""
    if plane.q > settings.INCIDENCE_MATRIX_MAX_ORDER:
        raise SizeCapError("incidence matrix order", plane.q, settings.INCIDENCE_MATRIX_MAX_ORDER)
    triples = plane.all_triples
    incidence = (plane.dot_array(triples[:, None, :], triples[None, :, :]) == 0).astype(np.int64)
    through_pairs = incidence.T @ incidence
    off_diagonal = through_pairs[~np.eye(len(triples), dtype=bool)]
    return {
        "points_per_line": sorted(set(incidence.sum(axis=1).tolist())),
        "lines_per_point": sorted(set(incidence.sum(axis=0).tolist())),
        "lines_through_pair": sorted(set(off_diagonal.tolist())),
    }


def collineation_incidence_mismatches(plane: ProjectivePlane, g: Collineation) -> int:
    """p on l iff g p on (g^-1)^T l, over a block of points and lines"""
    triples = plane.all_triples[:settings.COLLINEATION_CHECK_POINTS]
    before = plane.dot_array(triples[:, None, :], triples[None, :, :]) == 0
    images = apply_array(plane, g.as_array(), triples)
    line_images = apply_array(plane, transpose(inverse(plane, g)).as_array(), triples)
    after = plane.dot_array(line_images[:, None, :], images[None, :, :]) == 0
    return int(np.count_nonzero(before != after))


def conic_levels(pencil: ConicPencil) -> Dict[str, object]:
    """Sizes of the level sets Q = l over AG(2,q)"""
    levels, counts = np.unique(pencil.levels, return_counts=True)
    nonzero = counts[levels != 0]
    return {
        "level_zero": int(counts[levels == 0].sum()),
        "nonzero_levels": int(len(nonzero)),
        "nonzero_sizes": sorted(set(nonzero.tolist())),
    }


def conic_lines(plane: ProjectivePlane, pencil: ConicPencil) -> Dict[str, List[int]]:
    """Intersections of lines through the nucleus with every conic F_l, l != 0, and oval test"""
    check_conic_cap(plane)
    nucleus_lines = plane.keys(plane.lines_through_array(np.array([NUCLEUS.coords], dtype=ELEMENT_DTYPE))[0])
    through_nucleus = set()
    max_meet = set()
    for l in plane.elements[1:]:
        rows = pencil.points_with_levels([int(l)])
        incidence = plane.line_incidences(rows)
        through_nucleus.update(incidence.count_for(nucleus_lines).tolist())
        max_meet.add(int(incidence.counts.max()))
    return {"nucleus_line_meets": sorted(through_nucleus), "max_line_meet": sorted(max_meet)}


def second_basis_element(tower: FieldTower) -> int:
    """Smallest element outside GF(q) other than alpha"""
    for x in range(2, tower.r):
        if x != tower.alpha and not tower.in_gf_q(x):
            return x
    return tower.alpha


def deletion_count(arc: MaximalArc) -> int:
    """Every point for small arcs, else the first few"""
    return len(arc) if len(arc) <= settings.PERTURBATION_MAX_DELETIONS else 8


def surviving_deletions(plane: ProjectivePlane, arc: MaximalArc) -> int:
    """Single-point deletions that still pass the maximality scan"""
    return sum(1 for i in range(deletion_count(arc)) if verify_maximal(plane, arc.without_point(i)).passed)


class PlaneVerifier(BaseVerifier):
    """Claims about PG(2,q) and the conic pencil"""

    def __init__(self):
        super().__init__("plane")

    def run(self, ctx: RunContext) -> None:
        plane = ctx.plane
        p = ctx.params
        q = p["q"]

        self.certify(
            ctx, "plane.points", "q^2 + q + 1",
            lambda: int(len(np.unique(plane.keys(plane.all_triples)))), formulas.plane_size(p),
        )
        self.certify(
            ctx, "plane.incidence_matrix", "q + 1 points per line, q + 1 lines per point, 1 line per pair",
            lambda: incidence_matrix_census(plane),
            {"points_per_line": [q + 1], "lines_per_point": [q + 1], "lines_through_pair": [1]},
        )
        self.certify(
            ctx, "plane.points_per_line", "every line has q + 1 points",
            lambda: plane.line_incidences(plane.all_triples).census(), {q + 1: formulas.plane_size(p)},
        )
        mover = compose(plane, ctx.G1[-1], ctx.G2[-1])
        self.certify(
            ctx, "plane.collineation_incidence", "p on l <=> g p on g^-T l: 0 mismatches",
            lambda: collineation_incidence_mismatches(plane, mover), 0,
            note=f"first {settings.COLLINEATION_CHECK_POINTS} points and lines",
        )
        self.certify(
            ctx, "plane.pencil_irreducible", "x^2 + b x + 1 has no root in GF(q)",
            lambda: not has_root(plane, ctx.b), True,
        )
        self.certify(
            ctx, "plane.conic_sizes", "|F_0| = 1 and |F_l| = q + 1 for the q - 1 levels l != 0",
            lambda: conic_levels(ctx.pencil),
            {"level_zero": 1, "nonzero_levels": q - 1, "nonzero_sizes": [q + 1]},
        )
        lines = Deferred(lambda: conic_lines(plane, ctx.pencil))
        self.certify(
            ctx, "plane.conic_nucleus", "every line through (0,0,1) meets each F_l, l != 0, once",
            lambda: lines()["nucleus_line_meets"], [1],
        )
        self.certify(
            ctx, "plane.conics_are_ovals", "no line meets any F_l, l != 0, in more than 2 points",
            lambda: lines()["max_line_meet"], [2],
        )


class ArcVerifier(BaseVerifier):
    """Claims about the arc under test, its dual and the cyclotomic model"""

    def __init__(self):
        super().__init__("arc")

    def run(self, ctx: RunContext) -> None:
        plane = ctx.plane
        arc = ctx.arc
        p = ctx.params
        d = p["d"]

        report = Deferred(lambda: verify_maximal(plane, arc))

        def witness_line(_) -> List[int]:
            line = report().witness_line
            return line.to_list() if line else None

        self.certify(
            ctx, "arc.size", "(q+1)(d-1) + 1",
            lambda: len(arc), formulas.arc_size(p),
        )
        self.certify(
            ctx, "arc.maximal", "every line meets the arc in 0 or d points",
            lambda: sorted(report().census), [0, d],
            relation="subset", witness=witness_line,
        )
        self.certify(
            ctx, "arc.secant_lines", "(n+1)(q+1)/d",
            lambda: report().secant_lines, formulas.secant_lines(p),
        )
        self.certify(
            ctx, "arc.external_lines", "(s d - d + 1) s",
            lambda: report().external_lines, formulas.external_lines(p),
        )
        self._certify_nucleus(ctx, arc, d)
        self.certify(
            ctx, "arc.levels_subgroup", "H = GF(d) is an additive subgroup of order d",
            lambda: _is_subgroup(ctx.H.elements, d), True,
        )

        dual = Deferred(lambda: verify_maximal(plane, dual_arc(plane, arc)))
        self.certify(
            ctx, "arc.dual_maximal", "external lines form a maximal arc of degree s and size (s d - d + 1) s",
            lambda: {"size": dual().size, "maximal": dual().passed},
            {"size": formulas.external_lines(p), "maximal": True},
        )

        self._certify_cyclotomic(ctx)

        self.certify(
            ctx, "arc.single_deletions_fail", "removing any one point breaks maximality",
            lambda: surviving_deletions(plane, arc), 0,
            note=f"{deletion_count(arc)} deletions checked",
        )

    def _certify_nucleus(self, ctx: RunContext, arc: MaximalArc, d: int) -> None:
        if arc.nucleus is None:
            self.skip(ctx, "arc.nucleus_lines", "lines through the nucleus meet the arc in d points", "arc has no nucleus")
            return
        plane = ctx.plane

        def meets() -> List[int]:
            incidence = plane.line_incidences(arc.as_array())
            lines = plane.lines_through_array(np.array([arc.nucleus.coords], dtype=ELEMENT_DTYPE))[0]
            return sorted(set(incidence.count_for(plane.keys(lines)).tolist()))

        self.certify(
            ctx, "arc.nucleus_lines", "lines through the nucleus meet the arc in d points",
            meets, [d],
        )

    def _certify_cyclotomic(self, ctx: RunContext) -> None:
        plane = ctx.plane
        tower = ctx.tower
        p = ctx.params
        d = p["d"]

        model = Deferred(lambda: cyclotomic_arc(plane))
        report = Deferred(lambda: verify_maximal(plane, model()))
        self.certify(
            ctx, "arc.cyclotomic_size", "|C_0 + {0}| = n + 1",
            lambda: len(model()), p["n"] + 1,
        )
        self.certify(
            ctx, "arc.cyclotomic_maximal", "C_0 + {0} meets every line in 0 or d points",
            lambda: sorted(report().census), [0, d],
            relation="subset",
        )

        theta = second_basis_element(tower)
        self.certify(
            ctx, "arc.cyclotomic_basis_independent", "maximal for a second basis {1, theta}",
            lambda: verify_maximal(plane, cyclotomic_arc(plane, theta)).passed, True,
            note=f"theta = {theta}",
        )
        self.certify(
            ctx, "arc.cyclotomic_invariant", "beta C_0 = C_0",
            lambda: cyclotomic_class_is_invariant(tower), True,
        )

        def action() -> Dict[str, object]:
            closure = group_closure(plane, [multiplication_collineation(tower, tower.beta)])
            result = verify_group_action(plane, model(), closure)
            return {"order": closure.order, "sharp": result.sharp, "nucleus_fixed": result.nucleus_fixed}

        self.certify(
            ctx, "arc.cyclotomic_group", "x -> beta x generates a group of order n, sharp on C_0",
            action, {"order": p["n"], "sharp": True, "nucleus_fixed": True},
        )


def _is_subgroup(elements, size: int) -> bool:
    try:
        AdditiveSubgroupSet.validate(elements, size=size)
    except InvalidSubgroupError:
        return False
    return True
