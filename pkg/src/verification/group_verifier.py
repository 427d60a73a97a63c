"""
Group claims: G1 preserves every conic of the pencil, G2 permutes the
conics, and the cyclic group G = <G1, G2> of order n fixes the nucleus and
acts sharply transitively on the rest of each arc.
"""

from typing import Dict, List, Tuple
import logging

import numpy as np

from src.geometry.arcs import (
    verify_field_model_orbits,
    verify_group_action,
    verify_line_stabilizer,
)
from src.geometry.collineations import apply_array, element_order, groups_commute
from src.geometry.conics import NUCLEUS
from src.verification.arc_verifier import check_conic_cap
from src.verification.base_verifier import BaseVerifier, Deferred
from src.verification.context import RunContext
from src.verification.partition_verifier import check_partition_size

logger = logging.getLogger(__name__)


def level_representatives(ctx: RunContext) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One affine point per level l != 0, with the levels and |F_l|"""
    pencil = ctx.pencil
    found, first, counts = np.unique(pencil.levels, return_index=True, return_counts=True)
    keep = found != 0
    return pencil.affine[first[keep]], found[keep], counts[keep]


def g1_conic_mismatches(ctx: RunContext) -> int:
    """Levels l != 0 whose conic F_l is not a single G1-orbit

    Every element of G1 moves one point of each F_l at once; F_l is an orbit
    when the images stay on level l and are |F_l| distinct points.
    """
    plane = ctx.plane
    check_conic_cap(plane)
    reps, levels, sizes = level_representatives(ctx)
    matrices = np.stack([g.as_array() for g in ctx.G1])[:, None]
    images = apply_array(plane, matrices, reps)
    on_level = np.all(ctx.pencil.level_of(images.reshape(-1, 3)).reshape(images.shape[:2]) == levels, axis=0)
    keys = plane.keys(images.reshape(-1, 3)).reshape(images.shape[:2])
    distinct = np.array([len(np.unique(keys[:, j])) for j in range(len(levels))])
    return int(np.count_nonzero(~on_level | (distinct != sizes)))


def g2_level_mismatches(ctx: RunContext) -> int:
    """Pairs (c, l), l in GF(d)*, with diag(1, 1, c) F_l != F_(l c^-2)"""
    plane = ctx.plane
    field = plane.field
    levels = [int(v) for v in ctx.tower.gf_d[1:]]
    bad = 0
    for g in ctx.G2:
        c = g.matrix[8]
        shift = field.inv(field.mul(c, c))
        for l in levels:
            images = apply_array(plane, g.as_array(), ctx.pencil.points_with_levels([l]))
            if np.unique(ctx.pencil.level_of(images)).tolist() != [field.mul(l, shift)]:
                bad += 1
    return bad


def g2_image_levels(ctx: RunContext) -> Dict[str, object]:
    """Levels hit by the images of F_1 under each element of G2"""
    plane = ctx.plane
    rows = ctx.pencil.points_with_levels([1])
    per_image: List[List[int]] = []
    for g in ctx.G2:
        images = apply_array(plane, g.as_array(), rows)
        per_image.append(np.unique(ctx.pencil.level_of(images)).tolist())
    return {
        "single_conic": all(len(levels) == 1 for levels in per_image),
        "levels": sorted(level for levels in per_image for level in levels),
    }


def sharp_arcs_of_partition(ctx: RunContext) -> int:
    """Arcs A_i on which G is sharply transitive off the nucleus"""
    check_partition_size(ctx.plane.q)
    return sum(verify_group_action(ctx.plane, arc, ctx.group).sharp for arc in ctx.partition.arcs)


class GroupVerifier(BaseVerifier):
    """Claims about G1, G2 and the cyclic group they generate"""

    def __init__(self):
        super().__init__("group")

    def run(self, ctx: RunContext) -> None:
        plane = ctx.plane
        p = ctx.params
        q, d, n = p["q"], p["d"], p["n"]

        self._certify_factors(ctx)

        self.certify(
            ctx, "group.order", "|<G1, G2>| = (q+1)(d-1)",
            lambda: ctx.group.order, n,
        )
        self.certify(
            ctx, "group.cyclic", "<G1, G2> has an element of order n",
            lambda: ctx.group.is_cyclic, True,
        )
        self.certify(
            ctx, "group.generator_order", "ord(g) = n for the generator found",
            lambda: element_order(plane, ctx.group.generator, group_order=ctx.group.order)
            if ctx.group.is_cyclic else None,
            n,
        )

        arc = ctx.arc
        if arc.nucleus is None:
            note = "arc under test has no nucleus"
            self.skip(ctx, "group.preserves_arc", "G maps the arc onto itself", note)
            self.skip(ctx, "group.nucleus_fixed", "G fixes (0,0,1)", note)
            self.skip(ctx, "group.sharp_on_arc", "G is sharply transitive on the n points off the nucleus", note)
        else:
            action = Deferred(lambda: verify_group_action(plane, arc, ctx.group))
            self.certify(
                ctx, "group.preserves_arc", "G maps the arc onto itself",
                lambda: action().preserves_arc, True,
            )
            self.certify(
                ctx, "group.nucleus_fixed", "G fixes (0,0,1)",
                lambda: action().nucleus_fixed, True,
            )
            self.certify(
                ctx, "group.sharp_on_arc", "G is sharply transitive on the n points off the nucleus",
                lambda: {"orbit_sizes": action().orbit_sizes, "sharp": action().sharp},
                {"orbit_sizes": [n], "sharp": True},
            )
        self.certify(
            ctx, "group.sharp_on_partition", "G is sharply transitive on every arc of the partition",
            lambda: sharp_arcs_of_partition(ctx), p["N"],
        )

        stabilizer = Deferred(lambda: verify_line_stabilizer(plane, ctx.base_arc, ctx.group))
        self.certify(
            ctx, "group.line_stabilizer_order", "stabilizer of x = 0 has order d - 1",
            lambda: stabilizer().order, d - 1,
        )
        self.certify(
            ctx, "group.line_stabilizer_cyclic", "stabilizer of x = 0 is cyclic",
            lambda: stabilizer().cyclic, True,
        )
        self.certify(
            ctx, "group.line_stabilizer_fixed", "stabilizer of x = 0 fixes (0,0,1) and (0,1,0)",
            lambda: [NUCLEUS in stabilizer().fixed_points, plane.point(0, 1, 0) in stabilizer().fixed_points],
            [True, True],
        )
        self.certify(
            ctx, "group.line_stabilizer_orbit", "orbit of (0,1,1) is {(0,h,1) : h in GF(d)*}",
            lambda: stabilizer().orbit_matches, True,
            witness=lambda _: [pt.to_list() for pt in stabilizer().orbit],
        )

        def field_model() -> Dict[str, object]:
            report = verify_field_model_orbits(plane)
            return {
                "orbits": report.orbit_count,
                "sizes": sorted(set(report.orbit_sizes)),
                "subgroup_order": report.subgroup_order,
                "tiles_nonzero": report.tiles_nonzero,
                "ovals": report.all_ovals,
            }

        self.certify(
            ctx, "group.field_model_orbits", "<alpha^(q-1)> has order q + 1; its q - 1 cosets tile GF(r)* and are ovals of size q + 1",
            field_model,
            {"orbits": q - 1, "sizes": [q + 1], "subgroup_order": q + 1, "tiles_nonzero": True, "ovals": True},
        )

    def _certify_factors(self, ctx: RunContext) -> None:
        plane = ctx.plane
        p = ctx.params
        q, d = p["q"], p["d"]

        self.certify(
            ctx, "group.G1_order", "|G1| = q + 1",
            lambda: len(ctx.G1), q + 1,
        )
        self.certify(
            ctx, "group.G1_closed", "G1 is closed under composition",
            lambda: ctx.G1_closure.elements == sorted(ctx.G1), True,
        )
        self.certify(
            ctx, "group.G1_cyclic", "G1 has an element of order q + 1",
            lambda: ctx.G1_closure.is_cyclic, True,
        )
        self.certify(
            ctx, "group.G1_conics", "each F_l, l != 0, is one G1-orbit",
            lambda: g1_conic_mismatches(ctx), 0,
        )
        self.certify(
            ctx, "group.G1_orbits_on_arc", "G1 splits the arc off the nucleus into d - 1 orbits of size q + 1",
            lambda: verify_group_action(plane, ctx.base_arc, ctx.G1_closure).orbit_sizes,
            [q + 1] * (d - 1),
        )
        self.certify(
            ctx, "group.G2_order", "|G2| = d - 1",
            lambda: len(ctx.G2), d - 1,
        )
        self.certify(
            ctx, "group.G2_permutes_conics", "G2 maps F_1 onto the conics F_l, l in GF(d)*",
            lambda: g2_image_levels(ctx),
            {"single_conic": True, "levels": [int(v) for v in ctx.tower.gf_d[1:]]},
        )
        self.certify(
            ctx, "group.G2_level_map", "diag(1, 1, c) maps F_l onto F_(l c^-2) for every c, l in GF(d)*: 0 mismatches",
            lambda: g2_level_mismatches(ctx), 0,
        )
        self.certify(
            ctx, "group.factors_commute", "g h = h g for g in G1, h in G2",
            lambda: groups_commute(plane, ctx.G1, ctx.G2), True,
        )
        self.certify(
            ctx, "group.factors_meet_trivially", "G1 and G2 share only the identity",
            lambda: len(set(ctx.G1) & set(ctx.G2)), 1,
        )
