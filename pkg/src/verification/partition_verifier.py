"""
Partition claims: the N Denniston arcs built on the cosets of GF(d)* tile
AG(2,q) around the shared nucleus.
"""

import logging

from src.core.config import settings
from src.core.exceptions import SizeCapError
from src.geometry.arcs import verify_maximal, verify_partition
from src.verification.base_verifier import BaseVerifier, Deferred
from src.verification.context import RunContext

logger = logging.getLogger(__name__)


def check_partition_size(q: int) -> None:
    """Every arc of the partition is scanned line by line: about q^2 (q+1) incidences"""
    total = q * q * (q + 1)
    if total > settings.INCIDENCE_CAP:
        raise SizeCapError("partition incidences", total, settings.INCIDENCE_CAP)


class PartitionVerifier(BaseVerifier):
    """Claims about the arc partition of AG(2,q)"""

    def __init__(self):
        super().__init__("partition")

    def run(self, ctx: RunContext) -> None:
        plane = ctx.plane
        p = ctx.params
        q = p["q"]

        def scan():
            check_partition_size(q)
            return verify_partition(plane, ctx.partition)

        report = Deferred(scan)

        self.certify(
            ctx, "partition.arc_count", "N = (q - 1)/(d - 1) arcs",
            lambda: report().arc_count, p["N"],
        )
        self.certify(
            ctx, "partition.cosets_subgroups", "each {0} + gamma^i GF(d)* is an additive subgroup of order d",
            lambda: report().cosets_are_subgroups, True,
        )
        self.certify(
            ctx, "partition.cosets_disjoint", "the level sets meet only in 0",
            lambda: report().cosets_meet_in_zero, True,
        )
        self.certify(
            ctx, "partition.pairwise_nucleus", "two arcs of the partition share only (0,0,1)",
            lambda: report().pairwise_nucleus_only, True,
        )
        self.certify(
            ctx, "partition.covers_affine", "the arcs cover the q^2 points of AG(2,q) and nothing else",
            lambda: {"points": report().covered_points, "affine_only": report().covers_affine_plane},
            {"points": q * q, "affine_only": True},
        )
        self.certify(
            ctx, "partition.arc_sizes", "|A_i| = (q+1)(d-1) + 1",
            lambda: sorted({len(arc) for arc in _arcs(ctx)}), [p["n"] + 1],
        )
        self.certify(
            ctx, "partition.arcs_maximal", "all N arcs are maximal of degree d",
            lambda: sum(verify_maximal(plane, arc).passed for arc in _arcs(ctx)), p["N"],
        )


def _arcs(ctx: RunContext):
    check_partition_size(ctx.plane.q)
    return ctx.partition.arcs
