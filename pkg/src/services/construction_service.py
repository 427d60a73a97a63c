"""
Construction Service - builds every object for one (m, k) and stores it.
Writes the field, arc, partition, group and code files plus one weight
distribution per code under m{m}_k{k}/.
"""

from pathlib import Path
from typing import Dict, Optional
import logging

from src.coding.linear_code import LinearCode
from src.core.exceptions import FieldDomainError, SizeCapError
from src.core.metrics import track_stage
from src.geometry.arcs import MaximalArc
from src.geometry.collineations import element_order
from src.geometry.plane import ProjectivePlane
from src.repositories.artifact_repository import ArtifactRepository
from src.schemas.artifact_schemas import (
    ArcFile,
    CodeFile,
    FieldDescription,
    FieldFile,
    GroupFile,
    PartitionFile,
)
from src.schemas.run_config import RunConfig
from src.verification.context import RunContext
from src.verification.partition_verifier import check_partition_size

logger = logging.getLogger(__name__)


def arc_to_file(arc: MaximalArc) -> ArcFile:
    return ArcFile(
        q=arc.q,
        d=arc.degree,
        nucleus=arc.nucleus.to_list() if arc.nucleus else None,
        points=[p.to_list() for p in arc.points],
    )


def arc_from_file(plane: ProjectivePlane, data: ArcFile) -> MaximalArc:
    """Rebuild an arc from its file, keeping the stored point order

    Raises:
        FieldDomainError: If the file was written for another plane or a
            coordinate is not in GF(q)
    """
    if data.q != plane.q:
        raise FieldDomainError(f"Arc file is for q = {data.q}, the plane has q = {plane.q}")
    triples = data.points + ([data.nucleus] if data.nucleus else [])
    for triple in triples:
        if not all(plane.tower.in_gf_q(v) for v in triple):
            raise FieldDomainError(f"Point {triple} has coordinates outside GF({plane.q})")
    rows = plane.normalize_array(data.points)
    nucleus = None
    if data.nucleus:
        nucleus = plane.points_from_array(plane.normalize_array([data.nucleus]))[0]
    return MaximalArc(points=plane.points_from_array(rows), degree=data.d, q=data.q, nucleus=nucleus)


def code_to_file(code: LinearCode) -> CodeFile:
    return CodeFile(name=code.name, q=code.q, length=code.length, gen=code.gen.tolist())


class ConstructionService:
    """Builds and stores the objects of one run

    Artifacts whose construction hits a desk-scale cap are left out with a
    warning; everything else is written, so reruns are byte-identical.
    """

    def __init__(self, repository: ArtifactRepository):
        """Initialize ConstructionService

        Args:
            repository: Where artifacts are written
        """
        self.repository = repository
        logger.info("ConstructionService initialized", extra={"root": str(repository.root)})

    def construct(self, cfg: RunConfig, ctx: Optional[RunContext] = None) -> Dict[str, Path]:
        """Build everything for cfg and write it under cfg.label

        Returns:
            Artifact name -> written path
        """
        ctx = ctx or RunContext(cfg.m, cfg.k, cfg.modulus, cfg.jobs)
        base = cfg.label
        written: Dict[str, Path] = {}

        try:
            with track_stage("construct"):
                written["field"] = self.repository.save_json(f"{base}/field.json", self.field_file(ctx))
                written["arc"] = self.repository.save_json(f"{base}/arc.json", arc_to_file(ctx.base_arc))
                self._save_capped(written, "partition", f"{base}/partition.json", lambda: self.partition_file(ctx))
                self._save_capped(written, "group", f"{base}/group.json", lambda: self.group_file(ctx))

                for name, code in ctx.codes().items():
                    written[f"code_{name}"] = self.repository.save_json(f"{base}/code_{name}.json", code_to_file(code))
                    try:
                        rows = ctx.weights(code).to_rows()
                    except SizeCapError as e:
                        logger.warning("Weight distribution skipped", extra={"code": name, "reason": str(e)})
                        continue
                    written[f"weights_{name}"] = self.repository.save_csv(
                        f"{base}/weights_{name}.csv", rows, columns=["weight", "count"]
                    )

            logger.info(
                "Construction finished",
                extra={"m": cfg.m, "k": cfg.k, "artifacts": sorted(written)}
            )
            return written

        except Exception as e:
            logger.error(
                f"Error constructing m={cfg.m} k={cfg.k}: {str(e)}",
                exc_info=True
            )
            raise

    @staticmethod
    def field_file(ctx: RunContext) -> FieldFile:
        p = ctx.params
        return FieldFile(
            m=p["m"], k=p["k"], q=p["q"], d=p["d"], n=p["n"], N=p["N"], r=p["r"],
            field=FieldDescription(**ctx.tower.to_description()),
            beta=ctx.tower.beta,
        )

    @staticmethod
    def partition_file(ctx: RunContext) -> PartitionFile:
        check_partition_size(ctx.plane.q)
        partition = ctx.partition
        return PartitionFile(
            q=partition.q,
            d=ctx.tower.d,
            nucleus=partition.nucleus.to_list(),
            cosets=[H.sorted() for H in partition.cosets],
            arcs=[arc_to_file(arc) for arc in partition.arcs],
        )

    @staticmethod
    def group_file(ctx: RunContext) -> GroupFile:
        group = ctx.group
        generator_order = None
        if group.is_cyclic:
            generator_order = element_order(ctx.plane, group.generator, group_order=group.order)
        return GroupFile(
            order=group.order,
            cyclic=group.is_cyclic,
            generator=group.generator.to_list() if group.generator else None,
            generator_order=generator_order,
            G1=[g.to_list() for g in ctx.G1],
            G2=[g.to_list() for g in ctx.G2],
        )

    def _save_capped(self, written: Dict[str, Path], name: str, relative: str, build) -> None:
        try:
            payload = build()
        except SizeCapError as e:
            logger.warning("Artifact skipped at size cap", extra={"artifact": name, "reason": str(e)})
            return
        written[name] = self.repository.save_json(relative, payload)

