"""
Verification orchestrator.
Maps command-line targets to claim groups and runs them in a fixed order.
"""

from typing import Dict, Iterable, List
import logging

from src.schemas.certificate_schemas import Certificate, CertificateBundle
from src.schemas.run_config import VERIFY_TARGETS
from src.verification.arc_verifier import ArcVerifier, PlaneVerifier
from src.verification.base_verifier import BaseVerifier
from src.verification.code_verifier import CodeVerifier
from src.verification.context import RunContext
from src.verification.design_verifier import DesignVerifier
from src.verification.field_verifier import FieldVerifier
from src.verification.group_verifier import GroupVerifier
from src.verification.partition_verifier import PartitionVerifier

logger = logging.getLogger(__name__)


class VerificationEngine:
    """
    Runs the claim groups selected by a list of targets.

    Targets:
    - field: GF(r), its subfields, the trace and the Z counts
    - arc: the plane, the pencil, the arc under test and the cyclotomic model
    - partition: the N arcs tiling AG(2,q)
    - group: G1, G2 and the cyclic group they generate
    - code: the trace codes and their duals
    - designs: supports, the Steiner design and the dual design
    """

    def __init__(self):
        """Initialize the engine with every claim group"""
        self.verifiers: Dict[str, List[BaseVerifier]] = {
            "field": [FieldVerifier()],
            "arc": [PlaneVerifier(), ArcVerifier()],
            "partition": [PartitionVerifier()],
            "group": [GroupVerifier()],
            "code": [CodeVerifier()],
            "designs": [DesignVerifier()],
        }

        logger.info(
            "VerificationEngine initialized",
            extra={"targets": list(self.verifiers)}
        )

    @staticmethod
    def resolve_targets(targets: Iterable[str]) -> List[str]:
        """Expand "all" and put the targets in canonical order"""
        requested = set(targets) or {"all"}
        if "all" in requested:
            return list(VERIFY_TARGETS)
        return [t for t in VERIFY_TARGETS if t in requested]

    def run(self, ctx: RunContext, targets: Iterable[str]) -> CertificateBundle:
        """Check every claim of the selected groups

        Args:
            ctx: Lazily built objects for one (m, k)
            targets: Subset of VERIFY_TARGETS, or ["all"]

        Returns:
            The certificates in target order, then claim order
        """
        certificates: List[Certificate] = []
        try:
            for target in self.resolve_targets(targets):
                for verifier in self.verifiers[target]:
                    certificates.extend(verifier.verify(ctx))

            bundle = CertificateBundle(
                m=ctx.m,
                k=ctx.k,
                modulus=ctx.tower.field.modulus,
                certificates=certificates,
            )
            logger.info(
                "Verification finished",
                extra={"m": ctx.m, "k": ctx.k, **bundle.summary}
            )
            return bundle

        except Exception as e:
            logger.error(
                f"Error during verification: {str(e)}",
                extra={"m": ctx.m, "k": ctx.k},
                exc_info=True
            )
            raise

    def get_claim_groups(self) -> List[str]:
        return [verifier.name for group in self.verifiers.values() for verifier in group]
