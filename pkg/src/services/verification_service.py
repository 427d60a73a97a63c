"""
Verification Service - runs the requested claim groups for one (m, k) and
stores the certificates as JSON or as a CSV table.
"""

from pathlib import Path
from typing import Optional
import logging

from src.core.metrics import track_stage
from src.dependencies import get_plane
from src.geometry.arcs import MaximalArc
from src.repositories.artifact_repository import ArtifactRepository
from src.schemas.artifact_schemas import ArcFile
from src.schemas.certificate_schemas import CertificateBundle
from src.schemas.run_config import RunConfig
from src.services.construction_service import arc_from_file
from src.verification.context import RunContext
from src.verification.verification_engine import VerificationEngine

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class VerificationService:
    """Service for certificate runs"""

    def __init__(self, repository: ArtifactRepository, engine: Optional[VerificationEngine] = None):
        """Initialize VerificationService

        Args:
            repository: Where certificates are written
            engine: Verification engine (a new one if not given)
        """
        self.repository = repository
        self.engine = engine or VerificationEngine()

    def load_arc(self, cfg: RunConfig) -> Optional[MaximalArc]:
        """The arc stored in cfg.arc_file, or None to verify the base arc

        Raises:
            FileNotFoundError: If the file does not exist
            pydantic.ValidationError: If it is not an arc file
            FieldDomainError: If it does not fit the plane of (m, k)
        """
        if not cfg.arc_file:
            return None
        data = self.repository.load_model(cfg.arc_file, ArcFile)
        arc = arc_from_file(get_plane(cfg.m, cfg.k, cfg.modulus), data)
        logger.info(
            "Arc loaded from file",
            extra={"path": cfg.arc_file, "points": len(arc), "degree": arc.degree}
        )
        return arc

    def verify(self, cfg: RunConfig, save: bool = True) -> CertificateBundle:
        """Run cfg.targets and optionally store the certificates

        Returns:
            The certificate bundle; bundle.all_passed decides the exit code
        """
        ctx = RunContext(cfg.m, cfg.k, cfg.modulus, cfg.jobs, arc_override=self.load_arc(cfg))
        with track_stage("verify"):
            bundle = self.engine.run(ctx, cfg.targets)
        if save:
            self.save(cfg, bundle)
        return bundle

    def save(self, cfg: RunConfig, bundle: CertificateBundle) -> Path:
        if cfg.format == "csv":
            return self.repository.save_csv(f"{cfg.label}/certificates.csv", bundle.table_rows())
        return self.repository.save_json(f"{cfg.label}/certificates.json", bundle)

    @staticmethod
    def exit_code(bundle: CertificateBundle) -> int:
        """0 when nothing failed (skipped claims do not fail a run), else 1"""
        return EXIT_OK if bundle.all_passed else EXIT_FAILED
