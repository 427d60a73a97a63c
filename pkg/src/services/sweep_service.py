"""
Sweep Service - runs the full suite for every (m, k) with 2km <= max_bits.
One process per case through joblib; the summary is one CSV row per case.
"""

from pathlib import Path
from typing import List, Tuple
import logging

from joblib import Parallel, delayed

from src.core.config import settings
from src.core.exceptions import MaximalArcError, SizeCapError
from src.fields.tower import TowerParameters
from src.repositories.artifact_repository import ArtifactRepository
from src.schemas.certificate_schemas import SweepRow
from src.schemas.run_config import RunConfig
from src.services.verification_service import VerificationService

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = list(SweepRow.model_fields)


def sweep_pairs(max_bits: int) -> List[Tuple[int, int]]:
    """Every (m, k) with 2km <= max_bits, smallest fields first

    Raises:
        SizeCapError: If max_bits exceeds MAX_FIELD_BITS
    """
    if max_bits > settings.MAX_FIELD_BITS:
        raise SizeCapError("sweep max_bits", max_bits, settings.MAX_FIELD_BITS)
    half = max_bits // 2
    pairs = [(m, k) for m in range(1, half + 1) for k in range(1, half // m + 1)]
    return sorted(pairs, key=lambda mk: (mk[0] * mk[1], mk[0]))


def run_case(m: int, k: int, out: str, fmt: str) -> SweepRow:
    """Verify one case and summarize it

    Runs in a worker process, so it only takes plain arguments. A toolkit
    error becomes an "error" row instead of stopping the sweep.
    """
    p = TowerParameters.from_mk(m, k)
    row = dict(m=m, k=k, q=p.q, d=p.d, n=p.n, N=p.N)
    try:
        cfg = RunConfig(m=m, k=k, out=out, format=fmt, jobs=1)
        bundle = VerificationService(ArtifactRepository(out)).verify(cfg)
    except MaximalArcError as e:
        logger.error(
            f"Sweep case m={m} k={k} aborted: {str(e)}",
            extra={"error_type": type(e).__name__}
        )
        return SweepRow(**row, modulus=0, passed=0, failed=0, skipped=0, status="error", error=str(e))

    summary = bundle.summary
    return SweepRow(
        **row,
        modulus=bundle.modulus,
        passed=summary["pass"],
        failed=summary["fail"],
        skipped=summary["skipped"],
        status="pass" if bundle.all_passed else "fail",
    )


class SweepService:
    """Runs many cases and writes sweep.csv"""

    def __init__(self, repository: ArtifactRepository, fmt: str = "json"):
        self.repository = repository
        self.fmt = fmt

    def run(self, max_bits: int, jobs: int = 1) -> Tuple[List[SweepRow], Path]:
        """Run every case up to max_bits

        Args:
            max_bits: Largest 2km in the sweep
            jobs: Worker processes (results do not depend on it)

        Returns:
            Rows in case order and the path of sweep.csv
        """
        pairs = sweep_pairs(max_bits)
        logger.info("Sweep started", extra={"max_bits": max_bits, "cases": len(pairs), "jobs": jobs})

        out = str(self.repository.root)
        if jobs > 1:
            rows = Parallel(n_jobs=jobs, backend="loky")(
                delayed(run_case)(m, k, out, self.fmt) for m, k in pairs
            )
        else:
            rows = [run_case(m, k, out, self.fmt) for m, k in pairs]

        path = self.repository.save_csv(
            "sweep.csv", [r.model_dump() for r in rows], columns=SWEEP_COLUMNS
        )
        logger.info(
            "Sweep finished",
            extra={
                "cases": len(rows),
                "failed": sum(1 for r in rows if r.status == "fail"),
                "errors": sum(1 for r in rows if r.status == "error"),
            }
        )
        return rows, path

    @staticmethod
    def exit_code(rows: List[SweepRow]) -> int:
        return 0 if all(r.status == "pass" for r in rows) else 1
