"""
sweep command.
Runs the full suite for every (m, k) with 2km <= --max-bits.
"""

import argparse
import logging

from src.core.config import settings
from src.dependencies import get_artifact_repository
from src.services.sweep_service import SweepService

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "sweep",
        parents=[common],
        help="Verify every (m, k) up to a field size",
        description="Writes one certificate file per case and sweep.csv under --out.",
    )
    parser.add_argument(
        "--max-bits", type=int, default=8,
        help=f"Largest 2km in the sweep (at most {settings.MAX_FIELD_BITS})",
    )
    parser.set_defaults(handler=handle_sweep)


def handle_sweep(args: argparse.Namespace) -> int:
    """Run the sweep

    Returns:
        0 if every case passed, 1 otherwise
    """
    out = args.out or settings.OUTPUT_DIR
    fmt = (args.format or settings.OUTPUT_FORMAT).lower()
    jobs = args.jobs or settings.JOBS

    service = SweepService(get_artifact_repository(out), fmt=fmt)
    rows, path = service.run(args.max_bits, jobs=jobs)

    for row in rows:
        print(f"m={row.m} k={row.k} q={row.q:<6} {row.status:<5} "
              f"{row.passed} passed, {row.failed} failed, {row.skipped} skipped")
    print(f"summary: {path}")
    return service.exit_code(rows)
