"""
construct command.
Builds the field, arc, partition, group and codes for one (m, k) and writes them.
"""

import argparse
import logging

from src.dependencies import get_artifact_repository
from src.schemas.run_config import RunConfig
from src.services.construction_service import ConstructionService

logger = logging.getLogger(__name__)


def add_case_arguments(parser: argparse.ArgumentParser) -> None:
    """The (m, k) selection shared by construct and verify"""
    parser.add_argument("--m", type=int, required=True, help="d = 2^m")
    parser.add_argument("--k", type=int, required=True, help="q = 2^(km)")
    parser.add_argument(
        "--modulus", type=lambda v: int(v, 0), default=None,
        help="Irreducible degree-2km modulus for GF(r) as a bitmask (decimal, 0x or 0b)",
    )


def config_from_args(args: argparse.Namespace, **extra) -> RunConfig:
    """Validate the command line into a RunConfig

    Raises:
        pydantic.ValidationError: If a parameter is out of range
    """
    values = dict(m=args.m, k=args.k, modulus=args.modulus, **extra)
    for name in ("out", "format", "jobs"):
        if getattr(args, name, None) is not None:
            values[name] = getattr(args, name)
    return RunConfig(**values)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "construct",
        parents=[common],
        help="Build and store every object for one (m, k)",
        description="""
        Writes m{m}_k{k}/ under --out: field.json, arc.json, partition.json,
        group.json, code_{C,E,augmented,extended}.json and one
        weights_<code>.csv per code. Objects past a size cap are left out
        with a warning.
        """,
    )
    add_case_arguments(parser)
    parser.set_defaults(handler=handle_construct)


def handle_construct(args: argparse.Namespace) -> int:
    """Build and write the artifacts of one case

    Returns:
        0 (errors propagate to the entry point)
    """
    cfg = config_from_args(args)
    service = ConstructionService(get_artifact_repository(cfg.out))
    written = service.construct(cfg)

    for name in sorted(written):
        print(f"{name:<20} {written[name]}")
    logger.info(
        "construct completed",
        extra={"m": cfg.m, "k": cfg.k, "files": len(written)}
    )
    return 0
