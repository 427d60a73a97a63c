"""
verify command.
Checks the requested claim groups and prints one line per certificate.
"""

import argparse
import logging

from src.commands.construct import add_case_arguments, config_from_args
from src.dependencies import get_artifact_repository
from src.schemas.certificate_schemas import CertificateBundle
from src.schemas.run_config import VERIFY_TARGETS
from src.services.verification_service import VerificationService

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "verify",
        parents=[common],
        help="Certify the closed forms for one (m, k)",
        description="""
        Runs the claim groups named by the targets (default: all) and writes
        m{m}_k{k}/certificates.json or certificates.csv. Exit code 0 means
        no certificate failed; skipped claims do not fail a run.
        """,
    )
    add_case_arguments(parser)
    parser.add_argument(
        "targets", nargs="*", metavar="target",
        help=f"Claim groups: {', '.join(VERIFY_TARGETS)} or all",
    )
    parser.add_argument("--arc-file", default=None, help="Verify this arc file instead of the base arc")
    parser.set_defaults(handler=handle_verify)


def format_table(bundle: CertificateBundle) -> str:
    width = max((len(c.claim) for c in bundle.certificates), default=0)
    lines = [f"{c.status.upper():<8} {c.claim:<{width}}  {c.instantiated}" for c in bundle.certificates]
    summary = bundle.summary
    lines.append(
        f"m={bundle.m} k={bundle.k}: {summary['pass']} passed, "
        f"{summary['fail']} failed, {summary['skipped']} skipped"
    )
    return "\n".join(lines)


def handle_verify(args: argparse.Namespace) -> int:
    """Run the certificates of one case

    Returns:
        0 if nothing failed, 1 otherwise
    """
    cfg = config_from_args(args, targets=args.targets or ["all"], arc_file=args.arc_file)
    service = VerificationService(get_artifact_repository(cfg.out))
    bundle = service.verify(cfg)

    print(format_table(bundle))
    code = service.exit_code(bundle)
    logger.info(
        "verify completed",
        extra={"m": cfg.m, "k": cfg.k, "exit_code": code, **bundle.summary}
    )
    return code
