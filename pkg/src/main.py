"""
Command-line entry point.
Usage: python -m src.main {construct,verify,sweep} [options]
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from src.commands import register_all
from src.core.config import settings
from src.core.exceptions import MaximalArcError
from src.core.logging_config import configure_logging
from src.core.metrics import write_metrics

logger = logging.getLogger(__name__)

EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help=f"Output directory (default {settings.OUTPUT_DIR})")
    common.add_argument("--format", choices=["json", "csv"], default=None, help="Certificate format")
    common.add_argument("--jobs", type=int, default=None, help="Worker count for enumerations and sweeps")
    common.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    common.add_argument("--json-logs", action="store_true", default=None, help="Emit JSON log records")
    common.add_argument("--metrics-file", default=None, help="Write prometheus text metrics here")

    parser = argparse.ArgumentParser(
        prog="maxarc",
        description=f"{settings.APP_NAME} {settings.APP_VERSION}: Denniston maximal arcs, "
                    "their cyclic groups, two-weight codes and designs, with certificates",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_all(subparsers, common)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command

    Returns:
        0 on success, 1 if a certificate failed, 2 on bad input or an
        exceeded cap
    """
    args = build_parser().parse_args(argv)
    configure_logging("DEBUG" if args.verbose else None, json_output=args.json_logs)

    logger.info(
        f"Starting {args.command}",
        extra={"version": settings.APP_VERSION, "command": args.command}
    )
    try:
        return args.handler(args)

    except ValidationError as e:
        logger.error(f"Invalid parameters: {e.error_count()} error(s)", extra={"command": args.command})
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    except (MaximalArcError, FileNotFoundError) as e:
        logger.error(
            f"{args.command} aborted: {str(e)}",
            extra={"error_type": type(e).__name__}
        )
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    finally:
        write_metrics(args.metrics_file)


if __name__ == "__main__":
    sys.exit(main())
