"""
Logging setup.
Structured JSON output via python-json-logger, or the plain script format.
"""

import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

from src.core.config import settings

PLAIN_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
JSON_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def configure_logging(level: Optional[str] = None, json_output: Optional[bool] = None) -> None:
    """Install a single stderr handler on the root logger

    Args:
        level: Log level name (uses settings.LOG_LEVEL if None)
        json_output: Emit JSON records (uses settings.LOG_JSON if None)
    """
    level = (level or settings.LOG_LEVEL).upper()
    json_output = settings.LOG_JSON if json_output is None else json_output

    handler = logging.StreamHandler(sys.stderr)
    if json_output:
        handler.setFormatter(jsonlogger.JsonFormatter(JSON_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(PLAIN_FORMAT))

    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(level)

    logging.getLogger(__name__).debug(
        "Logging configured",
        extra={"level": level, "json_output": json_output}
    )
