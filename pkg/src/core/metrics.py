"""
Prometheus metrics for monitoring construction and verification runs.
Metrics live in a dedicated registry and are dumped to a text file on demand.
"""

import time
import logging
from contextlib import contextmanager
from typing import Iterator, Optional
from prometheus_client import (
    CollectorRegistry,
    Counter,
    Histogram,
    generate_latest,
    write_to_textfile,
)

from src.core.config import settings

logger = logging.getLogger(__name__)

REGISTRY = CollectorRegistry()

# ============================================================================
# VERIFICATION METRICS
# ============================================================================

CERTIFICATES_TOTAL = Counter(
    "certificates_total",
    "Certificates issued",
    ["group", "status"],
    registry=REGISTRY,
)

STAGE_DURATION = Histogram(
    "stage_duration_seconds",
    "Duration of construction and verification stages",
    ["stage"],
    buckets=settings.METRIC_STAGE_DURATION_BUCKETS,
    registry=REGISTRY,
)

STAGE_ERRORS = Counter(
    "stage_errors_total",
    "Stages aborted by an exception",
    ["stage", "error_type"],
    registry=REGISTRY,
)

# ============================================================================
# ENUMERATION METRICS
# ============================================================================

ENUMERATED_OBJECTS = Counter(
    "enumerated_objects_total",
    "Objects visited by exhaustive scans",
    ["kind"],
    registry=REGISTRY,
)

# ============================================================================
# HELPER FUNCTIONS
# ============================================================================


def track_certificate(group: str, status: str) -> None:
    """Count one certificate

    Args:
        group: Claim group (the prefix before the first dot)
        status: pass, fail or skipped
    """
    try:
        CERTIFICATES_TOTAL.labels(group=group, status=status).inc()
    except Exception as e:
        logger.error(f"Error tracking certificate: {e}", exc_info=True)


def track_enumeration(kind: str, count: int) -> None:
    """Count objects visited by an exhaustive scan

    Args:
        kind: What was enumerated (codewords, incidences, field_elements, ...)
        count: How many
    """
    try:
        ENUMERATED_OBJECTS.labels(kind=kind).inc(count)
    except Exception as e:
        logger.error(f"Error tracking enumeration: {e}", exc_info=True)


@contextmanager
def track_stage(stage: str) -> Iterator[None]:
    """Time a stage and record its duration (and its error type on failure)"""
    start_time = time.time()
    try:
        yield
    except Exception as e:
        STAGE_ERRORS.labels(stage=stage, error_type=type(e).__name__).inc()
        raise
    finally:
        duration = time.time() - start_time
        STAGE_DURATION.labels(stage=stage).observe(duration)
        logger.debug(
            "Stage finished",
            extra={"stage": stage, "duration_ms": duration * 1000}
        )


def get_metrics() -> bytes:
    """Render all metrics in Prometheus text format"""
    return generate_latest(REGISTRY)


def write_metrics(path: Optional[str] = None) -> Optional[str]:
    """Write the registry to a text file if metrics are enabled

    Args:
        path: Target file (uses settings.METRICS_FILE if None)

    Returns:
        The path written, or None when nothing was written
    """
    path = path or settings.METRICS_FILE
    if not settings.METRICS_ENABLED or not path:
        return None
    write_to_textfile(path, REGISTRY)
    logger.info("Metrics written", extra={"path": path})
    return path
