"""
Shared instances of the expensive objects.
Towers and planes are immutable, so one instance per (m, k, modulus) is
built and reused by every command and verifier in the process.
"""

import logging
from functools import lru_cache
from typing import Optional

from src.fields.tower import FieldTower
from src.geometry.plane import ProjectivePlane
from src.repositories.artifact_repository import ArtifactRepository

logger = logging.getLogger(__name__)


@lru_cache(maxsize=16)
def get_tower(m: int, k: int, modulus: Optional[int] = None) -> FieldTower:
    """Get the tower for (m, k), built once per process

    Raises:
        FieldConstructionError: If the parameters or the override are invalid
        SizeCapError: If 2km exceeds the configured cap
    """
    logger.debug("Building tower", extra={"m": m, "k": k, "modulus": modulus})
    return FieldTower(m, k, modulus)


@lru_cache(maxsize=16)
def get_plane(m: int, k: int, modulus: Optional[int] = None) -> ProjectivePlane:
    return ProjectivePlane(get_tower(m, k, modulus))


def get_artifact_repository(out: str) -> ArtifactRepository:
    """Get a repository rooted at the output directory"""
    return ArtifactRepository(out)
