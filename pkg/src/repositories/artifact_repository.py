"""
Artifact repository for run outputs.
Writes JSON and CSV files atomically under one output directory.
"""

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional, Type, TypeVar

import pandas as pd
from pydantic import BaseModel

from src.core.metrics import track_enumeration

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


class ArtifactRepository:
    """File store rooted at an output directory

    Every write goes to a temporary file in the target directory and is
    moved into place with os.replace, so readers never see partial files.
    """

    def __init__(self, root: str):
        """Initialize repository

        Args:
            root: Output directory (created on first write)
        """
        self.root = Path(root)

    def path(self, *parts: str) -> Path:
        return self.root.joinpath(*parts)

    def _atomic_write(self, target: Path, text: str) -> Path:
        target.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
            os.replace(tmp, target)
        except Exception as e:
            if os.path.exists(tmp):
                os.unlink(tmp)
            logger.error(f"Error writing artifact {target}: {str(e)}")
            raise
        return target

    def save_json(self, relative: str, payload: Any) -> Path:
        """Write a JSON document with sorted keys and a trailing newline

        Args:
            relative: Path below the root
            payload: A pydantic model or plain JSON-compatible data

        Returns:
            Path of the written file
        """
        if isinstance(payload, BaseModel):
            payload = payload.model_dump(mode="json", by_alias=True)
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
        target = self._atomic_write(self.path(relative), text)
        track_enumeration("artifacts_written", 1)
        logger.debug("Artifact saved", extra={"path": str(target)})
        return target

    def save_csv(self, relative: str, rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> Path:
        """Write rows as CSV through pandas (no index column)"""
        frame = pd.DataFrame(rows, columns=columns)
        target = self._atomic_write(self.path(relative), frame.to_csv(index=False, lineterminator="\n"))
        track_enumeration("artifacts_written", 1)
        logger.debug("Artifact saved", extra={"path": str(target), "rows": len(frame)})
        return target

    def load_json(self, relative: str) -> Any:
        path = Path(relative) if os.path.isabs(relative) else self.path(relative)
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)

    def load_model(self, relative: str, model: Type[M]) -> M:
        """Load and validate a JSON artifact

        Raises:
            FileNotFoundError: If the artifact does not exist
            pydantic.ValidationError: If it does not match the model
        """
        return model.model_validate(self.load_json(relative))

    def load_csv(self, relative: str) -> pd.DataFrame:
        return pd.read_csv(self.path(relative))

    def exists(self, relative: str) -> bool:
        return self.path(relative).exists()
