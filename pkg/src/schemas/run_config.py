"""
Run configuration for one (m, k) invocation, validated before any work starts.
"""

from pydantic import BaseModel, Field, field_validator, model_validator
from typing import List, Optional

from src.core.config import settings

VERIFY_TARGETS = ("field", "arc", "partition", "group", "code", "designs")


class RunConfig(BaseModel):
    """Parameters shared by construct and verify"""

    m: int = Field(..., ge=1, description="d = 2^m")
    k: int = Field(..., ge=1, description="q = 2^(km)")
    modulus: Optional[int] = Field(None, description="Irreducible degree-2km modulus override")
    out: str = Field(default_factory=lambda: settings.OUTPUT_DIR)
    format: str = Field(default_factory=lambda: settings.OUTPUT_FORMAT)
    jobs: int = Field(default_factory=lambda: settings.JOBS, ge=1)
    targets: List[str] = Field(default_factory=lambda: ["all"])
    arc_file: Optional[str] = None

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        v = v.lower()
        if v not in ("json", "csv"):
            raise ValueError("format must be json or csv")
        return v

    @field_validator("targets")
    @classmethod
    def validate_targets(cls, v: List[str]) -> List[str]:
        if not v or "all" in v:
            return list(VERIFY_TARGETS)
        unknown = [t for t in v if t not in VERIFY_TARGETS]
        if unknown:
            raise ValueError(f"Unknown targets: {', '.join(unknown)}")
        return [t for t in VERIFY_TARGETS if t in v]

    @model_validator(mode="after")
    def check_field_cap(self) -> "RunConfig":
        bits = 2 * self.k * self.m
        if bits > settings.MAX_FIELD_BITS:
            raise ValueError(f"2km = {bits} exceeds the cap {settings.MAX_FIELD_BITS}")
        return self

    @property
    def label(self) -> str:
        return f"m{self.m}_k{self.k}"
