"""
Centralized configuration using Pydantic Settings.
Loads from environment variables (prefix MAXARC_) with validation.
"""

from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from typing import Optional


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_prefix="MAXARC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Application
    APP_NAME: str = "Denniston Arc Toolkit"
    APP_VERSION: str = "1.0.0"

    # Desk-scale caps
    MAX_FIELD_BITS: int = Field(
        default=24,
        description="Hard cap on 2km, the degree of GF(r) over GF(2)"
    )
    IRREDUCIBILITY_MAX_DEGREE: int = Field(
        default=24,
        description="Largest degree accepted by the exhaustive irreducibility test"
    )
    WEIGHT_ENUMERATION_CAP: int = Field(
        default=2 ** 28,
        description="Maximum number of codewords (q^dimension) enumerated exhaustively"
    )
    CODEWORD_WORK_CAP: int = Field(
        default=2 ** 31,
        description="Maximum codeword coordinates (q^dimension * length) touched by one enumeration"
    )
    DEPENDENCY_SEARCH_CAP: int = Field(
        default=2 ** 26,
        description="Maximum column triples examined by the dual-distance search"
    )
    DUAL_DISTANCE_LIMIT: int = Field(
        default=4,
        description="Dual distances are searched up to this weight"
    )
    DESIGN_MAX_POINTS: int = Field(
        default=64,
        description="Largest point count v for exhaustive t-subset counting"
    )
    GROUP_CLOSURE_CAP: int = Field(
        default=2 ** 20,
        description="Maximum group order produced by a closure computation"
    )
    INCIDENCE_CAP: int = Field(
        default=2 ** 27,
        description="Maximum number of (point, line) incidences scanned in one census"
    )
    Z_EXHAUSTIVE_MAX_FIELD: int = Field(
        default=4096,
        description="Solution counts Z(a,b) are checked for every a when r is at most this"
    )
    Z_SAMPLE_SIZE: int = Field(
        default=256,
        description="Number of a values (ascending bitmask) checked when r is larger"
    )
    CLOSURE_CHECK_MAX_PAIRS: int = Field(
        default=2 ** 22,
        description="Subfield closure is checked on all pairs up to this many"
    )
    MACWILLIAMS_FULL_MAX_LENGTH: int = Field(
        default=512,
        description="Longest code whose full MacWilliams transform is checked as an involution"
    )
    PERTURBATION_MAX_DELETIONS: int = Field(
        default=64,
        description="Arcs up to this size have every single-point deletion checked"
    )
    INCIDENCE_MATRIX_MAX_ORDER: int = Field(
        default=16,
        description="Planes up to this order get the full point-line incidence matrix check"
    )
    CONIC_CHECK_MAX_ORDER: int = Field(
        default=256,
        description="Largest q for which every conic of the pencil is checked (orbits, lines through the nucleus)"
    )
    COLLINEATION_CHECK_POINTS: int = Field(
        default=512,
        description="Points and lines (in canonical order) used by the incidence preservation check"
    )

    # Chunking for vectorized scans
    INCIDENCE_CHUNK_SIZE: int = Field(
        default=2 ** 21,
        description="Incidences materialized per numpy chunk"
    )
    TABLE_CHUNK_ROWS: int = Field(
        default=256,
        description="Giant-step rows per chunk when building exp/log tables"
    )
    CODEWORD_CHUNK_ELEMENTS: int = Field(
        default=2 ** 22,
        description="Codeword coordinates materialized per numpy chunk"
    )

    # Run defaults
    OUTPUT_DIR: str = "output"
    OUTPUT_FORMAT: str = Field(default="json", description="json or csv")
    JOBS: int = Field(default=1, description="Worker count for joblib")

    # Monitoring & Logging
    LOG_LEVEL: str = "INFO"
    LOG_JSON: bool = False
    METRICS_ENABLED: bool = True
    METRICS_FILE: Optional[str] = None

    # Metric Histogram Buckets (tuples for performance)
    METRIC_STAGE_DURATION_BUCKETS: tuple = (0.001, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 60.0, 300.0)


# Global settings instance - initialized once
settings = Settings()
