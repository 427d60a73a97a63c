"""Certificates: closed forms checked against independent computation"""

from .context import RunContext
from .base_verifier import BaseVerifier
from .field_verifier import FieldVerifier
from .arc_verifier import ArcVerifier, PlaneVerifier
from .partition_verifier import PartitionVerifier
from .group_verifier import GroupVerifier
from .code_verifier import CodeVerifier
from .design_verifier import DesignVerifier
from .verification_engine import VerificationEngine

__all__ = [
    "RunContext",
    "BaseVerifier",
    "FieldVerifier",
    "ArcVerifier",
    "PlaneVerifier",
    "PartitionVerifier",
    "GroupVerifier",
    "CodeVerifier",
    "DesignVerifier",
    "VerificationEngine",
]
