"""2-designs from codewords and from maximal arcs"""

from .design import (
    Design,
    DesignCheck,
    DesignParameters,
    DesignSummary,
    complement_blocks,
    design_parameters,
    remove_block,
    verify_design,
)
from .supports import SupportExtraction, complementary_steiner, dual_weight3_design, supports_of_weight

__all__ = [
    "Design",
    "DesignCheck",
    "DesignParameters",
    "DesignSummary",
    "complement_blocks",
    "design_parameters",
    "remove_block",
    "verify_design",
    "SupportExtraction",
    "complementary_steiner",
    "dual_weight3_design",
    "supports_of_weight",
]
