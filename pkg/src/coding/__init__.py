"""Trace codes, weight distributions, dual distances and the code/arc dictionary"""

from .linear_code import (
    CodeParameters,
    LinearCode,
    WeightDistribution,
    code_parameters,
    is_cyclic,
    weight_distribution,
)
from .trace_codes import (
    CodewordHandle,
    augment,
    build_irreducible_cyclic,
    build_short_code,
    check_concatenation,
    check_extension_coordinate,
    extend,
    trace_codeword,
)
from .dual import DualDistance, count_weight3_dual_words, dependent_triples, dual_distance_upto, is_projective
from .macwilliams import krawtchouk, macwilliams_transform, pless_two_weight_enumerator
from .arc_recovery import arc_from_code, arc_to_code, verify_weight_line_duality

__all__ = [
    "CodeParameters",
    "LinearCode",
    "WeightDistribution",
    "code_parameters",
    "is_cyclic",
    "weight_distribution",
    "CodewordHandle",
    "augment",
    "build_irreducible_cyclic",
    "build_short_code",
    "check_concatenation",
    "check_extension_coordinate",
    "extend",
    "trace_codeword",
    "DualDistance",
    "count_weight3_dual_words",
    "dependent_triples",
    "dual_distance_upto",
    "is_projective",
    "krawtchouk",
    "macwilliams_transform",
    "pless_two_weight_enumerator",
    "arc_from_code",
    "arc_to_code",
    "verify_weight_line_duality",
]
