"""Finite field arithmetic: GF(2^e) and the tower GF(d) < GF(q) < GF(r)"""

from .binary_field import (
    BinaryField,
    FieldElement,
    FieldSpec,
    field_make,
    find_factor,
    is_irreducible,
)
from .tower import (
    FieldTower,
    TowerParameters,
    count_Z,
    cyclotomic_class,
    tower_make,
    trace_r_to_q,
)

__all__ = [
    "BinaryField",
    "FieldElement",
    "FieldSpec",
    "field_make",
    "find_factor",
    "is_irreducible",
    "FieldTower",
    "TowerParameters",
    "count_Z",
    "cyclotomic_class",
    "tower_make",
    "trace_r_to_q",
]
