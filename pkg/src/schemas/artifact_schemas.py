"""
Artifact DTOs with Pydantic validation.
One model per file format written under the output directory.
"""

from pydantic import BaseModel, Field, field_validator, model_validator
from typing import List, Optional


def _check_triple(values: List[int]) -> List[int]:
    if len(values) != 3:
        raise ValueError(f"Expected a triple, got {len(values)} entries")
    if any(v < 0 for v in values):
        raise ValueError("Field elements are nonnegative bitmasks")
    if not any(values):
        raise ValueError("The zero triple is not a projective point")
    return values


class FieldDescription(BaseModel):
    """GF(r) as used for one (m, k)"""

    e: int = Field(..., ge=1, description="Degree of GF(r) over GF(2)")
    modulus: int = Field(..., description="Irreducible modulus bitmask")
    alpha: int = Field(..., description="Primitive element bitmask")

    @model_validator(mode="after")
    def check_degree(self) -> "FieldDescription":
        if self.modulus.bit_length() - 1 != self.e:
            raise ValueError(f"Modulus {bin(self.modulus)} does not have degree {self.e}")
        if not 0 < self.alpha < (1 << self.e):
            raise ValueError("alpha is not a nonzero element of GF(2^e)")
        return self


class FieldFile(BaseModel):
    m: int
    k: int
    q: int
    d: int
    n: int
    N: int
    r: int
    field: FieldDescription
    beta: int


class ArcFile(BaseModel):
    """Point set of a (claimed) maximal arc, points in canonical order"""

    q: int = Field(..., ge=2, description="Order of the plane")
    d: int = Field(..., ge=1, description="Claimed degree")
    nucleus: Optional[List[int]] = Field(None, description="Nucleus triple, if any")
    points: List[List[int]] = Field(..., description="Normalized point triples")

    @field_validator("nucleus")
    @classmethod
    def validate_nucleus(cls, v: Optional[List[int]]) -> Optional[List[int]]:
        return v if v is None else _check_triple(v)

    @field_validator("points")
    @classmethod
    def validate_points(cls, v: List[List[int]]) -> List[List[int]]:
        for triple in v:
            _check_triple(triple)
        return v


class PartitionFile(BaseModel):
    q: int
    d: int
    nucleus: List[int]
    cosets: List[List[int]] = Field(..., description="The additive subgroups H_i, sorted")
    arcs: List[ArcFile]


class CodeFile(BaseModel):
    """Generator matrix over GF(q); entries are GF(r) bitmasks of GF(q) elements"""

    name: str
    q: int = Field(..., ge=2)
    length: int = Field(..., ge=1)
    gen: List[List[int]]

    @model_validator(mode="after")
    def check_shape(self) -> "CodeFile":
        if not self.gen:
            raise ValueError("Generator matrix has no rows")
        if any(len(row) != self.length for row in self.gen):
            raise ValueError(f"Every generator row must have length {self.length}")
        return self


class DesignFile(BaseModel):
    name: str
    t: int
    v: int
    k: Optional[int]
    lam: Optional[int] = Field(None, alias="lambda")
    blocks: List[List[int]]

    model_config = {"populate_by_name": True}


class GroupFile(BaseModel):
    """Cyclic group acting on the base arc"""

    order: int
    cyclic: bool
    generator: Optional[List[int]] = Field(None, description="Row-major 3x3 matrix")
    generator_order: Optional[int] = None
    G1: List[List[int]]
    G2: List[List[int]]
