"""
Certificate DTOs.
A certificate pairs a closed-form value with an independently computed one.
"""

import json

from pydantic import BaseModel, Field, computed_field
from typing import Any, Dict, List, Literal, Optional

CertificateStatus = Literal["pass", "fail", "skipped"]
CertificateRelation = Literal["eq", "subset"]


class Certificate(BaseModel):
    """One checked claim

    status is pass exactly when computed_value equals formula_value
    (relation "eq") or its values all lie in formula_value (relation
    "subset"); skipped means a desk-scale cap prevented the computation.
    """

    claim: str = Field(..., description="Dotted claim id, e.g. code.extended.weight_enumerator")
    status: CertificateStatus
    formula: str = Field(..., description="Closed form being checked")
    formula_value: Any = None
    computed_value: Any = None
    parameters: Dict[str, int] = Field(default_factory=dict)
    instantiated: str = Field("", description="The formula with the parameters substituted")
    witness: Optional[Any] = None
    relation: CertificateRelation = "eq"
    note: Optional[str] = None

    @computed_field
    @property
    def group(self) -> str:
        return self.claim.split(".", 1)[0]

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class CertificateBundle(BaseModel):
    m: int
    k: int
    modulus: int
    certificates: List[Certificate]

    @computed_field
    @property
    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.certificates:
            counts[c.status] += 1
        return counts

    @property
    def all_passed(self) -> bool:
        return all(c.status != "fail" for c in self.certificates)

    def table_rows(self) -> List[Dict[str, Any]]:
        return [
            {
                "claim": c.claim,
                "status": c.status,
                "formula": c.formula,
                "formula_value": _scalar(c.formula_value),
                "computed_value": _scalar(c.computed_value),
                "instantiated": c.instantiated,
            }
            for c in self.certificates
        ]


class SweepRow(BaseModel):
    m: int
    k: int
    q: int
    d: int
    n: int
    N: int
    modulus: int
    passed: int
    failed: int
    skipped: int
    status: Literal["pass", "fail", "error"]
    error: Optional[str] = None


def _scalar(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return "" if value is None else str(value)
