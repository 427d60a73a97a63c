"""
Trace codes of the tower: the irreducible cyclic code C of length n, the
short MDS code E of length q+1, and the augmented and extended codes.

c_a = (Tr(a beta^i))_{0 <= i < n} and e_a is its first q+1 coordinates.
"""

from dataclasses import dataclass
from typing import List
import logging

import numpy as np

from src.coding.linear_code import LinearCode, is_cyclic
from src.core.config import settings
from src.core.exceptions import CodeConstructionError, FieldDomainError, SizeCapError
from src.core.metrics import track_enumeration
from src.fields.binary_field import ELEMENT_DTYPE, FieldElement
from src.fields.tower import FieldTower

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodewordHandle:
    """(a, b) naming the codeword c_a + b*1 of the augmented code"""

    a: int
    b: int


@dataclass
class ConcatenationReport:
    """
    c_a = e_a || s_1 e_a || ... || s_{d-2} e_a with s_i = beta^((q+1)i).

    Attributes:
        checked: Number of values of a tested
        failures: Values of a whose codeword differs from the concatenation
        scalars: The scalars beta^((q+1)i), i < d-1
        scalars_are_gf_d_star: The scalars are exactly GF(d)*
    """

    checked: int
    failures: List[int]
    scalars: List[int]
    scalars_are_gf_d_star: bool

    @property
    def passed(self) -> bool:
        return not self.failures and self.scalars_are_gf_d_star


@dataclass
class ExtensionReport:
    checked: int
    trace_sums_vanish: bool
    length_is_odd: bool
    failures: List[CodewordHandle]

    @property
    def passed(self) -> bool:
        return self.trace_sums_vanish and not self.failures


def trace_codeword(tower: FieldTower, a: FieldElement, length: int) -> np.ndarray:
    """(Tr(a beta^0), ..., Tr(a beta^(length-1)))"""
    tower.field.check(a)
    if length not in (tower.n, tower.q + 1):
        raise FieldDomainError(f"Length must be n={tower.n} or q+1={tower.q + 1}, got {length}")
    return tower.trace_array(tower.field.mul_array(a, tower.beta_powers(length)))


def trace_codewords(tower: FieldTower, values, length: int) -> np.ndarray:
    """Rows c_a for an array of a, shape (len(values), length)"""
    values = np.asarray(values, dtype=ELEMENT_DTYPE)
    return tower.trace_array(tower.field.mul_array(values[:, None], tower.beta_powers(length)[None, :]))


def _trace_code(tower: FieldTower, length: int, name: str) -> LinearCode:
    gen = np.stack([trace_codeword(tower, 1, length), trace_codeword(tower, tower.alpha, length)])
    code = LinearCode(tower, gen, name=name)
    if code.rank() != 2:
        raise CodeConstructionError(f"{name}: basis codewords are dependent", detail=gen.tolist())
    return code


def build_irreducible_cyclic(tower: FieldTower) -> LinearCode:
    """C(q,2,n) with generator rows c_1, c_alpha; cyclicity is checked"""
    code = _trace_code(tower, tower.n, "C")
    if not is_cyclic(code):
        raise CodeConstructionError("C is not closed under the cyclic shift")
    logger.info("Irreducible cyclic code built", extra={"q": tower.q, "length": code.length})
    return code


def build_short_code(tower: FieldTower) -> LinearCode:
    """E(q,2,q+1) with generator rows e_1, e_alpha"""
    code = _trace_code(tower, tower.q + 1, "E")
    logger.info("Short code built", extra={"q": tower.q, "length": code.length})
    return code


def shift_witness(tower: FieldTower, a: FieldElement) -> bool:
    """Cyclic shift of c_(a beta) gives back c_a: coordinate i of c_(a beta) is Tr(a beta^(i+1))"""
    c_a = trace_codeword(tower, a, tower.n)
    c_ab = trace_codeword(tower, tower.field.mul(a, tower.beta), tower.n)
    return bool(np.array_equal(np.roll(c_a, -1), c_ab))


def _check_field_sweep(tower: FieldTower, length: int) -> None:
    work = tower.r * length
    if work > settings.CODEWORD_WORK_CAP:
        raise SizeCapError("codeword coordinates", work, settings.CODEWORD_WORK_CAP)


def check_concatenation(tower: FieldTower) -> ConcatenationReport:
    """Compare c_a with the scaled copies of e_a for every a in GF(r)"""
    _check_field_sweep(tower, tower.n)
    field = tower.field
    block = tower.q + 1
    scalars = tower.beta_powers((tower.d - 1) * block)[::block]
    scalars_ok = bool(np.array_equal(np.sort(scalars), tower.gf_d[1:]))

    chunk = max(1, settings.CODEWORD_CHUNK_ELEMENTS // tower.n)
    failures: List[int] = []
    elements = field.elements()
    for start in range(0, tower.r, chunk):
        a = elements[start:start + chunk]
        full = trace_codewords(tower, a, tower.n)
        short = full[:, :block]
        expected = field.mul_array(scalars[None, :, None], short[:, None, :]).reshape(len(a), -1)
        bad = np.flatnonzero(np.any(full != expected, axis=1))
        failures.extend(int(a[i]) for i in bad)
    track_enumeration("codewords", tower.r)

    return ConcatenationReport(
        checked=tower.r,
        failures=failures,
        scalars=[int(s) for s in scalars],
        scalars_are_gf_d_star=scalars_ok,
    )


def augment(code: LinearCode) -> LinearCode:
    """Append the all-one row

    Raises:
        CodeConstructionError: If the all-one vector is already a codeword
    """
    ones = np.ones(code.length, dtype=ELEMENT_DTYPE)
    if code.contains(ones):
        raise CodeConstructionError(f"All-one vector already lies in {code.name}")
    return LinearCode(code.tower, np.vstack([code.gen, ones[None, :]]), name=f"{code.name}_augmented")


def extend(code: LinearCode) -> LinearCode:
    """Append the parity coordinate (sum of all coordinates)"""
    parity = np.bitwise_xor.reduce(code.gen, axis=1)
    base = code.name.replace("_augmented", "")
    return LinearCode(code.tower, np.hstack([code.gen, parity[:, None]]), name=f"{base}_extended")


def extend_vector(vector) -> np.ndarray:
    vector = np.asarray(vector, dtype=ELEMENT_DTYPE)
    return np.concatenate([vector, [np.bitwise_xor.reduce(vector)]])


def handle_codeword(tower: FieldTower, handle: CodewordHandle) -> np.ndarray:
    """c_a + b*1 of the augmented code"""
    if not tower.in_gf_q(handle.b):
        raise FieldDomainError(f"b = {handle.b} is not in GF(q)")
    return trace_codeword(tower, handle.a, tower.n) ^ handle.b


def check_extension_coordinate(tower: FieldTower) -> ExtensionReport:
    """The parity coordinate of c_a + b*1 equals b for every (a, b)

    Sum over i of c_a is Tr(a * sum beta^i) = 0 and n is odd, so adding b to
    every coordinate contributes b once.
    """
    _check_field_sweep(tower, tower.n)
    chunk = max(1, settings.CODEWORD_CHUNK_ELEMENTS // tower.n)
    elements = tower.field.elements()
    sums = []
    for start in range(0, tower.r, chunk):
        rows = trace_codewords(tower, elements[start:start + chunk], tower.n)
        sums.append(np.bitwise_xor.reduce(rows, axis=1))
    sums = np.concatenate(sums)
    track_enumeration("codewords", tower.r)

    odd = tower.n % 2 == 1
    b = tower.gf_q
    parity = sums[:, None] ^ (b[None, :] if odd else 0)
    bad = np.argwhere(parity != b[None, :])
    failures = [CodewordHandle(a=int(elements[i]), b=int(b[j])) for i, j in bad[:16]]
    return ExtensionReport(
        checked=tower.r * tower.q,
        trace_sums_vanish=bool(np.all(sums == 0)),
        length_is_odd=odd,
        failures=failures,
    )


def exponent_zero_counts(tower: FieldTower, a: FieldElement) -> dict:
    """#{i < n : Tr(a beta^i) = b} for every b in GF(q)"""
    row = trace_codeword(tower, a, tower.n)
    found, counts = np.unique(row, return_counts=True)
    result = {int(b): 0 for b in tower.gf_q}
    result.update({int(b): int(c) for b, c in zip(found, counts)})
    return result
