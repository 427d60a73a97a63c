"""
The tower GF(2) < GF(d) < GF(q) < GF(r), r = q^2, q = 2^{km}, d = 2^m.

All elements share the polynomial-basis encoding of GF(r); GF(q) and GF(d)
are the subfields {x : x^q = x} and {x : x^d = x} inside it.
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Dict, Optional
import logging

import numpy as np

from src.core.config import settings
from src.core.exceptions import FieldConstructionError, FieldDomainError, SizeCapError
from src.core.metrics import track_enumeration
from src.fields.binary_field import BinaryField, FieldElement, ELEMENT_DTYPE, field_make

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TowerParameters:
    """The integer constants q, d, n, N, r of a tower"""

    m: int
    k: int
    q: int
    d: int
    n: int
    N: int
    r: int

    @classmethod
    def from_mk(cls, m: int, k: int) -> "TowerParameters":
        q = 2 ** (k * m)
        d = 2 ** m
        return cls(m=m, k=k, q=q, d=d, n=(q + 1) * (d - 1), N=(q - 1) // (d - 1), r=q * q)

    @property
    def s(self) -> int:
        return self.q // self.d

    def as_dict(self) -> Dict[str, int]:
        return {
            "m": self.m, "k": self.k, "q": self.q, "d": self.d,
            "n": self.n, "N": self.N, "r": self.r, "s": self.s,
        }


class FieldTower:
    """
    GF(r) with primitive element alpha and beta = alpha^N of order n.

    Attributes:
        params: The integer constants of the tower
        field: Arithmetic in GF(r)
        alpha: Smallest primitive element of GF(r)
        beta: alpha^N
    """

    def __init__(self, m: int, k: int, modulus_override: Optional[int] = None):
        if m < 1 or k < 1:
            raise FieldConstructionError(f"m and k must be positive, got m={m}, k={k}")
        bits = 2 * k * m
        if bits > settings.MAX_FIELD_BITS:
            raise SizeCapError("2km", bits, settings.MAX_FIELD_BITS)

        self.params = TowerParameters.from_mk(m, k)
        self.m, self.k = m, k
        self.q, self.d, self.n, self.N, self.r = (
            self.params.q, self.params.d, self.params.n, self.params.N, self.params.r
        )
        self.field = BinaryField(field_make(bits, modulus_override))
        self.alpha = self.field.primitive_element
        self.beta = self.field.pow(self.alpha, self.N)

        logger.info(
            "FieldTower initialized",
            extra={**self.params.as_dict(), "modulus": self.field.modulus, "alpha": self.alpha}
        )

    # ------------------------------------------------------------------
    # subfields
    # ------------------------------------------------------------------

    def subfield_elements(self, size: int) -> np.ndarray:
        """Sorted elements of the subfield of the given size inside GF(r)"""
        if (self.r - 1) % (size - 1) != 0:
            raise FieldDomainError(f"GF(r) has no subfield of size {size}")
        step = (self.r - 1) // (size - 1)
        nonzero = self.field.exp_table[np.arange(size - 1, dtype=ELEMENT_DTYPE) * step]
        return np.sort(np.concatenate([np.zeros(1, dtype=ELEMENT_DTYPE), nonzero]))

    @cached_property
    def gf_q(self) -> np.ndarray:
        return self.subfield_elements(self.q)

    @cached_property
    def gf_d(self) -> np.ndarray:
        return self.subfield_elements(self.d)

    @cached_property
    def _q_rank_by_log(self) -> np.ndarray:
        """Rank in sorted GF(q) of alpha^{(q+1)j}, indexed by j"""
        ranks = np.empty(self.q - 1, dtype=ELEMENT_DTYPE)
        nonzero = self.gf_q[1:]
        ranks[self.field.log_table[nonzero] // (self.q + 1)] = np.arange(1, self.q, dtype=ELEMENT_DTYPE)
        return ranks

    def q_index_array(self, values) -> np.ndarray:
        """Position of each GF(q) element in the sorted list gf_q"""
        values = np.asarray(values, dtype=ELEMENT_DTYPE)
        idx = self._q_rank_by_log[self.field.log_table[values] // (self.q + 1)]
        return np.where(values == 0, 0, idx)

    def in_gf_q(self, x: FieldElement) -> bool:
        return self.field.pow(x, self.q) == x

    def in_gf_d(self, x: FieldElement) -> bool:
        return self.field.pow(x, self.d) == x

    def count_fixed_points(self, size: int) -> int:
        """|{x in GF(r) : x^size = x}| by exhaustive evaluation"""
        elements = self.field.elements()
        track_enumeration("field_elements", self.r)
        return int(np.count_nonzero(self.field.pow_array(elements, size) == elements))

    # ------------------------------------------------------------------
    # trace, classes, solution counts
    # ------------------------------------------------------------------

    def trace(self, x: FieldElement) -> FieldElement:
        """Tr_{r/q}(x) = x + x^q"""
        return x ^ self.field.pow(x, self.q)

    def trace_array(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=ELEMENT_DTYPE)
        return values ^ self.field.pow_array(values, self.q)

    def beta_powers(self, count: int) -> np.ndarray:
        """beta^0, ..., beta^{count-1}"""
        exponents = (np.arange(count, dtype=ELEMENT_DTYPE) * self.N) % (self.r - 1)
        return self.field.exp_table[exponents]

    def cyclotomic_class(self, i: int) -> np.ndarray:
        """C_i = alpha^i <alpha^N>, sorted, of size n"""
        if not 0 <= i < self.N:
            raise FieldDomainError(f"Class index {i} outside [0, {self.N})")
        exponents = (i + np.arange(self.n, dtype=ELEMENT_DTYPE) * self.N) % (self.r - 1)
        return np.sort(self.field.exp_table[exponents])

    @cached_property
    def _x_to_N(self) -> np.ndarray:
        return self.field.pow_array(self.field.elements(), self.N)

    def z_fiber_counts(self, a: FieldElement) -> Dict[int, int]:
        """Z(a, b) for every b in GF(q), as {b: count} (zero counts included)"""
        if a == 0:
            raise FieldDomainError("Z(a, b) needs a != 0")
        values = self.trace_array(self.field.mul_array(a, self._x_to_N))
        track_enumeration("field_elements", self.r)
        found, counts = np.unique(values, return_counts=True)
        fibers = {int(b): 0 for b in self.gf_q}
        fibers.update({int(b): int(c) for b, c in zip(found, counts)})
        return fibers

    def count_z(self, a: FieldElement, b: FieldElement) -> int:
        """|{x in GF(r) : Tr(a x^N) = b}| by exhaustive loop over GF(r)"""
        if a == 0:
            raise FieldDomainError("Z(a, b) needs a != 0")
        if not self.in_gf_q(b):
            raise FieldDomainError(f"{b} is not in GF(q)")
        values = self.trace_array(self.field.mul_array(a, self._x_to_N))
        track_enumeration("field_elements", self.r)
        return int(np.count_nonzero(values == b))

    # ------------------------------------------------------------------
    # identities
    # ------------------------------------------------------------------

    def ord_n_of_q(self) -> int:
        """Multiplicative order of q modulo n"""
        if self.n == 1:
            return 1
        order, value = 1, self.q % self.n
        while value != 1:
            value = (value * self.q) % self.n
            order += 1
        return order

    def gcd_q_plus_one_N(self) -> int:
        return gcd(self.q + 1, self.N)

    def to_description(self) -> Dict[str, int]:
        return {"e": self.field.degree, "modulus": self.field.modulus, "alpha": self.alpha}

    def __repr__(self) -> str:
        return f"FieldTower(m={self.m}, k={self.k}, modulus={bin(self.field.modulus)})"


def tower_make(m: int, k: int, modulus_override: Optional[int] = None) -> FieldTower:
    """Build the tower for (m, k); see FieldTower"""
    return FieldTower(m, k, modulus_override)


def trace_r_to_q(tower: FieldTower, x: FieldElement) -> FieldElement:
    return tower.trace(x)


def cyclotomic_class(tower: FieldTower, i: int) -> np.ndarray:
    return tower.cyclotomic_class(i)


def count_Z(tower: FieldTower, a: FieldElement, b: FieldElement) -> int:
    return tower.count_z(a, b)
