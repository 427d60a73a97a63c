"""
Binary extension fields GF(2^e) in polynomial basis.

Elements are int bitmasks of polynomial coefficients over GF(2). Arrays of
elements are numpy int64 arrays; vectorized products go through exp/log
tables built from the smallest primitive element.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional
import logging

import numpy as np

from src.core.config import settings
from src.core.exceptions import (
    FieldConstructionError,
    FieldDomainError,
    ReducibleModulusError,
    SizeCapError,
)
from src.core.metrics import track_enumeration

logger = logging.getLogger(__name__)

# Bitmask of polynomial-basis coefficients, interpreted in a FieldSpec
FieldElement = int

ELEMENT_DTYPE = np.int64


def poly_degree(poly: int) -> int:
    """Degree of a GF(2) polynomial given as a bitmask (-1 for zero)"""
    return poly.bit_length() - 1


def poly_mod(a: int, modulus: int) -> int:
    """Remainder of a modulo modulus over GF(2)"""
    top = modulus.bit_length()
    while a.bit_length() >= top:
        a ^= modulus << (a.bit_length() - top)
    return a


def find_factor(poly: int) -> Optional[int]:
    """Smallest nontrivial divisor of poly over GF(2) by trial division

    Returns:
        The divisor bitmask, or None if poly is irreducible
    """
    degree = poly_degree(poly)
    for candidate in range(2, 1 << (degree // 2 + 1)):
        if poly_mod(poly, candidate) == 0:
            return candidate
    return None


def is_irreducible(poly: int) -> bool:
    return poly_degree(poly) >= 1 and find_factor(poly) is None


def factor_integer(n: int) -> List[int]:
    """Distinct prime factors of n (trial division), ascending"""
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^degree) defined by an irreducible modulus of that degree"""

    degree: int
    modulus: int

    @property
    def order(self) -> int:
        return 1 << self.degree


def canonical_modulus(e: int) -> int:
    """Smallest irreducible polynomial of degree e with nonzero constant term"""
    for candidate in range((1 << e) | 1, 1 << (e + 1), 2):
        if find_factor(candidate) is None:
            return candidate
    raise FieldConstructionError(f"No irreducible polynomial of degree {e}")


def field_make(e: int, modulus_override: Optional[int] = None) -> FieldSpec:
    """Build the spec of GF(2^e)

    Args:
        e: Extension degree, 1 <= e <= IRREDUCIBILITY_MAX_DEGREE
        modulus_override: Irreducible degree-e polynomial to use instead of
            the canonical one

    Returns:
        FieldSpec with the canonical or overridden modulus

    Raises:
        SizeCapError: If e exceeds the irreducibility cap
        FieldConstructionError: If e < 1
        ReducibleModulusError: If the override has the wrong degree or a factor
    """
    if e < 1:
        raise FieldConstructionError(f"Field degree must be positive, got {e}")
    if e > settings.IRREDUCIBILITY_MAX_DEGREE:
        raise SizeCapError("field degree", e, settings.IRREDUCIBILITY_MAX_DEGREE)

    if modulus_override is None:
        modulus = canonical_modulus(e)
    else:
        modulus = int(modulus_override)
        if poly_degree(modulus) != e:
            raise ReducibleModulusError(
                modulus, None, reason=f"degree {poly_degree(modulus)} != {e}"
            )
        factor = find_factor(modulus)
        if factor is not None:
            logger.warning(
                "Reducible modulus override rejected",
                extra={"modulus": modulus, "factor": factor, "degree": e}
            )
            raise ReducibleModulusError(modulus, factor)

    logger.debug(
        "Field spec built",
        extra={"degree": e, "modulus": modulus, "override": modulus_override is not None}
    )
    return FieldSpec(degree=e, modulus=modulus)


class BinaryField:
    """
    Arithmetic in GF(2^e).

    Scalar operations work on Python ints. Array operations (suffix _array)
    work on numpy arrays and need the exp/log tables, which are built lazily
    from the smallest primitive element.

    Attributes:
        spec: Field degree and modulus
        order: Number of elements 2^e
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.degree = spec.degree
        self.modulus = spec.modulus
        self.order = spec.order
        self.group_order = self.order - 1

    # ------------------------------------------------------------------
    # scalar arithmetic
    # ------------------------------------------------------------------

    def check(self, x: FieldElement) -> FieldElement:
        if not 0 <= x < self.order:
            raise FieldDomainError(f"{x} is not an element of GF(2^{self.degree})")
        return x

    @staticmethod
    def add(x: FieldElement, y: FieldElement) -> FieldElement:
        return x ^ y

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        """Shift-and-add product reduced modulo the modulus"""
        result = 0
        top = self.order
        while y:
            if y & 1:
                result ^= x
            y >>= 1
            x <<= 1
            if x & top:
                x ^= self.modulus
        return result

    def pow(self, x: FieldElement, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.pow(self.inv(x), -exponent)
        result = 1
        base = x
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def inv(self, x: FieldElement) -> FieldElement:
        if x == 0:
            raise FieldDomainError("0 has no multiplicative inverse")
        return self.pow(x, self.group_order - 1)

    def frobenius(self, x: FieldElement) -> FieldElement:
        return self.mul(x, x)

    def multiplicative_order(self, x: FieldElement) -> int:
        """Order of x in the multiplicative group"""
        if x == 0:
            raise FieldDomainError("0 has no multiplicative order")
        order = self.group_order
        for p in self.group_order_primes:
            while order % p == 0 and self.pow(x, order // p) == 1:
                order //= p
        return order

    def is_primitive(self, x: FieldElement) -> bool:
        if x == 0:
            return False
        return all(self.pow(x, self.group_order // p) != 1 for p in self.group_order_primes)

    @cached_property
    def group_order_primes(self) -> List[int]:
        return factor_integer(self.group_order)

    @cached_property
    def primitive_element(self) -> FieldElement:
        """Smallest bitmask generating the multiplicative group"""
        for candidate in range(1, self.order):
            if self.is_primitive(candidate):
                logger.debug(
                    "Primitive element found",
                    extra={"degree": self.degree, "alpha": candidate}
                )
                return candidate
        raise FieldConstructionError("Multiplicative group has no generator")

    # ------------------------------------------------------------------
    # tables and array arithmetic
    # ------------------------------------------------------------------

    def mul_bitserial_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Vectorized shift-and-add product, no tables needed"""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=ELEMENT_DTYPE), np.asarray(b, dtype=ELEMENT_DTYPE))
        a = a.copy()
        result = np.zeros(a.shape, dtype=ELEMENT_DTYPE)
        for bit in range(self.degree):
            result ^= np.where((b >> bit) & 1 == 1, a, 0)
            a <<= 1
            a ^= np.where(a & self.order != 0, self.modulus, 0)
        return result

    @cached_property
    def exp_table(self) -> np.ndarray:
        """exp_table[i] = alpha^i for 0 <= i < 2^e - 1"""
        alpha = self.primitive_element
        size = self.group_order
        baby_count = 1 << ((self.degree + 1) // 2)
        baby = np.empty(baby_count, dtype=ELEMENT_DTYPE)
        x = 1
        for i in range(baby_count):
            baby[i] = x
            x = self.mul(x, alpha)
        giant_step = x
        giant_count = -(-size // baby_count)
        giant = np.empty(giant_count, dtype=ELEMENT_DTYPE)
        y = 1
        for j in range(giant_count):
            giant[j] = y
            y = self.mul(y, giant_step)

        rows = []
        for start in range(0, giant_count, settings.TABLE_CHUNK_ROWS):
            block = giant[start:start + settings.TABLE_CHUNK_ROWS]
            rows.append(self.mul_bitserial_array(block[:, None], baby[None, :]).ravel())
        table = np.concatenate(rows)[:size]
        track_enumeration("field_elements", size)
        logger.debug(
            "Exp table built",
            extra={"degree": self.degree, "size": size}
        )
        return table

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[x] = i with alpha^i = x; log_table[0] is unused (0)"""
        table = np.zeros(self.order, dtype=ELEMENT_DTYPE)
        table[self.exp_table] = np.arange(self.group_order, dtype=ELEMENT_DTYPE)
        return table

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=ELEMENT_DTYPE)

    def exp(self, i: int) -> FieldElement:
        return int(self.exp_table[i % self.group_order])

    def log(self, x: FieldElement) -> int:
        if x == 0:
            raise FieldDomainError("log(0) is undefined")
        return int(self.log_table[x])

    def mul_array(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=ELEMENT_DTYPE)
        b = np.asarray(b, dtype=ELEMENT_DTYPE)
        logs = self.log_table[a] + self.log_table[b]
        out = self.exp_table[logs % self.group_order]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_array(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=ELEMENT_DTYPE)
        if np.any(a == 0):
            raise FieldDomainError("0 has no multiplicative inverse")
        return self.exp_table[(-self.log_table[a]) % self.group_order]

    def pow_array(self, a, exponent: int) -> np.ndarray:
        a = np.asarray(a, dtype=ELEMENT_DTYPE)
        if exponent == 0:
            return np.ones(a.shape, dtype=ELEMENT_DTYPE)
        out = self.exp_table[(self.log_table[a] * exponent) % self.group_order]
        return np.where(a == 0, 0, out)

    def __repr__(self) -> str:
        return f"BinaryField(degree={self.degree}, modulus={bin(self.modulus)})"
