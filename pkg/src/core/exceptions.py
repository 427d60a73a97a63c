"""
Exception hierarchy for construction and verification.

Verification outcomes are never raised: failed checks are reported as
certificate content. These exceptions signal bad input or exceeded caps.
"""

from typing import Any, Optional, Tuple


class MaximalArcError(Exception):
    """Base class for all toolkit errors"""


class FieldConstructionError(MaximalArcError, ValueError):
    """Field or tower parameters are not admissible"""


class ReducibleModulusError(FieldConstructionError):
    """A modulus override is not irreducible

    Attributes:
        modulus: The rejected polynomial (bitmask)
        factor: A nontrivial divisor found by trial division
    """

    def __init__(self, modulus: int, factor: Optional[int], reason: str = "reducible"):
        self.modulus = modulus
        self.factor = factor
        detail = f" (factor {bin(factor)})" if factor is not None else ""
        super().__init__(f"Modulus {bin(modulus)} rejected: {reason}{detail}")


class FieldDomainError(MaximalArcError, ValueError):
    """An operation was called outside its domain (inv(0), a = 0, bad index)"""


class SizeCapError(MaximalArcError):
    """A desk-scale cap from settings was exceeded"""

    def __init__(self, what: str, value: int, cap: int):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} = {value} exceeds cap {cap}")


class InvalidSubgroupError(MaximalArcError, ValueError):
    """A set claimed to be an additive subgroup is not one

    Attributes:
        pair: Two elements whose sum falls outside the set (or None if the
            failure is a missing zero or a wrong size)
    """

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        self.pair = pair
        super().__init__(message)


class CodeConstructionError(MaximalArcError, ValueError):
    """A code operation got input it cannot handle"""

    def __init__(self, message: str, detail: Any = None):
        self.detail = detail
        super().__init__(message)
