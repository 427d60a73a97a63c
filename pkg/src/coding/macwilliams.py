"""
MacWilliams transform with exact integer Krawtchouk polynomials, and the
weight enumerator of a projective two-weight code from its power moments.
"""

from math import comb
from typing import Dict, List, Optional
import logging

from src.coding.linear_code import WeightDistribution
from src.core.exceptions import CodeConstructionError

logger = logging.getLogger(__name__)


def krawtchouk(j: int, i: int, length: int, q: int) -> int:
    """K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i, s) C(length-i, j-s)"""
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(length - i, j - s)
        for s in range(j + 1)
    )


def krawtchouk_row(i: int, length: int, q: int, upto: int) -> List[int]:
    """K_0(i), ..., K_upto(i) by the three-term recurrence in j"""
    values = [1]
    if upto >= 1:
        values.append((q - 1) * length - q * i)
    for j in range(1, upto):
        numerator = ((length - j) * (q - 1) + j - q * i) * values[j] - (q - 1) * (length - j + 1) * values[j - 1]
        values.append(numerator // (j + 1))
    return values[:upto + 1]


def macwilliams_transform(
    distribution: WeightDistribution,
    length: int,
    dimension: int,
    q: int,
    upto: Optional[int] = None,
) -> WeightDistribution:
    """Dual weight distribution: q^dim A'_j = sum_i A_i K_j(i)

    Args:
        upto: Only compute A'_0 .. A'_upto (default: all weights)

    Raises:
        CodeConstructionError: If a coefficient is not a nonnegative integer,
            which means the input is not the distribution of such a code
    """
    upto = length if upto is None else min(upto, length)
    size = q ** dimension
    if distribution.total != size:
        raise CodeConstructionError(
            f"Distribution sums to {distribution.total}, expected q^dim = {size}",
            detail=distribution.counts,
        )

    sums: List[int] = [0] * (upto + 1)
    for i, a in distribution.counts.items():
        row = krawtchouk_row(i, length, q, upto)
        for j in range(upto + 1):
            sums[j] += a * row[j]

    counts: Dict[int, int] = {}
    for j, total in enumerate(sums):
        value, remainder = divmod(total, size)
        if remainder or value < 0:
            raise CodeConstructionError(
                f"Dual coefficient at weight {j} is {total}/{size}",
                detail={"weight": j, "numerator": total, "denominator": size},
            )
        counts[j] = value

    logger.debug(
        "MacWilliams transform computed",
        extra={"length": length, "dimension": dimension, "q": q, "upto": upto}
    )
    return WeightDistribution(counts=counts, length=length)


def pless_two_weight_enumerator(length: int, dimension: int, q: int, w1: int, w2: int) -> WeightDistribution:
    """Enumerator of a projective code whose nonzero weights are w1 < w2

    Solves the codeword count and the first power moment, then checks the
    second moment (which uses A'_1 = A'_2 = 0).

    Raises:
        CodeConstructionError: If the moments have no nonnegative integer solution
    """
    if not 0 < w1 < w2:
        raise CodeConstructionError(f"Need 0 < w1 < w2, got {w1}, {w2}")
    nonzero = q ** dimension - 1
    first = length * (q - 1) * q ** (dimension - 1)
    second = q ** (dimension - 2) * (q - 1) * length * ((q - 1) * length + 1) if dimension >= 2 else None

    a2, r2 = divmod(first - w1 * nonzero, w2 - w1)
    a1 = nonzero - a2
    if r2 or a1 < 0 or a2 < 0:
        raise CodeConstructionError(
            "First power moment has no integral solution",
            detail={"w1": w1, "w2": w2, "moment": first},
        )
    if second is not None and w1 * w1 * a1 + w2 * w2 * a2 != second:
        raise CodeConstructionError(
            "Second power moment is inconsistent with a projective two-weight code",
            detail={"w1": w1, "w2": w2, "moment": second},
        )
    return WeightDistribution(counts={0: 1, w1: a1, w2: a2}, length=length)
