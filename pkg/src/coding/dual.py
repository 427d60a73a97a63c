"""
Small-weight words of the dual code found from the generator columns.

A dual word of weight w is a linear dependency among w columns. For
dimension 3 the columns are points of PG(2,q): weight 2 means two equal
points and weight 3 means three collinear points.
"""

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple
import logging

import numpy as np

from src.coding.linear_code import LinearCode, kernel_vector, normalize_columns
from src.core.config import settings
from src.core.exceptions import CodeConstructionError, SizeCapError
from src.core.metrics import track_enumeration
from src.fields.binary_field import ELEMENT_DTYPE

logger = logging.getLogger(__name__)


@dataclass
class DualDistance:
    """
    Result of the bounded dual-distance search.

    Attributes:
        value: The dual distance, or None when it exceeds limit
        limit: Largest weight searched
        positions: Columns of the first dependency found
        witness: The dual codeword on those positions (full length)
    """

    value: Optional[int]
    limit: int
    positions: Optional[Tuple[int, ...]] = None
    witness: Optional[List[int]] = None

    def describe(self) -> str:
        return str(self.value) if self.value is not None else f">={self.limit + 1}"


def _witness(code: LinearCode, positions: Tuple[int, ...]) -> List[int]:
    coefficients = kernel_vector(code.field, code.gen[:, list(positions)])
    word = np.zeros(code.length, dtype=ELEMENT_DTYPE)
    word[list(positions)] = coefficients
    return [int(v) for v in word]


def _proportional_pair(code: LinearCode) -> Optional[Tuple[int, int]]:
    """Lexicographically first (i, j) with column j a multiple of column i"""
    normalized = normalize_columns(code.field, code.columns)
    _, inverse, counts = np.unique(normalized, axis=0, return_inverse=True, return_counts=True)
    inverse = np.asarray(inverse).ravel()
    repeated = np.flatnonzero(counts[inverse] > 1)
    if len(repeated) == 0:
        return None
    i = int(repeated[0])
    j = int(np.flatnonzero(inverse == inverse[i])[1])
    return i, j


def _column_cross(code: LinearCode, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    mul = code.field.mul_array
    return np.stack(
        [
            mul(u[..., 1], v[..., 2]) ^ mul(u[..., 2], v[..., 1]),
            mul(u[..., 2], v[..., 0]) ^ mul(u[..., 0], v[..., 2]),
            mul(u[..., 0], v[..., 1]) ^ mul(u[..., 1], v[..., 0]),
        ],
        axis=-1,
    )


def _column_dot(code: LinearCode, lines: np.ndarray, columns: np.ndarray) -> np.ndarray:
    products = code.field.mul_array(lines[:, None, :], columns[None, :, :])
    return products[..., 0] ^ products[..., 1] ^ products[..., 2]


def _check_triple_cap(length: int) -> None:
    triples = comb(length, 3)
    if triples > settings.DEPENDENCY_SEARCH_CAP:
        raise SizeCapError("column triples", triples, settings.DEPENDENCY_SEARCH_CAP)


def dependent_triples(code: LinearCode, first_only: bool = False) -> List[Tuple[int, int, int]]:
    """All i < j < l whose columns are linearly dependent (dimension 3)

    Columns are assumed pairwise independent; the triples are then exactly
    the collinear triples of the column points.
    """
    if code.dimension != 3:
        raise CodeConstructionError("Triple search needs a dimension-3 code", detail=code.dimension)
    _check_triple_cap(code.length)

    cols = code.columns
    length = code.length
    found: List[Tuple[int, int, int]] = []
    positions = np.arange(length)
    for i in range(length - 2):
        lines = _column_cross(code, cols[i][None, :], cols[i + 1:])
        zero = _column_dot(code, lines, cols) == 0
        js = positions[i + 1:, None]
        zero &= positions[None, :] > js
        hits = np.argwhere(zero)
        for jj, l in hits:
            found.append((i, i + 1 + int(jj), int(l)))
            if first_only:
                return found
    track_enumeration("column_triples", comb(length, 3))
    return found


def dual_distance_upto(code: LinearCode, limit: Optional[int] = None) -> DualDistance:
    """Smallest w <= limit such that some w generator columns are dependent

    Weights 1 and 2 are found for any dimension; weight 3 needs dimension
    at most 3. Any dimension + 1 columns are dependent.
    """
    limit = limit or settings.DUAL_DISTANCE_LIMIT
    if limit > settings.DUAL_DISTANCE_LIMIT:
        raise SizeCapError("dual distance limit", limit, settings.DUAL_DISTANCE_LIMIT)
    k = code.dimension

    def found(w: int, positions: Tuple[int, ...]) -> DualDistance:
        logger.debug(
            "Dual distance found",
            extra={"code": code.name, "dual_distance": w, "positions": list(positions)}
        )
        return DualDistance(value=w, limit=limit, positions=positions, witness=_witness(code, positions))

    zero_columns = np.flatnonzero(~code.columns.any(axis=1))
    if len(zero_columns):
        return found(1, (int(zero_columns[0]),))
    if limit < 2:
        return DualDistance(value=None, limit=limit)

    pair = _proportional_pair(code)
    if pair is not None:
        return found(2, pair)

    for w in range(3, limit + 1):
        if w > code.length:
            break
        if w > k:
            return found(w, tuple(range(w)))
        if w == 3 and k == 3:
            triples = dependent_triples(code, first_only=True)
            if triples:
                return found(3, triples[0])
            continue
        raise CodeConstructionError(
            f"Dependency search of size {w} is not supported in dimension {k}",
            detail={"dimension": k, "weight": w},
        )
    return DualDistance(value=None, limit=limit)


def is_projective(code: LinearCode) -> bool:
    """No zero column and no two proportional columns"""
    if np.any(~code.columns.any(axis=1)):
        return False
    return _proportional_pair(code) is None


def count_weight3_dual_words(code: LinearCode) -> int:
    """A_3 of the dual of a projective dimension-3 code: (q-1) per collinear triple"""
    if not is_projective(code):
        raise CodeConstructionError("Weight-3 dual count assumes a projective code")
    return (code.q - 1) * len(dependent_triples(code))
