"""
Linear codes over GF(q) realized inside a field tower.

Codewords are enumerated message by message in lexicographic order of the
coefficient indices (positions in sorted GF(q)); the last coefficient is
vectorized, so each step produces a block of q codewords.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import logging

import numpy as np
from joblib import Parallel, delayed

from src.core.config import settings
from src.core.exceptions import CodeConstructionError, SizeCapError
from src.core.metrics import track_enumeration
from src.fields.binary_field import ELEMENT_DTYPE, BinaryField
from src.fields.tower import FieldTower

logger = logging.getLogger(__name__)


@dataclass
class WeightDistribution:
    """
    Exact weight counts of a code.

    Attributes:
        counts: weight -> number of codewords (zero counts omitted)
        length: Code length
    """

    counts: Dict[int, int]
    length: int

    def __post_init__(self):
        self.counts = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> List[int]:
        return [w for w in self.counts if w > 0]

    @property
    def minimum_distance(self) -> Optional[int]:
        weights = self.nonzero_weights
        return weights[0] if weights else None

    def count(self, weight: int) -> int:
        return self.counts.get(weight, 0)

    def as_polynomial(self) -> str:
        """Human form, e.g. 1 + 45z^4 + 18z^6"""
        terms = []
        for w, c in self.counts.items():
            if w == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}z^{w}")
        return " + ".join(terms)

    def to_rows(self) -> List[Dict[str, int]]:
        return [{"weight": w, "count": c} for w, c in self.counts.items()]


@dataclass(frozen=True)
class CodeParameters:
    length: int
    dimension: int
    minimum_distance: Optional[int]

    def as_tuple(self) -> Tuple[int, int, Optional[int]]:
        return (self.length, self.dimension, self.minimum_distance)


def row_reduce(field: BinaryField, matrix) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over the field and its pivot columns"""
    a = np.array(matrix, dtype=ELEMENT_DTYPE, copy=True).reshape(len(matrix), -1)
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if len(nonzero) == 0:
            continue
        p = r + int(nonzero[0])
        a[[r, p]] = a[[p, r]]
        a[r] = field.mul_array(a[r], field.inv(int(a[r, c])))
        factors = a[:, c].copy()
        factors[r] = 0
        a ^= field.mul_array(factors[:, None], a[r][None, :])
        pivots.append(c)
        r += 1
    return a, pivots


def matrix_rank(field: BinaryField, matrix) -> int:
    if len(matrix) == 0:
        return 0
    return len(row_reduce(field, matrix)[1])


def kernel_vector(field: BinaryField, matrix) -> Optional[np.ndarray]:
    """A nonzero x with matrix x = 0, or None if the columns are independent"""
    a = np.asarray(matrix, dtype=ELEMENT_DTYPE)
    reduced, pivots = row_reduce(field, a)
    free = [c for c in range(a.shape[1]) if c not in pivots]
    if not free:
        return None
    f = free[0]
    x = np.zeros(a.shape[1], dtype=ELEMENT_DTYPE)
    x[f] = 1
    for row, c in enumerate(pivots):
        x[c] = reduced[row, f]
    return x


def normalize_columns(field: BinaryField, columns: np.ndarray) -> np.ndarray:
    """Scale each row vector so its first nonzero entry is 1 (zero rows stay zero)"""
    c = np.asarray(columns, dtype=ELEMENT_DTYPE)
    has_lead = c != 0
    first = np.argmax(has_lead, axis=1)
    lead = c[np.arange(len(c)), first]
    safe = np.where(lead == 0, 1, lead)
    return field.mul_array(c, field.inv_array(safe)[:, None])


class LinearCode:
    """
    A linear code given by a generator matrix over GF(q).

    Attributes:
        tower: Tower whose subfield GF(q) is the alphabet
        gen: Generator matrix, rows are basis codewords
        name: Label used in logs and artifacts
    """

    def __init__(self, tower: FieldTower, gen, name: str = "code"):
        gen = np.asarray(gen, dtype=ELEMENT_DTYPE)
        if gen.ndim != 2 or gen.shape[0] == 0:
            raise CodeConstructionError(f"Generator of {name} must be a nonempty matrix", detail=gen.shape)
        if np.any(tower.field.pow_array(gen, tower.q) != gen):
            raise CodeConstructionError(f"Generator of {name} has entries outside GF({tower.q})")
        self.tower = tower
        self.field = tower.field
        self.q = tower.q
        self.gen = gen
        self.name = name

    @property
    def length(self) -> int:
        return int(self.gen.shape[1])

    @property
    def dimension(self) -> int:
        return int(self.gen.shape[0])

    @property
    def columns(self) -> np.ndarray:
        return self.gen.T

    def rank(self) -> int:
        return matrix_rank(self.field, self.gen)

    def contains(self, vector) -> bool:
        stacked = np.vstack([self.gen, np.asarray(vector, dtype=ELEMENT_DTYPE)[None, :]])
        return matrix_rank(self.field, stacked) == self.rank()

    def codeword(self, message: Sequence[int]) -> np.ndarray:
        """Sum of message[i] * row i (message entries are GF(q) elements)"""
        message = np.asarray(message, dtype=ELEMENT_DTYPE)
        return np.bitwise_xor.reduce(self.field.mul_array(message[:, None], self.gen), axis=0)

    @cached_property
    def scaled_rows(self) -> np.ndarray:
        """scaled_rows[j, i] = gf_q[i] * gen[j], shape (dimension, q, length)"""
        e = self.tower.gf_q
        return self.field.mul_array(e[None, :, None], self.gen[:, None, :])

    def check_enumeration_caps(self) -> None:
        messages = self.q ** self.dimension
        if messages > settings.WEIGHT_ENUMERATION_CAP:
            raise SizeCapError("q^dimension", messages, settings.WEIGHT_ENUMERATION_CAP)
        work = messages * self.length
        if work > settings.CODEWORD_WORK_CAP:
            raise SizeCapError("codeword coordinates", work, settings.CODEWORD_WORK_CAP)

    def iter_blocks(self, leads: Optional[Sequence[int]] = None) -> Iterator[Tuple[Tuple[int, ...], np.ndarray]]:
        """Yield (prefix, block): block[i] is the codeword whose message index
        tuple is prefix + (i,)

        Args:
            leads: Restrict the first coefficient index (dimension >= 2 only)
        """
        tables = self.scaled_rows
        k = self.dimension
        if k == 1:
            yield (), tables[0]
            return
        leads = range(self.q) if leads is None else leads
        for i0 in leads:
            for middle in product(range(self.q), repeat=k - 2):
                base = tables[0, i0].copy()
                for j, index in enumerate(middle, start=1):
                    base ^= tables[j, index]
                yield (i0, *middle), base[None, :] ^ tables[k - 1]

    def __repr__(self) -> str:
        return f"LinearCode(name={self.name!r}, q={self.q}, length={self.length}, dimension={self.dimension})"


def _weight_tally(code: LinearCode, leads: Optional[Sequence[int]]) -> Counter:
    tally: Counter = Counter()
    for _, block in code.iter_blocks(leads):
        weights = np.count_nonzero(block, axis=1)
        found, counts = np.unique(weights, return_counts=True)
        tally.update(dict(zip(found.tolist(), counts.tolist())))
    return tally


def weight_distribution(code: LinearCode, jobs: Optional[int] = None) -> WeightDistribution:
    """Exact weight distribution by exhaustive enumeration

    The first message coefficient is split across joblib threads; the
    per-chunk tallies are merged by addition so the result does not depend
    on the number of jobs.

    Raises:
        SizeCapError: If q^dimension or the coordinate work exceeds its cap
    """
    code.check_enumeration_caps()
    jobs = jobs or settings.JOBS

    if code.dimension == 1 or jobs == 1:
        tally = _weight_tally(code, None)
    else:
        chunks = [c.tolist() for c in np.array_split(np.arange(code.q), min(jobs, code.q)) if len(c)]
        partial = Parallel(n_jobs=jobs, backend="threading")(
            delayed(_weight_tally)(code, chunk) for chunk in chunks
        )
        tally = sum(partial, Counter())

    distribution = WeightDistribution(counts=dict(tally), length=code.length)
    track_enumeration("codewords", distribution.total)
    logger.info(
        "Weight distribution computed",
        extra={
            "code": code.name,
            "q": code.q,
            "length": code.length,
            "dimension": code.dimension,
            "weights": distribution.nonzero_weights,
        }
    )
    return distribution


def code_parameters(code: LinearCode, distribution: Optional[WeightDistribution] = None) -> CodeParameters:
    distribution = distribution or weight_distribution(code)
    return CodeParameters(
        length=code.length,
        dimension=code.rank(),
        minimum_distance=distribution.minimum_distance,
    )


def is_cyclic(code: LinearCode, window: Optional[int] = None) -> bool:
    """Shifting the first `window` coordinates of each generator row by one
    position (the rest fixed) stays inside the code"""
    window = code.length if window is None else window
    for row in code.gen:
        shifted = row.copy()
        shifted[:window] = np.roll(row[:window], 1)
        if not code.contains(shifted):
            return False
    return True
