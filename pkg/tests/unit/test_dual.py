"""
Tests for dual distances and small-weight dual words.
"""

import numpy as np
import pytest

from src.coding.dual import (
    count_weight3_dual_words,
    dependent_triples,
    dual_distance_upto,
    is_projective,
)
from src.coding.linear_code import LinearCode
from src.coding.trace_codes import augment, build_irreducible_cyclic, build_short_code, extend
from src.core.exceptions import CodeConstructionError, SizeCapError
from src.dependencies import get_tower


def _codes(mk):
    tower = get_tower(*mk)
    C = build_irreducible_cyclic(tower)
    augmented = augment(C)
    return tower, C, augmented, extend(augmented)


def _is_dual_word(code: LinearCode, word) -> bool:
    word = np.asarray(word, dtype=np.int64)
    products = code.field.mul_array(code.gen, word[None, :])
    return bool(np.all(np.bitwise_xor.reduce(products, axis=1) == 0))


class TestDualDistance:
    """Tests for the column-dependency search"""

    @pytest.mark.parametrize("mk,expected", [((1, 2), 3), ((1, 3), 3), ((2, 1), 2), ((2, 2), 2)])
    def test_irreducible(self, mk, expected):
        """3 when m = 1, 2 when m > 1"""
        _, C, _, _ = _codes(mk)
        result = dual_distance_upto(C)
        assert result.value == expected
        assert _is_dual_word(C, result.witness)
        assert sum(1 for v in result.witness if v) == expected

    @pytest.mark.parametrize("mk,expected", [((1, 2), 4), ((2, 1), 3), ((2, 2), 3)])
    def test_augmented_and_extended(self, mk, expected):
        """4 when m = 1, 3 when m > 1, for both codes"""
        _, _, augmented, extended = _codes(mk)
        assert dual_distance_upto(augmented).value == expected
        assert dual_distance_upto(extended).value == expected

    def test_short_code(self, tower_2_2):
        """E is MDS of dimension 2, so its dual distance is 3"""
        assert dual_distance_upto(build_short_code(tower_2_2)).value == 3

    def test_explicit_weight_two_word(self, tower_2_2):
        """beta^(q+1) at coordinate 0 and 1 at coordinate q + 1 is orthogonal to C"""
        C = build_irreducible_cyclic(tower_2_2)
        word = np.zeros(C.length, dtype=np.int64)
        word[0] = tower_2_2.field.pow(tower_2_2.beta, tower_2_2.q + 1)
        word[tower_2_2.q + 1] = 1
        assert _is_dual_word(C, word)

    def test_limit_cap(self, tower_1_2):
        """The search limit is capped"""
        C = build_irreducible_cyclic(tower_1_2)
        with pytest.raises(SizeCapError):
            dual_distance_upto(C, limit=9)

    def test_zero_column(self, tower_1_2):
        """A zero column is a weight-1 dual word"""
        code = LinearCode(tower_1_2, [[1, 0, 1], [0, 0, 1]])
        result = dual_distance_upto(code)
        assert result.value == 1
        assert result.positions == (1,)


class TestProjectivity:
    """Tests for projective codes and collinear triples"""

    def test_extended_is_projective(self):
        """The extended code has pairwise independent columns"""
        _, C, augmented, extended = _codes((2, 2))
        assert is_projective(extended)
        assert not is_projective(C)

    @pytest.mark.parametrize("mk,expected", [((1, 2), 0), ((2, 1), 240), ((2, 2), 13260)])
    def test_weight3_dual_words(self, mk, expected):
        """(d-2)(d-1)(q^2-1)(qd-q+d)/6 weight-3 dual words"""
        _, _, _, extended = _codes(mk)
        assert count_weight3_dual_words(extended) == expected

    def test_triples_need_dimension_three(self, tower_1_2):
        """The triple search is for dimension-3 codes"""
        with pytest.raises(CodeConstructionError):
            dependent_triples(build_irreducible_cyclic(tower_1_2))

    def test_non_projective_count_rejected(self, tower_2_2):
        """The weight-3 count assumes a projective code"""
        code = LinearCode(tower_2_2, [[1, 1, 0], [0, 0, 1], [0, 0, 0]])
        with pytest.raises(CodeConstructionError):
            count_weight3_dual_words(code)
