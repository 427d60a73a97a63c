"""
Tests for the MacWilliams transform and the two-weight power moments.
"""

import pytest

from src.coding.linear_code import WeightDistribution
from src.coding.macwilliams import (
    krawtchouk,
    krawtchouk_row,
    macwilliams_transform,
    pless_two_weight_enumerator,
)
from src.core.exceptions import CodeConstructionError


class TestKrawtchouk:
    """Tests for the Krawtchouk polynomials"""

    @pytest.mark.parametrize("length,q", [(6, 4), (16, 4), (52, 16)])
    def test_recurrence_matches_sum(self, length, q):
        """The three-term recurrence reproduces the explicit sum"""
        for i in range(0, length + 1, max(1, length // 8)):
            row = krawtchouk_row(i, length, q, length)
            assert row == [krawtchouk(j, i, length, q) for j in range(length + 1)]

    def test_first_values(self):
        """K_0 = 1 and K_1(i) = (q-1)n - qi"""
        assert krawtchouk(0, 3, 10, 4) == 1
        assert krawtchouk(1, 3, 10, 4) == 3 * 10 - 4 * 3


class TestTransform:
    """Tests for the dual weight distribution"""

    def test_hyperoval_code(self):
        """[6, 3] over GF(4): the dual has no words of weight 1, 2 or 3"""
        distribution = WeightDistribution(counts={0: 1, 4: 45, 6: 18}, length=6)
        dual = macwilliams_transform(distribution, 6, 3, 4, upto=3)
        assert [dual.count(j) for j in range(4)] == [1, 0, 0, 0]

    def test_dual_of_52_point_arc(self):
        """A'_3 = (d-2)(d-1)(q^2-1)(qd-q+d)/6 = 13260"""
        distribution = WeightDistribution(counts={0: 1, 48: 3315, 52: 780}, length=52)
        dual = macwilliams_transform(distribution, 52, 3, 16, upto=3)
        assert [dual.count(j) for j in range(4)] == [1, 0, 0, 13260]

    def test_involution(self):
        """Transforming twice returns the original distribution"""
        distribution = WeightDistribution(counts={0: 1, 12: 60, 16: 3}, length=16)
        dual = macwilliams_transform(distribution, 16, 3, 4)
        assert dual.total == 4 ** 13
        back = macwilliams_transform(dual, 16, 13, 4)
        assert back.counts == distribution.counts

    def test_wrong_total(self):
        """The counts must sum to q^dimension"""
        distribution = WeightDistribution(counts={0: 1, 4: 45}, length=6)
        with pytest.raises(CodeConstructionError):
            macwilliams_transform(distribution, 6, 3, 4)

    def test_not_a_code(self):
        """A distribution with the right total but no code behind it fails integrality"""
        distribution = WeightDistribution(counts={0: 1, 1: 63}, length=6)
        with pytest.raises(CodeConstructionError):
            macwilliams_transform(distribution, 6, 3, 4)


class TestTwoWeightMoments:
    """Tests for the enumerator solved from the power moments"""

    @pytest.mark.parametrize(
        "length,q,w1,w2,expected",
        [
            (6, 4, 4, 6, {0: 1, 4: 45, 6: 18}),
            (16, 4, 12, 16, {0: 1, 12: 60, 16: 3}),
            (52, 16, 48, 52, {0: 1, 48: 3315, 52: 780}),
        ],
    )
    def test_moments(self, length, q, w1, w2, expected):
        """The moments determine the exhaustive counts"""
        assert pless_two_weight_enumerator(length, 3, q, w1, w2).counts == expected

    def test_bad_weights(self):
        """Weights must satisfy 0 < w1 < w2"""
        with pytest.raises(CodeConstructionError):
            pless_two_weight_enumerator(6, 3, 4, 6, 4)

    def test_inconsistent_moments(self):
        """Weights that fit no projective code are refused"""
        with pytest.raises(CodeConstructionError):
            pless_two_weight_enumerator(6, 3, 4, 3, 6)
