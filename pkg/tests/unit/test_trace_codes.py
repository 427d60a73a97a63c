"""
Tests for the trace codes C, E and their augmented and extended versions.
"""

import numpy as np
import pytest

from src.coding.linear_code import LinearCode, code_parameters, is_cyclic, weight_distribution
from src.coding.trace_codes import (
    CodewordHandle,
    augment,
    build_irreducible_cyclic,
    build_short_code,
    check_concatenation,
    check_extension_coordinate,
    exponent_zero_counts,
    extend,
    extend_vector,
    handle_codeword,
    shift_witness,
    trace_codeword,
)
from src.core.exceptions import CodeConstructionError, FieldDomainError
from src.dependencies import get_tower


class TestIrreducibleCode:
    """Tests for C(q, 2, n)"""

    @pytest.mark.parametrize("mk", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_weight_enumerator(self, mk):
        """1 + (q^2 - 1) z^((d-1)q)"""
        tower = get_tower(*mk)
        code = build_irreducible_cyclic(tower)
        distribution = weight_distribution(code)
        assert distribution.counts == {0: 1, (tower.d - 1) * tower.q: tower.q ** 2 - 1}

    def test_cyclic(self, tower_2_2):
        """C is closed under the shift and c_(a beta) is the shift of c_a"""
        code = build_irreducible_cyclic(tower_2_2)
        assert code.length == 51 and code.rank() == 2
        assert is_cyclic(code)
        assert shift_witness(tower_2_2, 1)
        assert shift_witness(tower_2_2, tower_2_2.alpha)

    def test_codeword_length_checked(self, tower_1_2):
        """Only lengths n and q + 1 are trace codes here"""
        with pytest.raises(FieldDomainError):
            trace_codeword(tower_1_2, 1, 7)

    def test_zero_counts(self, tower_2_2):
        """A nonzero codeword of C has n - (d-1)q = d - 1 zeros"""
        counts = exponent_zero_counts(tower_2_2, 1)
        assert counts[0] == 3
        assert sum(counts.values()) == 51

    def test_jobs_do_not_change_result(self, tower_2_2):
        """Threaded enumeration merges to the same distribution"""
        code = build_irreducible_cyclic(tower_2_2)
        assert weight_distribution(code, jobs=1).counts == weight_distribution(code, jobs=3).counts


class TestShortCode:
    """Tests for E(q, 2, q + 1)"""

    def test_mds(self, tower_2_2):
        """[q + 1, 2, q] meets the Singleton bound"""
        code = build_short_code(tower_2_2)
        assert code_parameters(code).as_tuple() == (17, 2, 16)

    def test_concatenation(self, tower_2_2):
        """c_a = e_a || s_1 e_a || ... with scalars running over GF(d)*"""
        report = check_concatenation(tower_2_2)
        assert report.checked == 256
        assert report.failures == []
        assert report.scalars_are_gf_d_star
        assert report.passed

    def test_short_equals_irreducible_at_d_2(self, tower_1_2):
        """With d = 2 the concatenation has one block"""
        C = build_irreducible_cyclic(tower_1_2)
        E = build_short_code(tower_1_2)
        assert C.length == E.length == 5
        assert np.array_equal(C.gen, E.gen)


class TestAugmentedAndExtended:
    """Tests for adding the all-one vector and the parity coordinate"""

    def test_augmented(self, tower_2_2):
        """Dimension 3, nonzero weights in {n - d, n - d + 1, n}"""
        code = augment(build_irreducible_cyclic(tower_2_2))
        distribution = weight_distribution(code)
        assert code.rank() == 3
        assert set(distribution.nonzero_weights) <= {47, 48, 51}
        assert is_cyclic(code)

    def test_augment_twice_rejected(self, tower_1_2):
        """The all-one vector cannot be added to a code containing it"""
        code = augment(build_irreducible_cyclic(tower_1_2))
        with pytest.raises(CodeConstructionError):
            augment(code)

    @pytest.mark.parametrize(
        "mk,expected",
        [
            ((1, 1), {0: 1, 2: 6, 4: 1}),
            ((1, 2), {0: 1, 4: 45, 6: 18}),
            ((2, 1), {0: 1, 12: 60, 16: 3}),
            ((2, 2), {0: 1, 48: 3315, 52: 780}),
        ],
    )
    def test_extended_enumerator(self, mk, expected):
        """Two nonzero weights n + 1 - d and n + 1"""
        tower = get_tower(*mk)
        code = extend(augment(build_irreducible_cyclic(tower)))
        assert code.name == "C_extended"
        assert weight_distribution(code).counts == expected

    def test_extended_cyclic_on_first_n(self, tower_1_2):
        """Shifting the first n coordinates with the last fixed stays in the code"""
        code = extend(augment(build_irreducible_cyclic(tower_1_2)))
        assert is_cyclic(code, window=5)

    def test_parity_coordinate(self, tower_2_2):
        """The appended coordinate of c_a + b1 is b"""
        report = check_extension_coordinate(tower_2_2)
        assert report.trace_sums_vanish and report.length_is_odd
        assert report.passed

    def test_extend_vector(self, tower_1_2):
        """extend_vector appends the coordinate sum"""
        word = handle_codeword(tower_1_2, CodewordHandle(a=3, b=1))
        extended = extend_vector(word)
        assert extended[-1] == 1
        assert np.bitwise_xor.reduce(extended) == 0

    def test_handle_needs_gf_q(self, tower_1_2):
        """b must be a GF(q) element"""
        outside = next(x for x in range(16) if not tower_1_2.in_gf_q(x))
        with pytest.raises(FieldDomainError):
            handle_codeword(tower_1_2, CodewordHandle(a=1, b=outside))


class TestLinearCode:
    """Tests for the generic code object"""

    def test_entries_must_be_in_gf_q(self, tower_1_2):
        """A generator entry outside GF(q) is rejected"""
        outside = next(x for x in range(16) if not tower_1_2.in_gf_q(x))
        with pytest.raises(CodeConstructionError):
            LinearCode(tower_1_2, [[1, outside]])

    def test_codeword_and_contains(self, tower_1_2):
        """Combinations of the rows are codewords"""
        code = build_irreducible_cyclic(tower_1_2)
        w = int(tower_1_2.gf_q[2])
        word = code.codeword([w, 1])
        assert code.contains(word)
        assert not code.contains(np.ones(code.length, dtype=np.int64))
