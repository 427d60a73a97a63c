"""
Tests for block designs and the designs carried by the extended code.
"""

from itertools import combinations

import pytest

from src.coding.arc_recovery import arc_from_code
from src.core.exceptions import SizeCapError
from src.designs.design import (
    Design,
    DesignParameters,
    complement_blocks,
    design_parameters,
    remove_block,
    verify_design,
)
from src.designs.supports import (
    all_triples_of_blocks,
    complementary_steiner,
    dual_weight3_design,
    supports_of_weight,
)


@pytest.fixture(scope="module")
def fano():
    return Design(v=7, blocks=[(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)])


class TestDesign:
    """Tests for t-subset counting"""

    def test_fano_plane(self, fano):
        """2-(7, 3, 1)"""
        check = verify_design(fano, 2)
        assert check.is_design and check.lam == 1
        assert check.subsets_checked == 21

    def test_t_three(self):
        """All 4-subsets of 6 points form a 3-(6, 4, 3) design"""
        design = Design(v=6, blocks=list(combinations(range(6), 4)))
        check = verify_design(design, 3)
        assert check.is_design and check.lam == 3

    def test_removed_block_breaks_design(self, fano):
        """Deleting any block leaves an uneven pair count"""
        for i in range(fano.b):
            assert not verify_design(remove_block(fano, i), 2).is_design

    def test_double_counting(self, fano):
        """b k = v r and r (k - 1) = lambda (v - 1)"""
        summary = design_parameters(fano)
        assert (summary.v, summary.b, summary.r, summary.k, summary.lam) == (7, 7, 3, 3, 1)
        assert summary.replication_identity and summary.pair_identity and summary.flag_identity

    def test_empty_design(self):
        """No blocks is never a design"""
        assert not verify_design(Design(v=5, blocks=[]), 2).is_design

    def test_mixed_block_sizes(self):
        """Blocks of different sizes have no k"""
        design = Design(v=4, blocks=[(0, 1), (1, 2, 3)])
        assert design.k is None
        assert not verify_design(design, 2).is_design

    def test_repeated_blocks_reported(self, fano):
        """Doubling every block keeps a 2-design and counts the repeats"""
        doubled = Design(v=7, blocks=fano.blocks + fano.blocks)
        check = verify_design(doubled, 2)
        assert check.is_design and check.lam == 2
        assert check.repeated_blocks == 7
        assert verify_design(fano, 2).repeated_blocks == 0

    def test_complement(self, fano):
        """Complements of Fano lines are 4-sets"""
        assert all(len(b) == 4 for b in complement_blocks(fano))

    def test_point_cap(self):
        """v past the cap is refused"""
        with pytest.raises(SizeCapError):
            verify_design(Design(v=1000, blocks=[(0, 1)]), 2)

    def test_describe(self):
        assert DesignParameters(t=2, v=52, k=4, lam=1).describe() == "2-(52, 4, 1)"


class TestSupportDesigns:
    """Tests for the designs of the extended code"""

    def test_min_weight_1_2(self, ctx_1_2):
        """15 blocks forming 2-(6, 4, 6)"""
        design, extraction = supports_of_weight(ctx_1_2.code_extended, 4)
        check = verify_design(design, 2)
        assert design.b == 15
        assert check.is_design and check.lam == 6
        assert extraction.class_count_consistent and extraction.repeated_supports == 0

    def test_min_weight_2_2(self, ctx_2_2):
        """221 blocks forming 2-(52, 48, 188)"""
        design, extraction = supports_of_weight(ctx_2_2.code_extended, 48)
        check = verify_design(design, 2)
        assert design.b == 221
        assert check.is_design and check.lam == 188
        assert extraction.codewords == 3315

    def test_full_weight(self, ctx_2_2):
        """The weight n + 1 supports are the single full block"""
        design, extraction = supports_of_weight(ctx_2_2.code_extended, 52)
        assert design.blocks == [tuple(range(52))]
        assert extraction.classes == 52

    def test_steiner(self, ctx_2_2):
        """Line intersections of the recovered arc: 2-(52, 4, 1) with 221 blocks"""
        arc = arc_from_code(ctx_2_2.plane, ctx_2_2.code_extended)
        steiner = complementary_steiner(ctx_2_2.plane, arc)
        check = verify_design(steiner, 2)
        assert steiner.b == 221 and steiner.k == 4
        assert check.is_design and check.lam == 1

    def test_complement_identity(self, ctx_1_2):
        """Steiner blocks are the complements of the minimum-weight supports"""
        arc = arc_from_code(ctx_1_2.plane, ctx_1_2.code_extended)
        steiner = complementary_steiner(ctx_1_2.plane, arc)
        design, _ = supports_of_weight(ctx_1_2.code_extended, 4)
        assert steiner.b == 15
        assert complement_blocks(design) == steiner.blocks

    def test_dual_weight3(self, ctx_2_2):
        """884 triples forming 2-(52, 3, 2), each inside a Steiner block"""
        dual = dual_weight3_design(ctx_2_2.code_extended)
        check = verify_design(dual, 2)
        assert dual.b == 884
        assert check.is_design and check.lam == 2
        arc = arc_from_code(ctx_2_2.plane, ctx_2_2.code_extended)
        assert dual.blocks == all_triples_of_blocks(complementary_steiner(ctx_2_2.plane, arc))

    def test_dual_weight3_2_1(self, contexts):
        """80 triples forming 2-(16, 3, 2)"""
        dual = dual_weight3_design(contexts[(2, 1)].code_extended)
        check = verify_design(dual, 2)
        assert dual.b == 80
        assert check.is_design and check.lam == 2

    def test_hyperoval_has_no_triples(self, ctx_1_2):
        """The empty dual design carries its reason"""
        dual = dual_weight3_design(ctx_1_2.code_extended)
        assert dual.b == 0
        assert dual.empty_reason is not None
