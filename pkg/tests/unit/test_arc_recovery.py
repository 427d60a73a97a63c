"""
Tests for the code <-> point set dictionary.
"""

import numpy as np
import pytest

from src.coding.arc_recovery import arc_from_code, arc_to_code, verify_weight_line_duality
from src.coding.linear_code import LinearCode, weight_distribution
from src.core.exceptions import CodeConstructionError
from src.geometry.arcs import verify_maximal


class TestArcFromCode:
    """Tests for reading an arc off the extended code"""

    def test_recovered_arc_is_maximal(self, ctx_2_2):
        """n + 1 columns forming a maximal arc of degree d"""
        arc = arc_from_code(ctx_2_2.plane, ctx_2_2.code_extended)
        assert len(arc) == 52
        assert arc.degree == 4
        assert verify_maximal(ctx_2_2.plane, arc).passed

    def test_hyperoval(self, ctx_1_2):
        """For d = 2 the recovered set is a hyperoval"""
        arc = arc_from_code(ctx_1_2.plane, ctx_1_2.code_extended)
        assert (len(arc), arc.degree) == (6, 2)
        assert verify_maximal(ctx_1_2.plane, arc).passed

    def test_needs_dimension_three(self, ctx_1_2):
        """C has dimension 2"""
        with pytest.raises(CodeConstructionError):
            arc_from_code(ctx_1_2.plane, ctx_1_2.code_C)

    def test_needs_projective_code(self, ctx_2_2):
        """A repeated column is refused"""
        code = ctx_2_2.code_extended
        doubled = LinearCode(code.tower, np.hstack([code.gen, code.gen[:, :1]]), name="doubled")
        with pytest.raises(CodeConstructionError):
            arc_from_code(ctx_2_2.plane, doubled)


class TestArcToCode:
    """Tests for the converse direction"""

    def test_weights_of_arc_code(self, ctx_2_2):
        """Nonzero weights (sd - s)d and (sd - s + 1)d"""
        code = arc_to_code(ctx_2_2.plane, ctx_2_2.base_arc)
        distribution = weight_distribution(code)
        assert code.length == 52 and code.rank() == 3
        assert distribution.nonzero_weights == [48, 52]

    def test_weight_line_duality(self, ctx_2_2):
        """wt(uG) = length - |line u meets the columns| on all q^2 + q + 1 lines"""
        report = verify_weight_line_duality(ctx_2_2.plane, ctx_2_2.code_extended)
        assert report.lines_checked == 273
        assert report.passed
        assert report.weights == {48: 221, 52: 52}
