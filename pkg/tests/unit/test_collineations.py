"""
Tests for 3x3 collineations and the groups G1, G2.
"""

import pytest

from src.core.exceptions import FieldDomainError
from src.geometry.collineations import (
    IDENTITY,
    Collineation,
    apply_to_line,
    apply_to_point,
    compose,
    element_order,
    group_closure,
    group_G1,
    group_G2,
    groups_commute,
    inverse,
    line_stabilizer,
    orbits,
    point_stabilizer,
)
from src.geometry.conics import NUCLEUS, ConicPencil, pencil_parameter
from src.geometry.plane import ProjLine


@pytest.fixture(scope="module")
def groups_1_2(plane_1_2):
    b = pencil_parameter(plane_1_2)
    return group_G1(plane_1_2, b), group_G2(plane_1_2)


@pytest.fixture(scope="module")
def groups_2_2(plane_2_2):
    b = pencil_parameter(plane_2_2)
    return group_G1(plane_2_2, b), group_G2(plane_2_2)


class TestMatrices:
    """Tests for products and inverses"""

    def test_inverse(self, plane_2_2, groups_2_2):
        """g * g^-1 is the identity"""
        G1, _ = groups_2_2
        for g in G1[:5]:
            assert compose(plane_2_2, g, inverse(plane_2_2, g)).is_identity

    def test_singular_matrix(self, plane_1_2):
        """A singular matrix has no inverse"""
        with pytest.raises(FieldDomainError):
            inverse(plane_1_2, Collineation((1, 0, 0, 1, 0, 0, 0, 0, 1)))

    def test_incidence_preserved(self, plane_1_2, groups_1_2):
        """p on l implies g(p) on g(l)"""
        G1, G2 = groups_1_2
        g = compose(plane_1_2, G1[1], G2[-1]) if len(G2) > 1 else G1[1]
        for line in plane_1_2.enumerate_lines()[:8]:
            image = apply_to_line(plane_1_2, g, line)
            for p in plane_1_2.points_on_line(line):
                assert plane_1_2.incident(apply_to_point(plane_1_2, g, p), image)


class TestGroups:
    """Tests for G1, G2 and their product"""

    def test_orders(self, groups_2_2):
        """|G1| = q + 1 and |G2| = d - 1"""
        G1, G2 = groups_2_2
        assert len(G1) == 17
        assert len(G2) == 3

    def test_factors_commute(self, plane_2_2, groups_2_2):
        """G1 and G2 commute elementwise"""
        G1, G2 = groups_2_2
        assert groups_commute(plane_2_2, G1, G2)

    def test_closure_is_cyclic(self, plane_2_2, groups_2_2):
        """<G1, G2> is cyclic of order (q + 1)(d - 1)"""
        G1, G2 = groups_2_2
        closure = group_closure(plane_2_2, G1 + G2)
        assert closure.order == 51
        assert closure.is_cyclic
        assert element_order(plane_2_2, closure.generator, group_order=51) == 51

    def test_element_order_without_group_order(self, plane_2_2, groups_2_2):
        """Repeated products find the same order"""
        G1, _ = groups_2_2
        g = next(h for h in G1 if not h.is_identity)
        assert element_order(plane_2_2, g) == element_order(plane_2_2, g, group_order=17)

    def test_nucleus_fixed(self, plane_2_2, groups_2_2):
        """The whole group fixes (0,0,1)"""
        G1, G2 = groups_2_2
        assert len(point_stabilizer(plane_2_2, G1 + G2, NUCLEUS)) == 20

    def test_g1_orbits_on_conic(self, plane_1_2, groups_1_2):
        """G1 is transitive on each conic F_l, l != 0"""
        G1, _ = groups_1_2
        pencil = ConicPencil(plane_1_2, pencil_parameter(plane_1_2))
        conic = pencil.conic(1).points
        assert [len(o) for o in orbits(plane_1_2, G1, conic)] == [5]

    def test_line_stabilizer_identity(self, plane_1_2):
        """The identity stabilizes every line"""
        line = ProjLine((1, 0, 0))
        assert line_stabilizer(plane_1_2, [Collineation(IDENTITY)], line) == [Collineation(IDENTITY)]
