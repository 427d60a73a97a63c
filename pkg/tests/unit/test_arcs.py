"""
Tests for Denniston arcs, the partition, the cyclotomic model and the group action.
"""

import pytest

from src.core.exceptions import FieldDomainError, InvalidSubgroupError
from src.dependencies import get_plane
from src.geometry.arcs import (
    AdditiveSubgroupSet,
    MaximalArc,
    base_subgroup,
    build_partition,
    cyclotomic_arc,
    cyclotomic_class_is_invariant,
    denniston_arc,
    dual_arc,
    field_model_basis,
    multiplication_collineation,
    partition_cosets,
    verify_field_model_orbits,
    verify_group_action,
    verify_line_stabilizer,
    verify_maximal,
    verify_partition,
)
from src.geometry.collineations import group_closure
from src.geometry.conics import NUCLEUS, pencil_parameter
from src.geometry.plane import ProjPoint


@pytest.fixture(scope="module")
def arc_2_2(plane_2_2):
    return denniston_arc(plane_2_2, base_subgroup(plane_2_2.tower), pencil_parameter(plane_2_2))


class TestAdditiveSubgroupSet:
    """Tests for subgroup validation"""

    def test_valid_subgroup(self, tower_2_2):
        """GF(d) is an additive subgroup of GF(q)"""
        H = base_subgroup(tower_2_2)
        assert len(H) == 4
        assert 0 in H.elements

    def test_missing_zero(self):
        """A set without 0 is rejected"""
        with pytest.raises(InvalidSubgroupError):
            AdditiveSubgroupSet.validate([1, 2, 3])

    def test_violating_pair(self):
        """The error names a pair whose sum falls outside"""
        with pytest.raises(InvalidSubgroupError) as exc_info:
            AdditiveSubgroupSet.validate([0, 1, 2, 4])
        a, b = exc_info.value.pair
        assert a ^ b not in (0, 1, 2, 4)

    def test_wrong_size(self):
        """The declared size is enforced"""
        with pytest.raises(InvalidSubgroupError):
            AdditiveSubgroupSet.validate([0, 1], size=4)


class TestDennistonArc:
    """Tests for the arc built from the pencil"""

    @pytest.mark.parametrize("mk,size", [((1, 1), 4), ((1, 2), 6), ((2, 1), 16), ((2, 2), 52), ((1, 3), 10)])
    def test_size_and_maximality(self, mk, size):
        """(q+1)(d-1) + 1 points and every line meets the arc in 0 or d points"""
        plane = get_plane(*mk)
        arc = denniston_arc(plane, base_subgroup(plane.tower), pencil_parameter(plane))
        report = verify_maximal(plane, arc)
        assert len(arc) == size == arc.expected_size
        assert report.passed
        assert set(report.census) <= {0, arc.degree}
        assert report.secant_lines == report.expected_secant_lines

    def test_census_2_2(self, plane_2_2, arc_2_2):
        """221 secants of size 4 and 52 external lines"""
        report = verify_maximal(plane_2_2, arc_2_2)
        assert report.census == {0: 52, 4: 221}
        assert report.external_lines == 52

    def test_nucleus_in_arc(self, arc_2_2):
        """The nucleus is a point of the arc"""
        assert NUCLEUS in arc_2_2.points
        assert arc_2_2.levels == sorted(arc_2_2.levels)

    def test_single_deletion_fails(self, plane_2_2, arc_2_2):
        """Removing one point leaves lines meeting it in d - 1 points"""
        report = verify_maximal(plane_2_2, arc_2_2.without_point(7))
        assert not report.passed
        assert report.witness_line is not None
        assert 3 in report.census

    def test_levels_outside_gf_q(self, plane_1_2):
        """Levels are GF(q) elements"""
        outside = next(x for x in range(16) if not plane_1_2.tower.in_gf_q(x))
        H = AdditiveSubgroupSet(frozenset({0, outside}))
        with pytest.raises(InvalidSubgroupError):
            denniston_arc(plane_1_2, H, pencil_parameter(plane_1_2))


class TestDualArc:
    """Tests for the external lines of an arc"""

    def test_dual_arc_is_maximal(self, plane_2_2, arc_2_2):
        """(sd - d + 1)s lines of degree s = q/d"""
        dual = dual_arc(plane_2_2, arc_2_2)
        assert dual.degree == 4
        assert len(dual) == (4 * 4 - 4 + 1) * 4
        assert verify_maximal(plane_2_2, dual).passed


class TestPartition:
    """Tests for the N arcs tiling AG(2,q)"""

    def test_cosets(self, tower_2_2):
        """N subgroups of size d meeting only in 0"""
        cosets = partition_cosets(tower_2_2)
        assert len(cosets) == 5
        nonzero = [H.elements - {0} for H in cosets]
        assert sum(len(s) for s in nonzero) == 15
        assert len(set().union(*nonzero)) == 15

    def test_partition(self, plane_2_2):
        """Pairwise meeting in the nucleus and covering all q^2 affine points"""
        partition = build_partition(plane_2_2, pencil_parameter(plane_2_2))
        report = verify_partition(plane_2_2, partition)
        assert report.passed
        assert report.arc_count == 5
        assert report.covered_points == 256
        assert all(verify_maximal(plane_2_2, arc).passed for arc in partition.arcs)

    def test_broken_partition(self, plane_1_2):
        """Repeating an arc breaks the pairwise condition and the cover"""
        partition = build_partition(plane_1_2, pencil_parameter(plane_1_2))
        partition.arcs[1] = partition.arcs[0]
        report = verify_partition(plane_1_2, partition)
        assert not report.pairwise_nucleus_only
        assert not report.covers_affine_plane
        assert not report.passed


class TestCyclotomicModel:
    """Tests for the arc C_0 + {0} inside GF(q^2)"""

    @pytest.mark.parametrize("mk", [(1, 2), (2, 1), (2, 2)])
    def test_cyclotomic_arc_is_maximal(self, mk):
        """Same size and degree as the pencil arc"""
        plane = get_plane(*mk)
        arc = cyclotomic_arc(plane)
        assert len(arc) == arc.expected_size
        assert verify_maximal(plane, arc).passed

    def test_second_basis(self, plane_2_2):
        """Another basis element gives another maximal arc of the same size"""
        tower = plane_2_2.tower
        theta = next(x for x in range(2, 256) if not tower.in_gf_q(x) and x != tower.alpha)
        arc = cyclotomic_arc(plane_2_2, theta)
        assert len(arc) == 52
        assert verify_maximal(plane_2_2, arc).passed

    def test_basis_in_gf_q_rejected(self, tower_1_2):
        """theta must lie outside GF(q)"""
        with pytest.raises(FieldDomainError):
            field_model_basis(tower_1_2, 1)

    def test_class_invariant(self, tower_2_2):
        """beta C_0 = C_0"""
        assert cyclotomic_class_is_invariant(tower_2_2)

    def test_multiplication_by_beta_preserves_arc(self, plane_1_2):
        """x -> beta x maps the cyclotomic arc onto itself"""
        tower = plane_1_2.tower
        arc = cyclotomic_arc(plane_1_2)
        g = multiplication_collineation(tower, tower.beta)
        closure = group_closure(plane_1_2, [g])
        assert closure.order == tower.n
        report = verify_group_action(plane_1_2, arc, closure)
        assert report.preserves_arc and report.sharp

    def test_field_model_orbits(self, plane_2_2):
        """q - 1 orbits of size q + 1, each an oval"""
        report = verify_field_model_orbits(plane_2_2)
        assert report.subgroup_order == 17
        assert report.orbit_count == 15
        assert report.orbit_sizes == [17] * 15
        assert report.tiles_nonzero and report.all_ovals

    def test_field_model_cosets_tile(self, plane_1_2):
        """The q - 1 cosets of the order-(q+1) subgroup cover GF(r)* once, avoiding 0"""
        report = verify_field_model_orbits(plane_1_2)
        assert report.subgroup_order == 5
        assert report.orbit_count == 3
        assert report.tiles_nonzero


class TestGroupAction:
    """Tests for the cyclic group on the arc"""

    def test_sharply_transitive(self, ctx_2_2):
        """Order n, nucleus fixed, one orbit of size n on the other points"""
        report = verify_group_action(ctx_2_2.plane, ctx_2_2.base_arc, ctx_2_2.group)
        assert report.group_order == 51
        assert report.preserves_arc and report.nucleus_fixed
        assert report.orbit_sizes == [51]
        assert report.sharp and report.cyclic
        assert report.generator_order == 51

    def test_needs_nucleus(self, ctx_1_2):
        """An arc without a nucleus has no reference point"""
        arc = ctx_1_2.base_arc
        bare = MaximalArc(points=arc.points, degree=arc.degree, q=arc.q)
        with pytest.raises(FieldDomainError):
            verify_group_action(ctx_1_2.plane, bare, ctx_1_2.group)

    def test_line_stabilizer(self, ctx_2_2):
        """Cyclic of order d - 1, fixing (0,0,1) and (0,1,0), moving (0,1,1) around H*"""
        report = verify_line_stabilizer(ctx_2_2.plane, ctx_2_2.base_arc, ctx_2_2.group)
        assert report.order == 3
        assert report.cyclic
        assert ProjPoint((0, 0, 1)) in report.fixed_points
        assert ProjPoint((0, 1, 0)) in report.fixed_points
        assert report.orbit_matches
        assert len(report.orbit) == 3
