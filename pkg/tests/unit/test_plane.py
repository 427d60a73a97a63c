"""
Tests for PG(2,q): normalization, keys, incidence and line scans.
"""

import numpy as np
import pytest

from src.core.exceptions import FieldDomainError
from src.geometry.plane import ProjLine, ProjPoint


class TestPoints:
    """Tests for normalization and enumeration"""

    def test_point_count(self, plane_1_2):
        """q^2 + q + 1 points, in canonical order with distinct keys"""
        points = plane_1_2.enumerate_points()
        assert len(points) == 21
        keys = plane_1_2.keys(plane_1_2.all_triples)
        assert keys.tolist() == sorted(set(keys.tolist()))

    def test_normalization(self, plane_1_2):
        """Scaling a triple does not change the point"""
        w = int(plane_1_2.elements[2])
        assert plane_1_2.point(w, w, 0) == ProjPoint((1, 1, 0))
        assert plane_1_2.point(0, 0, w) == ProjPoint((0, 0, 1))

    def test_zero_vector_rejected(self, plane_1_2):
        """(0,0,0) is not a point"""
        with pytest.raises(FieldDomainError):
            plane_1_2.point(0, 0, 0)

    def test_coordinates_must_be_in_gf_q(self, plane_1_2):
        """A GF(r) element outside GF(q) is not a coordinate"""
        outside = next(x for x in range(16) if not plane_1_2.tower.in_gf_q(x))
        with pytest.raises(FieldDomainError):
            plane_1_2.point(1, outside, 0)

    def test_keys_round_trip(self, plane_2_1):
        """triples_from_keys inverts keys"""
        keys = plane_2_1.keys(plane_2_1.all_triples)
        assert np.array_equal(plane_2_1.triples_from_keys(keys), plane_2_1.all_triples)


class TestIncidence:
    """Tests for lines and incidence"""

    def test_line_through_two_points(self, plane_1_2):
        """The joining line contains both points"""
        p1, p2 = plane_1_2.point(0, 0, 1), plane_1_2.point(1, 0, 1)
        line = plane_1_2.line_through(p1, p2)
        assert line == ProjLine((0, 1, 0))
        assert plane_1_2.incident(p1, line) and plane_1_2.incident(p2, line)

    def test_same_point_has_no_line(self, plane_1_2):
        """Two equal points do not determine a line"""
        p = plane_1_2.point(0, 1, 0)
        with pytest.raises(FieldDomainError):
            plane_1_2.line_through(p, p)

    def test_points_per_line(self, plane_1_2):
        """Every line carries q + 1 points"""
        for line in plane_1_2.enumerate_lines():
            assert len(plane_1_2.points_on_line(line)) == 5

    def test_lines_through_each_point(self, plane_1_2):
        """Each point lies on q + 1 distinct lines, all incident with it"""
        lines = plane_1_2.lines_through_array(plane_1_2.all_triples)
        assert lines.shape == (21, 5, 3)
        for point, pencil in zip(plane_1_2.all_triples, lines):
            assert len(set(plane_1_2.keys(pencil).tolist())) == 5
            assert np.all(plane_1_2.dot_array(pencil, point[None, :]) == 0)

    def test_full_plane_census(self, plane_1_2):
        """Every line meets the whole plane in q + 1 points"""
        incidence = plane_1_2.line_incidences(plane_1_2.all_triples)
        assert incidence.census() == {5: 21}

    def test_members_recorded(self, plane_1_2):
        """keep_members lists the point indices on each hit line"""
        points = plane_1_2.all_triples[:3]
        incidence = plane_1_2.line_incidences(points, keep_members=True)
        assert sum(len(m) for m in incidence.members.values()) == 3 * 5
        assert sum(incidence.counts.tolist()) == 15

    def test_empty_set(self, plane_1_2):
        """No points: every line is external"""
        incidence = plane_1_2.line_incidences(np.zeros((0, 3), dtype=np.int64))
        assert incidence.census() == {0: 21}

    def test_oval(self, plane_1_2):
        """A conic is an oval; a full line is not"""
        conic = [plane_1_2.point(1, 0, 0), plane_1_2.point(0, 1, 0), plane_1_2.point(0, 0, 1), plane_1_2.point(1, 1, 1)]
        assert plane_1_2.verify_oval(plane_1_2.as_array(conic))
        line = plane_1_2.points_on_line(ProjLine((1, 0, 0)))
        assert not plane_1_2.verify_oval(plane_1_2.as_array(line))
