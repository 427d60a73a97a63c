"""
Tests for the conic pencil x^2 + bxy + y^2 + lz^2 = 0.
"""

import numpy as np
import pytest

from src.core.exceptions import FieldDomainError
from src.geometry.conics import NUCLEUS, ConicPencil, conic_points, has_root, pencil_parameter


class TestPencilParameter:
    """Tests for the choice of b"""

    def test_parameter_is_irreducible(self, plane_1_2, plane_2_2):
        """x^2 + bx + 1 has no root in GF(q)"""
        for plane in (plane_1_2, plane_2_2):
            b = pencil_parameter(plane)
            assert b != 0
            assert not has_root(plane, b)

    def test_reducible_parameter_rejected(self, plane_1_2):
        """b = 0 gives x^2 + 1 = (x + 1)^2"""
        assert has_root(plane_1_2, 0)
        with pytest.raises(FieldDomainError):
            ConicPencil(plane_1_2, 0)


class TestConics:
    """Tests for the members of the pencil"""

    def test_nondegenerate_sizes(self, plane_2_2):
        """Each F_l with l != 0 has q + 1 affine points"""
        b = pencil_parameter(plane_2_2)
        pencil = ConicPencil(plane_2_2, b)
        for l in plane_2_2.elements[1:]:
            conic = pencil.conic(int(l))
            assert len(conic) == 17
            assert all(p.coords[2] == 1 for p in conic.points)

    def test_degenerate_member(self, plane_1_2):
        """F_0 is the nucleus alone"""
        conic = conic_points(plane_1_2, pencil_parameter(plane_1_2), 0)
        assert conic.degenerate
        assert conic.points == [NUCLEUS]

    def test_levels_partition_affine_plane(self, plane_1_2):
        """Every affine point has exactly one level"""
        pencil = ConicPencil(plane_1_2, pencil_parameter(plane_1_2))
        values, counts = np.unique(pencil.levels, return_counts=True)
        assert values.tolist() == plane_1_2.elements.tolist()
        assert counts.tolist() == [1, 5, 5, 5]

    def test_conics_are_ovals(self, plane_1_2):
        """No three points of a conic are collinear"""
        pencil = ConicPencil(plane_1_2, pencil_parameter(plane_1_2))
        for l in plane_1_2.elements[1:]:
            rows = plane_1_2.as_array(pencil.conic(int(l)).points)
            assert plane_1_2.verify_oval(rows)

    def test_nucleus_on_every_tangent(self, plane_1_2):
        """Adding the nucleus to a conic gives a hyperoval"""
        pencil = ConicPencil(plane_1_2, pencil_parameter(plane_1_2))
        points = pencil.conic(1).points + [NUCLEUS]
        incidence = plane_1_2.line_incidences(plane_1_2.as_array(points))
        assert set(incidence.counts.tolist()) == {2}

    def test_level_outside_gf_q(self, plane_1_2):
        """Levels must be GF(q) elements"""
        pencil = ConicPencil(plane_1_2, pencil_parameter(plane_1_2))
        outside = next(x for x in range(16) if not plane_1_2.tower.in_gf_q(x))
        with pytest.raises(FieldDomainError):
            pencil.conic(outside)
