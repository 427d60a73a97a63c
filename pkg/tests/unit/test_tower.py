"""
Tests for the field tower GF(d) < GF(q) < GF(r).
"""

import numpy as np
import pytest

from src.core.exceptions import FieldConstructionError, FieldDomainError, SizeCapError
from src.fields.tower import FieldTower, TowerParameters, count_Z, tower_make


class TestTowerParameters:
    """Tests for the integer constants"""

    @pytest.mark.parametrize(
        "m,k,q,d,n,N",
        [(1, 1, 2, 2, 3, 1), (1, 2, 4, 2, 5, 3), (2, 1, 4, 4, 15, 1), (2, 2, 16, 4, 51, 5)],
    )
    def test_constants(self, m, k, q, d, n, N):
        """q = 2^(km), d = 2^m, n = (q+1)(d-1), N = (q-1)/(d-1)"""
        p = TowerParameters.from_mk(m, k)
        assert (p.q, p.d, p.n, p.N, p.r) == (q, d, n, N, q * q)
        assert p.n * p.N == p.r - 1

    def test_invalid_parameters(self):
        """m and k must be positive and 2km must respect the cap"""
        with pytest.raises(FieldConstructionError):
            FieldTower(0, 1)
        with pytest.raises(SizeCapError):
            FieldTower(13, 1)


class TestSubfields:
    """Tests for GF(q) and GF(d) inside GF(r)"""

    def test_subfield_sizes(self, tower_2_2):
        """GF(16) and GF(4) inside GF(256), each the fixed points of its Frobenius power"""
        assert len(tower_2_2.gf_q) == 16
        assert len(tower_2_2.gf_d) == 4
        assert tower_2_2.count_fixed_points(16) == 16
        assert tower_2_2.count_fixed_points(4) == 4

    def test_gf_d_inside_gf_q(self, tower_2_2):
        """GF(d) is a subfield of GF(q)"""
        assert set(tower_2_2.gf_d.tolist()) <= set(tower_2_2.gf_q.tolist())

    def test_q_index(self, tower_1_2):
        """q_index_array inverts the sorted list of GF(q)"""
        assert np.array_equal(tower_1_2.q_index_array(tower_1_2.gf_q), np.arange(4))

    def test_missing_subfield(self, tower_1_2):
        """GF(16) has no subfield of size 8"""
        with pytest.raises(FieldDomainError):
            tower_1_2.subfield_elements(8)


class TestTraceAndClasses:
    """Tests for the trace, beta and the cyclotomic classes"""

    def test_trace_lands_in_gf_q(self, tower_1_2):
        """Tr(x) = x + x^q takes each GF(q) value q times"""
        traces = tower_1_2.trace_array(tower_1_2.field.elements())
        values, counts = np.unique(traces, return_counts=True)
        assert values.tolist() == tower_1_2.gf_q.tolist()
        assert set(counts.tolist()) == {4}

    def test_beta_order(self, tower_2_2):
        """beta = alpha^N has order n"""
        assert tower_2_2.field.multiplicative_order(tower_2_2.beta) == 51

    def test_ord_n_of_q(self, tower_1_1, tower_1_2, tower_2_2):
        """q has order 2 modulo n"""
        for tower in (tower_1_1, tower_1_2, tower_2_2):
            assert tower.ord_n_of_q() == 2

    def test_gcd(self, tower_2_2):
        """gcd(q + 1, N) = 1"""
        assert tower_2_2.gcd_q_plus_one_N() == 1

    def test_cyclotomic_classes_partition(self, tower_1_2):
        """The N classes of size n tile GF(r)*"""
        classes = [tower_1_2.cyclotomic_class(i) for i in range(3)]
        assert all(len(c) == 5 for c in classes)
        assert sorted(np.concatenate(classes).tolist()) == list(range(1, 16))

    def test_class_index_range(self, tower_1_2):
        """Indices outside [0, N) are rejected"""
        with pytest.raises(FieldDomainError):
            tower_1_2.cyclotomic_class(3)


class TestSolutionCounts:
    """Tests for Z(a, b) = |{x : Tr(a x^N) = b}|"""

    @pytest.mark.parametrize("mk", [(1, 2), (2, 1), (2, 2)])
    def test_z_values(self, mk):
        """Z(a, 0) = (d-1)N + 1 and Z(a, b) is 0 or dN otherwise, for every a"""
        tower = tower_make(*mk)
        d, N = tower.d, tower.N
        for a in range(1, tower.r):
            fibers = tower.z_fiber_counts(a)
            assert fibers[0] == (d - 1) * N + 1
            assert {c for b, c in fibers.items() if b != 0} <= {0, d * N}
            assert sum(fibers.values()) == tower.r

    def test_count_z_matches_fibers(self, tower_1_2):
        """The scalar count agrees with the fiber table"""
        fibers = tower_1_2.z_fiber_counts(5)
        for b, count in fibers.items():
            assert count_Z(tower_1_2, 5, b) == count

    def test_count_z_domain(self, tower_1_2):
        """a = 0 and b outside GF(q) are rejected"""
        with pytest.raises(FieldDomainError):
            tower_1_2.count_z(0, 0)
        outside = next(x for x in range(16) if not tower_1_2.in_gf_q(x))
        with pytest.raises(FieldDomainError):
            tower_1_2.count_z(1, outside)


class TestModulusOverride:
    """Tests for rebuilding the tower under another modulus"""

    def test_counts_do_not_depend_on_modulus(self):
        """Z(1, 0) and the subfield sizes are the same for x^4 + x^3 + 1"""
        base = tower_make(1, 2)
        other = tower_make(1, 2, 0b11001)
        assert other.field.modulus == 0b11001
        assert len(other.gf_q) == len(base.gf_q)
        assert other.count_z(1, 0) == base.count_z(1, 0) == 4
