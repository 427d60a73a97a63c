"""
Tests for GF(2^e) arithmetic.
"""

import numpy as np
import pytest

from src.core.exceptions import FieldConstructionError, FieldDomainError, ReducibleModulusError, SizeCapError
from src.fields.binary_field import (
    BinaryField,
    canonical_modulus,
    factor_integer,
    field_make,
    find_factor,
    is_irreducible,
    poly_mod,
)


@pytest.fixture(scope="module")
def gf16():
    return BinaryField(field_make(4))


class TestPolynomials:
    """Tests for GF(2)[x] helpers"""

    def test_poly_mod(self):
        """x^4 reduces to x + 1 modulo x^4 + x + 1"""
        assert poly_mod(0b10000, 0b10011) == 0b11

    def test_canonical_moduli(self):
        """Smallest irreducible polynomial of small degrees"""
        assert canonical_modulus(2) == 0b111
        assert canonical_modulus(3) == 0b1011
        assert canonical_modulus(4) == 0b10011

    def test_reducible_polynomial_has_factor(self):
        """x^4 + 1 = (x + 1)^4"""
        assert find_factor(0b10001) == 0b11
        assert not is_irreducible(0b10001)
        assert is_irreducible(0b10011)

    def test_factor_integer(self):
        """Distinct prime factors in ascending order"""
        assert factor_integer(255) == [3, 5, 17]
        assert factor_integer(15) == [3, 5]
        assert factor_integer(7) == [7]


class TestFieldMake:
    """Tests for field_make"""

    def test_reducible_override_rejected(self):
        """The rejection names the factor it found"""
        with pytest.raises(ReducibleModulusError) as exc_info:
            field_make(4, 0b10001)
        assert exc_info.value.factor == 0b11

    def test_wrong_degree_override_rejected(self):
        """A degree-2 modulus cannot define GF(16)"""
        with pytest.raises(ReducibleModulusError) as exc_info:
            field_make(4, 0b111)
        assert exc_info.value.factor is None

    def test_valid_override_kept(self):
        """x^4 + x^3 + 1 is irreducible"""
        assert field_make(4, 0b11001).modulus == 0b11001

    def test_degree_bounds(self):
        """Nonpositive degrees and degrees past the cap are refused"""
        with pytest.raises(FieldConstructionError):
            field_make(0)
        with pytest.raises(SizeCapError):
            field_make(64)


class TestBinaryField:
    """Tests for scalar and array arithmetic"""

    def test_primitive_element(self, gf16):
        """x generates GF(16)* modulo x^4 + x + 1"""
        assert gf16.primitive_element == 2
        assert gf16.multiplicative_order(2) == 15

    def test_multiplicative_order(self, gf16):
        """x^3 has order 5 and x^5 has order 3"""
        assert gf16.multiplicative_order(gf16.pow(2, 3)) == 5
        assert gf16.multiplicative_order(gf16.pow(2, 5)) == 3
        assert not gf16.is_primitive(gf16.pow(2, 3))

    def test_inverse(self, gf16):
        """x * x^-1 = 1 for every nonzero x"""
        for x in range(1, 16):
            assert gf16.mul(x, gf16.inv(x)) == 1

    def test_zero_has_no_inverse(self, gf16):
        """inv(0), log(0) and order(0) are outside the domain"""
        with pytest.raises(FieldDomainError):
            gf16.inv(0)
        with pytest.raises(FieldDomainError):
            gf16.log(0)
        with pytest.raises(FieldDomainError):
            gf16.multiplicative_order(0)

    def test_array_product_matches_scalar(self, gf16):
        """Table lookup and shift-and-add agree on all pairs"""
        a, b = np.meshgrid(np.arange(16), np.arange(16), indexing="ij")
        expected = np.array([[gf16.mul(int(x), int(y)) for y in range(16)] for x in range(16)])
        assert np.array_equal(gf16.mul_array(a, b), expected)
        assert np.array_equal(gf16.mul_bitserial_array(a, b), expected)

    def test_exp_log_tables(self, gf16):
        """exp and log are inverse bijections on GF(16)*"""
        assert sorted(gf16.exp_table.tolist()) == list(range(1, 16))
        for x in range(1, 16):
            assert gf16.exp(gf16.log(x)) == x

    def test_pow_array(self, gf16):
        """x^16 = x on the whole field, and 0^e = 0 for e > 0"""
        elements = gf16.elements()
        assert np.array_equal(gf16.pow_array(elements, 16), elements)
        assert gf16.pow_array(np.array([0]), 3)[0] == 0

    def test_frobenius_is_additive(self, gf16):
        """(x + y)^2 = x^2 + y^2"""
        for x in range(16):
            for y in range(16):
                assert gf16.frobenius(x ^ y) == gf16.frobenius(x) ^ gf16.frobenius(y)
