"""
Unit tests for the Cayley-Dickson algebras
"""

import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from octoverify.composition_algebras import (
    CDElement,
    StructureConstants,
    ThreeForm,
    associator,
    commutator,
    export_structure_constants,
    inverse,
    norm,
    sphere_dimension,
    structure_3form,
)
from octoverify.error_handling import DivisionByZeroError, DomainError

FIXTURES = Path(__file__).parent.parent / "fixtures"


def e(i, level=3):
    return CDElement.basis(level, i)


def random_element(rng, level):
    return CDElement.of(level, [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2 ** level)])


def random_octonion(rng):
    return random_element(rng, 3)


class TestBasisProducts:
    """Test the octonion multiplication table"""

    def setup_method(self):
        """Setup test fixtures"""
        with open(FIXTURES / "octonion_products.json", encoding="utf-8") as f:
            self.fixture = json.load(f)

    def test_unit_law(self):
        """Test that e0 is a two-sided unit"""
        for i in range(8):
            assert e(0) * e(i) == e(i)
            assert e(i) * e(0) == e(i)

    def test_imaginary_units_square_to_minus_one(self):
        """Test e_i^2 = -1 for i > 0"""
        for i in range(1, 8):
            assert e(i) * e(i) == CDElement.real(3, -1)

    def test_oriented_triples(self):
        """Test every oriented triple and its cyclic and reversed forms"""
        for i, j, k, sign in self.fixture["triples"]:
            assert e(i) * e(j) == e(k).scale(sign)
            assert e(j) * e(k) == e(i).scale(sign)
            assert e(k) * e(i) == e(j).scale(sign)
            assert e(j) * e(i) == e(k).scale(-sign)

    def test_fixture_associator(self):
        """Test the quoted associator"""
        for entry in self.fixture["associators"]:
            a, b, c = (e(i) for i in entry["args"])
            assert str(associator(a, b, c)) == entry["result"]

    def test_quaternion_product(self):
        """Test e1 e2 = e3 in the quaternions"""
        assert e(1, 2) * e(2, 2) == e(3, 2)
        assert commutator(e(1, 2), e(2, 2)) == e(3, 2).scale(2)

    def test_level_mismatch(self):
        """Test multiplying across levels"""
        with pytest.raises(DomainError, match="levels"):
            e(1, 2) * e(1, 3)


class TestElement:
    """Test element construction, norm and inverse"""

    def test_invalid_level_and_coordinates(self):
        """Test construction guards"""
        with pytest.raises(DomainError):
            CDElement.of(4, [0] * 16)
        with pytest.raises(DomainError, match="needs 8 coordinates"):
            CDElement.of(3, [1, 2])
        with pytest.raises(DomainError):
            CDElement.basis(2, 4)

    def test_norm_is_sum_of_squares(self):
        """Test the norm formula"""
        x = CDElement.of(3, [1, 2, 0, 0, 0, 0, 0, "1/2"])
        assert norm(x) == Fraction(21, 4)

    def test_inverse(self):
        """Test x x^-1 = 1"""
        x = CDElement.of(3, [1, -1, 2, 0, 3, 0, 0, 1])
        assert x * inverse(x) == CDElement.real(3, 1)
        assert inverse(x) * x == CDElement.real(3, 1)

    def test_zero_has_no_inverse(self):
        """Test DivisionByZeroError on zero"""
        with pytest.raises(DivisionByZeroError):
            inverse(CDElement.zero(3))

    def test_str(self):
        """Test the textual form of elements"""
        assert str(e(3)) == "e3"
        assert str(e(7).scale(-2)) == "-2*e7"
        assert str(CDElement.of(1, ["1/2", "-1/2"])) == "1/2*e0 - 1/2*e1"
        assert str(CDElement.zero(2)) == "0"

    def test_sphere_dimensions(self):
        """Test S0, S1, S3, S7"""
        assert [sphere_dimension(level) for level in range(4)] == [0, 1, 3, 7]
        with pytest.raises(DomainError):
            sphere_dimension(4)


class TestAlgebraLaws:
    """Test composition, alternativity and the Moufang identities"""

    def setup_method(self):
        """Setup test fixtures"""
        self.rng = random.Random(4242)

    def test_associator_of_basis(self):
        """Test [e1, e2, e4] = -2 e7"""
        assert associator(e(1), e(2), e(4)) == e(7).scale(-2)

    def test_quaternions_associate(self):
        """Test that the associator vanishes at level 2"""
        units = [e(i, 2) for i in range(4)]
        for a in units:
            for b in units:
                for c in units:
                    assert associator(a, b, c).is_zero()

    @pytest.mark.parametrize("level", [0, 1, 2, 3])
    def test_norm_multiplicative(self, level):
        """Test N(xy) = N(x) N(y) on 1000 random pairs at each level"""
        for _ in range(1000):
            x, y = random_element(self.rng, level), random_element(self.rng, level)
            assert norm(x * y) == norm(x) * norm(y)

    @pytest.mark.parametrize("level", [0, 1, 2, 3])
    def test_no_zero_divisors(self, level):
        """Test that products of nonzero elements are nonzero"""
        for _ in range(1000):
            x, y = random_element(self.rng, level), random_element(self.rng, level)
            if x.is_zero() or y.is_zero():
                continue
            assert not (x * y).is_zero()

    @pytest.mark.parametrize("level", [0, 1])
    def test_commutative_up_to_complex(self, level):
        """Test that the commutator vanishes for reals and complex numbers"""
        for _ in range(200):
            x, y = random_element(self.rng, level), random_element(self.rng, level)
            assert commutator(x, y).is_zero()

    def test_quaternions_do_not_commute(self):
        """Test [e1, e2] = 2 e3 in the quaternions"""
        assert commutator(e(1, 2), e(2, 2)) == e(3, 2).scale(2)

    @pytest.mark.slow
    def test_alternative_and_moufang(self):
        """Test alternativity and the Moufang identities on 1000 random triples"""
        for _ in range(1000):
            x, y, z = (random_octonion(self.rng) for _ in range(3))
            assert associator(x, x, y).is_zero()
            assert associator(y, x, x).is_zero()
            assert associator(x, y, x).is_zero()
            assert z * (x * (z * y)) == ((z * x) * z) * y
            assert x * (z * (y * z)) == ((x * z) * y) * z
            assert (z * x) * (y * z) == (z * (x * y)) * z

    def test_associator_alternates(self):
        """Test that swapping two arguments negates the associator"""
        for _ in range(50):
            x, y, z = (random_octonion(self.rng) for _ in range(3))
            assert associator(x, y, z) == -associator(y, x, z)
            assert associator(x, y, z) == -associator(x, z, y)


class TestStructureConstants:
    """Test the exported multiplication table"""

    def test_dimensions_and_unit(self):
        """Test table sizes and the unit"""
        for level in range(4):
            constants = export_structure_constants(level)
            assert constants.dimension == 2 ** level
            assert constants.is_unital()

    def test_table_reproduces_products(self):
        """Test that the bilinear extension matches the recursive product"""
        rng = random.Random(7)
        constants = export_structure_constants(3)
        for _ in range(20):
            x, y = random_octonion(rng), random_octonion(rng)
            assert constants.multiply(x.coords, y.coords) == (x * y).coords

    def test_json_roundtrip(self):
        """Test to_json / from_json"""
        constants = export_structure_constants(3)
        assert StructureConstants.from_json(json.loads(json.dumps(constants.to_json()))) == constants

    def test_out_of_range_level(self):
        """Test invalid levels"""
        with pytest.raises(DomainError):
            export_structure_constants(5)


class TestThreeForm:
    """Test alternating 3-forms"""

    def test_structure_form(self):
        """Test the octonion 3-form"""
        phi = structure_3form()
        assert phi.dimension == 7
        assert len(phi.nonzero_triples()) == 7
        assert phi(1, 2, 3) == 1
        assert phi(2, 1, 3) == -1
        assert phi(1, 6, 7) == -1
        assert phi(1, 1, 2) == 0

    def test_from_triples_normalises_order(self):
        """Test that triples are stored sorted with their sign"""
        form = ThreeForm.from_triples(4, {(2, 1, 3): 1})
        assert form(1, 2, 3) == -1
        assert form(3, 1, 2) == -1

    def test_invalid_triple(self):
        """Test rejected index triples"""
        with pytest.raises(DomainError):
            ThreeForm.from_triples(3, {(1, 2, 4): 1})
        with pytest.raises(DomainError):
            ThreeForm.from_triples(3, {(1, 1, 2): 1})

    def test_volume_form(self):
        """Test the volume form guard"""
        assert ThreeForm.volume()(3, 2, 1) == -1
        with pytest.raises(DomainError):
            ThreeForm.volume(4)
