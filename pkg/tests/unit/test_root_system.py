"""
Unit tests for root systems and Weyl group data
"""

from fractions import Fraction

import pytest

from octoverify.error_handling import DomainError, EnumerationRefusedError
from octoverify.root_rep_engine.root_system import (
    build_root_system,
    degrees,
    euler_characteristic_coset,
    exponents,
    parse_label,
    root_system_isomorphic,
    sphere_decomposition,
    weyl_enumerate,
    weyl_order,
)


class TestConstruction:
    """Test building root systems from labels"""

    @pytest.mark.parametrize("label,positive_roots,dimension", [
        ("A1", 1, 3),
        ("A3", 6, 15),
        ("B3", 9, 21),
        ("C3", 9, 21),
        ("D4", 12, 28),
        ("D5", 20, 45),
        ("G2", 6, 14),
        ("F4", 24, 52),
        ("E6", 36, 78),
        ("E7", 63, 133),
        ("E8", 120, 248),
    ])
    def test_root_counts(self, label, positive_roots, dimension):
        """Test positive root counts and algebra dimensions"""
        rs = build_root_system(label)
        assert rs.number_of_positive_roots == positive_roots
        assert rs.dimension == dimension
        assert rs.label == label

    def test_type_and_rank_arguments(self):
        """Test the two-argument form and lower-case labels"""
        assert build_root_system("b", 4) == build_root_system("B4")
        assert build_root_system("e6").label == "E6"
        assert parse_label(" d5 ") == ("D", 5)

    @pytest.mark.parametrize("label", ["D2", "B1", "E9", "F5", "G3", "A0"])
    def test_invalid_types(self, label):
        """Test rank limits of each family"""
        with pytest.raises(DomainError):
            build_root_system(label)

    def test_unparseable_label(self):
        """Test labels outside the A-G families"""
        with pytest.raises(DomainError, match="Cannot parse"):
            build_root_system("X5")
        with pytest.raises(DomainError):
            build_root_system("so(10)")

    def test_cartan_diagonal(self):
        """Test that Cartan matrices have 2 on the diagonal"""
        for label in ("A4", "B3", "C4", "D5", "G2", "F4", "E6"):
            rs = build_root_system(label)
            assert all(rs.cartan_matrix[i][i] == 2 for i in range(rs.rank))


class TestExponents:
    """Test exponents, degrees and Weyl group orders"""

    @pytest.mark.parametrize("label,expected", [
        ("A3", (1, 2, 3)),
        ("B3", (1, 3, 5)),
        ("G2", (1, 5)),
        ("D4", (1, 3, 3, 5)),
        ("B4", (1, 3, 5, 7)),
        ("F4", (1, 5, 7, 11)),
        ("E6", (1, 4, 5, 7, 8, 11)),
        ("E7", (1, 5, 7, 9, 11, 13, 17)),
        ("E8", (1, 7, 11, 13, 17, 19, 23, 29)),
    ])
    def test_exponents(self, label, expected):
        """Test exponents from the height partition of positive roots"""
        assert exponents(build_root_system(label)) == expected

    def test_sphere_decompositions(self):
        """Test odd sphere dimensions and that they add up to the group dimension"""
        assert sphere_decomposition(build_root_system("B3")) == (3, 7, 11)
        assert sphere_decomposition(build_root_system("D4")) == (3, 7, 7, 11)
        assert sphere_decomposition(build_root_system("B4")) == (3, 7, 11, 15)
        assert sphere_decomposition(build_root_system("F4")) == (3, 11, 15, 23)
        for label in ("G2", "E6", "E8"):
            rs = build_root_system(label)
            assert sum(sphere_decomposition(rs)) == rs.dimension

    @pytest.mark.parametrize("label,order", [
        ("A3", 24),
        ("B3", 48),
        ("G2", 12),
        ("D4", 192),
        ("D5", 1920),
        ("F4", 1152),
        ("E6", 51840),
        ("E7", 2903040),
        ("E8", 696729600),
    ])
    def test_weyl_orders(self, label, order):
        """Test |W| as the product of degrees"""
        rs = build_root_system(label)
        assert weyl_order(rs) == order
        assert degrees(rs) == tuple(m + 1 for m in exponents(rs))

    @pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2", "D4", "F4"])
    def test_enumeration_matches_degree_product(self, label):
        """Test explicit enumeration against the degree product"""
        rs = build_root_system(label)
        assert weyl_enumerate(rs) == weyl_order(rs)

    @pytest.mark.slow
    def test_enumerate_e6(self):
        """Test explicit enumeration of W(E6)"""
        assert weyl_enumerate(build_root_system("E6")) == 51840

    @pytest.mark.slow
    @pytest.mark.parametrize("label,order", [
        ("A8", 362880),
        ("B7", 645120),
        ("C7", 645120),
        ("D7", 322560),
        ("D8", 5160960),
    ])
    def test_enumerate_large_classical(self, label, order):
        """Test enumeration of the largest groups below the refusal cap"""
        rs = build_root_system(label)
        assert weyl_enumerate(rs) == weyl_order(rs) == order

    def test_enumeration_cap(self):
        """Test that large groups are refused"""
        with pytest.raises(EnumerationRefusedError, match="enumeration cap"):
            weyl_enumerate(build_root_system("E8"))
        with pytest.raises(EnumerationRefusedError):
            weyl_enumerate(build_root_system("B3"), cap=10)


class TestCosets:
    """Test Euler characteristics of equal-rank quotients"""

    def test_euler_characteristics(self):
        """Test chi(E6/D5 T1) = 27 and chi(F4/B4) = 3"""
        e6, d5 = build_root_system("E6"), build_root_system("D5")
        f4, b4 = build_root_system("F4"), build_root_system("B4")
        assert euler_characteristic_coset(e6, [d5], torus_rank=1) == 27
        assert euler_characteristic_coset(f4, [b4]) == 3

    def test_rank_mismatch(self):
        """Test that unequal ranks are rejected"""
        with pytest.raises(DomainError, match="equal rank"):
            euler_characteristic_coset(build_root_system("E6"), [build_root_system("D5")])


class TestIsomorphism:
    """Test low-rank coincidences"""

    def test_coincidences(self):
        """Test B2 = C2 and D3 = A3"""
        assert root_system_isomorphic(build_root_system("B2"), build_root_system("C2"))
        assert root_system_isomorphic(build_root_system("D3"), build_root_system("A3"))

    def test_non_isomorphic(self):
        """Test that B3 and C3 differ"""
        assert not root_system_isomorphic(build_root_system("B3"), build_root_system("C3"))
        assert not root_system_isomorphic(build_root_system("A2"), build_root_system("G2"))


class TestWeights:
    """Test scaled weight arithmetic"""

    def setup_method(self):
        """Setup test fixtures"""
        self.d5 = build_root_system("D5")
        self.b3 = build_root_system("B3")
        self.half = Fraction(1, 2)

    def test_coordinates_roundtrip(self):
        """Test to_weight and coords"""
        spinor = self.d5.to_weight([self.half] * 5)
        assert self.d5.coords(spinor) == (self.half,) * 5
        assert self.d5.is_dominant(spinor)
        assert self.d5.dynkin_labels(spinor) == (0, 0, 0, 0, 1)

    def test_dominant_conjugate(self):
        """Test that an odd number of sign flips lands on the cospinor"""
        w = self.d5.to_weight([-self.half] * 5)
        conj = self.d5.dominant_conjugate(w)
        assert self.d5.coords(conj) == (self.half,) * 4 + (-self.half,)

    def test_orbit_sizes(self):
        """Test the vector orbit of B3 and the spinor orbit of D5"""
        assert len(self.b3.orbit(self.b3.to_weight([1, 0, 0]))) == 6
        assert len(self.d5.orbit(self.d5.to_weight([self.half] * 5))) == 16

    def test_non_integral_weight(self):
        """Test rejection of weights off the lattice"""
        with pytest.raises(DomainError, match="not an integral weight"):
            self.b3.to_weight([self.half, 0, 0])
        with pytest.raises(DomainError, match="coordinates"):
            self.b3.to_weight([1, 0])

    def test_from_dynkin_length(self):
        """Test the Dynkin label count"""
        with pytest.raises(DomainError, match="Dynkin labels"):
            self.b3.from_dynkin([1, 0])
