"""
Unit tests for markdown rendering
"""

import pytest

from octoverify.error_handling import UsageError
from octoverify.rendering import (
    TABLE_NAMES,
    printed_label_dimension,
    render_decomposition,
    render_magic_square,
    render_spheres,
    render_sugra_triplet,
    render_table,
    render_table35,
    superscript,
    twisted_product,
)
from octoverify.root_rep_engine.characters import VirtualRep
from octoverify.root_rep_engine.root_system import build_root_system


class TestHelpers:
    """Test formatting helpers"""

    def test_superscripts(self):
        """Test superscript digits and twisted products"""
        assert superscript(15) == "¹⁵"
        assert twisted_product([3, 7, 11]) == "S³ ×̃ S⁷ ×̃ S¹¹"

    @pytest.mark.parametrize("label,dimension", [
        ("O(3)", 3),
        ("O(16)", 120),
        ("U(3)", 9),
        ("U(3)^2", 18),
        ("U(6)", 36),
        ("Sp(3)", 21),
        ("E7", 133),
    ])
    def test_printed_label_dimension(self, label, dimension):
        """Test dimensions of printed group labels"""
        assert printed_label_dimension(label) == dimension


class TestTables:
    """Test the rendered tables"""

    def test_magic_square(self):
        """Test the square and its single annotation"""
        text = render_magic_square()
        assert "| O | F4 (52) | E6 (78) | E7 (133) | E8 (248) |" in text
        assert "so(12) (66)" in text
        assert "cell (3,3) is printed as O(16) (dimension 120)" in text
        assert text.count("is printed as") == 1

    def test_sugra_triplet(self):
        """Test the multiplet table"""
        text = render_sugra_triplet()
        assert "44 − 128 + 84" in text
        assert "| gravitino psi | (3/2, 1/2, 1/2, 1/2) | 128 | - |" in text
        assert "Bosons 128, fermions 128, balance 0." in text

    def test_spheres(self):
        """Test the sphere table for one algebra and the default list"""
        assert "S³ ×̃ S⁷ ×̃ S¹¹ | 21" in render_spheres("B3")
        default = render_spheres()
        assert "| Spin(8) | D4 | 1, 3, 3, 5 | S³ ×̃ S⁷ ×̃ S⁷ ×̃ S¹¹ | 28 |" in default
        assert "| F4 | F4 | 1, 5, 7, 11 | S³ ×̃ S¹¹ ×̃ S¹⁵ ×̃ S²³ | 52 |" in default

    def test_table35_low_degrees(self):
        """Test the first rows of the spinor power table"""
        text = render_table35(max_k=3)
        assert "| 3 | -560 | 560 | 128 + 432 |" in text
        assert "| 1 | -16 | 16 | 16 | 8 + 8 |" in text

    @pytest.mark.slow
    def test_table35_elided_cells(self):
        """Test that cells beyond the branching range are quoted"""
        text = render_table(TABLE_NAMES[2])
        assert "| 8 | +12870 | 660 + 4125 + 8085 | (" in text

    def test_unknown_table(self):
        """Test the usage error for unknown names"""
        with pytest.raises(UsageError) as exc_info:
            render_table("periodic")
        assert exc_info.value.token == "periodic"

    def test_decomposition(self):
        """Test the decomposition table"""
        a1 = build_root_system("A1")
        rep = VirtualRep(a1, {a1.from_dynkin([2]): 1, a1.zero_weight(): -1})
        text = render_decomposition("test", rep)
        assert text.startswith("## test")
        assert "3 - 1 (dimension 2)" in text
        assert "| -1 | 0, 0 | 1 |" in text
