"""
Dimension Identities

Exceptional-group constructions, the magic square, coset dimensions and
Euler numbers, the alternating binomial split and the exterior powers of
the Spin(10) spinor with their branchings.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from ..composition_algebras import sphere_dimension
from ..error_handling import DomainError
from ..exact_core import BigCount, binomial
from ..matrix_lie_lab import build_gamma_system, classical_algebra
from .branching import SUGRA_B4, branch_character, get_projection
from .characters import (
    VirtualRep,
    alt_power,
    conjugate_rep,
    decompose,
    irreducible_from_coords,
    weyl_dim,
)
from .root_system import build_root_system, euler_characteristic_coset


def _dim(label: str) -> int:
    return build_root_system(label).dimension


def _u(n: int) -> int:
    """dim u(n) = dim su(n) + 1."""
    return (_dim(f"A{n - 1}") if n > 1 else 0) + 1


def _so(n: int) -> int:
    return classical_algebra("so", n).dimension


def _u_matrix(n: int) -> int:
    """dim u(n) from the realified su(n) basis plus the centre."""
    return classical_algebra("su_realified", n).dimension + 1


def _half_spin_dim(label: str) -> int:
    rs = build_root_system(label)
    half = Fraction(1, 2)
    return weyl_dim(rs, rs.to_weight((half,) * rs.rank))


@dataclass(frozen=True)
class ExceptionalConstruction:
    group: str
    construction: str
    parts: Tuple[int, ...]
    dim_from_roots: int

    @property
    def dim_from_parts(self) -> int:
        return sum(self.parts)

    @property
    def consistent(self) -> bool:
        return self.dim_from_parts == self.dim_from_roots


def exceptional_dimension_table() -> List[ExceptionalConstruction]:
    """Each exceptional algebra as an orthogonal algebra plus a spinor module."""
    spinor_b4 = _half_spin_dim("B4")
    if spinor_b4 != build_gamma_system(9).rep_dim:
        raise DomainError("Spin(9) spinor dimension disagrees with its gamma system")
    rows = [
        ExceptionalConstruction("F4", "so(9) + spinor 16", (_dim("B4"), spinor_b4), _dim("F4")),
        ExceptionalConstruction(
            "E6", "so(10) + u(1) + 2 x spinor 16",
            (_dim("D5"), 1, 2 * _half_spin_dim("D5")), _dim("E6"),
        ),
        ExceptionalConstruction(
            "E7", "so(12) + sp(1) + 2 x spinor 32",
            (_dim("D6"), _dim("A1"), 2 * _half_spin_dim("D6")), _dim("E7"),
        ),
        ExceptionalConstruction("E8", "so(16) + spinor 128", (_dim("D8"), _half_spin_dim("D8")), _dim("E8")),
    ]
    for row in rows:
        logger.debug(f"{row.group}: {'+'.join(map(str, row.parts))} = {row.dim_from_parts} "
                     f"(roots: {row.dim_from_roots})")
    return rows


@dataclass(frozen=True)
class MagicCell:
    row: int
    col: int
    label: str
    dim: int


def magic_square_table() -> List[List[MagicCell]]:
    """The 4 x 4 square over R, C, H, O with dimensions from root systems."""
    labels = [
        [("so(3)", _dim("A1")), ("u(3)", _u(3)), ("sp(3)", _dim("C3")), ("F4", _dim("F4"))],
        [("u(3)", _u(3)), ("u(3)^2", 2 * _u(3)), ("u(6)", _u(6)), ("E6", _dim("E6"))],
        [("sp(3)", _dim("C3")), ("u(6)", _u(6)), ("so(12)", _dim("D6")), ("E7", _dim("E7"))],
        [("F4", _dim("F4")), ("E6", _dim("E6")), ("E7", _dim("E7")), ("E8", _dim("E8"))],
    ]
    return [
        [MagicCell(r + 1, c + 1, label, dim) for c, (label, dim) in enumerate(row)]
        for r, row in enumerate(labels)
    ]


def coset_dimension(g_dim: int, h_dims: Sequence[int]) -> int:
    """dim G/H = dim G - sum of dim H_i."""
    result = g_dim - sum(h_dims)
    if result < 0:
        raise DomainError(f"Subgroup dimension {sum(h_dims)} exceeds group dimension {g_dim}")
    return result


def alternating_binomial_split(n: int) -> Tuple[BigCount, BigCount]:
    """(sum of C(n, k) over even k, sum over odd k)."""
    if n < 1:
        raise DomainError(f"alternating_binomial_split needs n >= 1, got {n}")
    even = sum(binomial(n, k) for k in range(0, n + 1, 2))
    odd = sum(binomial(n, k) for k in range(1, n + 1, 2))
    return even, odd


@dataclass(frozen=True)
class SpinorPowerRow:
    """One degree of the exterior algebra of the Spin(10) spinor."""

    k: int
    su16_dim: int
    spin10: VirtualRep
    o9: Optional[VirtualRep] = None
    o8: Optional[VirtualRep] = None

    @property
    def su16_signed(self) -> int:
        return (-1) ** self.k * self.su16_dim


SPINOR16 = (Fraction(1, 2),) * 5


@lru_cache(maxsize=None)
def spinor_power(k: int) -> VirtualRep:
    """Lambda^k of the Spin(10) spinor 16, decomposed under D5."""
    d5 = build_root_system("D5")
    spinor = irreducible_from_coords(d5, SPINOR16).character()
    return decompose(alt_power(spinor, k))


def spinor_power_row(k: int, branch_o9: bool = False, branch_o8: bool = False) -> SpinorPowerRow:
    if not 0 <= k <= 16:
        raise DomainError(f"Exterior degree of the spinor 16 must be 0..16, got {k}")
    d5 = build_root_system("D5")
    spinor = irreducible_from_coords(d5, SPINOR16).character()
    power = alt_power(spinor, k)
    spin10 = decompose(power)
    o9 = branch_character(power, build_root_system("B4"), get_projection("D5->B4")) if branch_o9 else None
    o8 = branch_character(power, build_root_system("D4"), get_projection("D5->D4")) if branch_o8 else None
    return SpinorPowerRow(k, binomial(16, k), spin10, o9, o8)


def spinor_power_table(max_k: int = 8, branch_o9_upto: int = 3,
                       branch_o8_upto: int = 3) -> List[SpinorPowerRow]:
    rows = [
        spinor_power_row(k, branch_o9=k <= branch_o9_upto, branch_o8=k <= branch_o8_upto)
        for k in range(max_k + 1)
    ]
    logger.info(f"Computed exterior powers of the spinor 16 up to degree {max_k}")
    return rows


def conjugate_symmetry_holds(k: int) -> bool:
    """Lambda^(16-k) of the 16 is the conjugate of Lambda^k."""
    return spinor_power(16 - k) == conjugate_rep(spinor_power(k))


@dataclass(frozen=True)
class CosetIdentity:
    name: str
    description: str
    value: int
    expected: int

    @property
    def holds(self) -> bool:
        return self.value == self.expected


def projective_lines() -> List[CosetIdentity]:
    """Projective lines over R, C, H, O as coset spaces, and their Euler numbers."""
    a1 = build_root_system("A1")
    return [
        CosetIdentity("RP1", "O(2)/O(1)^2", coset_dimension(classical_algebra("so", 2).dimension, [0, 0]), 1),
        CosetIdentity("CP1", "U(2)/U(1)^2", coset_dimension(_u(2), [1, 1]), 2),
        CosetIdentity("HP1", "Sp(2)/Sp(1)^2", coset_dimension(_dim("C2"), [_dim("A1"), _dim("A1")]), 4),
        CosetIdentity("OP1", "Spin(9)/Spin(8)", coset_dimension(_dim("B4"), [_dim("D4")]), 8),
        CosetIdentity("chi(S2)", "|W(A1)|/|W(T1)|", euler_characteristic_coset(a1, [], torus_rank=1), 2),
        CosetIdentity("chi(S4)", "|W(C2)|/|W(A1xA1)|",
                      euler_characteristic_coset(build_root_system("C2"), [a1, a1]), 2),
        CosetIdentity("chi(S8)", "|W(B4)|/|W(D4)|",
                      euler_characteristic_coset(build_root_system("B4"), [build_root_system("D4")]), 2),
    ]


def projective_planes() -> List[CosetIdentity]:
    """Projective planes over R, C, H, O and the Euler number 3 of the last three."""
    a1 = build_root_system("A1")
    return [
        CosetIdentity("RP2", "O(3)/(O(1)xO(2))", coset_dimension(_dim("A1"), [0, 1]), 2),
        CosetIdentity("CP2", "U(3)/(U(1)xU(2))", coset_dimension(_u(3), [1, _u(2)]), 4),
        CosetIdentity("HP2", "Sp(3)/(Sp(1)xSp(2))", coset_dimension(_dim("C3"), [_dim("A1"), _dim("C2")]), 8),
        CosetIdentity("OP2", "F4/Spin(9)", coset_dimension(_dim("F4"), [_dim("B4")]), 16),
        CosetIdentity("chi(CP2)", "|W(A2)|/|W(A1xT1)|",
                      euler_characteristic_coset(build_root_system("A2"), [a1], torus_rank=1), 3),
        CosetIdentity("chi(HP2)", "|W(C3)|/|W(A1xC2)|",
                      euler_characteristic_coset(build_root_system("C3"), [a1, build_root_system("C2")]), 3),
        CosetIdentity("chi(OP2)", "|W(F4)|/|W(B4)|",
                      euler_characteristic_coset(build_root_system("F4"), [build_root_system("B4")]), 3),
    ]


def exceptional_symmetric_spaces() -> List[CosetIdentity]:
    """The 13- and 84-dimensional quotients, at the level of dimensions."""
    return [
        CosetIdentity("M13 (SO(7)/SU(3))", "SO(7)/SU(3)", coset_dimension(_so(7), [_dim("A2")]), 13),
        CosetIdentity("M13 (SO(8)/SU(4))", "SO(8)/SU(4)", coset_dimension(_so(8), [_dim("A3")]), 13),
        CosetIdentity("M84 (SO(15)/Spin(7))", "SO(15)/Spin(7)", coset_dimension(_so(15), [_dim("B3")]), 84),
        CosetIdentity("M84 (SO(16)/Spin(9))", "SO(16)/Spin(9)", coset_dimension(_so(16), [_dim("B4")]), 84),
    ]


def classical_symmetric_spaces(n: int) -> List[CosetIdentity]:
    """U(n)/O(n), Sp(n)/U(n), U(2n)/Sp(n) and O(2n)/U(n) from matrix algebra dimensions."""
    if not 1 <= n <= 4:
        raise DomainError(f"Classical symmetric spaces are tabulated for n = 1..4, got {n}")
    so = classical_algebra("so", n).dimension
    so2n = classical_algebra("so", 2 * n).dimension
    sp = classical_algebra("sp_realified", n).dimension
    return [
        CosetIdentity(f"U({n})/O({n})", "n(n+1)/2", coset_dimension(_u_matrix(n), [so]), n * (n + 1) // 2),
        CosetIdentity(f"Sp({n})/U({n})", "n(n+1)", coset_dimension(sp, [_u_matrix(n)]), n * (n + 1)),
        CosetIdentity(f"U({2 * n})/Sp({n})", "n(2n-1)", coset_dimension(_u_matrix(2 * n), [sp]), n * (2 * n - 1)),
        CosetIdentity(f"O({2 * n})/U({n})", "n(n-1)", coset_dimension(so2n, [_u_matrix(n)]), n * (n - 1)),
    ]


def unit_sphere_series() -> List[CosetIdentity]:
    """Unit spheres of R, C, H, O and Sp(1) = SU(2) = Spin(3) at dimension level."""
    out = [
        CosetIdentity(f"S({name})", f"unit sphere of {name}", sphere_dimension(level), 2 ** level - 1)
        for name, level in (("R", 0), ("C", 1), ("H", 2), ("O", 3))
    ]
    out.extend([
        CosetIdentity("Sp(1)", "dim sp(1)", classical_algebra("sp_realified", 1).dimension, 3),
        CosetIdentity("SU(2)", "dim su(2)", classical_algebra("su_realified", 2).dimension, 3),
        CosetIdentity("Spin(3)", "dim so(3)", classical_algebra("so", 3).dimension, 3),
    ])
    return out


def spin_chain_dimensions() -> List[Tuple[str, int]]:
    """Spin(9) < Spin(10) < Spin(12) < Spin(16)."""
    return [(name, _dim(label)) for name, label in
            (("Spin(9)", "B4"), ("Spin(10)", "D5"), ("Spin(12)", "D6"), ("Spin(16)", "D8"))]


def betti_sum_op2() -> int:
    """
    Total Betti number of F4/Spin(9). The quotient has equal rank, so its
    cohomology sits in even degrees and the total equals the Euler number.
    """
    return euler_characteristic_coset(build_root_system("F4"), [build_root_system("B4")])


@dataclass(frozen=True)
class SugraTriplet:
    graviton: int
    gravitino: int
    three_form: int

    @property
    def bosons(self) -> int:
        return self.graviton + self.three_form

    @property
    def balance(self) -> int:
        return self.bosons - self.gravitino


def sugra_triplet() -> SugraTriplet:
    b4 = build_root_system("B4")
    dims = {name: weyl_dim(b4, b4.to_weight(coords)) for name, coords in SUGRA_B4.items()}
    return SugraTriplet(dims["graviton"], dims["gravitino"], dims["three_form"])
