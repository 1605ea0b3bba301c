"""
Matrix Lie Algebras

Concrete Lie subalgebras of gl(n, R) built from octonion multiplication:
left multiplication operators, gamma systems on R^8 and R^16, their spin
algebras, derivation and 3-form stabilizer algebras, Lie closures and point
stabilizers with their orbit tangent ranks.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from .composition_algebras import (
    CDElement,
    StructureConstants,
    ThreeForm,
    export_structure_constants,
)
from .error_handling import DomainError, InternalError, UnsupportedError, handle_errors
from .exact_core import (
    ExactMatrix,
    ScalarLike,
    SpanBasis,
    Vector,
    nullspace_basis,
    rank,
    scalar_to_str,
    to_scalar,
    to_vector,
)

MAX_GAMMAS = 9


@dataclass(frozen=True)
class MatrixAlgebra:
    """Linearly independent n x n matrices spanning a subspace of gl(n)."""

    ambient_dim: int
    basis: Tuple[ExactMatrix, ...]
    closed_under_bracket: bool = False
    label: str = ""

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @classmethod
    def spanned_by(cls, ambient_dim: int, matrices: Sequence[ExactMatrix],
                   closed_under_bracket: bool = False, label: str = "") -> "MatrixAlgebra":
        """Keep the first linearly independent subfamily of matrices."""
        span = SpanBasis(ambient_dim * ambient_dim)
        kept = []
        for m in matrices:
            if (m.rows, m.cols) != (ambient_dim, ambient_dim):
                raise DomainError(
                    f"Expected {ambient_dim}x{ambient_dim} matrices, got {m.rows}x{m.cols}"
                )
            if span.add(m.flatten()):
                kept.append(m)
        return cls(ambient_dim, tuple(kept), closed_under_bracket, label)

    def span_basis(self) -> SpanBasis:
        span = SpanBasis(self.ambient_dim * self.ambient_dim)
        for m in self.basis:
            span.add(m.flatten())
        return span

    def contains(self, m: ExactMatrix) -> bool:
        return self.span_basis().contains(m.flatten())

    def is_linearly_independent(self) -> bool:
        if not self.basis:
            return True
        return rank([m.flatten() for m in self.basis]) == self.dimension

    def is_closed(self) -> bool:
        """Bracket-membership test on all pairs of basis elements."""
        span = self.span_basis()
        return all(
            span.contains(x.commutator(y).flatten())
            for x, y in itertools.combinations(self.basis, 2)
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "ambient_dim": self.ambient_dim,
            "basis": [[scalar_to_str(x) for x in m.flatten()] for m in self.basis],
        }

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "MatrixAlgebra":
        n = int(data["ambient_dim"])  # type: ignore[arg-type]
        basis = tuple(
            ExactMatrix(n, n, tuple(to_scalar(x) for x in flat))
            for flat in data["basis"]  # type: ignore[union-attr]
        )
        return cls(n, basis)


def same_span(a: MatrixAlgebra, b: MatrixAlgebra) -> bool:
    """True if two algebras span the same subspace of gl(n)."""
    if a.ambient_dim != b.ambient_dim or a.dimension != b.dimension:
        return False
    stacked = [m.flatten() for m in a.basis + b.basis]
    return rank(stacked) == a.dimension if stacked else True


def left_multiplication_matrix(x: CDElement) -> ExactMatrix:
    """Matrix of y -> x y in the basis e0..e_{2^level - 1}."""
    n = x.dimension
    columns = [(x * CDElement.basis(x.level, j)).coords for j in range(n)]
    return ExactMatrix.from_rows([[columns[j][i] for j in range(n)] for i in range(n)])


def left_multiplication_operators() -> List[ExactMatrix]:
    """L1..L7 on R^8 = O, with La(x) = ea x."""
    return [left_multiplication_matrix(CDElement.basis(3, a)) for a in range(1, 8)]


@dataclass(frozen=True)
class GammaSystem:
    """
    Pairwise anticommuting generators with gamma_i^2 = signature * I.

    The eight-dimensional systems (n <= 7) are the octonion operators, which
    are skew and square to -I; the sixteen-dimensional ones are symmetric and
    square to +I.
    """

    n: int
    rep_dim: int
    gammas: Tuple[ExactMatrix, ...]
    signature: int = 1

    def clifford_defect(self) -> List[Tuple[int, int]]:
        """Index pairs violating gamma_i gamma_j + gamma_j gamma_i = 2 signature delta_ij I."""
        identity = ExactMatrix.identity(self.rep_dim)
        bad = []
        for i in range(self.n):
            for j in range(i, self.n):
                anti = self.gammas[i] @ self.gammas[j] + self.gammas[j] @ self.gammas[i]
                expected = identity.scale(2 * self.signature) if i == j else ExactMatrix.zeros(self.rep_dim)
                if anti != expected:
                    bad.append((i, j))
        return bad

    def is_valid(self) -> bool:
        if self.clifford_defect():
            return False
        if self.signature == 1:
            return all(g.is_symmetric() for g in self.gammas)
        return all(g.is_skew_symmetric() for g in self.gammas)


@handle_errors(operation="build_gamma_system")
def build_gamma_system(n: int) -> GammaSystem:
    """Gamma matrices for 1 <= n <= 9 built from octonion left multiplications."""
    if n < 1:
        raise DomainError(f"A gamma system needs at least one generator, got {n}")
    if n > MAX_GAMMAS:
        raise UnsupportedError(f"Gamma systems are supported up to n = {MAX_GAMMAS}, got {n}")

    ops = left_multiplication_operators()
    if n <= 7:
        system = GammaSystem(n, 8, tuple(ops[:n]), signature=-1)
    else:
        zero = ExactMatrix.zeros(8)
        identity = ExactMatrix.identity(8)
        gammas = [ExactMatrix.from_blocks([[zero, op], [-op, zero]]) for op in ops]
        gammas.append(ExactMatrix.from_blocks([[zero, identity], [identity, zero]]))
        if n == 9:
            chirality = gammas[0]
            for g in gammas[1:]:
                chirality = chirality @ g
            if chirality @ chirality != ExactMatrix.identity(16):
                chirality = -chirality
            gammas.append(chirality)
        system = GammaSystem(n, 16, tuple(gammas), signature=1)

    if not system.is_valid():
        raise InternalError(f"Gamma system for n = {n} violates the Clifford relations")
    logger.debug(f"Built gamma system n={n} on R^{system.rep_dim}")
    return system


def spin_algebra(g: GammaSystem) -> MatrixAlgebra:
    """Bivectors gamma_i gamma_j, i < j."""
    bivectors = [g.gammas[i] @ g.gammas[j] for i, j in itertools.combinations(range(g.n), 2)]
    algebra = MatrixAlgebra(g.rep_dim, tuple(bivectors), closed_under_bracket=True,
                            label=f"spin({g.n})")
    logger.info(f"spin({g.n}) on R^{g.rep_dim} has dimension {algebra.dimension}")
    return algebra


def _algebra_from_nullspace(n: int, kernel: List[Vector], label: str) -> MatrixAlgebra:
    basis = tuple(ExactMatrix(n, n, v) for v in kernel)
    return MatrixAlgebra(n, basis, closed_under_bracket=True, label=label)


@handle_errors(operation="derivation_algebra")
def derivation_algebra(s: StructureConstants) -> MatrixAlgebra:
    """
    Derivations D(xy) = D(x)y + xD(y) of a unital algebra table.

    With D e_p = sum_k D[k][p] e_k the p-th component of the Leibniz rule on
    (e_i, e_j) is sum_k c_ijk D[p][k] - sum_m c_mjp D[m][i] - sum_m c_imp D[m][j].
    """
    n = s.dimension
    equations: List[List[Fraction]] = []
    for i in range(n):
        for j in range(n):
            for p in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[p * n + k] += s.constant(i, j, k)
                for m in range(n):
                    row[m * n + i] -= s.constant(m, j, p)
                    row[m * n + j] -= s.constant(i, m, p)
                if any(row):
                    equations.append(row)
    logger.debug(f"Derivation system: {len(equations)} equations in {n * n} unknowns")
    if not equations:
        kernel = [tuple(Fraction(int(a == b)) for a in range(n * n)) for b in range(n * n)]
    else:
        kernel = nullspace_basis(equations)
    algebra = _algebra_from_nullspace(n, kernel, f"der({n})")
    logger.info(f"Derivation algebra of dimension {algebra.dimension} computed")
    return algebra


@handle_errors(operation="form_stabilizer")
def form_stabilizer(phi: ThreeForm, ambient_dim: int) -> MatrixAlgebra:
    """
    Infinitesimal stabilizer {X in gl(n) : X.phi = 0}.

    With X e_k = sum_m X[m][k] e_m, for each a < b < c:
    sum_m X[m][a] phi(m,b,c) + X[m][b] phi(a,m,c) + X[m][c] phi(a,b,m) = 0.
    """
    if phi.dimension != ambient_dim:
        raise DomainError(f"3-form on R^{phi.dimension} cannot be stabilized in gl({ambient_dim})")
    n = ambient_dim

    def var(m: int, k: int) -> int:
        return (m - 1) * n + (k - 1)

    equations: List[List[Fraction]] = []
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        row = [Fraction(0)] * (n * n)
        for m in range(1, n + 1):
            row[var(m, a)] += phi(m, b, c)
            row[var(m, b)] += phi(a, m, c)
            row[var(m, c)] += phi(a, b, m)
        if any(row):
            equations.append(row)
    if not equations:
        kernel = [tuple(Fraction(int(a == b)) for a in range(n * n)) for b in range(n * n)]
    else:
        kernel = nullspace_basis(equations)
    algebra = _algebra_from_nullspace(n, kernel, f"stab_gl({n})")
    logger.info(f"3-form stabilizer in gl({n}) has dimension {algebra.dimension}")
    return algebra


@handle_errors(operation="lie_closure")
def lie_closure(gens: Sequence[ExactMatrix], ambient_dim: Optional[int] = None) -> MatrixAlgebra:
    """Smallest bracket-closed subspace containing gens, by rank saturation."""
    if not gens:
        if ambient_dim is None:
            raise DomainError("lie_closure of no generators needs an ambient dimension")
        return MatrixAlgebra(ambient_dim, (), closed_under_bracket=True)
    n = gens[0].rows
    if any(g.rows != n or g.cols != n for g in gens):
        raise DomainError("lie_closure needs square matrices of equal size")

    span = SpanBasis(n * n)
    basis: List[ExactMatrix] = []
    for g in gens:
        if span.add(g.flatten()):
            basis.append(g)

    frontier_start = 0
    max_rounds = n * n
    for round_no in range(1, max_rounds + 2):
        if round_no > max_rounds:
            raise InternalError(f"lie_closure did not saturate within {max_rounds} rounds")
        added: List[ExactMatrix] = []
        for j in range(frontier_start, len(basis)):
            for i in range(j):
                bracket = basis[i].commutator(basis[j])
                if span.add(bracket.flatten()):
                    added.append(bracket)
        if not added:
            break
        frontier_start = len(basis)
        basis.extend(added)
        logger.debug(f"lie_closure round {round_no}: dimension {len(basis)}")

    return MatrixAlgebra(n, tuple(basis), closed_under_bracket=True)


def _orbit_map(a: MatrixAlgebra, v: Sequence[ScalarLike]) -> Tuple[List[List[Fraction]], Vector]:
    vec = to_vector(v)
    if len(vec) != a.ambient_dim:
        raise DomainError(f"Point of length {len(vec)} in R^{a.ambient_dim}")
    if not any(vec):
        raise DomainError("Orbits and stabilizers need a nonzero point")
    images = [b.apply(vec) for b in a.basis]
    # Column k holds B_k v.
    rows = [[images[k][i] for k in range(a.dimension)] for i in range(a.ambient_dim)]
    return rows, vec


def orbit_tangent_rank(a: MatrixAlgebra, v: Sequence[ScalarLike]) -> int:
    """Rank of X -> X v on the span of a."""
    rows, _ = _orbit_map(a, v)
    if a.dimension == 0:
        return 0
    return rank(rows)


def point_stabilizer(a: MatrixAlgebra, v: Sequence[ScalarLike]) -> MatrixAlgebra:
    """{X in span(a) : X v = 0}."""
    rows, _ = _orbit_map(a, v)
    if a.dimension == 0:
        return MatrixAlgebra(a.ambient_dim, (), a.closed_under_bracket)
    kernel = nullspace_basis(rows)
    basis = []
    for coeffs in kernel:
        m = ExactMatrix.zeros(a.ambient_dim)
        for c, b in zip(coeffs, a.basis):
            if c:
                m = m + b.scale(c)
        basis.append(m)
    stabilizer = MatrixAlgebra(a.ambient_dim, tuple(basis), a.closed_under_bracket,
                               label=f"stab({a.label})" if a.label else "")
    logger.debug(f"Stabilizer of dimension {stabilizer.dimension} inside {a.dimension}")
    return stabilizer


def base_point(n: int) -> Vector:
    """First standard basis vector, the octonion unit under R^8 = O."""
    return tuple(Fraction(int(i == 0)) for i in range(n))


class ClassicalFamily(str, Enum):
    SO = "so"
    SU_REALIFIED = "su_realified"
    SP_REALIFIED = "sp_realified"


_FAMILY_LIMITS = {
    ClassicalFamily.SO: 16,
    ClassicalFamily.SU_REALIFIED: 8,
    ClassicalFamily.SP_REALIFIED: 4,
}


def _realify(entries: Dict[Tuple[int, int], CDElement], n: int, level: int) -> ExactMatrix:
    """Real matrix of a matrix over C or H acting by left multiplication on entries."""
    block = 2 ** level
    rows = [[Fraction(0)] * (n * block) for _ in range(n * block)]
    for (p, q), value in entries.items():
        lm = left_multiplication_matrix(value)
        for r in range(block):
            for c in range(block):
                rows[p * block + r][q * block + c] += lm[r, c]
    return ExactMatrix.from_rows(rows)


def _antihermitian_basis(n: int, level: int) -> List[ExactMatrix]:
    """Antihermitian matrices over the level algebra (C or H), realified."""
    one = CDElement.basis(level, 0)
    units = [CDElement.basis(level, u) for u in range(1, 2 ** level)]
    basis = []
    if level == 1:
        for p in range(n - 1):
            i = units[0]
            basis.append(_realify({(p, p): i, (p + 1, p + 1): -i}, n, level))
    else:
        for p in range(n):
            for u in units:
                basis.append(_realify({(p, p): u}, n, level))
    for p, q in itertools.combinations(range(n), 2):
        basis.append(_realify({(p, q): one, (q, p): -one}, n, level))
        for u in units:
            basis.append(_realify({(p, q): u, (q, p): u}, n, level))
    return basis


@handle_errors(operation="classical_algebra")
def classical_algebra(family: str, n: int) -> MatrixAlgebra:
    """so(n) on R^n, su(n) realified on R^2n or sp(n) realified on R^4n."""
    try:
        fam = ClassicalFamily(family)
    except ValueError:
        raise DomainError(f"Unsupported classical family '{family}'") from None
    if not 1 <= n <= _FAMILY_LIMITS[fam]:
        raise DomainError(f"{fam.value}({n}) is outside the supported range 1..{_FAMILY_LIMITS[fam]}")

    if fam is ClassicalFamily.SO:
        basis = [
            ExactMatrix.unit(n, i, j) - ExactMatrix.unit(n, j, i)
            for i, j in itertools.combinations(range(n), 2)
        ]
        algebra = MatrixAlgebra(n, tuple(basis), True, f"so({n})")
    elif fam is ClassicalFamily.SU_REALIFIED:
        algebra = MatrixAlgebra(2 * n, tuple(_antihermitian_basis(n, 1)), True, f"su({n})")
    else:
        algebra = MatrixAlgebra(4 * n, tuple(_antihermitian_basis(n, 2)), True, f"sp({n})")
    logger.debug(f"{algebra.label} on R^{algebra.ambient_dim}: dimension {algebra.dimension}")
    return algebra


def octonion_derivations() -> MatrixAlgebra:
    return derivation_algebra(export_structure_constants(3))
