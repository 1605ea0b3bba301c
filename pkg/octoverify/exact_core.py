"""
Exact Linear Algebra Core

Exact rational scalars, dense exact matrices and the fraction-free
elimination kernels (rank, nullspace, solve) the algebra modules build on.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from loguru import logger

from .error_handling import DomainError, InternalError

ExactScalar = Fraction
BigCount = int
Vector = Tuple[Fraction, ...]
ScalarLike = Union[int, str, Fraction]


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, a Fraction or a "p/q" string into an exact scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"Not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"Cannot parse exact scalar '{value}'") from e
    raise DomainError(f"Not an exact scalar: {value!r}")


def scalar_to_str(value: Fraction) -> str:
    """Render an exact scalar as "p/q" (or "p" when integral)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_vector(values: Iterable[ScalarLike]) -> Vector:
    return tuple(to_scalar(v) for v in values)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense rows × cols matrix of exact rationals, stored row-major."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DomainError(f"Negative matrix shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DomainError(
                f"Matrix of shape {self.rows}x{self.cols} needs "
                f"{self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> "ExactMatrix":
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DomainError("Ragged rows in matrix literal")
        entries = tuple(to_scalar(x) for r in rows for x in r)
        return cls(len(rows), width, entries)

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "ExactMatrix":
        """Matrix unit E_ij of size n."""
        entries = [Fraction(0)] * (n * n)
        entries[i * n + j] = Fraction(1)
        return cls(n, n, tuple(entries))

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        """Assemble a block matrix; blocks in a row share height, in a column share width."""
        heights = [row[0].rows for row in blocks]
        widths = [b.cols for b in blocks[0]]
        out: List[List[Fraction]] = []
        for bi, row in enumerate(blocks):
            for r in range(heights[bi]):
                line: List[Fraction] = []
                for bj, block in enumerate(row):
                    if block.rows != heights[bi] or block.cols != widths[bj]:
                        raise DomainError("Inconsistent block shapes")
                    line.extend(block.row(r))
                out.append(line)
        return cls.from_rows(out)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def _check_same_shape(self, other: "ExactMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DomainError(
                f"Shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: ScalarLike) -> "ExactMatrix":
        f = to_scalar(factor)
        return ExactMatrix(self.rows, self.cols, tuple(f * a for a in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DomainError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        # Skip zero entries; the octonionic matrices here are very sparse.
        other_rows = [other.row(k) for k in range(other.rows)]
        out: List[Fraction] = []
        for i in range(self.rows):
            acc = [Fraction(0)] * other.cols
            for k, a in enumerate(self.row(i)):
                if a:
                    ok = other_rows[k]
                    for j in range(other.cols):
                        if ok[j]:
                            acc[j] += a * ok[j]
            out.extend(acc)
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[ScalarLike]) -> Vector:
        """Matrix-vector product M·v."""
        if len(vector) != self.cols:
            raise DomainError(f"Vector of length {len(vector)} for {self.cols} columns")
        v = to_vector(vector)
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
            for i in range(self.rows)
        )

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        """Lie bracket [self, other] = self·other − other·self."""
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def is_skew_symmetric(self) -> bool:
        return self.is_square and self == -self.transpose()

    def flatten(self) -> Vector:
        return self.entries

    def to_json(self) -> List[List[str]]:
        return [[scalar_to_str(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "ExactMatrix":
        return cls.from_rows([[to_scalar(x) for x in row] for row in data])


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """Clear denominators row by row; row scaling does not change rank or kernel."""
    out = []
    for row in rows:
        denom = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in row), 1)
        out.append([int(x * denom) for x in row])
    return out


def _bareiss_echelon(rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """
    Fraction-free (Bareiss) row echelon form over the integers.

    Returns the nonzero echelon rows and their pivot columns. Every division
    below is exact: after k pivots each entry is a (k+1)-minor of the input.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    prev = 1
    r = 0
    pivots: List[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv_row = m[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row_i = m[i]
            a = row_i[c]
            if a == 0:
                if prev != 1 or piv != 1:
                    for j in range(c + 1, ncols):
                        if row_i[j]:
                            row_i[j] = (piv * row_i[j]) // prev
                continue
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - a * piv_row[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _rows_of(m: Union[ExactMatrix, Sequence[Sequence[ScalarLike]]]) -> Tuple[List[List[Fraction]], int]:
    if isinstance(m, ExactMatrix):
        return m.to_rows(), m.cols
    rows = [to_vector(r) for r in m]
    return [list(r) for r in rows], (len(rows[0]) if rows else 0)


def rank(m: Union[ExactMatrix, Sequence[Sequence[ScalarLike]]]) -> int:
    """Exact rank via fraction-free elimination; the empty matrix has rank 0."""
    rows, ncols = _rows_of(m)
    if not rows or ncols == 0:
        return 0
    echelon, pivots = _bareiss_echelon(_integer_rows(rows), ncols)
    return len(pivots)


def _reduced_echelon(rows: List[List[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form (pivot entries 1) starting from a Bareiss echelon."""
    echelon, pivots = _bareiss_echelon(_integer_rows(rows), ncols)
    red = [[Fraction(x) for x in row] for row in echelon]
    for k, c in enumerate(pivots):
        piv = red[k][c]
        red[k] = [x / piv for x in red[k]]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        pivot_row = red[k]
        for i in range(k):
            f = red[i][c]
            if f:
                red[i] = [a - f * b for a, b in zip(red[i], pivot_row)]
    return red, pivots


def nullspace_basis(m: Union[ExactMatrix, Sequence[Sequence[ScalarLike]]]) -> List[Vector]:
    """
    Basis of {v : m·v = 0} in reduced-echelon parametrised form.

    One vector per free column, in ascending column order, with a 1 at its own
    free column and zeros at the other free columns.
    """
    rows, ncols = _rows_of(m)
    if ncols == 0:
        return []
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    red, pivots = _reduced_echelon(rows, ncols)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -red[k][f]
        basis.append(tuple(v))
    logger.debug(f"Nullspace of {len(rows)}x{ncols} system: rank {len(pivots)}, dim {len(basis)}")
    return basis


def solve(m: Union[ExactMatrix, Sequence[Sequence[ScalarLike]]],
          b: Sequence[ScalarLike]) -> Optional[Vector]:
    """
    One exact solution x of m·x = b (free variables set to zero), or None when
    the system is inconsistent.
    """
    rows, ncols = _rows_of(m)
    rhs = to_vector(b)
    if len(rows) != len(rhs):
        raise DomainError(f"Right-hand side of length {len(rhs)} for {len(rows)} equations")
    augmented = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    red, pivots = _reduced_echelon(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for k, c in enumerate(pivots):
        x[c] = red[k][ncols]
    return tuple(x)


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse of a square nonsingular matrix."""
    if not m.is_square:
        raise DomainError(f"Cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    augmented = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, pivots = _reduced_echelon(augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise DomainError("Matrix is singular")
    return ExactMatrix.from_rows([row[n:] for row in red])


class SpanBasis:
    """
    Incrementally maintained reduced echelon basis of a subspace of Q^n.

    Used for membership tests (bracket closure, span equality) without
    recomputing a rank from scratch for every candidate vector.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._rows: List[List[Fraction]] = []
        self._pivots: List[int] = []

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Sequence[Fraction]) -> List[Fraction]:
        v = list(vector)
        if len(v) != self.dimension:
            raise DomainError(f"Vector of length {len(v)} in a space of dimension {self.dimension}")
        for row, c in zip(self._rows, self._pivots):
            f = v[c]
            if f:
                for j in range(c, self.dimension):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def contains(self, vector: Sequence[ScalarLike]) -> bool:
        return not any(self._reduce(to_vector(vector)))

    def add(self, vector: Sequence[ScalarLike]) -> bool:
        """Insert a vector; returns False if it already lies in the span."""
        v = self._reduce(to_vector(vector))
        c = next((j for j, x in enumerate(v) if x), None)
        if c is None:
            return False
        piv = v[c]
        v = [x / piv for x in v]
        for row in self._rows:
            f = row[c]
            if f:
                for j in range(c, self.dimension):
                    if v[j]:
                        row[j] -= f * v[j]
        # Keep rows ordered by pivot column.
        pos = next((k for k, p in enumerate(self._pivots) if p > c), len(self._pivots))
        self._rows.insert(pos, v)
        self._pivots.insert(pos, c)
        return True


def binomial(n: int, k: int) -> BigCount:
    """Exact binomial coefficient C(n, k)."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial({n}, {k}) needs non-negative arguments")
    if k > n:
        raise DomainError(f"binomial({n}, {k}): k exceeds n")
    return comb(n, k)


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def require_exact_division(numerator: int, denominator: int, what: str) -> int:
    """Integer quotient that must be exact; a remainder signals a logic error."""
    q, r = divmod(numerator, denominator)
    if r:
        raise InternalError(f"{what}: {numerator}/{denominator} is not exact")
    return q
