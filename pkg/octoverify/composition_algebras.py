"""
Composition Algebras

The Cayley-Dickson tower R -> C -> H -> O with exact coefficients.

Basis convention: an element of level n+1 is a pair (a, b) of level-n elements,
its coordinates are those of a followed by those of b, and

    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).

So e1 e2 = e3 in H, e4 is the doubling unit of O and e5 = e1 e4, e6 = e2 e4,
e7 = e3 e4.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from .error_handling import DivisionByZeroError, DomainError
from .exact_core import ScalarLike, Vector, scalar_to_str, to_scalar, to_vector

MAX_LEVEL = 3

ALGEBRA_LEVELS = {"R": 0, "C": 1, "H": 2, "O": 3}


def _conj(x: Vector) -> Vector:
    return (x[0],) + tuple(-c for c in x[1:])


def _add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def _mul(x: Vector, y: Vector) -> Vector:
    n = len(x)
    if n == 1:
        return (x[0] * y[0],)
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    return _sub(_mul(a, c), _mul(_conj(d), b)) + _add(_mul(d, a), _mul(b, _conj(c)))


@dataclass(frozen=True)
class CDElement:
    """Element of the level-n Cayley-Dickson algebra (0=R, 1=C, 2=H, 3=O)."""

    level: int
    coords: Vector

    def __post_init__(self):
        if not 0 <= self.level <= MAX_LEVEL:
            raise DomainError(f"Cayley-Dickson level must be 0..{MAX_LEVEL}, got {self.level}")
        if len(self.coords) != 2 ** self.level:
            raise DomainError(
                f"Level {self.level} needs {2 ** self.level} coordinates, got {len(self.coords)}"
            )

    @classmethod
    def of(cls, level: int, coords: Sequence[ScalarLike]) -> "CDElement":
        return cls(level, to_vector(coords))

    @classmethod
    def basis(cls, level: int, index: int) -> "CDElement":
        """Basis unit e_index."""
        size = 2 ** level
        if not 0 <= index < size:
            raise DomainError(f"Basis index {index} out of range for level {level}")
        return cls(level, tuple(Fraction(int(i == index)) for i in range(size)))

    @classmethod
    def real(cls, level: int, value: ScalarLike) -> "CDElement":
        return cls(level, (to_scalar(value),) + (Fraction(0),) * (2 ** level - 1))

    @classmethod
    def zero(cls, level: int) -> "CDElement":
        return cls.real(level, 0)

    @property
    def dimension(self) -> int:
        return 2 ** self.level

    def _check_level(self, other: "CDElement"):
        if self.level != other.level:
            raise DomainError(f"Level mismatch: {self.level} vs {other.level}")

    def __add__(self, other: "CDElement") -> "CDElement":
        self._check_level(other)
        return CDElement(self.level, _add(self.coords, other.coords))

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._check_level(other)
        return CDElement(self.level, _sub(self.coords, other.coords))

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, tuple(-c for c in self.coords))

    def __mul__(self, other: "CDElement") -> "CDElement":
        return cd_multiply(self, other)

    def scale(self, factor: ScalarLike) -> "CDElement":
        f = to_scalar(factor)
        return CDElement(self.level, tuple(f * c for c in self.coords))

    def conjugate(self) -> "CDElement":
        return CDElement(self.level, _conj(self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        out = ""
        for i, c in enumerate(self.coords):
            if not c:
                continue
            magnitude = "" if abs(c) == 1 else f"{scalar_to_str(abs(c))}*"
            if not out:
                out = f"{'-' if c < 0 else ''}{magnitude}e{i}"
            else:
                out += f" {'-' if c < 0 else '+'} {magnitude}e{i}"
        return out or "0"


def cd_multiply(x: CDElement, y: CDElement) -> CDElement:
    """Product under the recursive doubling rule."""
    if x.level != y.level:
        raise DomainError(f"Cannot multiply elements of levels {x.level} and {y.level}")
    return CDElement(x.level, _mul(x.coords, y.coords))


def norm(x: CDElement) -> Fraction:
    """x conj(x), which is the sum of squared coordinates."""
    return _mul(x.coords, _conj(x.coords))[0]


def inverse(x: CDElement) -> CDElement:
    if x.is_zero():
        raise DivisionByZeroError(f"Zero has no inverse at level {x.level}")
    return x.conjugate().scale(1 / norm(x))


def commutator(a: CDElement, b: CDElement) -> CDElement:
    return a * b - b * a


def associator(a: CDElement, b: CDElement, c: CDElement) -> CDElement:
    """[a, b, c] = a(bc) - (ab)c."""
    if not a.level == b.level == c.level:
        raise DomainError(
            f"Associator needs equal levels, got {a.level}, {b.level}, {c.level}"
        )
    return a * (b * c) - (a * b) * c


def sphere_dimension(level: int) -> int:
    """Dimension of the unit sphere of the level-n algebra: S0, S1, S3, S7."""
    if not 0 <= level <= MAX_LEVEL:
        raise DomainError(f"Cayley-Dickson level must be 0..{MAX_LEVEL}, got {level}")
    return 2 ** level - 1


@dataclass(frozen=True)
class StructureConstants:
    """Multiplication table e_i e_j = sum_k table[i][j][k] e_k."""

    dimension: int
    table: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    def product(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def constant(self, i: int, j: int, k: int) -> Fraction:
        return self.table[i][j][k]

    def multiply(self, x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> Vector:
        """Bilinear extension of the table."""
        xs, ys = to_vector(x), to_vector(y)
        out = [Fraction(0)] * self.dimension
        for i, a in enumerate(xs):
            if not a:
                continue
            for j, b in enumerate(ys):
                if not b:
                    continue
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] += a * b * c
        return tuple(out)

    def nonzero_triples(self) -> List[Tuple[int, int, int, Fraction]]:
        return [
            (i, j, k, c)
            for i in range(self.dimension)
            for j in range(self.dimension)
            for k, c in enumerate(self.table[i][j])
            if c
        ]

    def is_unital(self) -> bool:
        """e0 is a two-sided unit."""
        for j in range(self.dimension):
            for k in range(self.dimension):
                delta = Fraction(int(j == k))
                if self.table[0][j][k] != delta or self.table[j][0][k] != delta:
                    return False
        return True

    def to_json(self) -> Dict[str, object]:
        return {
            "dimension": self.dimension,
            "triples": [[i, j, k, scalar_to_str(c)] for i, j, k, c in self.nonzero_triples()],
        }

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "StructureConstants":
        n = int(data["dimension"])  # type: ignore[arg-type]
        table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in data["triples"]:  # type: ignore[union-attr]
            table[i][j][k] = to_scalar(c)
        return cls(n, tuple(tuple(tuple(row) for row in plane) for plane in table))


def export_structure_constants(level: int) -> StructureConstants:
    """Full multiplication table of the level-n algebra."""
    if not 0 <= level <= MAX_LEVEL:
        raise DomainError(f"Cayley-Dickson level must be 0..{MAX_LEVEL}, got {level}")
    n = 2 ** level
    units = [CDElement.basis(level, i) for i in range(n)]
    table = tuple(
        tuple((units[i] * units[j]).coords for j in range(n)) for i in range(n)
    )
    logger.debug(f"Exported {n}x{n} structure constants for level {level}")
    return StructureConstants(n, table)


def _permutation_sign(indices: Sequence[int]) -> int:
    sign = 1
    for a, b in itertools.combinations(range(len(indices)), 2):
        if indices[a] > indices[b]:
            sign = -sign
    return sign


@dataclass(frozen=True)
class ThreeForm:
    """
    Alternating 3-form on R^dimension, stored on ordered triples i < j < k.

    Indices run from 1 to dimension.
    """

    dimension: int
    components: Dict[Tuple[int, int, int], Fraction]

    def __call__(self, i: int, j: int, k: int) -> Fraction:
        if len({i, j, k}) < 3:
            return Fraction(0)
        key = tuple(sorted((i, j, k)))
        value = self.components.get(key, Fraction(0))  # type: ignore[arg-type]
        return value * _permutation_sign((i, j, k))

    def nonzero_triples(self) -> List[Tuple[int, int, int]]:
        return sorted(t for t, c in self.components.items() if c)

    def __hash__(self) -> int:
        return hash((self.dimension, tuple(sorted(self.components.items()))))

    @classmethod
    def from_triples(cls, dimension: int,
                     triples: Dict[Tuple[int, int, int], ScalarLike]) -> "ThreeForm":
        components: Dict[Tuple[int, int, int], Fraction] = {}
        for (i, j, k), c in triples.items():
            if not all(1 <= x <= dimension for x in (i, j, k)) or len({i, j, k}) < 3:
                raise DomainError(f"Invalid 3-form index triple ({i}, {j}, {k})")
            key = tuple(sorted((i, j, k)))
            components[key] = to_scalar(c) * _permutation_sign((i, j, k))  # type: ignore[index]
        return cls(dimension, components)

    @classmethod
    def volume(cls, dimension: int = 3) -> "ThreeForm":
        if dimension != 3:
            raise DomainError("The volume form is a 3-form only in dimension 3")
        return cls(3, {(1, 2, 3): Fraction(1)})

    @classmethod
    def zero(cls, dimension: int) -> "ThreeForm":
        return cls(dimension, {})


def structure_3form() -> ThreeForm:
    """phi(i, j, k) = coefficient of e_k in e_i e_j on the imaginary octonions."""
    constants = export_structure_constants(MAX_LEVEL)
    components: Dict[Tuple[int, int, int], Fraction] = {}
    for i, j, k in itertools.combinations(range(1, 8), 3):
        c = constants.constant(i, j, k)
        if c:
            components[(i, j, k)] = c
    logger.debug(f"Octonion 3-form has {len(components)} nonzero triples")
    return ThreeForm(7, components)
