"""
Root Systems

Simple root systems of types A-G in their standard orthogonal coordinates,
positive roots, Cartan matrices, exponents, Weyl group orders and the
integer-scaled weight arithmetic the character machinery runs on.

Weights are handled as integer tuples equal to the orthogonal coordinates
multiplied by the system's scale, so half-integral spinor weights and the
thirds of E6 stay exact hashable keys.
"""

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, List, Optional, Sequence, Set, Tuple

from loguru import logger

from ..error_handling import (
    DomainError,
    EnumerationRefusedError,
    InternalError,
    handle_errors,
)
from ..exact_core import (
    BigCount,
    ExactMatrix,
    ScalarLike,
    Vector,
    inverse,
    lcm,
    require_exact_division,
    to_vector,
)

ScaledWeight = Tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 10 ** 7

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_HALF = Fraction(1, 2)


def _unit(n: int, i: int, value: ScalarLike = 1) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(value)
    return v


def _diff(n: int, i: int, j: int) -> List[Fraction]:
    """e_i - e_j."""
    v = _unit(n, i)
    v[j] -= 1
    return v


def _e8_simple_roots() -> List[List[Fraction]]:
    roots = [[_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, _HALF]]
    first = _unit(8, 0)
    first[1] = Fraction(1)
    roots.append(first)
    roots.extend(_diff(8, i + 1, i) for i in range(6))
    return roots


def _simple_roots(type_label: str, rank: int) -> List[List[Fraction]]:
    if type_label == "A":
        return [_diff(rank + 1, i, i + 1) for i in range(rank)]
    if type_label in ("B", "C", "D"):
        roots = [_diff(rank, i, i + 1) for i in range(rank - 1)]
        if type_label == "B":
            roots.append(_unit(rank, rank - 1))
        elif type_label == "C":
            roots.append(_unit(rank, rank - 1, 2))
        else:
            last = _unit(rank, rank - 2)
            last[rank - 1] = Fraction(1)
            roots.append(last)
        return roots
    if type_label == "E":
        return _e8_simple_roots()[:rank]
    if type_label == "F":
        return [
            _diff(4, 1, 2),
            _diff(4, 2, 3),
            _unit(4, 3),
            [_HALF, -_HALF, -_HALF, -_HALF],
        ]
    if type_label == "G":
        return [_diff(3, 0, 1), [Fraction(-2), Fraction(1), Fraction(1)]]
    raise DomainError(f"Unknown root system type '{type_label}'")


def validate_type(type_label: str, rank: int):
    if type_label in _MIN_RANK:
        if rank < _MIN_RANK[type_label]:
            raise DomainError(
                f"{type_label}{rank} is not a valid simple type "
                f"(rank must be at least {_MIN_RANK[type_label]})"
            )
    elif type_label in _EXCEPTIONAL_RANKS:
        if rank not in _EXCEPTIONAL_RANKS[type_label]:
            raise DomainError(f"{type_label}{rank} is not a valid exceptional type")
    else:
        raise DomainError(f"Unknown root system type '{type_label}'")


def parse_label(label: str) -> Tuple[str, int]:
    """Split a label like "D5" or "e6" into ("D", 5)."""
    match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label)
    if not match:
        raise DomainError(f"Cannot parse root system label '{label}'")
    return match.group(1).upper(), int(match.group(2))


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class RootSystem:
    """A simple root system with its positive roots and weight scale."""

    type_label: str
    rank: int
    simple_roots: Tuple[Vector, ...]
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Vector, ...]
    positive_root_coefficients: Tuple[Tuple[int, ...], ...]
    fundamental_weights: Tuple[Vector, ...]
    scale: int
    # Integer data scaled by `scale`, derived at build time.
    scaled_simple_roots: Tuple[ScaledWeight, ...] = field(compare=False, repr=False, default=())
    scaled_positive_roots: Tuple[ScaledWeight, ...] = field(compare=False, repr=False, default=())
    scaled_fundamental_weights: Tuple[ScaledWeight, ...] = field(compare=False, repr=False, default=())
    scaled_rho: ScaledWeight = field(compare=False, repr=False, default=())
    rho_check: Vector = field(compare=False, repr=False, default=())
    simple_root_norms: Tuple[int, ...] = field(compare=False, repr=False, default=())

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def ambient_dim(self) -> int:
        return len(self.simple_roots[0])

    @property
    def number_of_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def dimension(self) -> int:
        """Dimension of the Lie algebra, 2|positive roots| + rank."""
        return 2 * self.number_of_positive_roots + self.rank

    def __str__(self) -> str:
        return self.label

    def zero_weight(self) -> ScaledWeight:
        return (0,) * self.ambient_dim

    def scale_coords(self, coords: Sequence[ScalarLike]) -> ScaledWeight:
        """Orthogonal coordinates to a scaled integer tuple, without projection."""
        vec = to_vector(coords)
        if len(vec) != self.ambient_dim:
            raise DomainError(
                f"{self.label} weights have {self.ambient_dim} coordinates, got {len(vec)}"
            )
        scaled = [c * self.scale for c in vec]
        if any(c.denominator != 1 for c in scaled):
            raise DomainError(f"{tuple(map(str, vec))} is not an integral weight of {self.label}")
        return tuple(int(c) for c in scaled)

    def to_weight(self, coords: Sequence[ScalarLike]) -> ScaledWeight:
        """
        Weight with the given orthogonal coordinates, projected onto the span
        of the roots as sum <w, alpha_i^v> omega_i; the pairings must be integers.
        """
        vec = to_vector(coords)
        if len(vec) != self.ambient_dim:
            raise DomainError(
                f"{self.label} weights have {self.ambient_dim} coordinates, got {len(vec)}"
            )
        labels = []
        for root in self.simple_roots:
            pairing = 2 * _dot(vec, root) / _dot(root, root)
            if pairing.denominator != 1:
                raise DomainError(
                    f"({', '.join(str(c) for c in vec)}) is not an integral weight of {self.label}"
                )
            labels.append(int(pairing))
        return self.from_dynkin(labels)

    def from_dynkin(self, labels: Sequence[int]) -> ScaledWeight:
        if len(labels) != self.rank:
            raise DomainError(f"{self.label} needs {self.rank} Dynkin labels, got {len(labels)}")
        out = [0] * self.ambient_dim
        for c, omega in zip(labels, self.scaled_fundamental_weights):
            if c:
                for j, x in enumerate(omega):
                    out[j] += c * x
        return tuple(out)

    def coords(self, weight: ScaledWeight) -> Vector:
        """Orthogonal coordinates of a scaled weight."""
        return tuple(Fraction(x, self.scale) for x in weight)

    def coroot_pairing(self, weight: ScaledWeight, i: int) -> int:
        num = 2 * _dot(weight, self.scaled_simple_roots[i])
        q, r = divmod(num, self.simple_root_norms[i])
        if r:
            raise DomainError(f"{self.coords(weight)} is not an integral weight of {self.label}")
        return q

    def dynkin_labels(self, weight: ScaledWeight) -> Tuple[int, ...]:
        return tuple(self.coroot_pairing(weight, i) for i in range(self.rank))

    def is_dominant(self, weight: ScaledWeight) -> bool:
        return all(c >= 0 for c in self.dynkin_labels(weight))

    def reflect(self, weight: ScaledWeight, i: int) -> ScaledWeight:
        c = self.coroot_pairing(weight, i)
        if not c:
            return weight
        root = self.scaled_simple_roots[i]
        return tuple(w - c * a for w, a in zip(weight, root))

    def dominant_conjugate(self, weight: ScaledWeight) -> ScaledWeight:
        """The unique dominant weight in the Weyl orbit of weight."""
        w = weight
        while True:
            labels = self.dynkin_labels(w)
            i = next((k for k, c in enumerate(labels) if c < 0), None)
            if i is None:
                return w
            root = self.scaled_simple_roots[i]
            w = tuple(x - labels[i] * a for x, a in zip(w, root))

    def orbit(self, weight: ScaledWeight) -> Set[ScaledWeight]:
        """Weyl orbit by breadth-first closure under simple reflections."""
        seen = {weight}
        queue = deque([weight])
        while queue:
            w = queue.popleft()
            for i in range(self.rank):
                r = self.reflect(w, i)
                if r not in seen:
                    seen.add(r)
                    queue.append(r)
        return seen

    def height(self, weight: ScaledWeight) -> Fraction:
        """<w, rho^v>; the usual height for elements of the root lattice."""
        return sum((Fraction(a) * b for a, b in zip(weight, self.rho_check) if a), Fraction(0))

    def sort_key(self, weight: ScaledWeight) -> Tuple[Fraction, ScaledWeight]:
        return (self.height(weight), weight)


def _scaled(vectors: Sequence[Vector], s: int) -> Tuple[ScaledWeight, ...]:
    out = []
    for v in vectors:
        scaled = [c * s for c in v]
        if any(c.denominator != 1 for c in scaled):
            raise InternalError(f"Weight scale {s} does not clear {v}")
        out.append(tuple(int(c) for c in scaled))
    return tuple(out)


def _positive_root_coefficients(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """
    Positive roots in simple-root coordinates, by height.

    For a root beta and simple root alpha_i: p = largest k with beta - k alpha_i
    a root, q = p - <beta, alpha_i^v>; beta + alpha_i is a root iff q > 0.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots: Set[Tuple[int, ...]] = set(simple)
    ordered: List[Tuple[int, ...]] = list(simple)
    layer = list(simple)
    while layer:
        next_layer: List[Tuple[int, ...]] = []
        for beta in layer:
            for i in range(n):
                p = 0
                lowered = list(beta)
                while True:
                    lowered[i] -= 1
                    if tuple(lowered) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                if p - pairing > 0:
                    raised = list(beta)
                    raised[i] += 1
                    candidate = tuple(raised)
                    if candidate not in roots:
                        roots.add(candidate)
                        next_layer.append(candidate)
        ordered.extend(sorted(next_layer))
        layer = next_layer
    return ordered


@lru_cache(maxsize=None)
def _build(type_label: str, rank: int) -> RootSystem:
    simple = _simple_roots(type_label, rank)
    cartan_fracs = [
        [2 * _dot(a, b) / _dot(b, b) for b in simple] for a in simple
    ]
    if any(c.denominator != 1 for row in cartan_fracs for c in row):
        raise InternalError(f"Non-integral Cartan matrix for {type_label}{rank}")
    cartan = tuple(tuple(int(c) for c in row) for row in cartan_fracs)

    coefficients = _positive_root_coefficients(cartan)
    ambient = len(simple[0])
    positive = tuple(
        tuple(sum((c * r[j] for c, r in zip(coeffs, simple)), Fraction(0)) for j in range(ambient))
        for coeffs in coefficients
    )

    a_inv = inverse(ExactMatrix.from_rows(cartan))
    fundamental = tuple(
        tuple(
            sum((a_inv[i, k] * simple[k][j] for k in range(rank)), Fraction(0))
            for j in range(ambient)
        )
        for i in range(rank)
    )
    scale = lcm(2, *(c.denominator for w in fundamental for c in w),
                *(c.denominator for r in simple for c in r))

    scaled_simple = _scaled(simple, scale)  # type: ignore[arg-type]
    scaled_positive = _scaled(positive, scale)
    scaled_fundamental = _scaled(fundamental, scale)
    rho = tuple(sum(w[j] for w in scaled_fundamental) for j in range(ambient))
    rho_check = tuple(
        sum((Fraction(a[j], _dot(a, a)) for a in scaled_positive), Fraction(0))
        for j in range(ambient)
    )

    rs = RootSystem(
        type_label=type_label,
        rank=rank,
        simple_roots=tuple(tuple(r) for r in simple),
        cartan_matrix=cartan,
        positive_roots=positive,
        positive_root_coefficients=tuple(coefficients),
        fundamental_weights=fundamental,
        scale=scale,
        scaled_simple_roots=scaled_simple,
        scaled_positive_roots=scaled_positive,
        scaled_fundamental_weights=scaled_fundamental,
        scaled_rho=rho,
        rho_check=rho_check,
        simple_root_norms=tuple(_dot(a, a) for a in scaled_simple),
    )
    logger.debug(
        f"Built {rs.label}: {rs.number_of_positive_roots} positive roots, "
        f"dimension {rs.dimension}, weight scale {scale}"
    )
    return rs


@handle_errors(operation="build_root_system")
def build_root_system(type_label: str, rank: Optional[int] = None) -> RootSystem:
    """Root system for a type and rank, or for a label such as "E6"."""
    if rank is None:
        type_label, rank = parse_label(type_label)
    type_label = type_label.upper()
    validate_type(type_label, rank)
    return _build(type_label, rank)


def exponents(rs: RootSystem) -> Tuple[int, ...]:
    """Exponents as the transpose of the partition of positive roots by height."""
    counts: Dict[int, int] = {}
    for coeffs in rs.positive_root_coefficients:
        h = sum(coeffs)
        counts[h] = counts.get(h, 0) + 1
    by_height = [counts[h] for h in sorted(counts)]
    result = tuple(sorted(sum(1 for c in by_height if c >= j) for j in range(1, rs.rank + 1)))
    if sum(result) != rs.number_of_positive_roots:
        raise InternalError(f"Exponents of {rs.label} do not sum to the positive root count")
    return result


def degrees(rs: RootSystem) -> Tuple[int, ...]:
    return tuple(m + 1 for m in exponents(rs))


def weyl_order(rs: RootSystem) -> BigCount:
    """Product of the degrees."""
    return prod(degrees(rs))


def weyl_enumerate(rs: RootSystem, cap: int = DEFAULT_ENUMERATION_CAP) -> BigCount:
    """
    Order of the Weyl group by explicit closure under simple reflections.

    The closure is taken on the orbit of rho, whose stabilizer is trivial, so the
    orbit is in bijection with the group.
    """
    predicted = weyl_order(rs)
    if predicted > cap:
        raise EnumerationRefusedError(
            f"Weyl group of {rs.label} has order {predicted}, above the enumeration cap {cap}"
        )
    size = len(rs.orbit(rs.scaled_rho))
    logger.debug(f"Enumerated W({rs.label}): {size} elements")
    return size


def sphere_decomposition(rs: RootSystem) -> Tuple[int, ...]:
    """Odd sphere dimensions 2m + 1 over the exponents."""
    return tuple(2 * m + 1 for m in exponents(rs))


def euler_characteristic_coset(g: RootSystem, h: Sequence[RootSystem],
                               torus_rank: int = 0) -> BigCount:
    """|W(G)| / |W(H)| for an equal-rank subgroup H = product of h times a torus."""
    h_rank = sum(x.rank for x in h) + torus_rank
    if h_rank != g.rank:
        raise DomainError(
            f"Euler characteristic needs equal rank: {g.label} has rank {g.rank}, "
            f"subgroup has rank {h_rank}"
        )
    return require_exact_division(
        weyl_order(g), prod(weyl_order(x) for x in h), f"|W({g.label})|/|W(H)|"
    )


def root_system_isomorphic(a: RootSystem, b: RootSystem) -> bool:
    """Cartan matrices equal up to a simultaneous permutation of rows and columns."""
    if a.rank != b.rank or a.number_of_positive_roots != b.number_of_positive_roots:
        return False
    n = a.rank
    ca, cb = a.cartan_matrix, b.cartan_matrix
    for perm in itertools.permutations(range(n)):
        if all(ca[i][j] == cb[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False
