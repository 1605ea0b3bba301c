"""
Characters

Weight multisets, the Weyl dimension formula, Freudenthal multiplicities,
decomposition into irreducibles, alternating and tensor powers, and virtual
representations.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from ..cache_manager import CharacterCache, character_cache
from ..error_handling import DomainError, NotACharacterError, handle_errors
from ..exact_core import BigCount, ScalarLike, binomial, require_exact_division, scalar_to_str
from .root_system import RootSystem, ScaledWeight, _dot, build_root_system


def _add_weights(a: ScaledWeight, b: ScaledWeight) -> ScaledWeight:
    return tuple(x + y for x, y in zip(a, b))


def _shift(weight: ScaledWeight, root: ScaledWeight, k: int) -> ScaledWeight:
    return tuple(x + k * y for x, y in zip(weight, root))


@dataclass(frozen=True)
class WeightMultiset:
    """Integer multiplicities on scaled weights; negative entries allowed."""

    root_system: RootSystem
    entries: Mapping[ScaledWeight, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {w: m for w, m in self.entries.items() if m})

    @classmethod
    def from_coords(cls, rs: RootSystem,
                    weights: Iterable[Tuple[Sequence[ScalarLike], int]]) -> "WeightMultiset":
        entries: Dict[ScaledWeight, int] = {}
        for coords, mult in weights:
            w = rs.scale_coords(coords)
            entries[w] = entries.get(w, 0) + mult
        return cls(rs, entries)

    @classmethod
    def trivial(cls, rs: RootSystem) -> "WeightMultiset":
        return cls(rs, {rs.zero_weight(): 1})

    @property
    def dimension(self) -> int:
        """Signed total dimension."""
        return sum(self.entries.values())

    def multiplicity(self, weight: ScaledWeight) -> int:
        return self.entries.get(weight, 0)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return self.root_system == other.root_system and dict(self.entries) == dict(other.entries)

    def __hash__(self) -> int:
        return hash((self.root_system.label, frozenset(self.entries.items())))

    def _check_context(self, other: "WeightMultiset"):
        if self.root_system != other.root_system:
            raise DomainError(
                f"Weight multisets of {self.root_system.label} and {other.root_system.label} "
                "cannot be combined"
            )

    def __add__(self, other: "WeightMultiset") -> "WeightMultiset":
        self._check_context(other)
        entries = dict(self.entries)
        for w, m in other.entries.items():
            entries[w] = entries.get(w, 0) + m
        return WeightMultiset(self.root_system, entries)

    def __neg__(self) -> "WeightMultiset":
        return WeightMultiset(self.root_system, {w: -m for w, m in self.entries.items()})

    def __sub__(self, other: "WeightMultiset") -> "WeightMultiset":
        return self + (-other)

    def scale(self, factor: int) -> "WeightMultiset":
        return WeightMultiset(self.root_system, {w: factor * m for w, m in self.entries.items()})

    def is_genuine(self) -> bool:
        return all(m > 0 for m in self.entries.values())

    def dominant_part(self) -> Dict[ScaledWeight, int]:
        rs = self.root_system
        return {w: m for w, m in self.entries.items() if rs.is_dominant(w)}

    def weyl_symmetry_defect(self) -> Optional[ScaledWeight]:
        """A weight whose orbit carries unequal multiplicities, or None."""
        rs = self.root_system
        counts: Dict[ScaledWeight, int] = {}
        for w, m in self.entries.items():
            d = rs.dominant_conjugate(w)
            if self.entries.get(d, 0) != m:
                return w
            counts[d] = counts.get(d, 0) + 1
        for d, count in counts.items():
            if count != len(rs.orbit(d)):
                return d
        return None

    def is_weyl_symmetric(self) -> bool:
        return self.weyl_symmetry_defect() is None

    def to_json(self) -> Dict[str, object]:
        rs = self.root_system
        return {
            "algebra": rs.label,
            "scale": rs.scale,
            "weights": [
                {"weight": list(w), "coords": [scalar_to_str(c) for c in rs.coords(w)], "mult": m}
                for w, m in sorted(self.entries.items())
            ],
        }


def weyl_dim(rs: RootSystem, hw: ScaledWeight) -> BigCount:
    """prod <lambda + rho, alpha> / <rho, alpha> over positive roots."""
    if not rs.is_dominant(hw):
        raise DomainError(f"{rs.coords(hw)} is not a dominant weight of {rs.label}")
    shifted = _add_weights(hw, rs.scaled_rho)
    num = prod(_dot(shifted, a) for a in rs.scaled_positive_roots)
    den = prod(_dot(rs.scaled_rho, a) for a in rs.scaled_positive_roots)
    return require_exact_division(num, den, f"weyl_dim {rs.label}")


def dominant_weights(rs: RootSystem, hw: ScaledWeight) -> List[ScaledWeight]:
    """
    Dominant weights of the irrep V(hw), by decreasing height.

    Each dominant weight below hw is reached from hw through a chain of dominant
    weights whose successive differences are positive roots.
    """
    seen = {hw}
    stack = [hw]
    while stack:
        mu = stack.pop()
        for alpha in rs.scaled_positive_roots:
            nu = tuple(x - a for x, a in zip(mu, alpha))
            if nu not in seen and rs.is_dominant(nu):
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, key=rs.sort_key, reverse=True)


def _freudenthal(rs: RootSystem, hw: ScaledWeight) -> Dict[ScaledWeight, int]:
    ordered = dominant_weights(rs, hw)
    rho = rs.scaled_rho
    top = _add_weights(hw, rho)
    top_norm = _dot(top, top)
    mult: Dict[ScaledWeight, int] = {hw: 1}
    positive = rs.scaled_positive_roots
    conjugates: Dict[ScaledWeight, ScaledWeight] = {}

    def lookup(nu: ScaledWeight) -> int:
        d = conjugates.get(nu)
        if d is None:
            d = conjugates[nu] = rs.dominant_conjugate(nu)
        return mult.get(d, 0)

    for mu in ordered[1:]:
        total = 0
        for alpha in positive:
            mu_alpha = _dot(mu, alpha)
            alpha_alpha = _dot(alpha, alpha)
            k = 1
            # Weight strings are unbroken: stop at the first missing weight.
            while True:
                m = lookup(_shift(mu, alpha, k))
                if not m:
                    break
                total += (mu_alpha + k * alpha_alpha) * m
                k += 1
        shifted = _add_weights(mu, rho)
        denominator = top_norm - _dot(shifted, shifted)
        mult[mu] = require_exact_division(2 * total, denominator, f"Freudenthal at {mu}")
    logger.debug(f"Freudenthal for {rs.label} {hw}: {len(ordered)} dominant weights")
    return mult


def dominant_character(rs: RootSystem, hw: ScaledWeight,
                       cache: Optional[CharacterCache] = None) -> Dict[ScaledWeight, int]:
    """Multiplicities of the dominant weights of V(hw), memoised."""
    if not rs.is_dominant(hw):
        raise DomainError(f"{rs.coords(hw)} is not a dominant weight of {rs.label}")
    cache = character_cache if cache is None else cache
    return dict(cache.get_or_compute((rs.label, hw), lambda: _freudenthal(rs, hw)))


@handle_errors(operation="irrep_character")
def irrep_character(rs: RootSystem, hw: ScaledWeight) -> WeightMultiset:
    """Full weight multiset of V(hw): dominant multiplicities spread over Weyl orbits."""
    entries: Dict[ScaledWeight, int] = {}
    for mu, m in dominant_character(rs, hw).items():
        for w in rs.orbit(mu):
            entries[w] = m
    return WeightMultiset(rs, entries)


def _pick_highest(rs: RootSystem, weights: Iterable[ScaledWeight]) -> ScaledWeight:
    return max(weights, key=rs.sort_key)


@handle_errors(operation="decompose")
def decompose(ws: WeightMultiset, rs: Optional[RootSystem] = None) -> "VirtualRep":
    """
    Greedy highest-weight stripping on the dominant part of a Weyl-symmetric
    multiset; the next constituent is the remaining dominant weight of maximal
    height, ties broken lexicographically.
    """
    rs = ws.root_system if rs is None else rs
    if rs != ws.root_system:
        raise DomainError(f"Multiset of {ws.root_system.label} decomposed under {rs.label}")
    for w in ws.entries:
        try:
            rs.dynkin_labels(w)
        except DomainError as e:
            raise NotACharacterError(f"Weight {rs.coords(w)} is not integral for {rs.label}") from e
    defect = ws.weyl_symmetry_defect()
    if defect is not None:
        raise NotACharacterError(
            f"Not a character of {rs.label}: Weyl symmetry fails at {rs.coords(defect)}"
        )

    remainder = ws.dominant_part()
    terms: Dict[ScaledWeight, int] = {}
    steps = 0
    while remainder:
        top = _pick_highest(rs, remainder)
        coeff = remainder[top]
        terms[top] = terms.get(top, 0) + coeff
        for mu, m in dominant_character(rs, top).items():
            value = remainder.get(mu, 0) - coeff * m
            if value:
                remainder[mu] = value
            else:
                remainder.pop(mu, None)
        steps += 1
    logger.debug(f"Decomposed {rs.label} multiset of dimension {ws.dimension} in {steps} steps")
    return VirtualRep(rs, terms)


@handle_errors(operation="alt_power")
def alt_power(ws: WeightMultiset, k: int) -> WeightMultiset:
    """
    Exterior power, by dynamic programming over distinct weights: a weight of
    multiplicity m contributes C(m, j) copies of j times itself to a j-subset.
    """
    if k < 0:
        raise DomainError(f"Exterior power degree must be non-negative, got {k}")
    if not all(m > 0 for m in ws.entries.values()):
        raise DomainError("Exterior powers need a genuine representation")
    rs = ws.root_system
    if k > ws.dimension:
        return WeightMultiset(rs, {})

    zero = rs.zero_weight()
    layers: List[Dict[ScaledWeight, int]] = [{zero: 1}] + [{} for _ in range(k)]
    for weight, m in sorted(ws.entries.items()):
        new_layers = [dict(layer) for layer in layers]
        for size in range(1, k + 1):
            target = new_layers[size]
            for j in range(1, min(m, size) + 1):
                source = layers[size - j]
                if not source:
                    continue
                count = binomial(m, j)
                offset = tuple(j * x for x in weight)
                for w, mult in source.items():
                    key = _add_weights(w, offset)
                    target[key] = target.get(key, 0) + count * mult
        layers = new_layers
    return WeightMultiset(rs, layers[k])


def tensor_product(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    """Convolution of weight multisets; signs multiply for virtual inputs."""
    a._check_context(b)
    entries: Dict[ScaledWeight, int] = {}
    for wa, ma in a.entries.items():
        for wb, mb in b.entries.items():
            key = _add_weights(wa, wb)
            entries[key] = entries.get(key, 0) + ma * mb
    return WeightMultiset(a.root_system, entries)


@dataclass(frozen=True)
class Constituent:
    highest_weight: ScaledWeight
    coefficient: int
    dimension: int
    charge: Optional[int] = None


@dataclass(frozen=True)
class VirtualRep:
    """Integer combination of irreducibles, keyed by dominant highest weight."""

    root_system: RootSystem
    terms: Mapping[ScaledWeight, int] = field(default_factory=dict)
    # U(1) charge labels; carried along, never used by the arithmetic.
    charges: Mapping[ScaledWeight, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {w: c for w, c in self.terms.items() if c})
        object.__setattr__(self, "charges", {w: q for w, q in self.charges.items() if w in self.terms})
        for hw in self.terms:
            if not self.root_system.is_dominant(hw):
                raise DomainError(
                    f"{self.root_system.coords(hw)} is not dominant for {self.root_system.label}"
                )

    @classmethod
    def irreducible(cls, rs: RootSystem, hw: ScaledWeight, coefficient: int = 1) -> "VirtualRep":
        return cls(rs, {hw: coefficient})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self.root_system == other.root_system and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.root_system.label, frozenset(self.terms.items())))

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        if self.root_system != other.root_system:
            raise DomainError("Virtual representations of different algebras cannot be added")
        terms = dict(self.terms)
        for hw, c in other.terms.items():
            terms[hw] = terms.get(hw, 0) + c
        charges = dict(self.charges)
        for hw, q in other.charges.items():
            if charges.setdefault(hw, q) != q:
                raise DomainError(
                    f"Conflicting charges {charges[hw]} and {q} on {self.root_system.coords(hw)}"
                )
        return VirtualRep(self.root_system, terms, charges)

    def __neg__(self) -> "VirtualRep":
        return VirtualRep(self.root_system, {hw: -c for hw, c in self.terms.items()}, self.charges)

    def __sub__(self, other: "VirtualRep") -> "VirtualRep":
        return self + (-other)

    def with_charges(self, charges: Mapping[ScaledWeight, int]) -> "VirtualRep":
        return VirtualRep(self.root_system, self.terms, dict(charges))

    @property
    def dimension(self) -> int:
        return sum(c * weyl_dim(self.root_system, hw) for hw, c in self.terms.items())

    def constituents(self) -> List[Constituent]:
        """Terms ordered by dimension, then height of the highest weight."""
        rs = self.root_system
        items = [
            Constituent(hw, c, weyl_dim(rs, hw), self.charges.get(hw))
            for hw, c in self.terms.items()
        ]
        return sorted(items, key=lambda t: (t.dimension, rs.sort_key(t.highest_weight)))

    def signed_dimensions(self) -> List[int]:
        """Each constituent dimension repeated |coefficient| times with its sign."""
        out = []
        for term in self.constituents():
            sign = 1 if term.coefficient > 0 else -1
            out.extend([sign * term.dimension] * abs(term.coefficient))
        return sorted(out)

    def irrep_count(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def character(self) -> WeightMultiset:
        total = WeightMultiset(self.root_system, {})
        for hw, c in self.terms.items():
            total = total + irrep_character(self.root_system, hw).scale(c)
        return total

    def describe(self) -> str:
        """Human-readable signed sum such as "44 + 84 - 128"."""
        parts: List[str] = []
        positive = [t for t in self.constituents() if t.coefficient > 0]
        negative = [t for t in self.constituents() if t.coefficient < 0]
        for term in positive + negative:
            for _ in range(abs(term.coefficient)):
                if not parts:
                    parts.append(str(term.dimension) if term.coefficient > 0 else f"-{term.dimension}")
                else:
                    parts.append(f"{'+' if term.coefficient > 0 else '-'} {term.dimension}")
        return " ".join(parts) if parts else "0"

    def to_json(self) -> Dict[str, object]:
        rs = self.root_system
        terms = []
        for term in self.constituents():
            entry: Dict[str, object] = {
                "hw": list(term.highest_weight),
                "coeff": term.coefficient,
                "dim": term.dimension,
            }
            if term.charge is not None:
                entry["charge"] = term.charge
            terms.append(entry)
        return {"algebra": rs.label, "scale": rs.scale, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "VirtualRep":
        rs = build_root_system(str(data["algebra"]))
        terms: Dict[ScaledWeight, int] = {}
        charges: Dict[ScaledWeight, int] = {}
        for entry in data["terms"]:  # type: ignore[union-attr]
            hw = tuple(int(x) for x in entry["hw"])
            terms[hw] = terms.get(hw, 0) + int(entry["coeff"])
            if "charge" in entry:
                charges[hw] = int(entry["charge"])
        return cls(rs, terms, charges)


def conjugate_weight(rs: RootSystem, weight: ScaledWeight) -> ScaledWeight:
    """
    Highest weight of the dual representation, the dominant conjugate of
    -lambda. For D_n with n odd this negates the last coordinate.
    """
    return rs.dominant_conjugate(tuple(-x for x in weight))


def conjugate_rep(rep: VirtualRep) -> VirtualRep:
    rs = rep.root_system
    return VirtualRep(rs, {conjugate_weight(rs, hw): c for hw, c in rep.terms.items()},
                      {conjugate_weight(rs, hw): -q for hw, q in rep.charges.items()})


def irreducible_from_coords(rs: RootSystem, coords: Sequence[ScalarLike]) -> VirtualRep:
    hw = rs.to_weight(coords)
    if not rs.is_dominant(hw):
        raise DomainError(f"{tuple(str(Fraction(c)) for c in coords)} is not dominant for {rs.label}")
    return VirtualRep.irreducible(rs, hw)
