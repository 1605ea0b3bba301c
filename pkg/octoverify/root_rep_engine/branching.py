"""
Branching

Restriction of characters along explicit linear maps of weight coordinates,
with named presets for the embeddings the verification suites use.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from loguru import logger

from ..error_handling import DomainError, InvalidProjectionError, NotACharacterError, handle_errors
from ..exact_core import ExactMatrix
from .characters import VirtualRep, WeightMultiset, decompose, irreducible_from_coords, tensor_product
from .root_system import RootSystem, ScaledWeight, build_root_system


@dataclass(frozen=True)
class Projection:
    """Linear map from source to target orthogonal weight coordinates."""

    name: str
    source: str
    target: str
    matrix: ExactMatrix

    def source_system(self) -> RootSystem:
        return build_root_system(self.source)

    def target_system(self) -> RootSystem:
        return build_root_system(self.target)

    def project(self, source: RootSystem, target: RootSystem,
                weight: ScaledWeight) -> ScaledWeight:
        coords = self.matrix.apply(source.coords(weight))
        try:
            return target.to_weight(coords)
        except DomainError as e:
            raise InvalidProjectionError(
                f"Projection '{self.name}' sends {source.coords(weight)} outside the "
                f"weight lattice of {target.label}"
            ) from e


def _drop_last(n: int) -> ExactMatrix:
    return ExactMatrix.from_rows([[int(i == j) for j in range(n)] for i in range(n - 1)])


def spinor_weights_positive_half(rank: int) -> List[Tuple[Fraction, ...]]:
    """The 2^(rank-1) spinor weights 1/2(1, +-1, ..., +-1), lexicographically."""
    half = Fraction(1, 2)
    return sorted(
        (half,) + tuple(half * s for s in signs)
        for signs in itertools.product((-1, 1), repeat=rank - 1)
    )


def _spin_embedding(rank: int) -> ExactMatrix:
    """Image of e_i is the i-th positive-half spinor weight of B_rank."""
    columns = spinor_weights_positive_half(rank)
    return ExactMatrix.from_rows([[col[r] for col in columns] for r in range(rank)])


PROJECTIONS: Dict[str, Projection] = {
    "D5->B4": Projection("D5->B4", "D5", "B4", _drop_last(5)),
    "B4->D4": Projection("B4->D4", "B4", "D4", ExactMatrix.identity(4)),
    "D5->D4": Projection("D5->D4", "D5", "D4", _drop_last(5)),
    "D8->B4": Projection("D8->B4", "D8", "B4", _spin_embedding(4)),
}


def get_projection(name: str) -> Projection:
    try:
        return PROJECTIONS[name]
    except KeyError:
        raise DomainError(
            f"Unknown projection '{name}'; presets are {', '.join(sorted(PROJECTIONS))}"
        ) from None


def default_projection(source: str, target: str) -> Projection:
    name = f"{source.upper()}->{target.upper()}"
    return get_projection(name)


@handle_errors(operation="branch_character")
def branch_character(ws: WeightMultiset, target: RootSystem,
                     projection: Projection) -> VirtualRep:
    """Push a character through a projection and decompose under the target."""
    source = ws.root_system
    projected: Dict[ScaledWeight, int] = {}
    for w, m in ws.entries.items():
        p = projection.project(source, target, w)
        projected[p] = projected.get(p, 0) + m
    image = WeightMultiset(target, projected)
    try:
        result = decompose(image, target)
    except NotACharacterError as e:
        raise InvalidProjectionError(
            f"Projection '{projection.name}' does not yield a {target.label} character: {e}"
        ) from e
    if result.dimension != ws.dimension:
        raise InvalidProjectionError(
            f"Branching along '{projection.name}' changed the dimension "
            f"{ws.dimension} -> {result.dimension}"
        )
    logger.debug(f"Branched {source.label} -> {target.label}: {result.describe()}")
    return result


def branch(rep: VirtualRep, target: RootSystem, projection: Projection) -> VirtualRep:
    return branch_character(rep.character(), target, projection)


def half_spin_weights(rank: int) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """Highest weights 1/2(1,...,1) and 1/2(1,...,1,-1) of the D_rank half-spins."""
    half = Fraction(1, 2)
    plus = (half,) * rank
    minus = (half,) * (rank - 1) + (-half,)
    return plus, minus


def kostant_multiplet(g_label: str = "D8", h_label: str = "B4",
                      projection_name: str = "D8->B4") -> VirtualRep:
    """Branching of S+ minus the branching of S- of D_rank(g) under h."""
    g = build_root_system(g_label)
    h = build_root_system(h_label)
    if g.type_label != "D":
        raise DomainError(f"Half-spin representations are defined here for type D, not {g.label}")
    projection = get_projection(projection_name)
    plus, minus = half_spin_weights(g.rank)
    s_plus = branch(irreducible_from_coords(g, plus), h, projection)
    s_minus = branch(irreducible_from_coords(g, minus), h, projection)
    multiplet = s_plus - s_minus
    logger.info(f"{g.label} half-spin difference under {h.label}: {multiplet.describe()}")
    return multiplet


# Named B4 highest weights of the eleven-dimensional multiplet.
SUGRA_B4 = {
    "graviton": (2, 0, 0, 0),
    "three_form": (1, 1, 1, 0),
    "gravitino": (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
}


@dataclass(frozen=True)
class OxidationIdentity:
    name: str
    source: VirtualRep
    branched: VirtualRep
    expected: Tuple[int, ...]

    @property
    def holds(self) -> bool:
        return tuple(self.branched.signed_dimensions()) == self.expected


def oxidation_checks() -> List[OxidationIdentity]:
    """The B4 multiplet branched to D4: 44 = 35+8+1, 84 = 56+28, 128 = 8+8+56+56."""
    b4 = build_root_system("B4")
    d4 = build_root_system("D4")
    projection = get_projection("B4->D4")
    expected = {
        "graviton": (1, 8, 35),
        "three_form": (28, 56),
        "gravitino": (8, 8, 56, 56),
    }
    results = []
    for name, coords in SUGRA_B4.items():
        rep = irreducible_from_coords(b4, coords)
        results.append(OxidationIdentity(name, rep, branch(rep, d4, projection), expected[name]))
    return results


def yang_mills_square() -> Tuple[VirtualRep, VirtualRep, VirtualRep]:
    """(8v - 8s) x (8v - 8c) for D4, split into (total, bosons, fermions)."""
    d4 = build_root_system("D4")
    half = Fraction(1, 2)
    vector = irreducible_from_coords(d4, (1, 0, 0, 0)).character()
    spin_s = irreducible_from_coords(d4, (half, half, half, half)).character()
    spin_c = irreducible_from_coords(d4, (half, half, half, -half)).character()
    total = decompose(tensor_product(vector - spin_s, vector - spin_c))
    bosons = VirtualRep(d4, {hw: c for hw, c in total.terms.items() if c > 0})
    fermions = VirtualRep(d4, {hw: c for hw, c in total.terms.items() if c < 0})
    return total, bosons, fermions
