"""
Root systems, characters and branching.

Weights are integer tuples in orthogonal coordinates multiplied by a
per-system scale; all arithmetic is exact.
"""

from .root_system import (
    RootSystem,
    build_root_system,
    degrees,
    euler_characteristic_coset,
    exponents,
    root_system_isomorphic,
    sphere_decomposition,
    weyl_enumerate,
    weyl_order,
)
from .characters import (
    VirtualRep,
    WeightMultiset,
    alt_power,
    decompose,
    irrep_character,
    irreducible_from_coords,
    tensor_product,
    weyl_dim,
)
from .branching import PROJECTIONS, branch, branch_character, get_projection, kostant_multiplet

__all__ = [
    "RootSystem",
    "build_root_system",
    "degrees",
    "euler_characteristic_coset",
    "exponents",
    "root_system_isomorphic",
    "sphere_decomposition",
    "weyl_enumerate",
    "weyl_order",
    "VirtualRep",
    "WeightMultiset",
    "alt_power",
    "decompose",
    "irrep_character",
    "irreducible_from_coords",
    "tensor_product",
    "weyl_dim",
    "PROJECTIONS",
    "branch",
    "branch_character",
    "get_projection",
    "kostant_multiplet",
]
