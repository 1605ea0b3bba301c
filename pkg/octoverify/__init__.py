"""
octoverify - exact algebra engine for octonions, spinors and exceptional groups

Octonion arithmetic, Clifford and stabilizer computations, root systems and
characters, with a command-line verifier that reports each identity it checks.
"""

__version__ = "1.0.0"
__author__ = "octoverify developers"
__description__ = "Exact verification of octonion, spinor and exceptional-group identities"

from .composition_algebras import CDElement, ThreeForm, export_structure_constants, structure_3form
from .exact_core import ExactMatrix, nullspace_basis, rank
from .matrix_lie_lab import (
    MatrixAlgebra,
    build_gamma_system,
    derivation_algebra,
    form_stabilizer,
    lie_closure,
    point_stabilizer,
    spin_algebra,
)

__all__ = [
    "CDElement",
    "ThreeForm",
    "export_structure_constants",
    "structure_3form",
    "ExactMatrix",
    "nullspace_basis",
    "rank",
    "MatrixAlgebra",
    "build_gamma_system",
    "derivation_algebra",
    "form_stabilizer",
    "lie_closure",
    "point_stabilizer",
    "spin_algebra",
]
