"""Vanishing ideals, lattices and parameters of parameterized toric codes."""

from .codes import code_params, hilbert_function, monomials_of_degree
from .gfq import Field
from .intlat import IntMatrix, Lattice
from .points import enumerate_points, length_count, length_snf
from .toric import ToricInstance, validate
from .vanish import (ideal_via_elimination, ideal_via_lattice, is_complete_intersection,
                     lattice_degenerate, lattice_L, lattice_via_colon)

__all__ = [
    "Field", "IntMatrix", "Lattice", "ToricInstance", "validate",
    "enumerate_points", "length_count", "length_snf",
    "ideal_via_elimination", "ideal_via_lattice", "lattice_L", "lattice_via_colon",
    "lattice_degenerate", "is_complete_intersection",
    "code_params", "hilbert_function", "monomials_of_degree",
]
