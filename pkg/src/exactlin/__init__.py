"""Exact integer linear algebra"""
from .int_matrix import IntMatrix, Vector
from .normal_forms import (
    SmithDecomposition,
    extended_gcd,
    hermite_normal_form,
    smith_normal_form,
)
from .lattice import (
    Lattice,
    kernel_basis,
    lattice_intersection,
    lattice_member,
    lattice_sum,
)

__all__ = [
    'IntMatrix',
    'Vector',
    'SmithDecomposition',
    'extended_gcd',
    'hermite_normal_form',
    'smith_normal_form',
    'Lattice',
    'kernel_basis',
    'lattice_intersection',
    'lattice_member',
    'lattice_sum',
]
