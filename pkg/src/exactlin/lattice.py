"""Integer lattices stored by their canonical Hermite basis"""
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from src.utils.errors import DimensionMismatchError
from .int_matrix import IntMatrix, Vector
from .normal_forms import hermite_normal_form


@dataclass(frozen=True)
class Lattice:
    """Subgroup of Z^n given by a basis in row-style HNF.

    Two lattices are equal iff their stored bases are identical.
    """

    ambient_dim: int
    basis: Tuple[Vector, ...]

    @classmethod
    def from_generators(cls, ambient_dim: int, vectors: Iterable[Sequence[int]]) -> "Lattice":
        """
        Lattice spanned by arbitrary (possibly dependent) vectors

        Args:
            ambient_dim: Dimension n of the ambient Z^n
            vectors: Generating vectors of length n

        Returns:
            Lattice with canonical basis
        """
        rows = [tuple(int(x) for x in v) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise DimensionMismatchError(
                    f"Vector of length {len(row)} in a lattice of dimension {ambient_dim}"
                )
        rows = [row for row in rows if any(row)]
        if not rows:
            return cls.zero(ambient_dim)
        h, _ = hermite_normal_form(IntMatrix.from_rows(rows, ambient_dim))
        return cls(ambient_dim, tuple(row for row in h.rows_list() if any(row)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Lattice":
        return cls(ambient_dim, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.basis, self.ambient_dim)

    def contains(self, vector: Sequence[int]) -> bool:
        return lattice_member(self, vector)

    def __contains__(self, vector: Sequence[int]) -> bool:
        return lattice_member(self, vector)


def kernel_basis(matrix: IntMatrix) -> Lattice:
    """
    Integer kernel {v : matrix · v = 0}

    Args:
        matrix: m x n integer matrix

    Returns:
        Lattice in Z^n of rank n - rank(matrix)
    """
    n = matrix.cols
    if matrix.rows == 0:
        return Lattice.from_generators(n, IntMatrix.identity(n).rows_list())
    h, u = hermite_normal_form(matrix.transpose())
    # rows of U that kill every column of the source matrix
    kernel_rows = [u.row(i) for i in range(n) if not any(h.row(i))]
    return Lattice.from_generators(n, kernel_rows)


def lattice_member(lattice: Lattice, vector: Sequence[int]) -> bool:
    """Whether an integer vector lies in the lattice"""
    if len(vector) != lattice.ambient_dim:
        raise DimensionMismatchError(
            f"Vector of length {len(vector)} in a lattice of dimension {lattice.ambient_dim}"
        )
    rest = list(vector)
    for row in lattice.basis:
        col = next(j for j, x in enumerate(row) if x)
        if any(rest[:col]):
            return False
        q, r = divmod(rest[col], row[col])
        if r:
            return False
        if q:
            rest = [a - q * b for a, b in zip(rest, row)]
    return not any(rest)


def _check_same_dimension(first: Lattice, second: Lattice):
    if first.ambient_dim != second.ambient_dim:
        raise DimensionMismatchError(
            f"Lattices live in Z^{first.ambient_dim} and Z^{second.ambient_dim}"
        )


def lattice_intersection(first: Lattice, second: Lattice) -> Lattice:
    """
    Intersection of two lattices in the same Z^n

    Solves x · B1 == y · B2 through the kernel of the stacked bases and maps
    the solutions back through B1.
    """
    _check_same_dimension(first, second)
    n = first.ambient_dim
    if first.rank == 0 or second.rank == 0:
        return Lattice.zero(n)
    stacked = IntMatrix.from_rows(
        list(first.basis) + [tuple(-x for x in row) for row in second.basis], n
    )
    solutions = kernel_basis(stacked.transpose())
    b1 = first.basis_matrix()
    return Lattice.from_generators(
        n, [b1.left_apply(sol[:first.rank]) for sol in solutions.basis]
    )


def lattice_sum(first: Lattice, second: Lattice) -> Lattice:
    """Smallest lattice containing both"""
    _check_same_dimension(first, second)
    return Lattice.from_generators(first.ambient_dim, first.basis + second.basis)
