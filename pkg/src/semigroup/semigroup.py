"""Finitely generated reduced cancellative semigroups"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from src.exactlin import IntMatrix, Lattice, Vector, kernel_basis
from src.utils.errors import (
    DimensionMismatchError,
    NotReducedError,
    SemigroupError,
    ZeroGeneratorError,
)
from .grading import find_positive_grading
from .group import AbelianGroup, GroupElement

logger = logging.getLogger(__name__)


def degree_map_matrix(group: AbelianGroup, generators: Sequence[GroupElement]) -> IntMatrix:
    """
    Matrix whose integer kernel, projected on the first l coordinates, is ker S

    Free rows are [F^T | 0]; the row of torsion factor j is [T_j^T | d_j e_j].
    """
    k, l = group.free_rank, len(generators)
    s = len(group.torsion_orders)
    rows = []
    for i in range(k):
        rows.append(tuple(g.free_part[i] for g in generators) + (0,) * s)
    for j, d in enumerate(group.torsion_orders):
        rows.append(
            tuple(g.torsion_part[j] for g in generators)
            + tuple(d if t == j else 0 for t in range(s))
        )
    return IntMatrix.from_rows(rows, l + s)


@dataclass(frozen=True)
class Semigroup:
    """S = <n_1, ..., n_l> inside an AbelianGroup.

    Construction rejects zero generators and non-reduced generator lists;
    the kernel lattice and a positive grading are computed once here.
    """

    group: AbelianGroup
    generators: Tuple[GroupElement, ...]
    kernel: Lattice = field(init=False, compare=False, repr=False)
    grading: Vector = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        generators = tuple(self.generators)
        if not generators:
            raise SemigroupError("A semigroup needs at least one generator")
        for i, g in enumerate(generators):
            if g.group != self.group:
                raise DimensionMismatchError(f"Generator {i + 1} lives in {g.group}, not {self.group}")
            if g.is_zero():
                raise ZeroGeneratorError(f"Generator {i + 1} is the zero element")
        object.__setattr__(self, 'generators', generators)

        grading = find_positive_grading([g.free_part for g in generators], self.group.free_rank)
        object.__setattr__(self, 'grading', grading)

        l = len(generators)
        full = kernel_basis(degree_map_matrix(self.group, generators))
        kernel = Lattice.from_generators(l, [row[:l] for row in full.basis])
        object.__setattr__(self, 'kernel', kernel)
        logger.debug(f"Semigroup with {l} generators in {self.group}: kernel rank {kernel.rank}")

    @classmethod
    def numerical(cls, values: Iterable[int]) -> "Semigroup":
        """<a_1, ..., a_l> inside Z"""
        group = AbelianGroup(1)
        return cls(group, tuple(group.element((v,)) for v in values))

    @classmethod
    def affine(cls, vectors: Iterable[Sequence[int]]) -> "Semigroup":
        """Torsion-free semigroup generated by integer vectors of equal length"""
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            raise SemigroupError("A semigroup needs at least one generator")
        group = AbelianGroup(len(vectors[0]))
        return cls(group, tuple(group.element(v) for v in vectors))

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def weights(self) -> Tuple[int, ...]:
        """Grading value of every generator"""
        return tuple(self.weight(g) for g in self.generators)

    def weight(self, m: GroupElement) -> int:
        return sum(w * x for w, x in zip(self.grading, m.free_part))

    def degree(self, exponents: Sequence[int]) -> GroupElement:
        return degree(self, exponents)

    def positive_grading(self) -> Vector:
        return self.grading

    def restrict(self, indices: Iterable[int]) -> "Semigroup":
        """Subsemigroup generated by the chosen generators (0-based), same ambient group"""
        indices = list(indices)
        if not indices:
            raise SemigroupError("Cannot restrict to an empty set of generators")
        return Semigroup(self.group, tuple(self.generators[i] for i in indices))

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def degree(S: Semigroup, exponents: Sequence[int]) -> GroupElement:
    """
    S-degree of the monomial x^alpha, i.e. sum(alpha_i * n_i)

    Args:
        S: Semigroup
        exponents: Vector alpha of length l

    Returns:
        Canonical GroupElement
    """
    if len(exponents) != S.num_generators:
        raise DimensionMismatchError(
            f"Exponent vector of length {len(exponents)} for {S.num_generators} generators"
        )
    free = [0] * S.group.free_rank
    torsion = [0] * len(S.group.torsion_orders)
    for a, g in zip(exponents, S.generators):
        if a:
            free = [x + a * y for x, y in zip(free, g.free_part)]
            torsion = [x + a * y for x, y in zip(torsion, g.torsion_part)]
    return GroupElement(S.group, tuple(free), tuple(torsion))


def positive_grading(S: Semigroup) -> Vector:
    return S.grading


def is_reduced(group: AbelianGroup, generators: Sequence[GroupElement]) -> bool:
    """Whether the generators span a reduced semigroup (S meets -S only in 0)"""
    if any(g.is_zero() for g in generators):
        return False
    try:
        find_positive_grading([g.free_part for g in generators], group.free_rank)
    except NotReducedError:
        return False
    return True


def is_member(S: Semigroup, m: GroupElement) -> bool:
    """Whether m is a nonnegative combination of the generators"""
    from src.fibers import enumerate_fiber

    return bool(enumerate_fiber(S, m).members)


@lru_cache(maxsize=256)
def is_minimal_generating(S: Semigroup) -> Tuple[int, ...]:
    """
    Indices (0-based) of generators that lie in the span of the others

    Returns:
        Empty tuple iff the generating set is minimal
    """
    l = S.num_generators
    if l == 1:
        return ()
    redundant = []
    for i in range(l):
        others = S.restrict(j for j in range(l) if j != i)
        if is_member(others, S.generators[i]):
            redundant.append(i)
    return tuple(redundant)


def subgroup_of(S: Semigroup, indices: Iterable[int]) -> Lattice:
    """
    Group generated by the chosen generators, lifted to Z^(k+s)

    The torsion relations d_i e_(k+i) are always part of the lattice, so
    intersections and memberships are plain lattice operations.
    """
    indices = list(indices)
    if not indices:
        raise SemigroupError("Cannot take the group of an empty set of generators")
    vectors = [S.generators[i].lift() for i in indices]
    return Lattice.from_generators(S.group.lift_dim, vectors + list(S.group.relations()))


def degree_sort_key(S: Semigroup, m: GroupElement) -> Tuple:
    """Canonical order on degrees: grading value, then free part, then torsion"""
    return (S.weight(m), m.free_part, m.torsion_part)


def is_multiple(S: Semigroup, d_prime: GroupElement, d: GroupElement) -> Optional[int]:
    """
    The j >= 1 with d_prime == j * d, or None

    The grading fixes the only possible j.
    """
    wd, wp = S.weight(d), S.weight(d_prime)
    if wd <= 0 or wp % wd:
        return None
    j = wp // wd
    if j >= 1 and j * d == d_prime:
        return j
    return None


def sorted_degrees(S: Semigroup, degrees: Iterable[GroupElement]) -> List[GroupElement]:
    return sorted(set(degrees), key=lambda m: degree_sort_key(S, m))
