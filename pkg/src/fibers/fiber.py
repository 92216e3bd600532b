"""Factorizations of a degree and the fiber C_m"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Tuple

from src.exactlin import Vector
from src.semigroup import GroupElement, Semigroup
from src.utils.errors import DimensionMismatchError, SemigroupError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Factorization:
    """Exponent vector of a monomial x^alpha"""

    exponents: Vector

    def __post_init__(self):
        exponents = tuple(int(a) for a in self.exponents)
        if any(a < 0 for a in exponents):
            raise SemigroupError(f"Negative exponent in {exponents}")
        object.__setattr__(self, 'exponents', exponents)

    @classmethod
    def zero(cls, l: int) -> "Factorization":
        return cls((0,) * l)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(i for i, a in enumerate(self.exponents) if a)

    def is_zero(self) -> bool:
        return not any(self.exponents)

    def gcd(self, other: "Factorization") -> "Factorization":
        return Factorization(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Factorization") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def weight(self, S: Semigroup) -> int:
        return sum(w * a for w, a in zip(S.weights, self.exponents))

    def degree(self, S: Semigroup) -> GroupElement:
        return S.degree(self.exponents)

    def __add__(self, other: "Factorization") -> "Factorization":
        return Factorization(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __sub__(self, other: "Factorization") -> "Factorization":
        return Factorization(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __len__(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class Fiber:
    """All factorizations of a degree, sorted lexicographically"""

    degree: GroupElement
    members: Tuple[Factorization, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def is_empty(self) -> bool:
        return not self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def member_key(member: Factorization) -> Vector:
    """Order inside a fiber; all members share the grading value"""
    return member.exponents


@lru_cache(maxsize=4096)
def enumerate_fiber(S: Semigroup, m: GroupElement) -> Fiber:
    """
    Every alpha in N^l with sum(alpha_i * n_i) == m

    Depth-first over the generators by decreasing weight; the exponent of the
    lightest generator is forced by the remaining grading budget, and the
    full group equation (torsion included) is checked at the leaf.

    Args:
        S: Reduced semigroup
        m: Degree in the ambient group of S

    Returns:
        Fiber, empty iff m is not in S
    """
    if m.group != S.group:
        raise DimensionMismatchError(f"Degree {m} does not live in {S.group}")

    l = S.num_generators
    weights = S.weights
    budget = S.weight(m)
    if budget < 0:
        return Fiber(m, ())

    order = sorted(range(l), key=lambda i: (-weights[i], i))
    last = order[-1]
    target_free = m.free_part
    target_torsion = m.torsion_part
    orders = S.group.torsion_orders
    gens = S.generators
    exponents = [0] * l
    found: List[Factorization] = []

    def leaf(free: List[int], torsion: List[int]):
        if tuple(free) != target_free:
            return
        if any((t - r) % d for t, r, d in zip(torsion, target_torsion, orders)):
            return
        found.append(Factorization(tuple(exponents)))

    def visit(pos: int, remaining: int, free: List[int], torsion: List[int]):
        i = order[pos]
        g = gens[i]
        if i == last:
            q, r = divmod(remaining, weights[i])
            if r:
                return
            exponents[i] = q
            leaf(
                [x + q * y for x, y in zip(free, g.free_part)],
                [x + q * y for x, y in zip(torsion, g.torsion_part)],
            )
            exponents[i] = 0
            return
        for a in range(remaining // weights[i] + 1):
            exponents[i] = a
            visit(
                pos + 1,
                remaining - a * weights[i],
                [x + a * y for x, y in zip(free, g.free_part)],
                [x + a * y for x, y in zip(torsion, g.torsion_part)],
            )
        exponents[i] = 0

    visit(0, budget, [0] * S.group.free_rank, [0] * len(orders))
    members = tuple(sorted(found, key=member_key))
    logger.debug(f"Fiber of {m}: {len(members)} factorizations")
    return Fiber(m, members)
