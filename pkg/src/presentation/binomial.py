"""Binomials X^plus - X^minus and sets of them"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.exactlin import Lattice, Vector
from src.fibers import Factorization
from src.semigroup import GroupElement, Semigroup, degree_sort_key
from src.utils.errors import DimensionMismatchError


def variable_names(l: int, split=None) -> List[str]:
    """x1..xl, or x1..xr / y1..yt along a split"""
    if split is None:
        return [f"x{i + 1}" for i in range(l)]
    names = [''] * l
    for pos, i in enumerate(split.left):
        names[i] = f"x{pos + 1}"
    for pos, i in enumerate(split.right):
        names[i] = f"y{pos + 1}"
    return names


def monomial_str(member: Factorization, names: Optional[Sequence[str]] = None) -> str:
    """Render as x1^2*x3; the empty monomial is 1"""
    names = names or variable_names(len(member))
    parts = []
    for name, a in zip(names, member.exponents):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class Binomial:
    """plus - minus with both terms of the same degree"""

    plus: Factorization
    minus: Factorization
    degree: GroupElement

    @classmethod
    def canonical(cls, S: Semigroup, first: Factorization, second: Factorization) -> "Binomial":
        """
        Saturated normal form with the larger term first

        Common factors are divided out; terms compare by grading value,
        then lexicographically.
        """
        common = first.gcd(second)
        first, second = first - common, second - common
        if (first.weight(S), first.exponents) < (second.weight(S), second.exponents):
            first, second = second, first
        return cls(first, second, first.degree(S))

    @property
    def difference(self) -> Vector:
        """plus - minus, an element of ker S"""
        return tuple(a - b for a, b in zip(self.plus.exponents, self.minus.exponents))

    def same_up_to_sign(self, other: "Binomial") -> bool:
        return {self.plus, self.minus} == {other.plus, other.minus}

    def is_saturated(self) -> bool:
        return not (self.plus.support & self.minus.support)

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        return f"{monomial_str(self.plus, names)} - {monomial_str(self.minus, names)}"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class Presentation:
    """Binomial generating set of a semigroup ideal"""

    binomials: Tuple[Binomial, ...]
    betti: Tuple[GroupElement, ...] = ()
    minimal: bool = False

    @property
    def by_degree(self) -> Dict[GroupElement, List[Binomial]]:
        grouped: Dict[GroupElement, List[Binomial]] = {}
        for binomial in self.binomials:
            grouped.setdefault(binomial.degree, []).append(binomial)
        return grouped

    @property
    def degrees(self) -> List[GroupElement]:
        return list(self.by_degree)

    def __len__(self) -> int:
        return len(self.binomials)

    def __iter__(self):
        return iter(self.binomials)


def binomial_sort_key(S: Semigroup, binomial: Binomial) -> Tuple:
    return (
        degree_sort_key(S, binomial.degree),
        binomial.plus.exponents,
        binomial.minus.exponents,
    )


def presentation_lattice(presentation: Presentation, l: int) -> Lattice:
    """Lattice spanned by plus - minus over the presentation"""
    for binomial in presentation.binomials:
        if len(binomial.plus) != l:
            raise DimensionMismatchError(f"Binomial in {len(binomial.plus)} variables, expected {l}")
    return Lattice.from_generators(l, [b.difference for b in presentation.binomials])
