"""Finitely generated abelian groups Z^k x Z/d1 x ... x Z/ds and their elements"""
from dataclasses import dataclass
from typing import Sequence, Tuple

from src.exactlin import Vector
from src.utils.errors import DimensionMismatchError, SemigroupError


@dataclass(frozen=True)
class AbelianGroup:
    """Ambient group of a semigroup; factors of order 1 are dropped"""

    free_rank: int
    torsion_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise SemigroupError(f"Negative free rank {self.free_rank}")
        orders = tuple(int(d) for d in self.torsion_orders)
        if any(d < 1 for d in orders):
            raise SemigroupError(f"Torsion orders must be positive, got {orders}")
        object.__setattr__(self, 'torsion_orders', tuple(d for d in orders if d > 1))

    @property
    def lift_dim(self) -> int:
        """Dimension k + s of the lifting space"""
        return self.free_rank + len(self.torsion_orders)

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion_orders

    def element(self, free: Sequence[int], torsion: Sequence[int] = ()) -> "GroupElement":
        return GroupElement(self, tuple(free), tuple(torsion))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.free_rank, (0,) * len(self.torsion_orders))

    def element_from_lift(self, vector: Sequence[int]) -> "GroupElement":
        """Inverse of GroupElement.lift (torsion coordinates reduced)"""
        if len(vector) != self.lift_dim:
            raise DimensionMismatchError(
                f"Lift of length {len(vector)} for a group of lift dimension {self.lift_dim}"
            )
        k = self.free_rank
        return GroupElement(self, tuple(vector[:k]), tuple(vector[k:]))

    def relations(self) -> Tuple[Vector, ...]:
        """Vectors d_i * e_{k+i} of the lifting space"""
        n = self.lift_dim
        return tuple(
            tuple(d if j == self.free_rank + i else 0 for j in range(n))
            for i, d in enumerate(self.torsion_orders)
        )

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion_orders]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts) or "0"


@dataclass(frozen=True)
class GroupElement:
    """Element of an AbelianGroup in canonical form (residues in [0, d))"""

    group: AbelianGroup
    free_part: Vector
    torsion_part: Vector = ()

    def __post_init__(self):
        free = tuple(int(x) for x in self.free_part)
        torsion = tuple(int(x) for x in self.torsion_part)
        if len(free) != self.group.free_rank:
            raise DimensionMismatchError(
                f"Free part of length {len(free)} in a group of free rank {self.group.free_rank}"
            )
        if len(torsion) != len(self.group.torsion_orders):
            raise DimensionMismatchError(
                f"Torsion part of length {len(torsion)} for "
                f"{len(self.group.torsion_orders)} torsion factors"
            )
        torsion = tuple(r % d for r, d in zip(torsion, self.group.torsion_orders))
        object.__setattr__(self, 'free_part', free)
        object.__setattr__(self, 'torsion_part', torsion)

    def _check_group(self, other: "GroupElement"):
        if self.group != other.group:
            raise DimensionMismatchError(f"Elements of {self.group} and {other.group} do not mix")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_group(other)
        return GroupElement(
            self.group,
            tuple(a + b for a, b in zip(self.free_part, other.free_part)),
            tuple(a + b for a, b in zip(self.torsion_part, other.torsion_part)),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple(-a for a in self.free_part),
            tuple(-a for a in self.torsion_part),
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __mul__(self, factor: int) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple(factor * a for a in self.free_part),
            tuple(factor * a for a in self.torsion_part),
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def lift(self) -> Vector:
        """Coordinates in Z^(k+s): free part first, then torsion residues"""
        return self.free_part + self.torsion_part

    def __str__(self) -> str:
        free = ",".join(str(x) for x in self.free_part)
        if self.torsion_part:
            torsion = ",".join(str(x) for x in self.torsion_part)
            return f"({torsion};{free})"
        if len(self.free_part) == 1:
            return free
        return f"({free})"
