"""Gluing recipes and the semigroups they build"""
from dataclasses import dataclass
from typing import Optional, Tuple

from src.exactlin import IntMatrix, SmithDecomposition, Vector
from src.gluing import GluingCertificate
from src.semigroup import GroupElement, Semigroup
from src.utils.errors import GlueInputError


@dataclass(frozen=True)
class GlueRecipe:
    """Two semigroups and the exponents (gamma_x, gamma_y) of the glued binomial"""

    T1: Semigroup
    T2: Semigroup
    gamma_x: Vector
    gamma_y: Vector

    def __post_init__(self):
        gamma_x = tuple(int(a) for a in self.gamma_x)
        gamma_y = tuple(int(a) for a in self.gamma_y)
        if len(gamma_x) != self.T1.num_generators:
            raise GlueInputError(
                f"gamma_x has {len(gamma_x)} entries, T1 has {self.T1.num_generators} generators"
            )
        if len(gamma_y) != self.T2.num_generators:
            raise GlueInputError(
                f"gamma_y has {len(gamma_y)} entries, T2 has {self.T2.num_generators} generators"
            )
        if any(a < 0 for a in gamma_x + gamma_y):
            raise GlueInputError("gamma entries must be nonnegative")
        if not any(gamma_x) or not any(gamma_y):
            raise GlueInputError("gamma_x and gamma_y must both be nonzero")
        object.__setattr__(self, 'gamma_x', gamma_x)
        object.__setattr__(self, 'gamma_y', gamma_y)

    @property
    def r(self) -> int:
        return self.T1.num_generators

    @property
    def t(self) -> int:
        return self.T2.num_generators

    @property
    def side_sums(self) -> Tuple[int, int]:
        return sum(self.gamma_x), sum(self.gamma_y)


@dataclass(frozen=True)
class GlueResult:
    """Semigroup built from a recipe, with its verification flags"""

    recipe: GlueRecipe
    S: Semigroup
    matrix: IntMatrix
    smith: SmithDecomposition
    glued_degree: GroupElement
    minimal: bool
    glued: bool
    complete_intersection: bool
    affine: bool
    certificate: Optional[GluingCertificate] = None

    @property
    def B1(self) -> Tuple[GroupElement, ...]:
        return self.S.generators[:self.recipe.r]

    @property
    def B2(self) -> Tuple[GroupElement, ...]:
        return self.S.generators[self.recipe.r:]

    @property
    def side_sums(self) -> Tuple[int, int]:
        return self.recipe.side_sums
