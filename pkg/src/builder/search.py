"""Search for gamma making the glued semigroup affine"""
import logging
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from config import Config
from src.exactlin import IntMatrix, extended_gcd, smith_normal_form
from src.gluing import require_minimal
from src.semigroup import Semigroup
from src.utils.errors import NotAffineError
from .construct import glue
from .recipe import GlueRecipe

logger = logging.getLogger(__name__)


class AffineCondition(NamedTuple):
    """gcd of the trailing transformed gamma coordinates with Bezout witnesses f, g"""

    gcd: int
    f: Tuple[int, ...]
    g: Tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.gcd == 1


@dataclass(frozen=True)
class Exhausted:
    """No acceptable gamma among the first `budget` candidates"""

    budget: int
    tested: int

    def __bool__(self) -> bool:
        return False


def _kernel_transform(T: Semigroup) -> Tuple[IntMatrix, int]:
    """Column transform Q of the Smith form of the kernel basis, and the rank"""
    if not T.group.is_torsion_free:
        raise NotAffineError(f"{T} lives in {T.group}, which has torsion")
    basis = T.kernel.basis_matrix()
    if basis.rows == 0:
        return IntMatrix.identity(T.num_generators), 0
    smith = smith_normal_form(basis)
    return smith.Q, smith.rank


def _condition(q1: IntMatrix, rank1: int, q2: IntMatrix, rank2: int,
               gamma_x: Sequence[int], gamma_y: Sequence[int]) -> AffineCondition:
    tail_x = q1.left_apply(gamma_x)[rank1:]
    tail_y = tuple(-a for a in q2.left_apply(gamma_y))[rank2:]
    g, coefficients = extended_gcd(tail_x + tail_y)
    return AffineCondition(g, coefficients[:len(tail_x)], coefficients[len(tail_x):])


def affine_condition(T1: Semigroup, T2: Semigroup, gamma_x: Sequence[int],
                     gamma_y: Sequence[int]) -> AffineCondition:
    """
    Test whether gluing affine T1, T2 along gamma gives a torsion-free group

    With Q1, Q2 the column transforms of the Smith forms of the kernel
    bases, the result is affine iff the coordinates of gamma_x Q1 and
    -gamma_y Q2 past the kernel ranks have gcd 1.

    Raises:
        NotAffineError: T1 or T2 has torsion
    """
    q1, rank1 = _kernel_transform(T1)
    q2, rank2 = _kernel_transform(T2)
    return _condition(q1, rank1, q2, rank2, tuple(gamma_x), tuple(gamma_y))


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Vectors of `parts` nonnegative entries summing to `total`, in lex order"""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def candidate_gammas(r: int, t: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(gamma_x, gamma_y) by increasing total sum, skipping zero sides and unit products"""
    total = 2
    while True:
        for vector in _compositions(total, r + t):
            gamma_x, gamma_y = vector[:r], vector[r:]
            if sum(gamma_x) * sum(gamma_y) > 1:
                yield gamma_x, gamma_y
        total += 1


def affine_gamma_search(
    T1: Semigroup,
    T2: Semigroup,
    budget: Optional[int] = None,
    progress: bool = False,
) -> Union[GlueRecipe, Exhausted]:
    """
    First gamma (in canonical order) whose gluing is affine, minimal and glued

    Candidates passing the gcd test are confirmed by building the semigroup.

    Args:
        T1: Affine, reduced, minimally generated semigroup
        T2: Same
        budget: Number of candidates to test (Config.AFFINE_SEARCH_BUDGET)
        progress: Show a progress bar on stderr

    Returns:
        GlueRecipe, or Exhausted when the budget runs out
    """
    budget = Config.AFFINE_SEARCH_BUDGET if budget is None else budget
    q1, rank1 = _kernel_transform(T1)
    q2, rank2 = _kernel_transform(T2)
    require_minimal(T1)
    require_minimal(T2)

    tested = 0
    with tqdm(total=budget, desc="Gamma candidates", disable=not progress) as bar:
        for gamma_x, gamma_y in candidate_gammas(T1.num_generators, T2.num_generators):
            if tested >= budget:
                break
            tested += 1
            bar.update(1)
            if not _condition(q1, rank1, q2, rank2, gamma_x, gamma_y).holds:
                continue
            recipe = GlueRecipe(T1, T2, gamma_x, gamma_y)
            result = glue(recipe)
            if result.affine and result.minimal and result.glued:
                logger.debug(f"Accepted gamma_x={gamma_x}, gamma_y={gamma_y} after {tested} candidates")
                return recipe
            logger.debug(f"gamma_x={gamma_x}, gamma_y={gamma_y} passes the gcd test but fails verification")
    return Exhausted(budget, tested)
