"""Gluing construction through the Smith normal form of the gluing matrix"""
import logging

from src.exactlin import IntMatrix, Lattice, lattice_intersection, smith_normal_form
from src.gluing import GluingCertificate, check_gluing, require_minimal
from src.presentation import is_complete_intersection
from src.semigroup import AbelianGroup, GroupElement, Semigroup, SplitSpec, is_minimal_generating, subgroup_of
from src.utils.errors import GlueInvariantError
from .recipe import GlueRecipe, GlueResult

logger = logging.getLogger(__name__)


def gluing_matrix(recipe: GlueRecipe) -> IntMatrix:
    """
    Block matrix [L1 0; 0 L2; gamma_x -gamma_y]

    L1 and L2 are the kernel bases of T1 and T2.
    """
    l1 = recipe.T1.kernel.basis_matrix()
    l2 = recipe.T2.kernel.basis_matrix()
    glue_row = IntMatrix.from_rows([recipe.gamma_x + tuple(-a for a in recipe.gamma_y)])
    return IntMatrix.vstack([IntMatrix.block_diagonal(l1, l2), glue_row])


def glue(recipe: GlueRecipe) -> GlueResult:
    """
    Build the semigroup Z^(r+t) / rowspace(A) generated by the unit vectors

    With P A Q = D, the unit vector e_i maps to row i of Q; coordinates with
    invariant factor d > 1 become residues mod d, coordinates past the rank
    stay free and coordinates with d = 1 vanish.

    Args:
        recipe: T1, T2 (reduced, minimally generated) and gamma

    Returns:
        GlueResult with the minimal / glued / CI / affine flags

    Raises:
        NotMinimalError: T1 or T2 is not minimally generated
        GlueInvariantError: the kernel of the result is not the row lattice of A
    """
    require_minimal(recipe.T1)
    require_minimal(recipe.T2)

    matrix = gluing_matrix(recipe)
    smith = smith_normal_form(matrix)
    n = matrix.cols
    rank = smith.rank
    torsion_positions = [j for j in range(rank) if smith.invariant_factors[j] > 1]
    group = AbelianGroup(n - rank, tuple(smith.invariant_factors[j] for j in torsion_positions))

    generators = []
    for i in range(n):
        row = smith.Q.row(i)
        generators.append(GroupElement(group, row[rank:], tuple(row[j] for j in torsion_positions)))
    S = Semigroup(group, tuple(generators))

    if S.kernel != Lattice.from_generators(n, matrix.rows_list()):
        raise GlueInvariantError("Kernel of the glued semigroup differs from the row lattice of A")

    r = recipe.r
    glued_degree = S.degree(recipe.gamma_x + (0,) * recipe.t)
    minimal = not is_minimal_generating(S)
    certificate = None
    if minimal:
        result = check_gluing(S, SplitSpec.natural(r, n))
        certificate = result if isinstance(result, GluingCertificate) else None
    affine = all(d == 1 for d in smith.invariant_factors)
    logger.debug(
        f"Glued semigroup in {group}: minimal={minimal}, glued={certificate is not None}, affine={affine}"
    )
    return GlueResult(
        recipe=recipe,
        S=S,
        matrix=matrix,
        smith=smith,
        glued_degree=glued_degree,
        minimal=minimal,
        glued=certificate is not None,
        complete_intersection=is_complete_intersection(S),
        affine=affine,
        certificate=certificate,
    )


def check_recipe_condition(recipe: GlueRecipe) -> bool:
    """Product of the coordinate sums of gamma_x and gamma_y exceeds 1"""
    sum_x, sum_y = recipe.side_sums
    return sum_x * sum_y > 1


def group_intersection_check(result: GlueResult) -> GroupElement:
    """
    G(<B1>) meets G(<B2>) exactly in (B1 . gamma_x) Z

    Raises:
        GlueInvariantError: the identity fails, which means a bug upstream
    """
    S = result.S
    recipe = result.recipe
    r, l = recipe.r, S.num_generators
    d = result.glued_degree
    if S.degree((0,) * r + recipe.gamma_y) != d:
        raise GlueInvariantError(f"B1 . gamma_x = {d} differs from B2 . gamma_y")
    common = lattice_intersection(subgroup_of(S, range(r)), subgroup_of(S, range(r, l)))
    expected = Lattice.from_generators(S.group.lift_dim, S.group.relations() + (d.lift(),))
    if common != expected:
        raise GlueInvariantError(f"Group intersection is not generated by {d}")
    return d


def is_affine(result: GlueResult) -> bool:
    return result.S.group.is_torsion_free


def ci_flag(result: GlueResult) -> bool:
    """
    Complete-intersection flag of the result, cross-checked on gluings

    A gluing is a complete intersection exactly when both inputs are.
    """
    value = result.complete_intersection
    if result.glued:
        expected = is_complete_intersection(result.recipe.T1) and is_complete_intersection(result.recipe.T2)
        if value != expected:
            logger.warning(f"CI flag {value} disagrees with the inputs' CI flags ({expected})")
    return value
