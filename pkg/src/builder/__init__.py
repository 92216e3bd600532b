"""Construction of glued semigroups"""
from .recipe import GlueRecipe, GlueResult
from .construct import (
    check_recipe_condition,
    ci_flag,
    glue,
    gluing_matrix,
    group_intersection_check,
    is_affine,
)
from .search import (
    AffineCondition,
    Exhausted,
    affine_condition,
    affine_gamma_search,
    candidate_gammas,
)

__all__ = [
    'GlueRecipe',
    'GlueResult',
    'check_recipe_condition',
    'ci_flag',
    'glue',
    'gluing_matrix',
    'group_intersection_check',
    'is_affine',
    'AffineCondition',
    'Exhausted',
    'affine_condition',
    'affine_gamma_search',
    'candidate_gammas',
]
