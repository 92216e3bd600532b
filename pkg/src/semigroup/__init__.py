"""Semigroups inside finitely generated abelian groups"""
from .group import AbelianGroup, GroupElement
from .grading import find_positive_grading
from .semigroup import (
    Semigroup,
    degree,
    degree_map_matrix,
    degree_sort_key,
    is_member,
    is_minimal_generating,
    is_multiple,
    is_reduced,
    positive_grading,
    sorted_degrees,
    subgroup_of,
)
from .split import SplitSpec, all_splits

__all__ = [
    'AbelianGroup',
    'GroupElement',
    'find_positive_grading',
    'Semigroup',
    'degree',
    'degree_map_matrix',
    'degree_sort_key',
    'is_member',
    'is_minimal_generating',
    'is_multiple',
    'is_reduced',
    'positive_grading',
    'sorted_degrees',
    'subgroup_of',
    'SplitSpec',
    'all_splits',
]
