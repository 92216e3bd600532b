"""Semigroup ideals: generating sets, Betti elements and minimal presentations"""
from .binomial import (
    Binomial,
    Presentation,
    binomial_sort_key,
    monomial_str,
    presentation_lattice,
    variable_names,
)
from .completion import graded_revlex_key, ideal_generators
from .minimal import (
    betti_complexes,
    betti_elements,
    indispensable_binomials,
    is_complete_intersection,
    is_uniquely_generated,
    minimal_presentation,
    spans_components,
)

__all__ = [
    'Binomial',
    'Presentation',
    'binomial_sort_key',
    'monomial_str',
    'presentation_lattice',
    'variable_names',
    'graded_revlex_key',
    'ideal_generators',
    'betti_complexes',
    'betti_elements',
    'indispensable_binomials',
    'is_complete_intersection',
    'is_uniquely_generated',
    'minimal_presentation',
    'spans_components',
]
