"""Utility modules"""
from .errors import (
    DimensionMismatchError,
    GlueInputError,
    GlueInvariantError,
    NotAffineError,
    NotMinimalError,
    NotReducedError,
    SemigroupError,
    SemigroupFileError,
    SplitError,
    TooManyGeneratorsError,
    ZeroGeneratorError,
)

__all__ = [
    'DimensionMismatchError',
    'GlueInputError',
    'GlueInvariantError',
    'NotAffineError',
    'NotMinimalError',
    'NotReducedError',
    'SemigroupError',
    'SemigroupFileError',
    'SplitError',
    'TooManyGeneratorsError',
    'ZeroGeneratorError',
]
