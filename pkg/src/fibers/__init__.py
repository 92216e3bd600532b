"""Fibers of a degree and their gcd complexes"""
from .fiber import Factorization, Fiber, enumerate_fiber, member_key
from .nabla import (
    NablaComplex,
    Side,
    build_nabla,
    nabla_restricted,
    share_variable,
    split_fiber,
)

__all__ = [
    'Factorization',
    'Fiber',
    'enumerate_fiber',
    'member_key',
    'NablaComplex',
    'Side',
    'build_nabla',
    'nabla_restricted',
    'share_variable',
    'split_fiber',
]
