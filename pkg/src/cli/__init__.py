"""Command-line interface, file format and report rendering"""
from .main import build_parser, main
from .semigroup_file import GeneratorLine, SemigroupFile, parse_degree, parse_integers
from .dot import nabla_to_dot

__all__ = [
    'build_parser',
    'main',
    'GeneratorLine',
    'SemigroupFile',
    'parse_degree',
    'parse_integers',
    'nabla_to_dot',
]
