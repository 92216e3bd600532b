"""Semigroups shared by the test scripts"""
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.semigroup import AbelianGroup, Semigroup

THOMA_VECTORS = [(13, 0), (5, 8), (2, 11), (0, 13), (4, 4), (6, 6), (7, 7), (9, 9)]

NUMERICAL = [
    (2, 3), (2, 5), (3, 5), (3, 4), (5, 7),
    (4, 6, 9), (3, 5, 7), (4, 5, 6), (5, 6, 7), (6, 10, 15),
    (4, 6, 7), (5, 7, 9), (3, 4, 5), (4, 5, 7), (6, 9, 10),
    (4, 7, 10), (4, 10, 15), (9, 10, 12), (7, 9, 11),
    (8, 10, 12, 15), (6, 8, 9, 10), (5, 6, 8, 9),
]

DATA_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'data', 'semigroups'))


def thoma() -> Semigroup:
    return Semigroup.affine(THOMA_VECTORS)


def t1() -> Semigroup:
    return Semigroup.affine([(-7, 2), (11, 1), (5, 0), (0, 1)])


def z2_torsion() -> Semigroup:
    """<(0;2), (1;2), (0;3), (1;3)> in Z/2 x Z"""
    group = AbelianGroup(1, (2,))
    return Semigroup(group, tuple(group.element((f,), (t,)) for t, f in [(0, 2), (1, 2), (0, 3), (1, 3)]))


def plane_cases():
    """Small semigroups in Z^2"""
    return [
        Semigroup.affine([(1, 0), (0, 1)]),
        Semigroup.affine([(1, 0), (1, 1), (1, 2)]),
        Semigroup.affine([(2, 0), (0, 2), (1, 1)]),
        Semigroup.affine([(3, 0), (0, 3), (1, 2), (2, 1)]),
    ]


def all_cases():
    """Every minimally generated semigroup used by the agreement tests"""
    cases = [Semigroup.numerical(values) for values in NUMERICAL]
    cases += plane_cases()
    cases += [thoma(), z2_torsion()]
    return cases


def data_file(name: str) -> str:
    return os.path.join(DATA_DIR, name)
