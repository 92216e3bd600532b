"""Test script for generating sets, Betti degrees and minimal presentations"""
import sys
import os
from collections import Counter
from itertools import product

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.fibers import Factorization, Fiber, NablaComplex
from src.presentation import (
    Binomial,
    betti_complexes,
    betti_elements,
    graded_revlex_key,
    ideal_generators,
    indispensable_binomials,
    is_complete_intersection,
    is_uniquely_generated,
    minimal_presentation,
    monomial_str,
    presentation_lattice,
    variable_names,
)
from src.semigroup import Semigroup, SplitSpec
from semigroup_cases import NUMERICAL, all_cases, thoma

THOMA_BETTI = [
    (15, 15), (14, 14), (12, 12), (18, 18), (10, 55), (15, 24), (13, 52), (13, 13), (16, 16),
]


def brute_force_betti(S: Semigroup, bound: int):
    """Numerical semigroup degrees up to bound whose complex is disconnected"""
    values = [g.free_part[0] for g in S.generators]
    found = []
    for m in range(1, bound + 1):
        members = [
            Factorization(alpha)
            for alpha in product(*[range(m // v + 1) for v in values])
            if sum(a * v for a, v in zip(alpha, values)) == m
        ]
        degree = S.group.element((m,))
        if len(members) > 1 and NablaComplex(Fiber(degree, tuple(members))).num_components > 1:
            found.append(degree)
    return found


def test_formatting():
    print("\n1. Monomials and binomials:")
    names = variable_names(3)
    assert names == ['x1', 'x2', 'x3']
    assert monomial_str(Factorization((2, 0, 1)), names) == "x1^2*x3"
    assert monomial_str(Factorization((0, 0, 0))) == "1"
    split = SplitSpec.parse("1,3|2", 3)
    assert variable_names(3, split) == ['x1', 'y1', 'x2']

    S = Semigroup.numerical([4, 6, 9])
    b = Binomial.canonical(S, Factorization((0, 0, 2)), Factorization((3, 1, 0)))
    assert b.plus == Factorization((3, 1, 0)) and b.minus == Factorization((0, 0, 2))
    assert str(b) == "x1^3*x2 - x3^2"
    assert b.difference == (3, 1, -2)
    assert b.is_saturated()

    c = Binomial.canonical(S, Factorization((3, 2, 0)), Factorization((0, 4, 0)))
    assert c.plus == Factorization((3, 0, 0)) and c.minus == Factorization((0, 2, 0))
    assert c.degree == S.group.element((12,))
    print("   ✓ Canonical binomials divide out common factors")


def test_revlex_order():
    print("\n2. Weighted reverse-lex order:")
    key = graded_revlex_key((1, 1, 1), 2)
    assert key((0, 0, 2)) < key((0, 2, 0))
    assert key((1, 0, 0)) < key((0, 0, 2))
    key = graded_revlex_key((1, 1, 1), 0)
    assert key((2, 0, 0)) < key((0, 1, 1))
    print("   ✓ Cheapest variable loses ties")


def test_generating_sets():
    print("\n3. Generating sets:")
    S = Semigroup.numerical([4, 6, 9])
    generators = ideal_generators(S)
    assert presentation_lattice(generators, 3) == S.kernel
    rendered = {str(b) for b in generators}
    assert "x1^3 - x2^2" in rendered and "x2^3 - x3^2" in rendered

    S = thoma()
    degrees = {b.degree for b in ideal_generators(S)}
    assert {S.group.element(m) for m in THOMA_BETTI} <= degrees

    free = Semigroup.affine([(1, 0), (0, 1)])
    assert len(ideal_generators(free)) == 0
    print("   ✓ Generating sets span ker S and reach every Betti degree")


def test_thoma_betti():
    print("\n4. Betti degrees of the eight-generator example:")
    S = thoma()
    assert set(betti_elements(S)) == {S.group.element(m) for m in THOMA_BETTI}
    assert len(betti_elements(S)) == 9
    counts = {m: nabla.num_components for m, nabla in betti_complexes(S)}
    assert counts[S.group.element((13, 13))] == 3
    assert counts[S.group.element((16, 16))] == 2
    assert sorted(counts.values()) == [2, 2, 2, 2, 2, 2, 2, 2, 3]

    presentation = minimal_presentation(S)
    assert len(presentation) == 10 and presentation.minimal
    assert presentation_lattice(presentation, 8) == S.kernel

    indispensable = indispensable_binomials(S)
    assert len(indispensable) == 4
    assert {b.degree for b in indispensable} == {
        S.group.element(m) for m in [(15, 15), (14, 14), (12, 12), (10, 55)]
    }
    assert not is_uniquely_generated(S)
    assert not is_complete_intersection(S)
    print("   ✓ 9 Betti degrees, 10 relations, 4 indispensables")


def test_small_numerical_examples():
    print("\n5. <4,6,9> and <3,5,7>:")
    S = Semigroup.numerical([4, 6, 9])
    assert betti_elements(S) == (S.group.element((12,)), S.group.element((18,)))
    assert len(minimal_presentation(S)) == 2
    assert len(indispensable_binomials(S)) == 1
    assert not is_uniquely_generated(S)
    assert is_complete_intersection(S)

    S = Semigroup.numerical([3, 5, 7])
    assert [m.free_part[0] for m in betti_elements(S)] == [10, 12, 14]
    assert len(indispensable_binomials(S)) == 3
    assert is_uniquely_generated(S)
    assert not is_complete_intersection(S)

    free = Semigroup.affine([(1, 0), (0, 1)])
    assert len(minimal_presentation(free)) == 0 and is_complete_intersection(free)
    print("   ✓ Betti sets, CI and uniqueness flags")


def test_betti_against_brute_force():
    print("\n6. Betti degrees against brute force:")
    for values in NUMERICAL:
        if len(values) > 4:
            continue
        S = Semigroup.numerical(values)
        found = betti_elements(S)
        bound = max([2 * sum(values)] + [m.free_part[0] for m in found])
        assert list(found) == brute_force_betti(S, bound), f"{values}"
    print(f"   ✓ {len(NUMERICAL)} numerical semigroups agree")


def test_minimal_presentation_laws():
    print("\n7. Minimal presentation laws:")
    for S in all_cases():
        expected = sum(nabla.num_components - 1 for _, nabla in betti_complexes(S))
        reference = minimal_presentation(S)
        assert len(reference) == expected
        assert presentation_lattice(reference, S.num_generators) == S.kernel
        degrees = Counter(b.degree for b in reference)
        indispensable = indispensable_binomials(S)
        for b in indispensable:
            assert any(c.same_up_to_sign(b) for c in reference.binomials)
        for seed in (1, 2, 3):
            seeded = minimal_presentation(S, tie_break_seed=seed)
            assert Counter(b.degree for b in seeded) == degrees
            assert presentation_lattice(seeded, S.num_generators) == S.kernel
            for b in indispensable:
                assert any(c.same_up_to_sign(b) for c in seeded.binomials), f"{S} seed {seed}: {b}"
        for b in reference:
            assert b.is_saturated()
            assert S.degree(b.plus.exponents) == S.degree(b.minus.exponents) == b.degree
    print("   ✓ Cardinality, lattice, tie-break invariance and indispensables kept")


if __name__ == "__main__":
    print("=" * 60)
    print("Testing Presentations")
    print("=" * 60)
    test_formatting()
    test_revlex_order()
    test_generating_sets()
    test_thoma_betti()
    test_small_numerical_examples()
    test_betti_against_brute_force()
    test_minimal_presentation_laws()
    print("\n" + "=" * 60)
    print("✓ All presentation tests passed!")
    print("=" * 60)
