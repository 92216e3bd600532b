"""Test script for groups, semigroups, gradings and splits"""
import sys
import os
import random
from itertools import permutations, product

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.exactlin import Lattice
from src.semigroup import (
    AbelianGroup,
    Semigroup,
    SplitSpec,
    all_splits,
    find_positive_grading,
    is_member,
    is_minimal_generating,
    is_multiple,
    is_reduced,
    subgroup_of,
)
from src.utils.errors import (
    DimensionMismatchError,
    NotReducedError,
    SplitError,
    ZeroGeneratorError,
)
from semigroup_cases import t1, thoma, z2_torsion


def test_group_elements():
    print("\n1. Group elements:")
    group = AbelianGroup(2, (4, 1))
    assert group.torsion_orders == (4,), "order-1 factors are dropped"
    a = group.element((9, -5), (35,))
    assert a.torsion_part == (3,)
    b = group.element((-7, 5), (-25,))
    total = 2 * a + 2 * b
    assert total == group.element((4, 0), (20,))
    assert total.torsion_part == (0,)
    assert (a - a).is_zero()
    assert group.element_from_lift(a.lift()) == a
    assert str(a) == "(3;9,-5)"
    assert str(AbelianGroup(1).element((18,))) == "18"
    assert str(AbelianGroup(2).element((13, 13))) == "(13,13)"
    assert str(group) == "Z/4 x Z^2"
    try:
        group.element((1,), (0,))
        assert False, "short free part should raise"
    except DimensionMismatchError:
        pass
    print("   ✓ Canonical residues, arithmetic and printing")


def test_degree_and_kernel():
    print("\n2. Degree map and kernel:")
    S = thoma()
    assert S.degree((1, 0, 0, 1, 0, 0, 0, 0)) == S.group.element((13, 13))
    assert S.degree((0,) * 8).is_zero()
    try:
        S.degree((1, 0))
        assert False, "wrong exponent length should raise"
    except DimensionMismatchError:
        pass

    T = t1()
    assert T.kernel.rank == 2
    assert (1, 2, -3, -4) in T.kernel and (2, -1, 5, -3) in T.kernel

    Z = z2_torsion()
    assert Z.kernel.rank == 3
    for row in Z.kernel.basis:
        assert Z.degree(tuple(max(x, 0) for x in row)) == Z.degree(tuple(max(-x, 0) for x in row))
    assert (2, -2, 0, 0) in Z.kernel and (1, -1, 0, 0) not in Z.kernel
    print("   ✓ Degrees and kernel lattices correct (torsion included)")


def test_degree_laws():
    print("\n3. Degree laws:")
    rng = random.Random(7)
    for S in (thoma(), t1(), z2_torsion(), Semigroup.numerical([4, 6, 9])):
        l = S.num_generators
        for _ in range(20):
            alpha = tuple(rng.randint(0, 4) for _ in range(l))
            beta = tuple(rng.randint(0, 4) for _ in range(l))
            total = tuple(a + b for a, b in zip(alpha, beta))
            assert S.degree(total) == S.degree(alpha) + S.degree(beta)

        weights = S.weights
        for alpha in product(*[range(20 // w + 1) for w in weights]):
            if any(alpha) and sum(a * w for a, w in zip(alpha, weights)) <= 20:
                assert not S.degree(alpha).is_zero(), f"{S}: {alpha} has degree 0"
    print("   ✓ Degree is additive and only 0 has degree 0")


def test_positive_grading():
    print("\n4. Positive grading:")
    S = thoma()
    assert all(w > 0 for w in S.weights)
    assert all(S.weight(g) >= 1 for g in S.generators)

    w = find_positive_grading([(-4,), (-6,)], 1)
    assert w == (-1,)
    w = find_positive_grading([(-7, 2), (11, 1), (5, 0), (0, 1)], 2)
    assert all(sum(a * b for a, b in zip(w, v)) >= 1 for v in [(-7, 2), (11, 1), (5, 0), (0, 1)])

    try:
        find_positive_grading([(1, 0), (-1, 0), (0, 1)], 2)
        assert False, "opposite vectors admit no grading"
    except NotReducedError:
        pass
    try:
        Semigroup.numerical([3, -2])
        assert False, "<3, -2> is not reduced"
    except NotReducedError:
        pass
    try:
        Semigroup.numerical([3, 0])
        assert False, "zero generator should raise"
    except ZeroGeneratorError:
        pass
    print("   ✓ Gradings found, non-reduced inputs rejected")


def test_reduced_and_minimal():
    print("\n5. Reducedness and minimality:")
    group = AbelianGroup(1)
    assert is_reduced(group, [group.element((4,)), group.element((6,)), group.element((9,))])
    assert not is_reduced(group, [group.element((1,)), group.element((-1,))])
    torsion = AbelianGroup(0, (5,))
    assert not is_reduced(torsion, [torsion.element((), (1,))])

    assert is_minimal_generating(Semigroup.numerical([4, 6, 9])) == ()
    assert is_minimal_generating(Semigroup.numerical([12, 20, 6, 21])) == (0,)
    assert is_minimal_generating(Semigroup.numerical([3, 5, 8, 10])) == (2, 3)
    assert is_minimal_generating(thoma()) == ()
    assert is_minimal_generating(z2_torsion()) == ()

    for values in ([3, 5, 8, 10], [12, 20, 6, 21], [4, 6, 9]):
        expected = {values[i] for i in is_minimal_generating(Semigroup.numerical(values))}
        for order in permutations(values):
            redundant = is_minimal_generating(Semigroup.numerical(list(order)))
            assert {order[i] for i in redundant} == expected, f"{order}"

    S = Semigroup.numerical([4, 6, 9])
    assert is_member(S, group.element((13,)))
    assert not is_member(S, group.element((7,)))
    assert not is_member(S, group.element((-4,)))
    print("   ✓ Minimality reports redundant positions")


def test_subgroups_and_multiples():
    print("\n6. Subgroups and multiples:")
    S = thoma()
    right = subgroup_of(S, range(4, 8))
    assert right == Lattice.from_generators(2, [(1, 1)])

    Z = z2_torsion()
    assert subgroup_of(Z, [0]) == Lattice.from_generators(2, [(2, 0), (0, 2)])

    d = S.group.element((13, 13))
    assert is_multiple(S, S.group.element((26, 26)), d) == 2
    assert is_multiple(S, d, d) == 1
    assert is_multiple(S, S.group.element((15, 24)), d) is None
    print("   ✓ Subgroup lattices and multiples")


def test_splits():
    print("\n7. Splits:")
    split = SplitSpec.parse("1-4|5-8", 8)
    assert split.left == (0, 1, 2, 3) and split.right == (4, 5, 6, 7)
    assert split == SplitSpec.natural(4, 8)
    assert SplitSpec.parse("1,3|2", 3).format() == "1,3|2"
    assert SplitSpec.parse("1-2,4|3,5-6", 6).format() == "1-2,4|3,5-6"
    assert split.side_of(5) == 'right'
    assert split.swapped().left == (4, 5, 6, 7)

    for bad in ["1-4", "1-4|4-8", "1-3|5-8", "0-3|4-8", "a|b", "1-4|5-9"]:
        try:
            SplitSpec.parse(bad, 8)
            assert False, f"'{bad}' should be rejected"
        except SplitError:
            pass

    splits = list(all_splits(4))
    assert len(splits) == 2 ** 3 - 1
    assert len(set(splits)) == len(splits)
    assert all(0 in s.left for s in splits)
    print("   ✓ Parsing, formatting and enumeration of splits")


if __name__ == "__main__":
    print("=" * 60)
    print("Testing Semigroups")
    print("=" * 60)
    test_group_elements()
    test_degree_and_kernel()
    test_degree_laws()
    test_positive_grading()
    test_reduced_and_minimal()
    test_subgroups_and_multiples()
    test_splits()
    print("\n" + "=" * 60)
    print("✓ All semigroup tests passed!")
    print("=" * 60)
