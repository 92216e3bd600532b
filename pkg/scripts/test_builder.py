"""Test script for gluing construction and the affine gamma search"""
import sys
import os
import random

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.builder import (
    Exhausted,
    GlueRecipe,
    affine_condition,
    affine_gamma_search,
    candidate_gammas,
    check_recipe_condition,
    ci_flag,
    glue,
    group_intersection_check,
    is_affine,
)
from src.exactlin import Lattice
from src.gluing import verify_certificate
from src.presentation import is_complete_intersection
from src.semigroup import AbelianGroup, Semigroup
from src.utils.errors import GlueInputError, NotAffineError, NotMinimalError
from semigroup_cases import t1, z2_torsion

SMALL_NUMERICAL = [(2, 3), (3, 5), (2, 5), (3, 4), (5, 7), (3, 5, 7), (3, 4, 5), (4, 6, 9)]


def check_laws(result):
    """Identities every glue output satisfies"""
    recipe = result.recipe
    S = result.S
    assert S.kernel == Lattice.from_generators(S.num_generators, result.matrix.rows_list())
    assert S.kernel.rank == recipe.T1.kernel.rank + recipe.T2.kernel.rank + 1
    assert result.affine == is_affine(result)
    d = group_intersection_check(result)
    assert d == result.glued_degree
    if check_recipe_condition(recipe) and result.minimal:
        assert result.glued
        assert result.certificate.glued_degree == result.glued_degree
        assert verify_certificate(S, result.certificate)
    if result.glued:
        expected = is_complete_intersection(recipe.T1) and is_complete_intersection(recipe.T2)
        assert ci_flag(result) == expected


def test_recipe_validation():
    print("\n1. Recipe validation:")
    T1, T2 = Semigroup.numerical([3, 5]), Semigroup.numerical([2, 7])
    for gx, gy in [((1,), (2, 0)), ((1, 0), (0, 0)), ((-1, 2), (1, 1)), ((1, 0), (1, 0, 0))]:
        try:
            GlueRecipe(T1, T2, gx, gy)
            assert False, f"{gx}, {gy} should be rejected"
        except GlueInputError:
            pass
    assert check_recipe_condition(GlueRecipe(T1, T2, (1, 0), (2, 0)))
    assert not check_recipe_condition(GlueRecipe(T1, T2, (1, 0), (0, 1)))
    print("   ✓ Lengths, signs and the product condition")


def test_torsion_example():
    print("\n2. Gluing with torsion:")
    T1, T2 = t1(), Semigroup.numerical([3, 5, 7])
    recipe = GlueRecipe(T1, T2, (2, 0, 2, 0), (1, 2, 1))
    assert check_recipe_condition(recipe)
    result = glue(recipe)
    assert result.smith.invariant_factors == (1, 1, 1, 1, 4)
    assert result.S.group.torsion_orders == (4,) and result.S.group.free_rank == 2
    assert not result.affine and not is_affine(result)
    assert result.minimal and result.glued
    S = result.S
    assert S.degree((2, 0, 2, 0, 0, 0, 0)) == S.degree((0, 0, 0, 0, 1, 2, 1)) == result.glued_degree

    published = AbelianGroup(2, (4,))
    B = Semigroup(published, tuple(
        published.element(free, (t,)) for t, free in [
            (9, (-5, 35)), (-17, (12, -55)), (-7, (5, -25)), (0, (1, 0)),
            (2, (0, 3)), (2, (0, 5)), (2, (0, 7)),
        ]
    ))
    assert B.kernel == S.kernel
    assert B.degree((2, 0, 2, 0, 0, 0, 0)) == published.element((0, 20), (0,))
    check_laws(result)
    print(f"   ✓ S in {S.group}, glued degree {result.glued_degree}")


def test_affine_example():
    print("\n3. Affine gluing:")
    T1, T2 = t1(), Semigroup.numerical([3, 5, 7])
    condition = affine_condition(T1, T2, (10, 1, 12, 0), (14, 0, 6))
    assert condition.holds and condition.gcd == 1
    result = glue(GlueRecipe(T1, T2, (10, 1, 12, 0), (14, 0, 6)))
    assert all(d == 1 for d in result.smith.invariant_factors)
    assert result.S.group.free_rank == 2 and result.S.group.is_torsion_free
    assert result.affine and result.minimal and result.glued

    B = Semigroup.affine([(149, -588), (-230, 924), (-105, 420), (1, 0), (0, 3), (0, 5), (0, 7)])
    assert B.kernel == result.S.kernel
    assert B.degree((10, 1, 12, 0, 0, 0, 0)) == B.degree((0, 0, 0, 0, 14, 0, 6)) == B.group.element((0, 84))
    check_laws(result)
    print(f"   ✓ S in {result.S.group}, glued degree {result.glued_degree}")


def test_non_minimal_example():
    print("\n4. Non-minimal gluing:")
    result = glue(GlueRecipe(Semigroup.numerical([3, 5]), Semigroup.numerical([2, 7]), (1, 0), (2, 0)))
    values = sorted(abs(g.free_part[0]) for g in result.S.generators)
    assert values == [6, 12, 20, 21]
    assert not result.minimal and not result.glued and result.certificate is None
    check_laws(result)

    try:
        glue(GlueRecipe(Semigroup.numerical([12, 20, 6, 21]), Semigroup.numerical([2, 3]), (1, 0, 0, 0), (1, 1)))
        assert False, "non-minimal input should raise"
    except NotMinimalError:
        pass
    print("   ✓ {12,20,6,21} is not minimally generated")


def test_small_constructions():
    print("\n5. Small constructions:")
    result = glue(GlueRecipe(Semigroup.numerical([4, 6]), Semigroup.numerical([9]), (3, 1), (2,)))
    assert sorted(abs(g.free_part[0]) for g in result.S.generators) == [4, 6, 9]
    assert result.S.weight(group_intersection_check(result)) == 18
    assert result.glued and result.complete_intersection
    check_laws(result)

    result = glue(GlueRecipe(Semigroup.numerical([2]), Semigroup.numerical([3]), (3,), (2,)))
    assert result.affine and result.S.kernel.rank == 1
    assert ci_flag(result)
    check_laws(result)
    print("   ✓ <4,6>+<9> rebuilds <4,6,9>, free inputs give a complete intersection")


def test_random_recipes():
    print("\n6. Random recipes:")
    rng = random.Random(42)
    built = 0
    glued = 0
    while built < 20:
        T1 = Semigroup.numerical(rng.choice(SMALL_NUMERICAL))
        T2 = Semigroup.numerical(rng.choice(SMALL_NUMERICAL))
        gamma_x = tuple(rng.randint(0, 2) for _ in range(T1.num_generators))
        gamma_y = tuple(rng.randint(0, 2) for _ in range(T2.num_generators))
        if not any(gamma_x) or not any(gamma_y):
            continue
        recipe = GlueRecipe(T1, T2, gamma_x, gamma_y)
        result = glue(recipe)
        check_laws(result)
        assert result.affine == affine_condition(T1, T2, gamma_x, gamma_y).holds
        built += 1
        glued += result.glued
    assert glued > 0
    print(f"   ✓ {built} recipes, {glued} glued, CI and affinity laws hold")


def test_candidate_order():
    print("\n7. Candidate order:")
    first = []
    for candidate in candidate_gammas(2, 1):
        first.append(candidate)
        if len(first) == 4:
            break
    assert first == [((0, 1), (2,)), ((0, 2), (1,)), ((1, 0), (2,)), ((1, 1), (1,))]
    assert all(sum(gx) * sum(gy) > 1 for gx, gy in first)
    print("   ✓ Increasing total, lexicographic within a total")


def test_affine_search():
    print("\n8. Affine gamma search:")
    T1, T2 = Semigroup.numerical([2, 3]), Semigroup.numerical([5, 7])
    recipe = affine_gamma_search(T1, T2, budget=5000)
    assert isinstance(recipe, GlueRecipe)
    result = glue(recipe)
    assert result.affine and result.minimal and result.glued
    print(f"   ✓ Found gamma_x={recipe.gamma_x}, gamma_y={recipe.gamma_y}")

    exhausted = affine_gamma_search(T1, T2, budget=0)
    assert isinstance(exhausted, Exhausted) and not exhausted and exhausted.tested == 0

    recipe = affine_gamma_search(t1(), Semigroup.numerical([3, 5, 7]), budget=20000)
    assert isinstance(recipe, GlueRecipe)
    result = glue(recipe)
    assert result.affine and result.minimal and result.glued
    print(f"   ✓ Found gamma_x={recipe.gamma_x}, gamma_y={recipe.gamma_y} for the rank-2 inputs")

    try:
        affine_gamma_search(z2_torsion(), T2, budget=10)
        assert False, "torsion input should raise"
    except NotAffineError:
        pass
    print("   ✓ Exhausted budget and torsion inputs")


if __name__ == "__main__":
    print("=" * 60)
    print("Testing Gluing Construction")
    print("=" * 60)
    test_recipe_validation()
    test_torsion_example()
    test_affine_example()
    test_non_minimal_example()
    test_small_constructions()
    test_random_recipes()
    test_candidate_order()
    test_affine_search()
    print("\n" + "=" * 60)
    print("✓ All construction tests passed!")
    print("=" * 60)
