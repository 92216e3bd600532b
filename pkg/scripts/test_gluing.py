"""Test script for gluing detection, certificates and the group oracle"""
import sys
import os
from dataclasses import replace

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.fibers import Factorization, enumerate_fiber, split_fiber
from src.gluing import (
    GluingCertificate,
    NotGlued,
    ReasonKind,
    check_gluing,
    enumerate_gluings,
    glued_kernel_basis,
    group_oracle,
    indispensable_criterion,
    verify_certificate,
)
from src.presentation import Binomial, Presentation, betti_complexes, is_uniquely_generated
from src.semigroup import GroupElement, Semigroup, SplitSpec, all_splits, is_multiple
from src.utils.errors import NotMinimalError, SplitError, TooManyGeneratorsError
from semigroup_cases import all_cases, thoma


def same_up_to_sign(a: GroupElement, b: GroupElement) -> bool:
    return a == b or a == -b


def test_thoma_gluing():
    print("\n1. Eight-generator example:")
    S = thoma()
    cert = check_gluing(S, SplitSpec.parse("1-4|5-8", 8))
    assert isinstance(cert, GluingCertificate)
    assert cert.glued_degree == S.group.element((13, 13))
    assert cert.glued_binomial.plus == Factorization((1, 0, 0, 1, 0, 0, 0, 0))
    assert verify_certificate(S, cert)
    assert len(glued_kernel_basis(S, cert)) == S.kernel.rank

    result = check_gluing(S, SplitSpec.parse("1|2-8", 8))
    assert isinstance(result, NotGlued) and not result
    assert result.describe()

    found = [split for split, _ in enumerate_gluings(S)]
    assert SplitSpec.natural(4, 8) in found
    print(f"   ✓ d=(13,13) on 1-4|5-8, {len(found)} gluing splits in total")


def test_small_gluings():
    print("\n2. <4,6,9>, <3,5,7> and <6,10,15>:")
    S = Semigroup.numerical([4, 6, 9])
    cert = check_gluing(S, SplitSpec.parse("1-2|3", 3))
    assert isinstance(cert, GluingCertificate)
    assert cert.glued_degree == S.group.element((18,))
    assert str(cert.glued_binomial) == "x2^3 - x3^2"
    assert len(cert.combined) == 2

    cert = check_gluing(S, SplitSpec.parse("1|2-3", 3))
    assert isinstance(cert, GluingCertificate)
    assert cert.glued_degree == S.group.element((12,))

    result = check_gluing(S, SplitSpec.parse("1,3|2", 3))
    assert result.kind == ReasonKind.NON_MULTIPLE_SHARED_DEGREE
    assert result.degree == S.group.element((18,))

    found = enumerate_gluings(S)
    assert [split.format() for split, _ in found] == ["1|2-3", "1-2|3"]

    assert enumerate_gluings(Semigroup.numerical([3, 5, 7])) == []
    assert len(enumerate_gluings(Semigroup.numerical([6, 10, 15]))) == 3

    plane = Semigroup.affine([(2, 0), (0, 2), (1, 1)])
    result = check_gluing(plane, SplitSpec.parse("1,3|2", 3))
    assert result.kind == ReasonKind.MIXED_ONLY_COMPONENT
    assert result.degree == plane.group.element((2, 2))
    cert = check_gluing(plane, SplitSpec.parse("1-2|3", 3))
    assert cert.glued_degree == plane.group.element((2, 2))
    free = Semigroup.affine([(1, 0), (0, 1)])
    assert check_gluing(free, SplitSpec.parse("1|2", 2)).kind == ReasonKind.NO_GLUED_DEGREE
    print("   ✓ Certificates and failure reasons")


def test_preconditions():
    print("\n3. Preconditions:")
    try:
        check_gluing(Semigroup.numerical([12, 20, 6, 21]), SplitSpec.natural(2, 4))
        assert False, "non-minimal generators should raise"
    except NotMinimalError as e:
        assert e.redundant == (0,)
    try:
        check_gluing(Semigroup.affine([(1, 0), (0, 1), (1, 1)]), SplitSpec.parse("1,3|2", 3))
        assert False, "(1,1) = (1,0) + (0,1) should raise"
    except NotMinimalError as e:
        assert e.redundant == (2,)
    try:
        check_gluing(Semigroup.numerical([4, 6, 9]), SplitSpec.natural(2, 4))
        assert False, "split of the wrong size should raise"
    except SplitError:
        pass
    try:
        enumerate_gluings(Semigroup.numerical(range(5, 10)), cap=4)
        assert False, "cap exceeded should raise"
    except TooManyGeneratorsError:
        pass
    try:
        enumerate_gluings(Semigroup.numerical([4, 6, 9]), cap=0)
        assert False, "cap=0 is a real cap, not the default"
    except TooManyGeneratorsError:
        pass
    print("   ✓ NotMinimal, Split and TooManyGenerators errors")


def test_verify_rejects_tampering():
    print("\n4. Certificate verification:")
    S = Semigroup.numerical([4, 6, 9])
    cert = check_gluing(S, SplitSpec.parse("1-2|3", 3))
    assert verify_certificate(S, cert)

    mixed = Binomial(Factorization((0, 3, 0)), Factorization((2, 0, 1)), S.group.element((18,)))
    assert not verify_certificate(S, replace(cert, glued_binomial=mixed))

    d36 = S.group.element((36,))
    wrong = Binomial(Factorization((0, 6, 0)), Factorization((0, 0, 4)), d36)
    combined = Presentation(cert.left_presentation.binomials + cert.right_presentation.binomials + (wrong,))
    tampered = replace(cert, glued_degree=d36, glued_binomial=wrong, combined=combined)
    assert not verify_certificate(S, tampered)
    print("   ✓ Tampered certificates rejected")


def test_detector_matches_group_oracle():
    print("\n5. Detector against the group oracle:")
    cases = all_cases()
    assert len(cases) >= 25
    splits_checked = 0
    glued = 0
    for S in cases:
        for split in all_splits(S.num_generators):
            detected = check_gluing(S, split)
            oracle = group_oracle(S, split)
            if isinstance(detected, GluingCertificate):
                assert isinstance(oracle, GroupElement), f"{S} {split}: oracle says {oracle.describe()}"
                assert same_up_to_sign(oracle, detected.glued_degree)
                assert verify_certificate(S, detected)
                glued += 1
            else:
                assert isinstance(oracle, NotGlued), f"{S} {split}: detector says {detected.describe()}"
            splits_checked += 1
    print(f"   ✓ {len(cases)} semigroups, {splits_checked} splits, {glued} gluings agree")


def test_gluing_laws():
    print("\n6. Gluing laws:")
    for S in all_cases():
        for split, cert in enumerate_gluings(S):
            d = cert.glued_degree
            qualifying = []
            for m, nabla in betti_complexes(S):
                left, right, mixed = split_fiber(nabla.fiber, split)
                if left and right:
                    assert is_multiple(S, m, d) is not None
                    if not mixed:
                        qualifying.append(m)
            assert qualifying == [d]
            assert not split_fiber(enumerate_fiber(S, d), split)[2]

            glued_kernel_basis(S, cert)
            criterion = indispensable_criterion(S, cert)
            assert criterion.holds == is_uniquely_generated(S)
    print("   ✓ Multiples, pure glued fiber, kernel basis shape, indispensable criterion")


if __name__ == "__main__":
    print("=" * 60)
    print("Testing Gluing Detection")
    print("=" * 60)
    test_thoma_gluing()
    test_small_gluings()
    test_preconditions()
    test_verify_rejects_tampering()
    test_detector_matches_group_oracle()
    test_gluing_laws()
    print("\n" + "=" * 60)
    print("✓ All gluing tests passed!")
    print("=" * 60)
