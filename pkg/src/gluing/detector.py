"""Combinatorial gluing detection over the Betti complexes"""
import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

from tqdm import tqdm

from config import Config
from src.exactlin import Lattice, Vector
from src.fibers import Factorization, split_fiber
from src.presentation import (
    Binomial,
    Presentation,
    betti_complexes,
    betti_elements,
    binomial_sort_key,
    indispensable_binomials,
    is_uniquely_generated,
    minimal_presentation,
    presentation_lattice,
    spans_components,
)
from src.semigroup import Semigroup, SplitSpec, all_splits, is_minimal_generating, is_multiple
from src.utils.errors import GlueInvariantError, NotMinimalError, SplitError, TooManyGeneratorsError
from .certificate import GluingCertificate, GluingResult, NotGlued, ReasonKind

logger = logging.getLogger(__name__)


def require_minimal(S: Semigroup):
    """Raise NotMinimalError listing the redundant generators (1-based)"""
    redundant = is_minimal_generating(S)
    if redundant:
        positions = ", ".join(str(i + 1) for i in redundant)
        raise NotMinimalError(f"Generators {positions} are combinations of the others", redundant)


def check_split_size(S: Semigroup, split: SplitSpec):
    if split.size != S.num_generators:
        raise SplitError(f"Split {split} covers {split.size} generators, semigroup has {S.num_generators}")


def _embed(factorization: Factorization, indices: Sequence[int], l: int) -> Factorization:
    exponents = [0] * l
    for i, a in zip(indices, factorization.exponents):
        exponents[i] = a
    return Factorization(tuple(exponents))


def side_presentation(S: Semigroup, indices: Sequence[int]) -> Presentation:
    """Minimal presentation of <indices>, written in the variables of S"""
    side = S.restrict(indices)
    local = minimal_presentation(side)
    l = S.num_generators
    binomials = tuple(
        Binomial(_embed(b.plus, indices, l), _embed(b.minus, indices, l), b.degree)
        for b in local.binomials
    )
    return Presentation(binomials, betti=local.betti, minimal=True)


def check_gluing(S: Semigroup, split: SplitSpec) -> GluingResult:
    """
    Decide whether S is the gluing of the two sides of a split

    Every Betti complex must have a pure monomial in each component; exactly
    one Betti degree d may have pure monomials on both sides and no mixed
    ones; every other Betti degree with both sides present must be a
    multiple of d.

    Args:
        S: Reduced, minimally generated semigroup
        split: Bipartition of the generators

    Returns:
        GluingCertificate, or NotGlued naming the failed requirement

    Raises:
        NotMinimalError: the generators are not minimal
    """
    check_split_size(S, split)
    require_minimal(S)

    both_sides = []
    qualifying = []
    for m, nabla in betti_complexes(S):
        pure_left, pure_right, mixed = split_fiber(nabla.fiber, split)
        pure = set(pure_left) | set(pure_right)
        for component in nabla.components:
            if not pure.intersection(component):
                return NotGlued(split, ReasonKind.MIXED_ONLY_COMPONENT, m)
        if pure_left and pure_right:
            both_sides.append(m)
            if not mixed:
                qualifying.append((m, pure_left[0], pure_right[0]))

    if not qualifying:
        if both_sides:
            return NotGlued(split, ReasonKind.MIXED_AT_GLUED_DEGREE, both_sides[0])
        return NotGlued(split, ReasonKind.NO_GLUED_DEGREE)
    if len(qualifying) > 1:
        return NotGlued(
            split, ReasonKind.AMBIGUOUS_GLUED_DEGREE, qualifying[1][0],
            detail=f"also {qualifying[0][0]}",
        )

    d, x_gamma, y_gamma = qualifying[0]
    for m in both_sides:
        if m != d and is_multiple(S, m, d) is None:
            return NotGlued(split, ReasonKind.NON_MULTIPLE_SHARED_DEGREE, m, detail=f"d={d}")

    glued = Binomial(x_gamma, y_gamma, d)
    left = side_presentation(S, split.left)
    right = side_presentation(S, split.right)
    combined = sorted(left.binomials + right.binomials + (glued,), key=lambda b: binomial_sort_key(S, b))
    logger.debug(f"Split {split} is a gluing with glued degree {d}")
    return GluingCertificate(
        split=split,
        glued_degree=d,
        glued_binomial=glued,
        left_presentation=left,
        right_presentation=right,
        combined=Presentation(tuple(combined), betti=betti_elements(S), minimal=True),
    )


def enumerate_gluings(
    S: Semigroup,
    cap: Optional[int] = None,
    progress: bool = False,
) -> List[Tuple[SplitSpec, GluingCertificate]]:
    """
    Every split of S that is a gluing

    Args:
        S: Reduced, minimally generated semigroup
        cap: Largest number of generators accepted (Config.MAX_SPLIT_GENERATORS)
        progress: Show a progress bar on stderr

    Returns:
        (split, certificate) pairs sorted by split
    """
    cap = Config.MAX_SPLIT_GENERATORS if cap is None else cap
    l = S.num_generators
    if l > cap:
        raise TooManyGeneratorsError(f"{l} generators exceed the split enumeration cap of {cap}")
    if l < 2:
        return []
    require_minimal(S)

    found = []
    splits = list(all_splits(l))
    for split in tqdm(splits, desc="Splits", disable=not progress):
        result = check_gluing(S, split)
        if isinstance(result, GluingCertificate):
            found.append((split, result))
    found.sort(key=lambda item: (len(item[0].left), item[0].left))
    logger.debug(f"{len(found)} gluing splits among {len(splits)}")
    return found


def _supported_in(factorization: Factorization, indices: Sequence[int]) -> bool:
    return factorization.support <= set(indices)


def verify_certificate(S: Semigroup, cert: GluingCertificate) -> bool:
    """
    Re-check a certificate independently of how it was built

    Logs the first failed check at WARNING level.
    """
    split = cert.split
    glued = cert.glued_binomial
    if split.size != S.num_generators:
        logger.warning(f"Certificate split {split} does not match {S.num_generators} generators")
        return False
    if glued.plus.is_zero() or glued.minus.is_zero():
        logger.warning("Glued binomial has a constant term")
        return False
    if not (_supported_in(glued.plus, split.left) and _supported_in(glued.minus, split.right)):
        logger.warning(f"Glued binomial {glued} is not pure on each side of {split}")
        return False
    if not (S.degree(glued.plus.exponents) == S.degree(glued.minus.exponents) == glued.degree == cert.glued_degree):
        logger.warning(f"Glued binomial {glued} does not have degree {cert.glued_degree}")
        return False
    for presentation, indices in ((cert.left_presentation, split.left), (cert.right_presentation, split.right)):
        for b in presentation.binomials:
            if not (_supported_in(b.plus, indices) and _supported_in(b.minus, indices)):
                logger.warning(f"Side binomial {b} leaves its side")
                return False

    if presentation_lattice(cert.combined, S.num_generators) != S.kernel:
        logger.warning("Combined presentation does not span ker S")
        return False
    grouped = cert.combined.by_degree
    for m, nabla in betti_complexes(S):
        if not spans_components(grouped.get(m, []), nabla):
            logger.warning(f"Combined presentation leaves the complex of {m} disconnected")
            return False
    return True


def glued_kernel_basis(S: Semigroup, cert: GluingCertificate) -> Tuple[Vector, ...]:
    """
    Basis of ker S made of ker<left>, ker<right> and the glued binomial

    Raises:
        GlueInvariantError: the vectors do not form a basis of ker S
    """
    l = S.num_generators
    vectors: List[Vector] = []
    for indices in (cert.split.left, cert.split.right):
        for row in S.restrict(indices).kernel.basis:
            embedded = [0] * l
            for i, a in zip(indices, row):
                embedded[i] = a
            vectors.append(tuple(embedded))
    vectors.append(cert.glued_binomial.difference)
    if len(vectors) != S.kernel.rank or Lattice.from_generators(l, vectors) != S.kernel:
        raise GlueInvariantError("Side kernels and the glued binomial do not give a basis of ker S")
    return tuple(vectors)


class IndispensableCriterion(NamedTuple):
    sides_uniquely_generated: bool
    glued_binomial_indispensable: bool
    no_mixed_betti_fiber: bool

    @property
    def holds(self) -> bool:
        return all(self)


def indispensable_criterion(S: Semigroup, cert: GluingCertificate) -> IndispensableCriterion:
    """Conditions under which the ideal of a gluing is generated by its indispensables"""
    split = cert.split
    sides = is_uniquely_generated(S.restrict(split.left)) and is_uniquely_generated(S.restrict(split.right))
    glued = any(b.same_up_to_sign(cert.glued_binomial) for b in indispensable_binomials(S))
    no_mixed = all(not split_fiber(nabla.fiber, split)[2] for _, nabla in betti_complexes(S))
    return IndispensableCriterion(sides, glued, no_mixed)
