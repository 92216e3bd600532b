"""Group-theoretic gluing test: G(S1) meets G(S2) in a cyclic group dZ"""
import logging
from typing import Union

from src.exactlin import Lattice, lattice_intersection
from src.semigroup import GroupElement, Semigroup, SplitSpec, is_member, subgroup_of
from .certificate import NotGlued, ReasonKind
from .detector import check_split_size, require_minimal

logger = logging.getLogger(__name__)


def group_oracle(S: Semigroup, split: SplitSpec) -> Union[GroupElement, NotGlued]:
    """
    Glued degree from the intersection of the groups of both sides

    S is glued along the split iff G(left) meets G(right) in dZ for some
    nonzero d lying in both subsemigroups.

    Args:
        S: Reduced, minimally generated semigroup
        split: Bipartition of the generators

    Returns:
        d, or NotGlued with INTERSECTION_NOT_CYCLIC / GENERATOR_NOT_SHARED
    """
    check_split_size(S, split)
    require_minimal(S)

    group = S.group
    k = group.free_rank
    relations = Lattice.from_generators(group.lift_dim, group.relations())
    common = lattice_intersection(subgroup_of(S, split.left), subgroup_of(S, split.right))

    free_rows = [row for row in common.basis if any(row[:k])]
    if len(free_rows) != 1:
        return NotGlued(
            split, ReasonKind.INTERSECTION_NOT_CYCLIC,
            detail=f"{len(free_rows)} generators with nonzero free part",
        )
    generator = free_rows[0]
    if Lattice.from_generators(group.lift_dim, relations.basis + (generator,)) != common:
        return NotGlued(split, ReasonKind.INTERSECTION_NOT_CYCLIC, detail="torsion left over")

    d = group.element_from_lift(generator)
    left, right = S.restrict(split.left), S.restrict(split.right)
    for candidate in (d, -d):
        if is_member(left, candidate) and is_member(right, candidate):
            logger.debug(f"Group oracle: split {split} glued at {candidate}")
            return candidate
    return NotGlued(split, ReasonKind.GENERATOR_NOT_SHARED, d if S.weight(d) > 0 else -d)
