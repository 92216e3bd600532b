"""Betti elements, minimal presentations and indispensable binomials"""
import logging
import random
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from src.fibers import NablaComplex, build_nabla, enumerate_fiber
from src.semigroup import GroupElement, Semigroup, sorted_degrees
from .binomial import Binomial, Presentation, binomial_sort_key
from .completion import ideal_generators

logger = logging.getLogger(__name__)


@lru_cache(maxsize=128)
def betti_complexes(S: Semigroup) -> Tuple[Tuple[GroupElement, NablaComplex], ...]:
    """Disconnected complexes among the degrees of a generating set, canonically ordered"""
    candidates = sorted_degrees(S, (b.degree for b in ideal_generators(S).binomials))
    found = []
    for m in candidates:
        nabla = build_nabla(enumerate_fiber(S, m))
        if nabla.num_components > 1:
            found.append((m, nabla))
    logger.debug(f"{len(found)} Betti degrees among {len(candidates)} candidates")
    return tuple(found)


def betti_elements(S: Semigroup) -> Tuple[GroupElement, ...]:
    """Degrees m whose complex is disconnected"""
    return tuple(m for m, _ in betti_complexes(S))


def minimal_presentation(S: Semigroup, tie_break_seed: Optional[int] = None) -> Presentation:
    """
    Minimal binomial generating set in a star pattern

    For each Betti degree the component of the smallest member is the hub;
    every other component contributes hub representative minus its own.
    Representatives are the smallest members, or random ones when a seed
    is given.

    Args:
        S: Reduced semigroup
        tie_break_seed: Seed for picking representatives

    Returns:
        Presentation with minimal=True
    """
    rng = random.Random(tie_break_seed) if tie_break_seed is not None else None

    def representative(component):
        return rng.choice(component) if rng else component[0]

    binomials: List[Binomial] = []
    for m, nabla in betti_complexes(S):
        hub = representative(nabla.components[0])
        for component in nabla.components[1:]:
            binomials.append(Binomial.canonical(S, hub, representative(component)))
    binomials.sort(key=lambda b: binomial_sort_key(S, b))
    return Presentation(tuple(binomials), betti=betti_elements(S), minimal=True)


def indispensable_binomials(S: Semigroup) -> Tuple[Binomial, ...]:
    """The binomials of Betti fibers with exactly two members"""
    found = []
    for m, nabla in betti_complexes(S):
        if nabla.fiber.size == 2:
            first, second = nabla.fiber.members
            found.append(Binomial.canonical(S, first, second))
    return tuple(found)


def is_uniquely_generated(S: Semigroup) -> bool:
    return all(nabla.fiber.size == 2 for _, nabla in betti_complexes(S))


def is_complete_intersection(S: Semigroup) -> bool:
    """Minimal presentation has rank(ker S) binomials"""
    return len(minimal_presentation(S)) == S.kernel.rank


def spans_components(binomials: Iterable[Binomial], nabla: NablaComplex) -> bool:
    """
    Whether the binomials, read as edges between components, join all of them

    A binomial with a term outside the fiber does not count.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(nabla.num_components))
    for binomial in binomials:
        try:
            graph.add_edge(nabla.component_of(binomial.plus), nabla.component_of(binomial.minus))
        except KeyError:
            continue
    return nabla.num_components <= 1 or nx.is_connected(graph)
