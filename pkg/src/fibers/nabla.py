"""The gcd graph of a fiber and its connected components"""
from typing import Dict, Iterable, List, Literal, Optional, Tuple

import networkx as nx

from src.semigroup import SplitSpec
from .fiber import Factorization, Fiber, member_key

Side = Literal['left', 'right']


def share_variable(first: Factorization, second: Factorization) -> bool:
    """Edge rule: the two monomials have a common variable"""
    return any(a and b for a, b in zip(first.exponents, second.exponents))


class NablaComplex:
    """1-skeleton of the simplicial complex of a fiber.

    Faces of the complex are sets of monomials with nontrivial gcd, so its
    connected components are those of this graph.
    """

    def __init__(self, fiber: Fiber, members: Optional[Iterable[Factorization]] = None):
        """
        Build the graph on the whole fiber or on a subset of its members

        Args:
            fiber: Fiber the complex belongs to
            members: Vertex subset (defaults to every member)
        """
        self.fiber = fiber
        vertices = sorted(fiber.members if members is None else members, key=member_key)
        self.graph = nx.Graph()
        self.graph.add_nodes_from(vertices)
        for i in range(len(vertices)):
            for j in range(i + 1, len(vertices)):
                if share_variable(vertices[i], vertices[j]):
                    self.graph.add_edge(vertices[i], vertices[j])

        # components ordered by their smallest member
        components = [tuple(sorted(c, key=member_key)) for c in nx.connected_components(self.graph)]
        components.sort(key=lambda c: member_key(c[0]))
        self.components: Tuple[Tuple[Factorization, ...], ...] = tuple(components)
        self._index: Dict[Factorization, int] = {
            member: i for i, component in enumerate(self.components) for member in component
        }

    @property
    def vertices(self) -> List[Factorization]:
        return sorted(self.graph.nodes, key=member_key)

    @property
    def edges(self) -> List[Tuple[Factorization, Factorization]]:
        """Edges as (smaller, larger) pairs in canonical order"""
        pairs = [tuple(sorted(e, key=member_key)) for e in self.graph.edges]
        return sorted(pairs, key=lambda e: (member_key(e[0]), member_key(e[1])))

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def is_connected(self) -> bool:
        return self.num_components == 1

    def component_of(self, member: Factorization) -> int:
        return self._index[member]

    def __repr__(self) -> str:
        return (
            f"NablaComplex(degree={self.fiber.degree}, vertices={self.graph.number_of_nodes()}, "
            f"components={self.num_components})"
        )


def build_nabla(fiber: Fiber) -> NablaComplex:
    return NablaComplex(fiber)


def split_fiber(fiber: Fiber, split: SplitSpec):
    """
    Classify the members of a fiber as pure left, pure right or mixed

    The zero factorization counts as pure left.

    Returns:
        (pure_left, pure_right, mixed) tuples in fiber order
    """
    left = set(split.left)
    right = set(split.right)
    pure_left, pure_right, mixed = [], [], []
    for member in fiber.members:
        support = member.support
        if support <= left:
            pure_left.append(member)
        elif support <= right:
            pure_right.append(member)
        else:
            mixed.append(member)
    return tuple(pure_left), tuple(pure_right), tuple(mixed)


def nabla_restricted(fiber: Fiber, split: SplitSpec, side: Side) -> NablaComplex:
    """Complex on the pure monomials of one side"""
    pure_left, pure_right, _ = split_fiber(fiber, split)
    return NablaComplex(fiber, pure_left if side == 'left' else pure_right)
