"""Graphviz DOT rendering of a fiber's gcd graph"""
from typing import Optional, Sequence

from src.fibers import NablaComplex
from src.presentation import monomial_str


def nabla_to_dot(nabla: NablaComplex, names: Optional[Sequence[str]] = None) -> str:
    """
    One node per fiber member, one cluster per connected component

    Node ids follow the canonical member order, so output is reproducible.
    """
    ids = {member: f"n{i}" for i, member in enumerate(nabla.vertices)}
    lines = [
        "graph nabla {",
        f'  label="C_{nabla.fiber.degree}";',
        "  node [shape=box];",
    ]
    for c, component in enumerate(nabla.components):
        lines.append(f"  subgraph cluster_{c} {{")
        lines.append(f'    label="component {c + 1}";')
        for member in component:
            lines.append(f'    {ids[member]} [label="{monomial_str(member, names)}"];')
        lines.append("  }")
    for first, second in nabla.edges:
        lines.append(f"  {ids[first]} -- {ids[second]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
