"""Plain-text reports printed by the command-line tool"""
from typing import List, Optional, Sequence

from config import Config
from src.builder import GlueResult
from src.fibers import NablaComplex, split_fiber
from src.gluing import GluingCertificate, NotGlued
from src.presentation import (
    Binomial,
    betti_complexes,
    indispensable_binomials,
    is_complete_intersection,
    is_uniquely_generated,
    minimal_presentation,
    monomial_str,
    variable_names,
)
from src.semigroup import Semigroup, SplitSpec, is_minimal_generating


def banner(title: str) -> List[str]:
    width = Config.OUTPUT_WIDTH
    return ["=" * width, title, "=" * width]


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def binomial_line(binomial: Binomial, names: Sequence[str]) -> str:
    return f"  {str(binomial.degree):<12} {binomial.format(names)}"


def generators_section(S: Semigroup, names: Sequence[str]) -> List[str]:
    lines = [f"Group: {S.group}", f"Generators ({S.num_generators}):"]
    for name, g in zip(names, S.generators):
        lines.append(f"  {name} = {g}")
    return lines


def betti_section(S: Semigroup) -> List[str]:
    complexes = betti_complexes(S)
    lines = [f"Betti degrees ({len(complexes)}):"]
    for m, nabla in complexes:
        lines.append(f"  {str(m):<12} fiber {nabla.fiber.size}, components {nabla.num_components}")
    return lines


def presentation_section(S: Semigroup, seed: Optional[int], names: Sequence[str]) -> List[str]:
    presentation = minimal_presentation(S, seed)
    lines = [f"Minimal presentation ({len(presentation)}):"]
    lines.extend(binomial_line(b, names) for b in presentation.binomials)
    return lines


def indispensable_section(S: Semigroup, names: Sequence[str]) -> List[str]:
    binomials = indispensable_binomials(S)
    lines = [f"Indispensable binomials ({len(binomials)}):"]
    lines.extend(binomial_line(b, names) for b in binomials)
    return lines


def analyze_report(S: Semigroup, seed: Optional[int] = None) -> str:
    names = variable_names(S.num_generators)
    redundant = is_minimal_generating(S)
    minimal = "yes" if not redundant else "no, redundant: " + ", ".join(names[i] for i in redundant)
    lines = banner("Semigroup analysis")
    lines += generators_section(S, names)
    lines += [
        f"Grading: w = ({','.join(str(w) for w in S.grading)})",
        "Reduced: yes",
        f"Minimal: {minimal}",
        f"Kernel rank: {S.kernel.rank}",
        "",
    ]
    lines += betti_section(S) + [""]
    lines += presentation_section(S, seed, names) + [""]
    lines += indispensable_section(S, names) + [""]
    lines += [
        f"Uniquely generated: {yes_no(is_uniquely_generated(S))}",
        f"Complete intersection: {yes_no(is_complete_intersection(S))}",
    ]
    return "\n".join(lines) + "\n"


def betti_report(S: Semigroup) -> str:
    return "\n".join(betti_section(S)) + "\n"


def presentation_report(S: Semigroup, seed: Optional[int] = None) -> str:
    return "\n".join(presentation_section(S, seed, variable_names(S.num_generators))) + "\n"


def indispensable_report(S: Semigroup) -> str:
    return "\n".join(indispensable_section(S, variable_names(S.num_generators))) + "\n"


def ci_report(S: Semigroup) -> str:
    count = len(minimal_presentation(S))
    flag = is_complete_intersection(S)
    return (
        f"Complete intersection: {yes_no(flag)} "
        f"({count} minimal relations, kernel rank {S.kernel.rank})\n"
    )


def certificate_lines(S: Semigroup, cert: GluingCertificate) -> List[str]:
    names = variable_names(S.num_generators, cert.split)
    lines = [
        f"GLUED, d={cert.glued_degree}",
        f"Split: {cert.split}",
        f"Glued binomial: {cert.glued_binomial.format(names)}",
        f"Left presentation ({len(cert.left_presentation)}):",
    ]
    lines.extend(binomial_line(b, names) for b in cert.left_presentation.binomials)
    lines.append(f"Right presentation ({len(cert.right_presentation)}):")
    lines.extend(binomial_line(b, names) for b in cert.right_presentation.binomials)
    return lines


def gluing_report(S: Semigroup, result) -> str:
    if isinstance(result, NotGlued):
        return f"NOT GLUED: split {result.split}: {result.describe()}\n"
    return "\n".join(certificate_lines(S, result)) + "\n"


def gluings_report(S: Semigroup, found) -> str:
    if not found:
        return "NO GLUING SPLITS\n"
    lines = [f"Gluing splits ({len(found)}):"]
    for split, cert in found:
        names = variable_names(S.num_generators, split)
        lines.append(f"  {str(split):<16} d={cert.glued_degree}  {cert.glued_binomial.format(names)}")
    return "\n".join(lines) + "\n"


def fiber_report(S: Semigroup, nabla: NablaComplex, split: Optional[SplitSpec] = None) -> str:
    """Text rendering of a fiber, its components and the pure/mixed classes"""
    names = variable_names(S.num_generators, split)
    lines = [f"Fiber of {nabla.fiber.degree} ({nabla.fiber.size} members, {nabla.num_components} components):"]
    for c, component in enumerate(nabla.components):
        lines.append(f"  component {c + 1}: " + ", ".join(monomial_str(m, names) for m in component))
    if split is not None:
        pure_left, pure_right, mixed = split_fiber(nabla.fiber, split)
        for label, members in (("pure left", pure_left), ("pure right", pure_right), ("mixed", mixed)):
            lines.append(f"  {label}: " + (", ".join(monomial_str(m, names) for m in members) or "-"))
    return "\n".join(lines) + "\n"


def verification_block(result: GlueResult, found_by_search: bool = False) -> str:
    """Comment lines appended to a constructed semigroup file"""
    recipe = result.recipe
    prefix = "found " if found_by_search else ""
    lines = [
        f"# {prefix}gamma_x: {' '.join(str(a) for a in recipe.gamma_x)}",
        f"# {prefix}gamma_y: {' '.join(str(a) for a in recipe.gamma_y)}",
        f"# invariant factors: {' '.join(str(d) for d in result.smith.invariant_factors)}",
        f"# affine: {yes_no(result.affine)}",
        f"# minimal: {yes_no(result.minimal)}",
        f"# glued: {yes_no(result.glued)}",
        f"# complete intersection: {yes_no(result.complete_intersection)}",
        f"# glued degree: {result.glued_degree}",
    ]
    return "\n".join(lines) + "\n"
