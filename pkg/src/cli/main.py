"""Command-line entry point: semigroup analysis, gluing checks and constructions"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import Config
from src.builder import Exhausted, GlueRecipe, affine_gamma_search, glue
from src.fibers import build_nabla, enumerate_fiber
from src.gluing import GluingCertificate, check_gluing, enumerate_gluings
from src.presentation import is_complete_intersection, variable_names
from src.semigroup import Semigroup, SplitSpec
from src.utils.errors import (
    GlueInputError,
    NotAffineError,
    NotMinimalError,
    NotReducedError,
    SemigroupError,
    SemigroupFileError,
    SplitError,
    TooManyGeneratorsError,
    ZeroGeneratorError,
)
from . import report
from .dot import nabla_to_dot
from .semigroup_file import SemigroupFile, parse_degree, parse_integers

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_NOT_REDUCED = 3
EXIT_SPLIT = 4
EXIT_GLUE_INPUT = 5
EXIT_EXHAUSTED = 6
EXIT_NOT_IN_SEMIGROUP = 7


class CommandError(Exception):
    """Ends a command with a message and an exit code"""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def resolve_path(path: str) -> str:
    """Bare names such as thoma.sg fall back to Config.SEMIGROUP_DATA_DIR"""
    candidate = Path(Config.SEMIGROUP_DATA_DIR) / path
    if not Path(path).exists() and Path(path).name == path and candidate.exists():
        return str(candidate)
    return path


def load_semigroup(path: str):
    """Read a file; returns (file model, Semigroup)"""
    model = SemigroupFile.load(resolve_path(path))
    return model, model.to_semigroup()


def resolve_split(model: SemigroupFile, S: Semigroup, text: Optional[str]) -> SplitSpec:
    """--split may be a split such as 1-4|5-8 or the name of a split: line"""
    if text is None:
        if len(model.splits) != 1:
            raise SplitError("Give --split, or put exactly one split: line in the file")
        text = next(iter(model.splits.values()))
    elif text in model.splits:
        text = model.splits[text]
    return SplitSpec.parse(text, S.num_generators)


def write_output(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text, encoding='utf-8')
        print(f"✓ Wrote {output}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    _, S = load_semigroup(args.path)
    sys.stdout.write(report.analyze_report(S, args.seed))
    return EXIT_OK


def cmd_betti(args) -> int:
    _, S = load_semigroup(args.path)
    sys.stdout.write(report.betti_report(S))
    return EXIT_OK


def cmd_present(args) -> int:
    _, S = load_semigroup(args.path)
    sys.stdout.write(report.presentation_report(S, args.seed))
    return EXIT_OK


def cmd_indispensable(args) -> int:
    _, S = load_semigroup(args.path)
    sys.stdout.write(report.indispensable_report(S))
    return EXIT_OK


def cmd_is_ci(args) -> int:
    _, S = load_semigroup(args.path)
    sys.stdout.write(report.ci_report(S))
    return EXIT_OK if is_complete_intersection(S) else EXIT_NEGATIVE


def cmd_is_glued(args) -> int:
    model, S = load_semigroup(args.path)
    split = resolve_split(model, S, args.split)
    result = check_gluing(S, split)
    sys.stdout.write(report.gluing_report(S, result))
    return EXIT_OK if isinstance(result, GluingCertificate) else EXIT_NEGATIVE


def cmd_gluings(args) -> int:
    _, S = load_semigroup(args.path)
    found = enumerate_gluings(S, progress=args.verbose)
    sys.stdout.write(report.gluings_report(S, found))
    return EXIT_OK if found else EXIT_NEGATIVE


def _load_glue_inputs(args):
    try:
        _, T1 = load_semigroup(args.path1)
        _, T2 = load_semigroup(args.path2)
    except (NotReducedError, ZeroGeneratorError) as e:
        raise CommandError(str(e), EXIT_GLUE_INPUT)
    return T1, T2


def _constructed_file(result, found_by_search: bool) -> str:
    r, l = result.recipe.r, result.S.num_generators
    model = SemigroupFile.from_semigroup(result.S, {'glued': SplitSpec.natural(r, l)})
    return model.dumps() + report.verification_block(result, found_by_search)


def cmd_glue(args) -> int:
    T1, T2 = _load_glue_inputs(args)
    recipe = GlueRecipe(T1, T2, tuple(parse_integers(args.gamma_x)), tuple(parse_integers(args.gamma_y)))
    result = glue(recipe)
    write_output(_constructed_file(result, False), args.output)
    return EXIT_OK


def cmd_glue_affine(args) -> int:
    T1, T2 = _load_glue_inputs(args)
    found = affine_gamma_search(T1, T2, budget=args.budget, progress=args.verbose)
    if isinstance(found, Exhausted):
        raise CommandError(
            f"No affine gluing among the first {found.tested} candidates", EXIT_EXHAUSTED
        )
    write_output(_constructed_file(glue(found), True), args.output)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    model, S = load_semigroup(args.path)
    degree = parse_degree(args.degree, S.group)
    fiber = enumerate_fiber(S, degree)
    if fiber.is_empty():
        raise CommandError(f"{degree} is not in the semigroup", EXIT_NOT_IN_SEMIGROUP)
    split = resolve_split(model, S, args.split) if args.split else None
    nabla = build_nabla(fiber)
    if args.format == 'text':
        sys.stdout.write(report.fiber_report(S, nabla, split))
    else:
        names = None
        if split is not None:
            names = variable_names(S.num_generators, split)
        sys.stdout.write(nabla_to_dot(nabla, names))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='semigroup_tool',
        description='Analyze semigroups, detect gluings and build glued semigroups',
    )
    parser.add_argument('--verbose', action='store_true', help='Debug logging and progress bars on stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    def with_path(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('path', help='Semigroup file')
        p.set_defaults(handler=handler)
        return p

    p = with_path('analyze', cmd_analyze, 'Full report: Betti degrees, presentation, flags')
    p.add_argument('--seed', type=int, default=None, help='Tie-break seed for representatives')
    with_path('betti', cmd_betti, 'Betti degrees with fiber sizes and component counts')
    p = with_path('present', cmd_present, 'Minimal presentation')
    p.add_argument('--seed', type=int, default=None, help='Tie-break seed for representatives')
    with_path('indispensable', cmd_indispensable, 'Indispensable binomials')
    with_path('is-ci', cmd_is_ci, 'Complete intersection test (exit 1 if not)')
    p = with_path('is-glued', cmd_is_glued, 'Check one split (exit 1 if not glued)')
    p.add_argument('--split', default=None, help='Split such as 1-4|5-8, or a split name from the file')
    with_path('gluings', cmd_gluings, 'All gluing splits (exit 1 if none)')

    p = sub.add_parser('glue', help='Glue two semigroups along (gamma_x, gamma_y)')
    p.add_argument('path1')
    p.add_argument('path2')
    p.add_argument('--gamma-x', required=True, help='e.g. 2,0,2,0')
    p.add_argument('--gamma-y', required=True, help='e.g. 1,2,1')
    p.add_argument('--output', default=None, help='Write the semigroup file here instead of stdout')
    p.set_defaults(handler=cmd_glue)

    p = sub.add_parser('glue-affine', help='Search gamma giving an affine glued semigroup')
    p.add_argument('path1')
    p.add_argument('path2')
    p.add_argument('--budget', type=int, default=Config.AFFINE_SEARCH_BUDGET)
    p.add_argument('--output', default=None, help='Write the semigroup file here instead of stdout')
    p.set_defaults(handler=cmd_glue_affine)

    p = with_path('export-dot', cmd_export_dot, 'Graph of the fiber of a degree')
    p.add_argument('degree', help='e.g. 18, (13,13) or (2;0,20) with torsion first')
    p.add_argument('--split', default=None, help='Label variables x/y along a split')
    p.add_argument('--format', choices=['text', 'dot'], default='dot')
    return parser


def _exit_code(error: SemigroupError, command: str) -> int:
    glue_command = command in ('glue', 'glue-affine')
    if isinstance(error, SemigroupFileError):
        return EXIT_PARSE
    if isinstance(error, (SplitError, TooManyGeneratorsError)):
        return EXIT_SPLIT
    if isinstance(error, (GlueInputError, NotAffineError, NotMinimalError)) or glue_command:
        return EXIT_GLUE_INPUT
    if isinstance(error, (NotReducedError, ZeroGeneratorError)):
        return EXIT_NOT_REDUCED
    return EXIT_PARSE


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Exit code (0 ok, 1 negative answer, 2 parse, 3 not reduced,
        4 split, 5 glue inputs or generators not minimal in any command,
        6 search exhausted, 7 degree not in S)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        Config.validate()
    except ValueError as e:
        print(f"✗ Configuration error: {e}", file=sys.stderr)
        return EXIT_PARSE

    try:
        return args.handler(args)
    except CommandError as e:
        print(f"✗ {e}", file=sys.stderr)
        return e.code
    except SemigroupError as e:
        print(f"✗ {e}", file=sys.stderr)
        return _exit_code(e, args.command)
