"""Command-line front end: `schur-resolve <subcommand> [options]`."""
from __future__ import annotations
from .assembly import (
    be_predicted_complex,
    normal_module_resolution,
    s2m_tensor_it_resolution,
    tensor_mm_resolution,
    wedge2_resolution,
)
from .errors import EXIT_INVARIANT, EXIT_OK, UsageError, exit_status, vert
from .graded import (
    ComplexSpec,
    MorphismSpec,
    cancellation_candidates,
    render,
)
from .koszulverify import build_d_complex_matrices, random_specialization, verify_acyclicity
from .lascoux import (
    canonical_module_resolution,
    eagon_northcott_family,
    lascoux_adjacency,
    lascoux_resolution,
    schur_power_resolution,
)
from .sweep import run_sweep
from typing import Callable
import argparse
import csv
import io
import logging
import os
import sys


logger = logging.getLogger(__name__)

FORMAT_ENV = 'SCHUR_RESOLVE_FORMAT'
LOG_LEVEL_ENV = 'SCHUR_RESOLVE_LOG_LEVEL'

ASSEMBLED: dict[str, Callable[[MorphismSpec], ComplexSpec]] = {
    'wedge2': wedge2_resolution,
    'tensor-mm': tensor_mm_resolution,
    'normal': normal_module_resolution,
    's2m-it': s2m_tensor_it_resolution,
}


def parse_degrees(text: str, name: str) -> tuple[int, ...]:
    """Parse a comma list like '1,1,2' into a tuple of int."""
    try:
        return tuple(int(x) for x in text.split(','))
    except ValueError:
        vert(False, f'--{name} must be a comma list of integers, got {text!r}')

def spec_from_args(args: argparse.Namespace) -> MorphismSpec:
    vert(args.t is not None and args.c is not None, '--t and --c are required')
    if args.linear:
        return MorphismSpec.linear(args.t, args.c, args.nvars)
    if args.mixed:
        return MorphismSpec.mixed(args.t, args.c, args.nvars)
    vert(args.a is not None and args.b is not None,
        'give --a and --b, or one of --linear / --mixed')
    return MorphismSpec(
        args.t, args.c, parse_degrees(args.a, 'a'), parse_degrees(args.b, 'b'), args.nvars,
    )

def configure_logging(verbose: int) -> None:
    """WARNING by default, INFO for -v, DEBUG for -vv. Without -v the
        level named in SCHUR_RESOLVE_LOG_LEVEL applies.
    """
    if verbose:
        level = logging.INFO if verbose == 1 else logging.DEBUG
    else:
        name = os.environ.get(LOG_LEVEL_ENV, 'WARNING').upper()
        level = logging.getLevelName(name)
        vert(type(level) is int, f'{LOG_LEVEL_ENV} names an unknown level: {name!r}')
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--t', type=int, help='rank of F')
    parser.add_argument('--c', type=int, help='rank G - rank F + 1')
    parser.add_argument('--a', help='twists of G as a comma list')
    parser.add_argument('--b', help='twists of F as a comma list')
    degrees = parser.add_mutually_exclusive_group()
    degrees.add_argument('--linear', action='store_true',
        help='a matrix of linear forms: a=1,...,1 b=0,...,0')
    degrees.add_argument('--mixed', action='store_true',
        help='alternating degrees a_j=1+(j mod 2), b_i=-(i mod 2)')
    parser.add_argument('--nvars', type=int, default=0,
        help='number of variables (default t*(t+c-1))')

def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', default=None,
        help=f'text, json or csv (default ${FORMAT_ENV} or text)')
    parser.add_argument('-o', '--output', help='write the result to this file')
    parser.add_argument('-v', '--verbose', action='count', default=0)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='schur-resolve',
        description='Betti tables of determinantal resolutions and their assemblies.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    def command(name: str, help: str, spec: bool = True) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help)
        if spec:
            _add_spec_args(sub)
        _add_output_args(sub)
        return sub

    command('resolve', 'Lascoux resolution of R/I_i').add_argument(
        '--i', type=int, required=True, help='size of the minors')
    command('canonical', 'resolution of the canonical module of R/I_i').add_argument(
        '--i', type=int, required=True, help='size of the minors')
    command('adjacency', 'differential blocks of the Lascoux complex').add_argument(
        '--i', type=int, required=True, help='size of the minors')
    command('schur-power', 'resolution of the Schur power ((c-1)^p) of M').add_argument(
        '--p', type=int, required=True)
    command('eagon-northcott', 'the complex D_i resolving S_iM').add_argument(
        '--i', type=int, required=True)
    wedge2 = command('wedge2', 'resolution of the second exterior power of M')
    wedge2.add_argument('--drop-H', dest='drop_H', action='store_true',
        help='omit the summands labelled H')
    command('tensor-mm', 'resolution of M (x) M')
    command('normal', 'resolution of the normal module (c = 3)')
    command('s2m-it', 'resolution of S_2M (x) I_t (c = 2 or 3)')
    command('predict-be', 'predicted first terms of coker(phi*_(p-1,1))').add_argument(
        '--p', type=int, required=True)
    candidates = command('candidates', 'candidate cancellations of an assembled complex')
    candidates.add_argument('--of', required=True, choices=sorted(ASSEMBLED))
    verify = command('verify-koszul', 'exact rank checks of D_i at a random point')
    verify.add_argument('--i', type=int, required=True)
    verify.add_argument('-s', '--seed', type=int, default=0)
    sweep = command('sweep', 'run the invariant suite over a parameter grid', spec=False)
    sweep.add_argument('--max-t', type=int, default=4)
    sweep.add_argument('--max-c', type=int, default=3)
    sweep.add_argument('--workers', type=int, default=1)
    sweep.add_argument('--no-koszul', dest='koszul', action='store_false',
        help='skip the matrix checks')
    return parser


def cmd_adjacency(spec: MorphismSpec, i: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(('position', 'I', 'H', 'rho'))
    for k, I, H, rho in lascoux_adjacency(spec, i):
        writer.writerow((k, str(I), str(H), rho))
    return buffer.getvalue()

def cmd_candidates(cx: ComplexSpec) -> str:
    buffer = io.StringIO()
    buffer.write(f'resolved: {cx.resolved_name}\n')
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(('position', 'twist', 'count'))
    writer.writerows(cancellation_candidates(cx))
    return buffer.getvalue()

def cmd_verify(spec: MorphismSpec, i: int, seed: int) -> tuple[str, int]:
    chain = build_d_complex_matrices(spec, i, random_specialization(spec, seed))
    report = verify_acyclicity(chain)
    return report.to_json(), EXIT_OK if report.passed else EXIT_INVARIANT

def cmd_sweep(max_t: int, max_c: int, workers: int, koszul: bool) -> tuple[str, int]:
    results = run_sweep(max_t, max_c, workers, koszul)
    failed = [r for r in results if not r.passed]
    lines = [r.line() for r in results]
    lines.append(f'{len(results) - len(failed)} passed, {len(failed)} failed')
    return '\n'.join(lines) + '\n', EXIT_INVARIANT if failed else EXIT_OK

def dispatch(args: argparse.Namespace) -> tuple[str, int]:
    """Run the selected subcommand; returns the rendered output and the
        exit status.
    """
    fmt = args.format or os.environ.get(FORMAT_ENV) or 'text'
    command = args.command
    if command == 'sweep':
        return cmd_sweep(args.max_t, args.max_c, args.workers, args.koszul)

    spec = spec_from_args(args)
    logger.info('%s: %s', command, spec.describe())
    if command == 'verify-koszul':
        return cmd_verify(spec, args.i, args.seed)
    if command == 'adjacency':
        return cmd_adjacency(spec, args.i), EXIT_OK
    if command == 'candidates':
        return cmd_candidates(ASSEMBLED[args.of](spec)), EXIT_OK

    if command == 'resolve':
        cx = lascoux_resolution(spec, args.i)
    elif command == 'canonical':
        cx = canonical_module_resolution(spec, args.i)
    elif command == 'schur-power':
        cx = schur_power_resolution(spec, args.p)
    elif command == 'eagon-northcott':
        cx = eagon_northcott_family(spec, args.i)
    elif command == 'predict-be':
        cx = be_predicted_complex(spec, args.p)
    else:
        cx = ASSEMBLED[command](spec)
        if command == 'wedge2' and args.drop_H:
            cx = cx.without('H')
    return render(cx, fmt), EXIT_OK

def main(argv: list[str]|None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        configure_logging(args.verbose)
        output, status = dispatch(args)
    except (ValueError, TypeError, UsageError) as e:
        print(f'schur-resolve: {e}', file=sys.stderr)
        return exit_status(e)

    if args.output:
        with open(args.output, 'w', encoding='utf-8') as f:
            f.write(output)
    else:
        sys.stdout.write(output)
    return status
