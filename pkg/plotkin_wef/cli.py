__doc__ = """
Command line: `plotkin-wef` (or `python -m plotkin_wef`).

    plotkin-wef rm R M [--partial W]
    plotkin-wef combine A0_FILE A1_FILE [--length N] [--partial W]
    plotkin-wef oracle G0_FILE G1_FILE [--mode exhaustive|montecarlo]
                                       [--samples N] [--seed S]
    plotkin-wef bound SPECTRUM_FILE --rate R --ebn0 DB [DB ...] --truncate W
    plotkin-wef tree TREE_FILE [--emit-generator]

Every subcommand takes --format poly|json|csv, --no-timing, --max-length,
--max-depth, --settings FILE and -v/-vv. A file argument of '-' reads stdin.
Spectrum files hold enumerator JSON, or the text form together with
--length. Matrix and tree files hold JSON.

Exit status: 0 on success, 2 for usage, parse and domain errors, 3 when a
resource budget would be exceeded. Error messages go to stderr as
"plotkin-wef: error: <message>"; stdout carries only the result.
"""
import argparse
import json
import logging
import sys

from . import bounds, codetree, config, oracle, plotkin
from .enumerator import WeightEnumerator, format_poly, parse_poly
from .errors import (BudgetExceededError, DomainError, LengthMismatchError, ParseError,
                     PlotkinError, WeightRangeError)
from .settings import SettingsMapping
from .version import __version__


__all__ = ['main', 'build_parser']

PROG = 'plotkin-wef'

logger = logging.getLogger(__name__)


#----------------------------------------------------------------------------
# input
#----------------------------------------------------------------------------
def _read_text(path) -> str:
    try:
        if path == '-':
            return sys.stdin.read()
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise ParseError("can't read %s: %s" % (path, e.strerror or e)) from None


def _parse_json(text, path):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("%s: invalid JSON: %s" % (path, e.msg), e.pos) from None


def _read_json(path):
    return _parse_json(_read_text(path), path)


def _read_enumerator(path, length=None) -> WeightEnumerator:
    text = _read_text(path).strip()
    if text.startswith('{'):
        return WeightEnumerator.from_json(_parse_json(text, path))
    if length is None:
        raise ParseError("%s: a spectrum in text form needs --length" % path)
    return parse_poly(text, length)


#----------------------------------------------------------------------------
# OutputRecord
#----------------------------------------------------------------------------
def _dimension_from_mass(mass):
    """log2 of a code's total mass when it's an integer power of 2, else None."""
    if mass.denominator != 1 or mass.numerator < 1:
        return None
    k = mass.numerator.bit_length() - 1
    return k if mass.numerator == 1 << k else None


def _partial(A_prefix, n) -> WeightEnumerator:
    return WeightEnumerator.from_counts(list(A_prefix), length=n)


def _record(command, input_echo, spectrum: WeightEnumerator, dimension, **extra) -> dict:
    record = {
        'command': command,
        'input': input_echo,
        'length': spectrum.length,
        'dimension': dimension,
        'min_weight': spectrum.min_positive_weight(),
        'spectrum': spectrum.to_json(),
    }
    record.update((k, v) for k, v in extra.items() if v is not None)
    return record


def _elapsed_since(fn, calls_before) -> float:
    """Wall time of the calls of a traced function made after its
    logged-call counter read calls_before."""
    return sum(rec.elapsed_secs for rec in fn.stats.history if rec.call_num > calls_before)


class _Timer():
    """Collects timing from the call histories of traced functions."""
    def __init__(self, *fns):
        self._marks = [(fn, fn.stats.num_calls_logged) for fn in fns]

    def elapsed(self) -> float:
        return sum(_elapsed_since(fn, before) for fn, before in self._marks)


#----------------------------------------------------------------------------
# commands
#----------------------------------------------------------------------------
def _check_length(settings, n):
    config.check_budget('max_length', n, settings.max_length)


def _check_depth(settings, m):
    """Depth and length budgets of a depth-m tree, before it is built."""
    config.check_budget('max_depth', m, settings.max_depth)
    if m < 0:
        raise DomainError("depth m must be >= 0, got %d" % m)
    _check_length(settings, 1 << m)


def cmd_rm(args, settings) -> dict:
    _check_depth(settings, args.m)
    tree = codetree.rm_tree(args.r, args.m)
    n = codetree.length(tree)
    echo = {'r': args.r, 'm': args.m}
    if args.partial is not None:
        echo['partial'] = args.partial
        timer = _Timer(codetree.spectrum_prefix)
        A = _partial(codetree.spectrum_prefix(tree, args.partial), n)
    else:
        timer = _Timer(codetree.ensemble_wef)
        A = codetree.ensemble_wef(tree)
    return _record('rm', echo, A, codetree.dimension(tree), timing=timer.elapsed())


def cmd_combine(args, settings) -> dict:
    A0 = _read_enumerator(args.a0_file, args.length)
    A1 = _read_enumerator(args.a1_file, args.length)
    _check_length(settings, A0.length + A1.length)
    dimension = _dimension_from_mass(A0.total_mass() * A1.total_mass())
    echo = {'a0': A0.to_json(), 'a1': A1.to_json()}
    if args.partial is not None:
        echo['partial'] = args.partial
        n = A0.length
        if A1.length != n:
            raise LengthMismatchError("component lengths differ: %d and %d" % (n, A1.length))
        if args.partial < 0:
            raise WeightRangeError("truncation weight must be >= 0, got %d" % args.partial)
        timer = _Timer(plotkin.combine_single_weight)
        prefix = [plotkin.combine_single_weight(A0, A1, w)
                  for w in range(min(args.partial, 2 * n) + 1)]
        A = _partial(prefix, 2 * n)
    else:
        timer = _Timer(plotkin.combine)
        A = plotkin.combine(A0, A1)
    return _record('combine', echo, A, dimension, timing=timer.elapsed())


def cmd_oracle(args, settings) -> dict:
    G0 = oracle.BinaryMatrix.from_json(_read_json(args.g0_file))
    G1 = oracle.BinaryMatrix.from_json(_read_json(args.g1_file))
    _check_length(settings, G0.n + G1.n)
    echo = {'g0': G0.to_json(), 'g1': G1.to_json(), 'mode': args.mode}
    stderr = None
    if args.mode == 'exhaustive':
        timer = _Timer(oracle.ensemble_wef_exhaustive)
        A = oracle.ensemble_wef_exhaustive(G0, G1)
    else:
        echo.update(samples=args.samples, seed=args.seed)
        timer = _Timer(oracle.ensemble_wef_montecarlo)
        estimate = oracle.ensemble_wef_montecarlo(G0, G1, args.samples, args.seed)
        A = estimate.spectrum
        stderr = {str(w): e for w, e in enumerate(estimate.stderr) if A[w]}
    return _record('oracle', echo, A, G0.rank() + G1.rank(),
                   stderr=stderr, timing=timer.elapsed())


def cmd_bound(args, settings) -> dict:
    A = _read_enumerator(args.spectrum_file, args.length)
    _check_length(settings, A.length)
    ch = bounds.ChannelPoint(args.rate, args.ebn0[0])
    timer = _Timer(bounds.truncated_union_bound)
    table = bounds.bound_table(A, args.truncate, ch, args.ebn0)
    echo = {'rate': args.rate, 'ebn0': list(args.ebn0), 'truncate': args.truncate}
    return _record('bound', echo, A, _dimension_from_mass(A.total_mass()),
                   bounds=[{'ebn0_db': e, 'bound': b} for e, b in table],
                   timing=timer.elapsed())


def cmd_tree(args, settings) -> dict:
    obj = _read_json(args.tree_file)
    _check_depth(settings, codetree.tree_json_depth(obj))
    tree = codetree.tree_from_json(obj)
    timer = _Timer(codetree.ensemble_wef)
    A = codetree.ensemble_wef(tree)
    generator = codetree.generator_matrix(tree).to_json() if args.emit_generator else None
    return _record('tree', codetree.tree_to_json(tree), A, codetree.dimension(tree),
                   generator=generator, timing=timer.elapsed())


#----------------------------------------------------------------------------
# output
#----------------------------------------------------------------------------
def render(record: dict, fmt: str, timing=True) -> str:
    """Text written to stdout for one record."""
    if not timing:
        record = {k: v for k, v in record.items() if k != 'timing'}
    if fmt == 'json':
        return json.dumps(record, indent=2) + '\n'

    A = WeightEnumerator.from_json(record['spectrum'])
    if fmt == 'csv':
        if 'bounds' in record:
            return 'ebn0_db,bound\n' + ''.join('%r,%r\n' % (row['ebn0_db'], row['bound'])
                                               for row in record['bounds'])
        if 'stderr' in record:
            lines = ['weight,coefficient,stderr']
            lines.extend('%s,%s,%r' % (w, c, record['stderr'][w])
                         for w, c in record['spectrum']['coeffs'].items())
            return '\n'.join(lines) + '\n'
        return A.to_csv()

    # poly
    if 'bounds' in record:
        return ''.join('%g\t%.12e\n' % (row['ebn0_db'], row['bound']) for row in record['bounds'])
    if record['command'] == 'tree':
        lines = ['length: %d' % record['length'],
                 'dimension: %d' % record['dimension'],
                 'spectrum: %s' % format_poly(A)]
        if 'generator' in record:
            lines.append('generator: %s' % json.dumps(record['generator']))
        return '\n'.join(lines) + '\n'
    return format_poly(A) + '\n'


#----------------------------------------------------------------------------
# parser
#----------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=config.OUTPUT_FORMATS, default=None,
                        help="output format (default: the output_format setting, 'poly')")
    common.add_argument('--no-timing', action='store_true',
                        help="omit the timing field from json output")
    common.add_argument('--max-length', type=int, default=None, metavar='N',
                        help="refuse codes longer than N (default: max_length setting)")
    common.add_argument('--max-depth', type=int, default=None, metavar='M',
                        help="refuse trees deeper than M (default: max_depth setting)")
    common.add_argument('--settings', default=None, metavar='FILE',
                        help="settings file for the plotkin_wef group")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="log to stderr; -v for INFO, -vv for DEBUG (call tracing)")

    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact ensemble weight enumerators of Plotkin-construction codes.")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('rm', parents=[common], help="ensemble spectrum of the RM(r, m) tree")
    p.add_argument('r', type=int)
    p.add_argument('m', type=int)
    p.add_argument('--partial', type=int, metavar='W', help="only weights <= W")
    p.set_defaults(func=cmd_rm)

    p = sub.add_parser('combine', parents=[common], help="combine two component spectra")
    p.add_argument('a0_file', metavar='A0_FILE', help="spectrum of the u code C0")
    p.add_argument('a1_file', metavar='A1_FILE', help="spectrum of the v code C1")
    p.add_argument('--length', type=int, metavar='N', help="component length, for text spectra")
    p.add_argument('--partial', type=int, metavar='W', help="only weights <= W")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser('oracle', parents=[common], help="ensemble spectrum by enumeration")
    p.add_argument('g0_file', metavar='G0_FILE')
    p.add_argument('g1_file', metavar='G1_FILE')
    p.add_argument('--mode', choices=('exhaustive', 'montecarlo'), default='exhaustive')
    p.add_argument('--samples', type=int, default=1000, metavar='N')
    p.add_argument('--seed', type=int, default=0, metavar='S')
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser('bound', parents=[common], help="truncated union bound on the AWGN channel")
    p.add_argument('spectrum_file', metavar='SPECTRUM_FILE')
    p.add_argument('--length', type=int, metavar='N', help="code length, for a text spectrum")
    p.add_argument('--rate', type=float, required=True, metavar='R')
    p.add_argument('--ebn0', type=float, nargs='+', required=True, metavar='DB')
    p.add_argument('--truncate', type=int, required=True, metavar='W')
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser('tree', parents=[common], help="spectrum of a tree given as JSON")
    p.add_argument('tree_file', metavar='TREE_FILE')
    p.add_argument('--emit-generator', action='store_true')
    p.set_defaults(func=cmd_tree)

    return parser


def _session_settings(args):
    settings = config.reload_settings()
    if args.settings:
        settings.update(SettingsMapping.read_settings_file(config.GROUP, args.settings))
    if args.max_length is not None:
        settings.max_length = args.max_length
    if args.max_depth is not None:
        settings.max_depth = args.max_depth
    return settings


def _attach_stderr_handler(verbosity):
    if not verbosity:
        return None
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(name)s: %(message)s'))
    pkg_logger = logging.getLogger('plotkin_wef')
    pkg_logger.addHandler(handler)
    pkg_logger.setLevel(logging.DEBUG if verbosity > 1 else logging.INFO)
    return handler


def _error(msg, status) -> int:
    print("%s: error: %s" % (PROG, msg), file=sys.stderr)
    return status


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    handler = _attach_stderr_handler(args.verbose)
    try:
        settings = _session_settings(args)
        record = args.func(args, settings)
        sys.stdout.write(render(record, args.format or settings.output_format,
                                timing=not args.no_timing))
        return 0
    except BudgetExceededError as e:
        return _error(e, 3)
    except PlotkinError as e:
        return _error(e, 2)
    finally:
        if handler is not None:
            pkg_logger = logging.getLogger('plotkin_wef')
            pkg_logger.removeHandler(handler)
            pkg_logger.setLevel(logging.NOTSET)
