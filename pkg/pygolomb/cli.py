# -*- coding: utf-8 -*-

import argparse
import logging
import sys
from dataclasses import dataclass

from . import export
from ._version import __version__
from .closedforms import FormulaInconsistency, closed_sequence, freq_lambda1
from .pruning import prune, prune_to_base
from .recurrence import (EvalError, GeneralParams, GolombParams, InitialConditions,
                         complete_frequencies, eval_general, eval_golomb)
from .treemodel import (TreeVariant, assign_labels, build_labeled_tree, build_skeleton, initial_conditions,
                        leaf_weight_sequence, prefix_view)
from . import verify
from .verify import Verifier, format_report

logger = logging.getLogger(__name__)

SUBCOMMANDS = ('gen', 'tree', 'closed', 'freq', 'prune', 'verify', 'dot', 'bfile')
FORMATS = ('plain', 'csv', 'bfile', 'json')

# verification run sizes, each exposed as --<name> on the verify subcommand
VERIFY_SIZES = ('golomb_nmax', 'a001650_nmax', 'weight_nmax', 'specialization_nmax', 'tree_nmax',
                'closed_nmax', 'reduction_nmax', 'g1s1_nmax', 'leaf_path_nmax', 'oracle_configs')

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGUMENTS = 2
EXIT_ENGINE_ERROR = 3

@dataclass(frozen=True)
class CommandConfig:
    """
    Fully parsed command line

    init_source is one of 'tree', 'list', 'ones' or 'file'; init_values holds
    the explicit list, init_length the number of ones and init_path the file.
    """
    subcommand: str
    j: int = 1
    s: int = 0
    lam: int = 1
    k: int = None
    nu: int = None
    n: int = None
    variant: TreeVariant = TreeVariant.KNOT
    init_source: str = 'tree'
    init_values: tuple = ()
    init_length: int = 0
    init_path: str = None
    output_format: str = 'plain'
    formula: str = 'general'
    engine: str = 'recursion'
    depth: int = None
    upto: int = None
    golomb_nmax: int = verify.DEFAULT_GOLOMB_NMAX
    a001650_nmax: int = verify.DEFAULT_A001650_NMAX
    weight_nmax: int = verify.DEFAULT_WEIGHT_NMAX
    specialization_nmax: int = verify.DEFAULT_SPECIALIZATION_NMAX
    tree_nmax: int = verify.DEFAULT_TREE_NMAX
    closed_nmax: int = verify.DEFAULT_CLOSED_NMAX
    reduction_nmax: int = verify.DEFAULT_REDUCTION_NMAX
    g1s1_nmax: int = verify.DEFAULT_G1S1_NMAX
    leaf_path_nmax: int = verify.DEFAULT_LEAF_PATH_NMAX
    oracle_configs: int = verify.DEFAULT_ORACLE_CONFIGS
    nproc: int = 1
    verbose: int = 0

def parse_init(text):
    """
    Turn the --init argument into (init_source, init_values, init_length)
    """
    if text is None or text == 'tree':
        return 'tree', (), 0
    if text.startswith('ones:'):
        return 'ones', (), int(text[5:])
    return 'list', tuple(int(tok) for tok in text.replace(',', ' ').split()), 0

def build_parser():
    parser = argparse.ArgumentParser(prog='pygolomb',
                                     description='Generalized Golomb recursion: sequences, trees and closed forms')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='subcommand', required=True)

    def common(p, needs_n=True, params=True):
        p.add_argument('-v', '--verbose', action='count', default=0)
        if params:
            p.add_argument('--j', type=int, default=1)
            p.add_argument('--s', type=int, default=0)
            p.add_argument('--lambda', dest='lam', type=int, default=1)
            p.add_argument('--variant', choices=[v.value for v in TreeVariant], default='knot')
        if needs_n:
            p.add_argument('--n', type=int, required=True)

    def output(p):
        p.add_argument('--format', dest='output_format', choices=FORMATS, default='plain')

    p = sub.add_parser('gen', help='evaluate the recursion')
    common(p)
    output(p)
    p.add_argument('--k', type=int, default=None)
    p.add_argument('--nu', type=int, default=None)
    p.add_argument('--init', default=None,
                   help="'tree' (default), a list such as 1,3,3 or ones:L")
    p.add_argument('--init-file', dest='init_path', default=None)

    p = sub.add_parser('tree', help='leaf weight sequence of the labeled tree')
    common(p)
    output(p)

    p = sub.add_parser('closed', help='lambda=1 closed forms')
    common(p)
    output(p)
    p.add_argument('--formula', choices=('general', 'golomb', 'g1s1', 'reduced'), default='general')

    p = sub.add_parser('freq', help='frequency table next to the lambda=1 formula')
    common(p)

    p = sub.add_parser('prune', help='prune K(n) and trace the cutoffs')
    common(p)

    p = sub.add_parser('verify', help='run the cross-verification suites')
    common(p, needs_n=False, params=False)
    p.add_argument('--grid-default', action='store_true',
                   help='accepted for compatibility; the default grids are always used')
    for name in VERIFY_SIZES:
        p.add_argument('--' + name.replace('_', '-'), type=int,
                       default=getattr(verify, 'DEFAULT_' + name.upper()))
    p.add_argument('--nproc', type=int, default=1)

    p = sub.add_parser('dot', help='Graphviz drawing of the labeled tree')
    common(p, needs_n=False)
    p.add_argument('--depth', type=int, default=None)
    p.add_argument('--upto', type=int, default=None)

    p = sub.add_parser('bfile', help='OEIS b-file')
    common(p)
    p.add_argument('--engine', choices=('recursion', 'tree', 'closed'), default='recursion')

    return parser

def parse_args(argv=None):
    """
    Parse the command line into a CommandConfig
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        init_source, init_values, init_length = parse_init(getattr(args, 'init', None))
    except ValueError:
        parser.error("invalid --init value '%s'" % args.init)
    init_path = getattr(args, 'init_path', None)
    if init_path is not None:
        init_source = 'file'

    sizes = {name: getattr(args, name) for name in VERIFY_SIZES if hasattr(args, name)}

    return CommandConfig(subcommand=args.subcommand,
                         j=getattr(args, 'j', 1), s=getattr(args, 's', 0), lam=getattr(args, 'lam', 1),
                         k=getattr(args, 'k', None),
                         nu=getattr(args, 'nu', None),
                         n=getattr(args, 'n', None),
                         variant=TreeVariant(getattr(args, 'variant', 'knot')),
                         init_source=init_source,
                         init_values=init_values,
                         init_length=init_length,
                         init_path=init_path,
                         output_format=getattr(args, 'output_format', 'plain'),
                         formula=getattr(args, 'formula', 'general'),
                         engine=getattr(args, 'engine', 'recursion'),
                         depth=getattr(args, 'depth', None),
                         upto=getattr(args, 'upto', None),
                         nproc=getattr(args, 'nproc', 1),
                         verbose=args.verbose,
                         **sizes)

def _initial_conditions(config):
    if config.init_source == 'list':
        return InitialConditions(config.init_values)
    if config.init_source == 'ones':
        return InitialConditions.ones(config.init_length)
    if config.init_source == 'file':
        with open(config.init_path, 'r') as f:
            return InitialConditions(export.read_values(f))
    return initial_conditions(config.variant, config.j, config.s, config.lam)

def _recursion(config):
    init = _initial_conditions(config)
    if config.k is not None or config.nu is not None:
        params = GeneralParams(k=config.k if config.k is not None else 1, j=config.j, s=config.s,
                               nu=config.nu if config.nu is not None else config.lam * config.j)
        return eval_general(params, init, config.n)
    return eval_golomb(GolombParams(config.j, config.s, config.lam), init, config.n)

def _closed(config):
    if config.lam != 1:
        raise ValueError("Closed forms exist for lambda=1 only, got lambda=%i" % config.lam)
    return closed_sequence(config.j, config.s, config.n, formula=config.formula)

def _sequence(config, engine):
    if engine == 'tree':
        return leaf_weight_sequence(config.variant, config.j, config.s, config.lam, config.n)
    if engine == 'closed':
        return _closed(config)
    return _recursion(config)

def _write_sequence(seq, fmt, stdout, extra=None):
    if fmt == 'csv':
        export.write_csv(seq, stdout)
    elif fmt == 'bfile':
        export.write_bfile(seq, stdout)
    elif fmt == 'json':
        stdout.write(export.to_json(seq, extra=extra) + "\n")
    else:
        export.write_plain(seq, stdout)

def _run_freq(config, stdout):
    seq = eval_golomb(GolombParams(config.j, config.s, config.lam),
                      initial_conditions(config.variant, config.j, config.s, config.lam), config.n)
    table = complete_frequencies(seq)
    stdout.write("value count formula\n")
    for value in range(1, seq[len(seq)]):
        formula = "%i" % freq_lambda1(config.j, config.s, value) if config.lam == 1 else "-"
        stdout.write("%i %i %s\n" % (value, table[value], formula))

def _run_prune(config, stdout):
    view = prefix_view(config.variant, config.j, config.s, config.lam, config.n)
    res = prune(view)
    stdout.write("K(%i) -> K(%i): %i labels removed, weight drop %i, case %s\n"
                 % (view.n, res.d, res.labels_removed, res.weight_drop, res.case.name))
    stdout.write(str(res.result))
    stdout.write("trace: %s\n" % " ".join(str(n) for n in prune_to_base(view)))

def _run_dot(config, stdout):
    if config.depth is None and config.upto is not None:
        tree = build_labeled_tree(config.variant, config.j, config.s, config.lam, config.upto)
    else:
        depth = config.depth if config.depth is not None else 2
        tree = assign_labels(build_skeleton(config.variant, config.j, config.lam, depth), config.s)
    stdout.write(export.tree_to_dot(tree, upto=config.upto))

def run(config, stdout=None, stderr=None):
    """
    Execute a parsed command; data goes to stdout, diagnostics to stderr

    Returns the exit status: 0 on success, 1 when verification fails, 2 on
    invalid arguments and 3 when an engine cannot evaluate a term.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    logger.debug("running %s with %s", config.subcommand, config)

    try:
        if config.subcommand not in SUBCOMMANDS:
            raise ValueError("Unknown subcommand '%s'" % config.subcommand)
        if config.subcommand not in ('verify', 'dot') and (config.n is None or config.n < 1):
            raise ValueError("--n must be a positive integer")

        if config.subcommand == 'gen':
            _write_sequence(_recursion(config), config.output_format, stdout)
        elif config.subcommand == 'tree':
            _write_sequence(_sequence(config, 'tree'), config.output_format, stdout,
                            extra={'variant': config.variant.value})
        elif config.subcommand == 'closed':
            _write_sequence(_closed(config), config.output_format, stdout)
        elif config.subcommand == 'bfile':
            export.write_bfile(_sequence(config, config.engine), stdout)
        elif config.subcommand == 'freq':
            _run_freq(config, stdout)
        elif config.subcommand == 'prune':
            _run_prune(config, stdout)
        elif config.subcommand == 'dot':
            _run_dot(config, stdout)
        elif config.subcommand == 'verify':
            sol = Verifier().run(nproc=config.nproc,
                                 **{name: getattr(config, name) for name in VERIFY_SIZES})
            stdout.write(format_report(sol))
            if not sol['passed']:
                return EXIT_VERIFY_FAILED
    except EvalError as e:
        stderr.write("error: %s (index %i)\n" % (e, e.at))
        return EXIT_ENGINE_ERROR
    except FormulaInconsistency as e:
        stderr.write("error: %s\n" % e)
        return EXIT_ENGINE_ERROR
    except (ValueError, OSError) as e:
        stderr.write("error: %s\n" % e)
        return EXIT_BAD_ARGUMENTS

    return EXIT_OK

def main(argv=None):
    config = parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(config.verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')
    sys.exit(run(config, sys.stdout, sys.stderr))

if __name__ == '__main__':
    main()
