# -*- coding: utf-8 -*-

import logging
import multiprocessing
import time
from dataclasses import dataclass

import numpy as np

from . import closedforms as cf
from .grid import lambda1_grid, reduction_grid, weight_grid, tree_grid
from .pruning import prune, prune_threshold, verify_prune_identity
from .recurrence import (EvalError, GeneralParams, GolombParams, InitialConditions, analyze,
                         complete_frequencies, eval_general, eval_golomb, eval_naive)
from .treemodel import (TreeVariant, assign_labels, build_skeleton, initial_conditions, leaf_records,
                        leaf_weight_sequence, prefix_view)

logger = logging.getLogger(__name__)

# default sizes of the verification runs
DEFAULT_GOLOMB_NMAX = 10**6
DEFAULT_A001650_NMAX = 10**4
DEFAULT_WEIGHT_NMAX = 5000
DEFAULT_TREE_NMAX = 2000
DEFAULT_CLOSED_NMAX = 20000
DEFAULT_REDUCTION_NMAX = 10000
DEFAULT_G1S1_NMAX = 10**5
DEFAULT_LEAF_PATH_NMAX = 3000
DEFAULT_SPECIALIZATION_NMAX = 2000
DEFAULT_ORACLE_CONFIGS = 20
DEFAULT_SEED = 1990

# known prefixes and tail labels for j=2, s=4, lambda=3
KNOT_PREFIX = [1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 5, 5, 7, 7, 9, 9, 9, 9, 9, 9, 9, 9, 9, 11]
TAIL_PREFIX = [1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 5, 5, 7, 7, 7, 9]
TAIL_LABELS = [17, 34, 57]

@dataclass(frozen=True)
class CheckResult:
    name: str
    params: str
    passed: bool
    detail: str = ""

    def __str__(self):
        return "%s  %-16s %-28s %s" % ("PASS" if self.passed else "FAIL", self.name, self.params, self.detail)

def _label(p, variant=None):
    res = "j=%i s=%i lambda=%i" % (p.j, p.s, p.lam)
    if variant is not None:
        res = "%s %s" % (variant.value, res)
    return res

def _first_mismatch(a, b):
    idx = np.flatnonzero(np.asarray(a) != np.asarray(b))
    return int(idx[0]) + 1 if len(idx) else None

def tree_recursion(variant, p, n_max):
    """
    Recursion run with the tree-derived initial conditions
    """
    return eval_golomb(p, initial_conditions(variant, p.j, p.s, p.lam), n_max)

def check_golomb_baseline(n_max):
    p = GolombParams(1, 0, 1)
    seq = eval_golomb(p, InitialConditions([1]), n_max)
    closed = cf.closed_sequence(1, 0, n_max, formula='golomb')
    bad = _first_mismatch(seq.values, closed.values)

    freq = complete_frequencies(seq)
    bad_freq = [v for v in freq.values() if freq[v] != v]
    passed = bad is None and not bad_freq
    return [CheckResult('golomb', 'n<=%i' % n_max, passed,
                        "" if passed else "first mismatch n=%s, frequencies %s" % (bad, bad_freq[:5]))]

def check_a001650(n_max):
    seq = eval_general(GeneralParams(1, 2, 0, 2), InitialConditions([1, 3, 3]), n_max)
    stats = analyze(seq)
    freq = complete_frequencies(seq)
    odd_runs = all(v % 2 == 1 and freq[v] == v for v in freq.values())
    passed = odd_runs and stats.is_monotone and not stats.is_slow
    return [CheckResult('a001650', 'n<=%i' % n_max, passed,
                        "max step %i" % stats.max_step)]

def check_known_prefixes():
    res = []
    knot = leaf_weight_sequence(TreeVariant.KNOT, 2, 4, 3, len(KNOT_PREFIX)).tolist()
    res.append(CheckResult('prefix', 'knot j=2 s=4 lambda=3', knot == KNOT_PREFIX))
    tail = leaf_weight_sequence(TreeVariant.TAIL, 2, 4, 3, len(TAIL_PREFIX)).tolist()
    res.append(CheckResult('prefix', 'tail j=2 s=4 lambda=3', tail == TAIL_PREFIX))

    labels = assign_labels(build_skeleton(TreeVariant.TAIL, 2, 3, 3), 4).tail_labels()
    found = [labels[i] for i in sorted(labels) if i >= 1]
    res.append(CheckResult('tail-labels', 'tail j=2 s=4 lambda=3', found == TAIL_LABELS, str(found)))
    return res

def check_leaf_weights(p, n_max):
    res = []
    for variant in TreeVariant:
        w = leaf_weight_sequence(variant, p.j, p.s, p.lam, n_max)
        try:
            g = tree_recursion(variant, p, n_max)
            bad = _first_mismatch(g.values, w.values)
        except EvalError as e:
            bad = e.at
        res.append(CheckResult('leaf-weights', _label(p, variant), bad is None,
                               "" if bad is None else "first mismatch n=%i" % bad))
    return res

def _evaluate(engine, params, init, n_max):
    try:
        return engine(params, init, n_max).tolist(), None
    except EvalError as e:
        return list(e.computed), e.at

def check_specialization(p, n_max):
    """
    The Golomb evaluator agrees with the general one at k=1, nu=lambda*j,
    including the index where both stop
    """
    res = []
    for variant in TreeVariant:
        init = initial_conditions(variant, p.j, p.s, p.lam)
        golomb = _evaluate(eval_golomb, p, init, n_max)
        general = _evaluate(eval_general, p.to_general(), init, n_max)
        res.append(CheckResult('specialization', _label(p, variant), golomb == general,
                               "" if golomb == general else "stops at %s vs %s" % (golomb[1], general[1])))
    return res

def check_variants(p, n_max):
    """
    Both leaf weight sequences share their values, coincide for lambda=1,
    and for lambda=1 every value is 1 mod j
    """
    res = []
    knot = leaf_weight_sequence(TreeVariant.KNOT, p.j, p.s, p.lam, n_max)
    tail = leaf_weight_sequence(TreeVariant.TAIL, p.j, p.s, p.lam, n_max)

    # values below both final values have complete runs in both prefixes
    common = min(knot[n_max], tail[n_max])
    knot_vals = {v for v in knot if v < common}
    tail_vals = {v for v in tail if v < common}
    res.append(CheckResult('value-sets', _label(p), knot_vals == tail_vals))

    if p.lam == 1:
        res.append(CheckResult('lambda1-collapse', _label(p), knot == tail))
        residue = bool(np.all((knot.values - 1) % p.j == 0))
        res.append(CheckResult('residue', _label(p), residue))
        if p.j >= 2:
            stats = analyze(knot)
            res.append(CheckResult('non-slow', _label(p), stats.is_monotone and not stats.is_slow))
    return res

def check_pruning(p, n_max):
    start = prune_threshold(p.j, p.s, p.lam) + 1
    report = verify_prune_identity(p.j, p.s, p.lam, range(start, n_max + 1))
    detail = "%i values of n" % len(report.checks)
    if not report.passed:
        detail = "failures at n=%s" % [c.n for c in report.failures[:5]]
    return [CheckResult('pruning', _label(p), report.passed, detail)]

def check_prune_52():
    """
    Pruning K(52) for j=2, s=4, lambda=3 yields K(31)
    """
    res = prune(prefix_view(TreeVariant.KNOT, 2, 4, 3, 52))
    return [CheckResult('pruning-52', 'j=2 s=4 lambda=3', res.d == 31,
                        "K(52) -> K(%i), %i labels removed" % (res.d, res.labels_removed))]

def check_frequencies(p, n_max):
    seq = tree_recursion(TreeVariant.KNOT, p, n_max)
    freq = complete_frequencies(seq)
    bad = [v for v in range(1, seq[n_max]) if freq[v] != cf.freq_lambda1(p.j, p.s, v)]
    return [CheckResult('frequencies', _label(p), not bad, "" if not bad else "values %s" % bad[:5])]

def check_closed_form(p, n_max):
    seq = tree_recursion(TreeVariant.KNOT, p, n_max)
    try:
        closed = cf.closed_sequence(p.j, p.s, n_max)
        bad = _first_mismatch(seq.values, closed.values)
        detail = "" if bad is None else "first mismatch n=%i" % bad
    except cf.FormulaInconsistency as e:
        bad, detail = -1, str(e)
    return [CheckResult('closed-form', _label(p), bad is None, detail)]

def check_reduction(p, n_max):
    red = cf.reduce_params(p.j, p.s)
    seq = tree_recursion(TreeVariant.KNOT, p, n_max)
    base = tree_recursion(TreeVariant.KNOT, GolombParams(p.j, red.r, 1), n_max + red.alpha)
    shifted = base.values[red.alpha:red.alpha + n_max] - red.q * p.j
    bad = _first_mismatch(seq.values, shifted)
    return [CheckResult('reduction', _label(p), bad is None,
                        "q=%i r=%i alpha=%i" % (red.q, red.r, red.alpha))]

def check_g1s1(s, n_max):
    p = GolombParams(1, s, 1)
    seq = tree_recursion(TreeVariant.KNOT, p, n_max)
    closed = cf.closed_sequence(1, s, n_max, formula='g1s1')
    passed = _first_mismatch(seq.values, closed.values) is None
    if s == 0:
        passed = passed and closed == cf.closed_sequence(1, 0, n_max, formula='golomb')
    return [CheckResult('g1s1', 's=%i n<=%i' % (s, n_max), passed)]

def check_leaf_paths(p, n_max):
    res = []
    for variant in TreeVariant:
        try:
            leaf_records(variant, p.j, p.s, p.lam, n_max, verify=True)
            passed = True
        except RuntimeError:
            passed = False
        res.append(CheckResult('leaf-paths', _label(p, variant), passed))
    return res

def random_configurations(seed, count):
    """
    Parameter / initial condition pairs for the memo-versus-naive oracle

    Single-term recursions use tree-derived initial values; recursions with
    two terms start from a string of ones and are kept short since the
    plain recursion is exponential there.
    """
    rng = np.random.default_rng(seed)
    configs = []
    for idx in range(count):
        if idx % 4 == 3:
            k, j, s = 2, int(rng.integers(1, 3)), int(rng.integers(0, 3))
            nu = int(rng.integers(0, 2))
            init = InitialConditions.ones(k * j + s + int(rng.integers(0, 3)))
            configs.append((GeneralParams(k, j, s, nu), init, 20))
        else:
            variant = TreeVariant.KNOT if rng.integers(0, 2) == 0 else TreeVariant.TAIL
            j, s, lam = int(rng.integers(1, 5)), int(rng.integers(0, 5)), int(rng.integers(1, 5))
            init = initial_conditions(variant, j, s, lam)
            configs.append((GolombParams(j, s, lam).to_general(), init, 60))
    return configs

def memo_matches_naive(params, init, n_max):
    """
    Compare eval_general with eval_naive up to n_max or the first failing index
    """
    try:
        memo = eval_general(params, init, n_max).tolist()
        fail_at = None
    except EvalError as e:
        memo = list(e.computed)
        fail_at = e.at

    for n, value in enumerate(memo, 1):
        if eval_naive(params, init, n) != value:
            return False

    if fail_at is not None:
        try:
            eval_naive(params, init, fail_at)
            return False
        except EvalError as e:
            return e.at == fail_at
    return True

def check_oracle(seed, count):
    res = []
    for params, init, n_max in random_configurations(seed, count):
        passed = memo_matches_naive(params, init, n_max)
        res.append(CheckResult('memo-oracle', "k=%i j=%i s=%i nu=%i" % (params.k, params.j, params.s, params.nu),
                               passed, "n<=%i" % n_max))
    return res

def _run_task(task):
    func, args = task
    return func(*args)

class Verifier:
    """
    Cross-verification of recursion, leaf weights and closed forms
    """
    def run(self, golomb_nmax=DEFAULT_GOLOMB_NMAX, a001650_nmax=DEFAULT_A001650_NMAX,
            weight_nmax=DEFAULT_WEIGHT_NMAX, tree_nmax=DEFAULT_TREE_NMAX,
            closed_nmax=DEFAULT_CLOSED_NMAX, reduction_nmax=DEFAULT_REDUCTION_NMAX,
            g1s1_nmax=DEFAULT_G1S1_NMAX, leaf_path_nmax=DEFAULT_LEAF_PATH_NMAX,
            specialization_nmax=DEFAULT_SPECIALIZATION_NMAX,
            oracle_configs=DEFAULT_ORACLE_CONFIGS, seed=DEFAULT_SEED,
            nproc=1, verbose=False):
        """
        Run every verification suite

        nproc:      number of worker processes for the grid cells
        verbose:    whether a line per check is printed

        Returns a dictionary with the overall verdict, the individual checks
        (in a fixed order regardless of nproc) and timing statistics.
        """
        time_stats = {}

        suites = [
            ('golomb', [(check_golomb_baseline, (golomb_nmax,))]),
            ('a001650', [(check_a001650, (a001650_nmax,))]),
            ('prefixes', [(check_known_prefixes, ())]),
            ('leaf-weights', [(check_leaf_weights, (p, weight_nmax)) for p in weight_grid()]),
            ('specialization', [(check_specialization, (p, specialization_nmax)) for p in weight_grid()]),
            ('variants', [(check_variants, (p, weight_nmax)) for p in weight_grid()]),
            ('pruning', [(check_prune_52, ())] +
                        [(check_pruning, (p, tree_nmax)) for p in tree_grid()]),
            ('frequencies', [(check_frequencies, (p, closed_nmax)) for p in lambda1_grid()]),
            ('closed-form', [(check_closed_form, (p, closed_nmax)) for p in lambda1_grid()]),
            ('reduction', [(check_reduction, (p, reduction_nmax)) for p in reduction_grid()]),
            ('g1s1', [(check_g1s1, (s, g1s1_nmax)) for s in range(0, 7)]),
            ('leaf-paths', [(check_leaf_paths, (p, leaf_path_nmax)) for p in tree_grid()]),
            ('oracle', [(check_oracle, (seed, oracle_configs))]),
        ]

        checks = []
        pool = multiprocessing.Pool(nproc) if nproc > 1 else None
        try:
            for name, tasks in suites:
                start = time.time()
                if pool is not None:
                    results = pool.map(_run_task, tasks)
                else:
                    results = [_run_task(task) for task in tasks]
                time_stats[name] = time.time() - start

                for result in results:
                    for check in result:
                        checks.append(check)
                        if not check.passed:
                            logger.warning("verification failed: %s", check)
                        if verbose:
                            print(check)

                logger.info("suite %s finished in %.2f s", name, time_stats[name])
        finally:
            if pool is not None:
                pool.close()
                pool.join()

        sol = {
            "passed": all(check.passed for check in checks),
            "checks": checks,
            "failures": [check for check in checks if not check.passed],
            "time_stats": time_stats,
        }

        return sol

def format_report(sol):
    """
    Text report with one line per check and a summary line
    """
    lines = [str(check) for check in sol['checks']]
    lines.append("%i checks, %i failures, %.1f s" % (len(sol['checks']), len(sol['failures']),
                                                     sum(sol['time_stats'].values())))
    return "\n".join(lines) + "\n"
