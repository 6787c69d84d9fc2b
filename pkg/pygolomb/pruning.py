# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass, field
from enum import IntEnum
from functools import lru_cache

from .treemodel import (PrefixView, SubtreeShape, TreeVariant, chain_capacities,
                        initial_condition_length, leaf_weight_sequence, prefix_view)

logger = logging.getLogger(__name__)

class PruneCase(IntEnum):
    """
    Rule applied to the partial subtree
    """
    MULTI_CHAIN = 1     # at least two chains below the knot node
    SINGLE_CHAIN = 2    # fewer than two chains, at least j labels
    UNCHANGED = 3       # fewer than j labels

@dataclass(frozen=True)
class PruneResult:
    result: PrefixView
    labels_removed: int
    d: int
    weight_drop: int
    case: PruneCase

def prune_threshold(j, s, lam):
    """
    Pruning applies to K(n) for n above this value
    """
    return initial_condition_length(j, s, lam)

@lru_cache(maxsize=65536)
def _shrink_complete(shape, j):
    """
    Delete the j largest labels of every chain of a complete subtree i,
    which leaves a complete subtree i-1
    """
    i = shape.index - 1
    return SubtreeShape(shape.variant, i, shape.supernode_labels, shape.supernode_capacity, shape.knot,
                        tuple(c - j for c in shape.chains), chain_capacities(shape.variant, j, len(shape.chains), i))

def _shrink_partial(shape, j):
    sup, knot, chains = shape.supernode_labels, shape.knot, list(shape.chains)

    if shape.present_chains >= 2:
        case = PruneCase.MULTI_CHAIN
        chains = [c - j if c >= j else c for c in chains]
    elif shape.num_labels >= j:
        case = PruneCase.SINGLE_CHAIN
        drop = j
        for c in reversed(range(len(chains))):
            take = min(chains[c], drop)
            chains[c] -= take
            drop -= take
        if drop and knot:
            knot = False
            drop -= 1
        sup -= drop
    else:
        case = PruneCase.UNCHANGED

    i = shape.index - 1
    shrunk = SubtreeShape(shape.variant, i, sup, shape.supernode_capacity, knot, tuple(chains),
                          chain_capacities(shape.variant, j, len(chains), i))
    return shrunk, case

def prune(view):
    """
    Apply the pruning operation to K(n)

    Removes subtree 0 apart from the initial leaf, deletes the j largest
    labels of every chain of the complete subtrees 1..m-1, shrinks the partial
    subtree according to its PruneCase and relabels the remainder, which is
    attached to the initial leaf again.
    """
    if view.variant is not TreeVariant.KNOT:
        raise ValueError("Pruning is only defined for the knot variant")

    j, s, lam = view.j, view.s, view.lam
    threshold = prune_threshold(j, s, lam)
    if view.n <= threshold:
        raise ValueError("Pruning K(%i) requires n > %i for j=%i, s=%i, lambda=%i"
                         % (view.n, threshold, j, s, lam))

    shapes = [_shrink_complete(shape, j) for shape in view.complete_subtrees[1:]]
    partial, case = _shrink_partial(view.partial, j)
    shapes.append(partial)

    result = PrefixView.from_shapes(view.variant, j, s, lam, shapes)
    return PruneResult(result=result,
                       labels_removed=view.n - result.n,
                       d=result.n,
                       weight_drop=view.leaf_weight() - result.leaf_weight(),
                       case=case)

def prune_to_base(view):
    """
    Prune repeatedly until n no longer exceeds the threshold; returns the
    sequence of cutoffs starting with view.n
    """
    cutoffs = [view.n]
    threshold = prune_threshold(view.j, view.s, view.lam)
    while view.n > threshold:
        view = prune(view).result
        cutoffs.append(view.n)
    return cutoffs

def structurally_equal(a, b):
    """
    Whether two prefix views have the same decomposition and labels
    """
    if (a.variant, a.j, a.s, a.lam) != (b.variant, b.j, b.s, b.lam):
        return False
    return a.n == b.n and a.m == b.m and a.subtrees == b.subtrees and \
        a.label_map() == b.label_map()

@dataclass(frozen=True)
class PruneCheck:
    n: int
    d_structural: int
    d_formula: int
    weight_drop: int
    passed: bool

@dataclass
class PruneReport:
    j: int
    s: int
    lam: int
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def find(self, n):
        for check in self.checks:
            if check.n == n:
                return check
        return None

    def __str__(self):
        res = "Pruning j=%i, s=%i, lambda=%i: %i checks, %i failures\n" % \
            (self.j, self.s, self.lam, len(self.checks), len(self.failures))
        for check in self.failures:
            res += " n=%i d_structural=%i d_formula=%i weight_drop=%i\n" % \
                (check.n, check.d_structural, check.d_formula, check.weight_drop)
        return res

def verify_prune_identity(j, s, lam, n_range):
    """
    Check for every n in n_range that pruning K(n) yields K(n-s-w(n-j)) and
    lowers the leaf weight by lambda*j; failures are reported, not raised
    """
    ns = list(n_range)
    threshold = prune_threshold(j, s, lam)
    below = [n for n in ns if n <= threshold]
    if below:
        raise ValueError("Pruning requires n > %i, got n=%i" % (threshold, below[0]))

    report = PruneReport(j, s, lam)
    if not ns:
        return report

    w = leaf_weight_sequence(TreeVariant.KNOT, j, s, lam, max(ns))
    drop = lam * j
    for n in ns:
        res = prune(prefix_view(TreeVariant.KNOT, j, s, lam, n))
        d_formula = n - s - w[n - j]
        passed = d_formula >= 1 and res.d == d_formula and res.weight_drop == drop and \
            w[n] - w[d_formula] == drop and \
            structurally_equal(res.result, prefix_view(TreeVariant.KNOT, j, s, lam, d_formula))
        if not passed:
            logger.warning("pruning K(%i) for j=%i, s=%i, lambda=%i gave d=%i, expected %i",
                           n, j, s, lam, res.d, d_formula)
        report.checks.append(PruneCheck(n, res.d, d_formula, res.weight_drop, passed))

    return report
