# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import lru_cache

import numpy as np

from .recurrence import GolombParams, InitialConditions, SequenceBuffer, Source

logger = logging.getLogger(__name__)

# largest arena that build_skeleton is willing to allocate
MAX_NODES = 10**7

# parent / chain / depth entry of nodes that have none
NONE = -1

class TreeVariant(Enum):
    """
    KNOT: the tree with a knot node below every supernode
    TAIL: the alternative tree where the last chain ends in a tail node
    """
    KNOT = 'knot'
    TAIL = 'tail'

class NodeKind(IntEnum):
    INITIAL_LEAF = 0
    SUPERNODE = 1
    KNOT = 2
    REGULAR = 3
    TAIL = 4

@dataclass(frozen=True)
class LeafRecord:
    label: int
    weight: int
    ordinal: int

def subtree_label_count(j, s, lam, i):
    """
    Number of labels held by subtree i (the initial leaf is not counted)
    """
    return s + 1 + lam * i * j

def subtree_first_label(j, s, lam, i):
    """
    Smallest label that can occur in subtree i
    """
    return 2 + i * (s + 1) + lam * j * i * (i - 1) // 2

def chain_capacities(variant, j, lam, i):
    """
    Number of nodes in each of the lambda chains of subtree i
    """
    if variant is TreeVariant.KNOT:
        return (i * j,) * lam
    return (i * j,) * (lam - 1) + (i * j + 1,)

def subtree_containing(j, s, lam, label):
    """
    Index of the subtree that holds `label` (0 for the initial leaf)
    """
    i = 0
    while subtree_first_label(j, s, lam, i + 1) <= label:
        i += 1
    return i

class TreeSkeleton:
    """
    Arena holding subtrees 0..depth of the infinite tree plus the initial
    leaf; every node is a row in a set of numpy columns
    """
    def __init__(self, variant, j, lam, depth, kinds, parents, subtrees, chains, depths):
        self.variant = variant
        self.j = j
        self.lam = lam
        self.depth = depth
        self.kinds = kinds
        self.parents = parents
        self.subtrees = subtrees
        self.chains = chains
        self.depths = depths

        for col in (kinds, parents, subtrees, chains, depths):
            col.flags.writeable = False

    def __len__(self):
        return len(self.kinds)

    def __str__(self):
        return "TreeSkeleton; variant=%s, j=%i, lambda=%i, depth=%i, nodes=%i\n" % \
            (self.variant.value, self.j, self.lam, self.depth, len(self))

    @property
    def root(self):
        return 0

    def children(self):
        """
        Child lists of all nodes, each ordered by chain index
        """
        res = [[] for _ in range(len(self))]
        for node, parent in enumerate(self.parents):
            if parent != NONE:
                res[parent].append(node)
        for kids in res:
            kids.sort(key=lambda c: self.chains[c])
        return res

    def is_leaf(self):
        """
        Boolean column marking nodes without children
        """
        counts = np.bincount(self.parents[self.parents != NONE], minlength=len(self))
        return counts == 0

    def nodes_of_kind(self, kind):
        return np.flatnonzero(self.kinds == kind)

def build_skeleton(variant, j, lam, depth):
    """
    Build subtrees 0..depth of the tree for the given variant

    KNOT: subtree i is supernode -> knot node -> lambda chains of i*j nodes;
          subtree 0 is the supernode and its knot node, which is a leaf.
    TAIL: subtree i is supernode -> lambda chains of i*j nodes where the last
          chain carries one extra node, the tail node.
    """
    GolombParams(j, 0, lam)
    if depth < 0:
        raise ValueError("depth must be non-negative, got %i" % depth)

    total = 1 + sum(2 + lam * i * j for i in range(depth + 1))
    if total > MAX_NODES:
        raise ValueError("A tree of depth %i holds %i nodes which exceeds the limit of %i"
                         % (depth, total, MAX_NODES))

    kinds = np.empty(total, dtype=np.int8)
    parents = np.empty(total, dtype=np.int64)
    subtrees = np.empty(total, dtype=np.int64)
    chains = np.full(total, NONE, dtype=np.int64)
    depths = np.full(total, NONE, dtype=np.int64)

    count = 0
    def add(kind, parent, i, chain=NONE, d=NONE):
        nonlocal count
        kinds[count] = kind
        parents[count] = parent
        subtrees[count] = i
        chains[count] = chain
        depths[count] = d
        count += 1
        return count - 1

    prev = NONE
    for i in range(depth + 1):
        sup = add(NodeKind.SUPERNODE, prev, i)
        if i == 0:
            add(NodeKind.INITIAL_LEAF, sup, 0)

        if variant is TreeVariant.KNOT:
            knot = add(NodeKind.KNOT, sup, i)
            for c in range(1, lam + 1):
                parent = knot
                for d in range(1, i * j + 1):
                    parent = add(NodeKind.REGULAR, parent, i, c, d)
        else:
            for c, length in enumerate(chain_capacities(variant, j, lam, i), 1):
                parent = sup
                for d in range(1, length + 1):
                    kind = NodeKind.TAIL if (c == lam and d == length) else NodeKind.REGULAR
                    parent = add(kind, parent, i, c, d)
        prev = sup

    logger.debug("built %s skeleton with %i nodes", variant.value, total)
    return TreeSkeleton(variant, j, lam, depth, kinds, parents, subtrees, chains, depths)

def traversal_order(skel):
    """
    Node visiting order used for labeling

    Subtree 0 starts at the initial leaf, then its supernode; every subtree
    then visits its supernode, the knot node and the chains root to leaf in
    chain order, before moving on to the next supernode.
    """
    children = skel.children()
    order = []
    sup = skel.root
    while sup != NONE:
        kids = children[sup]
        order.extend(c for c in kids if skel.kinds[c] == NodeKind.INITIAL_LEAF)
        order.append(sup)

        stack = [c for c in reversed(kids) if skel.kinds[c] not in (NodeKind.INITIAL_LEAF, NodeKind.SUPERNODE)]
        while stack:
            node = stack.pop()
            order.append(node)
            stack.extend(reversed(children[node]))

        nxt = [c for c in kids if skel.kinds[c] == NodeKind.SUPERNODE]
        sup = nxt[0] if nxt else NONE
    return order

class LabeledTree:
    """
    Skeleton with a contiguous label range per node

    label_lo[v] .. label_hi[v] is the range of node v; an empty range
    (label_hi = label_lo - 1) only occurs for supernodes when s = 0.
    """
    def __init__(self, skeleton, s, label_lo, label_hi):
        self.skeleton = skeleton
        self.s = s
        self.label_lo = label_lo
        self.label_hi = label_hi
        self.total_labels = int(label_hi.max()) if len(label_hi) else 0

    def __str__(self):
        return "LabeledTree; variant=%s, j=%i, s=%i, lambda=%i, labels=%i\n" % \
            (self.skeleton.variant.value, self.skeleton.j, self.s, self.skeleton.lam, self.total_labels)

    @property
    def variant(self):
        return self.skeleton.variant

    def label_range(self, node):
        return range(int(self.label_lo[node]), int(self.label_hi[node]) + 1)

    def node_of_label(self, label):
        """
        Arena index of the node that holds `label`
        """
        hits = np.flatnonzero((self.label_lo <= label) & (self.label_hi >= label))
        if len(hits) == 0:
            raise KeyError("label %i is not present in the tree" % label)
        return int(hits[0])

    def leaves(self, label_limit=None):
        """
        Leaves of the infinite tree, ordered by label
        """
        skel = self.skeleton
        nodes = np.flatnonzero(skel.is_leaf())
        nodes = nodes[np.argsort(self.label_lo[nodes])]
        res = []
        for node in nodes:
            label = int(self.label_lo[node])
            if label_limit is not None and label > label_limit:
                break
            weight = 1 if skel.kinds[node] == NodeKind.INITIAL_LEAF else skel.j
            res.append(LeafRecord(label, weight, len(res)))
        return res

    def tail_labels(self):
        """
        Labels of the tail nodes per subtree index
        """
        nodes = self.skeleton.nodes_of_kind(NodeKind.TAIL)
        return {int(self.skeleton.subtrees[v]): int(self.label_lo[v]) for v in nodes}

def assign_labels(skel, s):
    """
    Insert the labels 1, 2, 3, ... in traversal order: s labels in every
    supernode, one label in every other node
    """
    if s < 0:
        raise ValueError("s must be non-negative, got %i" % s)

    label_lo = np.zeros(len(skel), dtype=np.int64)
    label_hi = np.zeros(len(skel), dtype=np.int64)

    nxt = 1
    for node in traversal_order(skel):
        width = s if skel.kinds[node] == NodeKind.SUPERNODE else 1
        label_lo[node] = nxt
        label_hi[node] = nxt + width - 1
        nxt += width

    label_lo.flags.writeable = False
    label_hi.flags.writeable = False
    return LabeledTree(skel, s, label_lo, label_hi)

def build_labeled_tree(variant, j, s, lam, label_limit):
    """
    Smallest labeled tree that holds every label up to label_limit
    """
    depth = subtree_containing(j, s, lam, label_limit)
    return assign_labels(build_skeleton(variant, j, lam, depth), s)

def leaf_labels(variant, j, s, lam):
    """
    Labels of the leaves of the infinite tree in increasing order
    (an infinite generator)
    """
    yield 1
    yield s + 2
    i = 1
    while True:
        start = subtree_first_label(j, s, lam, i)
        if variant is TreeVariant.KNOT:
            base = start + s
            for c in range(1, lam + 1):
                yield base + c * i * j
        else:
            base = start + s - 1
            for c in range(1, lam):
                yield base + c * i * j
            yield base + lam * i * j + 1
        i += 1

def leaf_records_structural(variant, j, s, lam, label_limit):
    """
    Leaves with label <= label_limit enumerated from an explicit tree
    """
    return build_labeled_tree(variant, j, s, lam, label_limit).leaves(label_limit)

def leaf_records(variant, j, s, lam, label_limit, verify=False):
    """
    Leaves of the infinite tree with label <= label_limit, in label order

    The labels follow from the label counts per subtree; with verify=True
    the list is compared against the enumeration from an explicit tree.
    """
    GolombParams(j, s, lam)
    if label_limit < 1:
        raise ValueError("label_limit must be positive, got %i" % label_limit)

    res = []
    for label in leaf_labels(variant, j, s, lam):
        if label > label_limit:
            break
        res.append(LeafRecord(label, 1 if not res else j, len(res)))

    if verify:
        structural = leaf_records_structural(variant, j, s, lam, label_limit)
        if structural != res:
            raise RuntimeError("Arithmetic and structural leaf enumeration disagree for %s j=%i s=%i lambda=%i"
                               % (variant.value, j, s, lam))
    return res

def leaf_weight_sequence(variant, j, s, lam, n_max):
    """
    w(n) = total weight of the leaves with label <= n, for 1 <= n <= n_max
    """
    if n_max < 1:
        raise ValueError("n_max must be positive, got %i" % n_max)

    weights = np.zeros(n_max + 1, dtype=np.int64)
    for rec in leaf_records(variant, j, s, lam, n_max):
        weights[rec.label] += rec.weight

    return SequenceBuffer(np.cumsum(weights)[1:], GolombParams(j, s, lam), Source.TREE_WEIGHT)

def initial_condition_length(j, s, lam):
    """
    Number of labels in subtrees 0 and 1 together with the initial leaf
    """
    return 3 + 2 * s + lam * j

def initial_conditions(variant, j, s, lam):
    """
    Tree-derived initial conditions w(1)..w(3+2s+lambda*j)
    """
    L = initial_condition_length(j, s, lam)
    return InitialConditions(leaf_weight_sequence(variant, j, s, lam, L).tolist())

@dataclass(frozen=True)
class SubtreeShape:
    """
    Portion of subtree `index` present in a prefix of the tree

    chains holds the number of labels present in each of the lambda chains;
    capacities the number of nodes of the complete chains.
    """
    variant: TreeVariant
    index: int
    supernode_labels: int
    supernode_capacity: int
    knot: bool
    chains: tuple
    capacities: tuple

    @property
    def num_labels(self):
        return self.supernode_labels + int(self.knot) + sum(self.chains)

    @property
    def is_complete(self):
        has_knot = self.knot or self.variant is TreeVariant.TAIL
        return self.supernode_labels == self.supernode_capacity and has_knot and \
            self.chains == self.capacities

    @property
    def present_chains(self):
        return sum(1 for c in self.chains if c > 0)

    @property
    def whole_chains(self):
        return sum(1 for c, cap in zip(self.chains, self.capacities) if cap > 0 and c == cap)

    def leaf_weight(self, j):
        """
        Total weight of the leaves of the infinite tree inside this portion
        """
        weight = 0
        if self.knot and not any(self.capacities):
            weight += j
        weight += j * self.whole_chains
        return weight

@lru_cache(maxsize=65536)
def subtree_shape(variant, j, s, lam, i, labels):
    """
    Portion of subtree i holding its first `labels` labels in traversal order
    """
    caps = chain_capacities(variant, j, lam, i)
    sup = min(labels, s)
    rest = labels - sup

    knot = False
    if variant is TreeVariant.KNOT and rest > 0:
        knot = True
        rest -= 1

    chains = []
    for cap in caps:
        take = min(cap, rest)
        chains.append(take)
        rest -= take

    if rest > 0:
        raise ValueError("subtree %i holds fewer than %i labels" % (i, labels))
    return SubtreeShape(variant, i, sup, s, knot, tuple(chains), caps)

def _strip_empty(shapes):
    shapes = list(shapes)
    while len(shapes) > 1 and shapes[-1].num_labels == 0:
        shapes.pop()
    return tuple(shapes)

@dataclass(frozen=True)
class PrefixView:
    """
    The subtree K(n) of all nodes holding labels <= n, decomposed into
    complete subtrees 0..m-1 and the partial subtree m
    """
    variant: TreeVariant
    j: int
    s: int
    lam: int
    n: int
    subtrees: tuple

    @classmethod
    def from_shapes(cls, variant, j, s, lam, shapes):
        """
        Relabel a sequence of subtree portions in traversal order
        """
        shapes = _strip_empty(shapes)
        n = 1 + sum(shape.num_labels for shape in shapes)
        return cls(variant, j, s, lam, n, shapes)

    @property
    def m(self):
        return len(self.subtrees) - 1

    @property
    def complete_subtrees(self):
        return self.subtrees[:-1]

    @property
    def partial(self):
        return self.subtrees[-1]

    @property
    def incomplete(self):
        return not self.partial.is_complete

    def leaf_weight(self):
        """
        Total weight of the leaves of the infinite tree in K(n)
        """
        return 1 + sum(shape.leaf_weight(self.j) for shape in self.subtrees)

    def label_map(self):
        """
        Label ranges (part, subtree, chain, first, last) in traversal order
        """
        entries = [('initial', 0, 0, 1, 1)]
        nxt = 2
        for shape in self.subtrees:
            if shape.supernode_labels:
                entries.append(('supernode', shape.index, 0, nxt, nxt + shape.supernode_labels - 1))
                nxt += shape.supernode_labels
            if shape.knot:
                entries.append(('knot', shape.index, 0, nxt, nxt))
                nxt += 1
            for c, count in enumerate(shape.chains, 1):
                if count:
                    entries.append(('chain', shape.index, c, nxt, nxt + count - 1))
                    nxt += count
        return tuple(entries)

    def __str__(self):
        res = "K(%i); variant=%s, j=%i, s=%i, lambda=%i, m=%i%s\n" % \
            (self.n, self.variant.value, self.j, self.s, self.lam, self.m,
             ", incomplete" if self.incomplete else "")
        for shape in self.subtrees:
            res += " %02i | supernode %i/%i%s chains %s\n" % \
                (shape.index, shape.supernode_labels, shape.supernode_capacity,
                 " knot" if shape.knot else "", list(shape.chains))
        return res

def prefix_view(variant, j, s, lam, n):
    """
    Decompose K(n) into complete subtrees and the partial subtree
    """
    GolombParams(j, s, lam)
    if n < 1:
        raise ValueError("n must be positive, got %i" % n)

    shapes = []
    remaining = n - 1
    i = 0
    while remaining > 0:
        take = min(subtree_label_count(j, s, lam, i), remaining)
        shapes.append(subtree_shape(variant, j, s, lam, i, take))
        remaining -= take
        i += 1

    if not shapes:
        shapes.append(subtree_shape(variant, j, s, lam, 0, 0))
    return PrefixView(variant, j, s, lam, n, tuple(shapes))

def prefix_view_from_tree(tree, n):
    """
    Build K(n) by scanning the nodes of an explicit labeled tree
    """
    skel = tree.skeleton
    if n < 1 or n > tree.total_labels:
        raise ValueError("label %i is outside the labeled tree (1..%i)" % (n, tree.total_labels))

    shapes = []
    for i in range(skel.depth + 1):
        nodes = np.flatnonzero(skel.subtrees == i)
        sup = knot = 0
        chains = [0] * skel.lam
        caps = [0] * skel.lam
        for v in nodes:
            kind = skel.kinds[v]
            lo, hi = int(tree.label_lo[v]), int(tree.label_hi[v])
            if kind == NodeKind.SUPERNODE:
                sup = max(0, min(hi, n) - lo + 1)
            elif kind == NodeKind.KNOT:
                knot = int(lo <= n)
            elif kind in (NodeKind.REGULAR, NodeKind.TAIL):
                c = int(skel.chains[v]) - 1
                caps[c] += 1
                chains[c] += int(lo <= n)
        shapes.append(SubtreeShape(skel.variant, i, sup, tree.s, bool(knot), tuple(chains), tuple(caps)))

    return PrefixView(skel.variant, skel.j, tree.s, skel.lam, n, _strip_empty(shapes))
