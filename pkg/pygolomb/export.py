# -*- coding: utf-8 -*-

import csv
import json

from .treemodel import NodeKind

def write_bfile(seq, f):
    """
    Write an OEIS b-file: one "n a(n)" line per term, n starting at 1
    """
    for n, value in enumerate(seq, 1):
        f.write("%i %i\n" % (n, value))

def read_bfile(f):
    """
    Read the values of a b-file; blank lines and lines starting with '#'
    are skipped and the indices must run 1, 2, 3, ...
    """
    values = []
    for line in f:
        line = line.strip()
        if not line or line.startswith('#'):
            continue

        fields = line.split()
        if len(fields) != 2:
            raise ValueError("Malformed b-file line: '%s'" % line)

        n, value = int(fields[0]), int(fields[1])
        if n != len(values) + 1:
            raise ValueError("Expected index %i in b-file, got %i" % (len(values) + 1, n))
        values.append(value)

    return values

def read_values(f):
    """
    Read initial values from a text file: either a b-file or a plain list
    of integers separated by whitespace and/or commas
    """
    text = f.read()
    lines = [l for l in text.splitlines() if l.strip() and not l.strip().startswith('#')]
    if lines and all(len(l.split()) == 2 and l.split()[0] == str(n)
                              for n, l in enumerate(lines, 1)):
        return read_bfile(lines)
    return [int(tok) for tok in text.replace(',', ' ').split()]

def write_plain(seq, f):
    f.write(" ".join(str(v) for v in seq) + "\n")

def write_csv(seq, f):
    writer = csv.writer(f, lineterminator='\n')
    writer.writerow(['n', 'value'])
    for n, value in enumerate(seq, 1):
        writer.writerow([n, value])

def to_json(seq, extra=None):
    """
    JSON document with the fields params, source and values
    """
    params = seq.params.as_dict()
    if extra:
        params.update(extra)
    return json.dumps({
        'params': params,
        'source': seq.source.value,
        'values': seq.tolist(),
    })

def _range_text(lo, hi):
    if hi < lo:
        return ""
    if hi == lo:
        return "%i" % lo
    return "%i–%i" % (lo, hi)

def tree_to_dot(tree, upto=None):
    """
    Graphviz description of a labeled tree

    Supernodes are boxes, every node shows its label range and knot and
    tail nodes carry an annotation. With `upto`, only the prefix K(upto)
    is drawn.
    """
    skel = tree.skeleton
    lines = ["digraph K {", "    node [shape=ellipse];"]

    shown = set()
    for v in range(len(skel)):
        lo, hi = int(tree.label_lo[v]), int(tree.label_hi[v])
        if upto is not None:
            if lo > upto:
                continue
            hi = min(hi, upto)
        shown.add(v)

        kind = skel.kinds[v]
        attrs = ['label="%s"' % _range_text(lo, hi)]
        if kind == NodeKind.SUPERNODE:
            attrs.insert(0, 'shape=box')
        elif kind == NodeKind.KNOT:
            attrs.append('xlabel="knot %i"' % skel.subtrees[v])
        elif kind == NodeKind.TAIL:
            attrs.append('xlabel="tail %i"' % skel.subtrees[v])
        elif kind == NodeKind.INITIAL_LEAF:
            attrs.append('xlabel="initial"')
        lines.append("    n%i [%s];" % (v, ", ".join(attrs)))

    for v in sorted(shown):
        parent = int(skel.parents[v])
        if parent >= 0 and parent in shown:
            lines.append("    n%i -> n%i;" % (parent, v))

    lines.append("}")
    return "\n".join(lines) + "\n"
