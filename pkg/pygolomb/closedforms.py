# -*- coding: utf-8 -*-

import math
from dataclasses import dataclass

import numpy as np

from .recurrence import GolombParams, SequenceBuffer, Source, check_int64

class FormulaInconsistency(RuntimeError):
    """
    A closed form produced a value that cannot be an integer solution
    """
    pass

@dataclass(frozen=True)
class ReducedParams:
    q: int
    r: int
    alpha: int

@dataclass(frozen=True)
class LeafPosition:
    m: int
    p_m: int

def isqrt_exact(x):
    """
    Floor square root of a non-negative integer and whether it is exact
    """
    if x < 0:
        raise ValueError("Square root of negative number %i" % x)
    root = math.isqrt(x)
    return root, root * root == x

def freq_lambda1(j, s, value):
    """
    Number of times `value` occurs in g_{j,s,1}
    """
    if value < 1:
        return 0
    return value + s if (value - 1) % j == 0 else 0

def p_m(j, s, m):
    """
    Label of leaf m+1: 1 + sum_{i=0}^{m} (s + i*j + 1)
    """
    if m < 0:
        raise ValueError("m must be non-negative, got %i" % m)
    value = 1 + (m + 1) * (s + 1) + j * m * (m + 1) // 2
    return LeafPosition(m, check_int64(value, m))

def F_of_iterative(j, s, n):
    """
    Largest p_m <= n (or 1) by walking through the leaf labels
    """
    best, m = 1, 0
    while True:
        p = p_m(j, s, m).p_m
        if p > n:
            return best
        best, m = p, m + 1

def F_of(j, s, n):
    """
    Largest p_m <= n, or 1 when n < p_0

    With x = m+1 the condition p_m <= n reads
    j*x^2 + (2s+2-j)*x + 2 - 2n <= 0; the positive root brackets x and at
    most a step or two of correction is needed.
    """
    if n < 1:
        raise ValueError("n must be positive, got %i" % n)

    b = 2 * s + 2 - j
    disc = b * b + 8 * j * (n - 1)
    x = max(0, (math.isqrt(disc) - b) // (2 * j))

    def p(x):
        return 1 + x * (s + 1) + j * x * (x - 1) // 2

    while p(x + 1) <= n:
        x += 1
    while x >= 1 and p(x) > n:
        x -= 1
    return p(x) if x >= 1 else 1

def g_closed_lambda1(j, s, n):
    """
    Closed form of g_{j,s,1}(n) through F(n)

    The discriminant (2s-j)^2 + 4(2jF + 2s + 1 - 3j) must be a perfect square
    and j-2s plus its root must be even; the value must be 1 mod j.
    """
    F = F_of(j, s, n)
    if F == 1:
        # labels before the first leaf of weight j
        return 1

    D = (2 * s - j) ** 2 + 4 * (2 * j * F + 2 * s + 1 - 3 * j)
    root, exact = isqrt_exact(D)
    if not exact:
        raise FormulaInconsistency("discriminant %i is not a perfect square (j=%i, s=%i, n=%i)" % (D, j, s, n))

    numerator = (j - 2 * s) + root
    if numerator % 2 != 0:
        raise FormulaInconsistency("odd numerator %i (j=%i, s=%i, n=%i)" % (numerator, j, s, n))

    g = numerator // 2
    if (g - 1) % j != 0:
        raise FormulaInconsistency("value %i is not 1 mod %i (s=%i, n=%i)" % (g, j, s, n))
    return g

def golomb_closed(n):
    """
    Golomb's sequence: floor((floor(sqrt(8n)) + 1) / 2)
    """
    if n < 1:
        raise ValueError("n must be positive, got %i" % n)
    root, _ = isqrt_exact(check_int64(8 * n, n))
    return (root + 1) // 2

def reduce_params(j, s):
    """
    Write s = q*j + r and alpha = sum_{i=0}^{q-1} (r + i*j + 1) so that
    g_{j,s,1}(n) = g_{j,r,1}(n + alpha) - q*j
    """
    if j < 1 or s < j:
        raise ValueError("Parameter reduction requires s >= j >= 1, got j=%i, s=%i" % (j, s))
    q, r = divmod(s, j)
    alpha = q * (r + 1) + j * q * (q - 1) // 2
    return ReducedParams(q, r, alpha)

def g_via_reduction(j, s, n):
    """
    g_{j,s,1}(n) evaluated as g_{j,r,1}(n + alpha) - q*j
    """
    red = reduce_params(j, s)
    return g_closed_lambda1(j, red.r, n + red.alpha) - red.q * j

def g_1s1_closed(s, n):
    """
    floor((floor(sqrt(8(n + C(s+1, 2)))) + 1) / 2) - s
    """
    if n < 1 or s < 0:
        raise ValueError("Need n >= 1 and s >= 0, got n=%i, s=%i" % (n, s))
    x = check_int64(8 * (n + s * (s + 1) // 2), n)
    root, _ = isqrt_exact(x)
    return (root + 1) // 2 - s

def run_lengths(j, s, count):
    """
    First `count` runs (value, multiplicity) of g_{j,s,1}:
    1^(s+1), (j+1)^(s+j+1), (2j+1)^(s+2j+1), ...
    """
    return [(m * j + 1, s + m * j + 1) for m in range(count)]

def closed_sequence(j, s, n_max, formula='general'):
    """
    Values 1..n_max of a lambda=1 closed form as a SequenceBuffer

    formula:    'general' (any j, s), 'golomb' (j=1, s=0), 'g1s1' (j=1)
                or 'reduced' (s >= j)
    """
    if formula == 'general':
        f = lambda n: g_closed_lambda1(j, s, n)
    elif formula == 'golomb':
        if (j, s) != (1, 0):
            raise ValueError("Golomb's formula needs j=1 and s=0")
        f = golomb_closed
    elif formula == 'g1s1':
        if j != 1:
            raise ValueError("The g_{1,s,1} formula needs j=1")
        f = lambda n: g_1s1_closed(s, n)
    elif formula == 'reduced':
        f = lambda n: g_via_reduction(j, s, n)
    else:
        raise ValueError("Unknown closed form '%s'" % formula)

    values = np.fromiter((f(n) for n in range(1, n_max + 1)), dtype=np.int64, count=n_max)
    return SequenceBuffer(values, GolombParams(j, s, 1), Source.CLOSED_FORM)
