# -*- coding: utf-8 -*-

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

logger = logging.getLogger(__name__)

INT64_MIN = int(np.iinfo(np.int64).min)
INT64_MAX = int(np.iinfo(np.int64).max)

class Source(Enum):
    """
    Engine that produced a sequence buffer
    """
    RECURSION = 'recursion'
    TREE_WEIGHT = 'tree'
    CLOSED_FORM = 'closed'

class ErrorKind(Enum):
    ARGUMENT_OUT_OF_RANGE = 'argument out of range'
    OVERFLOW = 'overflow'

class EvalError(RuntimeError):
    """
    Raised when a term of a nested recursion cannot be evaluated

    kind:       ErrorKind
    at:         index n at which the evaluation failed
    inner:      offending nested argument (or the overflowing value)
    computed:   values R(1..at-1) that were assigned before the failure
    """
    def __init__(self, kind, at, inner, computed=()):
        self.kind = kind
        self.at = at
        self.inner = inner
        self.computed = tuple(computed)
        super().__init__("%s at n=%i (offending value %i)" % (kind.value, at, inner))

def check_int64(value, at):
    """
    Return value when it fits a signed 64 bit integer, raise otherwise
    """
    if value < INT64_MIN or value > INT64_MAX:
        raise EvalError(ErrorKind.OVERFLOW, at, value)
    return value

@dataclass(frozen=True)
class GeneralParams:
    """
    Parameters (k, j, s, nu) of R(n) = sum_i R(n-s-(i-1)j-R(n-ij)) + nu
    """
    k: int
    j: int
    s: int
    nu: int

    def __post_init__(self):
        if self.k < 1 or self.j < 1 or self.s < 0:
            raise ValueError("Invalid parameters k=%i, j=%i, s=%i: need k >= 1, j >= 1 and s >= 0"
                             % (self.k, self.j, self.s))

    def as_dict(self):
        return {'k': self.k, 'j': self.j, 's': self.s, 'nu': self.nu}

@dataclass(frozen=True)
class GolombParams:
    """
    Parameters (j, s, lambda) of g(n) = g(n - s - g(n-j)) + lambda*j
    """
    j: int
    s: int
    lam: int

    def __post_init__(self):
        if self.j < 1 or self.s < 0 or self.lam < 1:
            raise ValueError("Invalid parameters j=%i, s=%i, lambda=%i: need j >= 1, s >= 0 and lambda >= 1"
                             % (self.j, self.s, self.lam))

    def to_general(self):
        """
        The same recursion written as a member of the general family
        """
        return GeneralParams(k=1, j=self.j, s=self.s, nu=self.lam * self.j)

    def as_dict(self):
        return {'j': self.j, 's': self.s, 'lambda': self.lam}

class InitialConditions:
    """
    Immutable, 1-indexed list of initial values g(1)..g(L)
    """
    def __init__(self, _values):
        raw = tuple(_values)
        values = tuple(int(v) for v in raw)
        for i, (v, orig) in enumerate(zip(values, raw)):
            if v != orig:
                raise ValueError("Initial value %i is not an integer: %r" % (i + 1, orig))
        if len(values) < 1:
            raise ValueError("At least one initial value is required")
        for i, v in enumerate(values):
            check_int64(v, i + 1)
        self._values = values

    @classmethod
    def ones(cls, length):
        """
        A string of `length` consecutive ones
        """
        return cls([1] * length)

    @property
    def values(self):
        return self._values

    def __len__(self):
        return len(self._values)

    def __getitem__(self, n):
        if n < 1 or n > len(self._values):
            raise IndexError("initial condition index %i outside [1, %i]" % (n, len(self._values)))
        return self._values[n - 1]

    def __eq__(self, other):
        return isinstance(other, InitialConditions) and self._values == other._values

    def __hash__(self):
        return hash(self._values)

    def __str__(self):
        return "InitialConditions(%s)" % ",".join(str(v) for v in self._values)

class SequenceBuffer:
    """
    1-indexed finite prefix of an integer sequence together with the
    parameters and the engine that produced it
    """
    def __init__(self, _values, _params, _source):
        values = np.array(_values, dtype=np.int64)
        values.flags.writeable = False
        self.values = values
        self.params = _params
        self.source = _source

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        """
        Value at index n (1-based)
        """
        if n < 1 or n > len(self.values):
            raise IndexError("sequence index %i outside [1, %i]" % (n, len(self.values)))
        return int(self.values[n - 1])

    def __iter__(self):
        return (int(v) for v in self.values)

    def __eq__(self, other):
        if not isinstance(other, SequenceBuffer):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __str__(self):
        res = "SequenceBuffer; source=%s, params=%s, length=%i\n" % \
            (self.source.value, self.params, len(self))
        res += " " + " ".join(str(v) for v in self.values[:30])
        if len(self) > 30:
            res += " ..."
        return res + "\n"

    def tolist(self):
        return [int(v) for v in self.values]

    def head(self, n):
        """
        Buffer holding only the first n values
        """
        return SequenceBuffer(self.values[:n], self.params, self.source)

@dataclass
class FrequencyTable:
    """
    Number of occurrences of every value within the index range [1, N]
    """
    entries: dict = field(default_factory=dict)
    N: int = 0

    def __getitem__(self, value):
        return self.entries.get(value, 0)

    def values(self):
        return sorted(self.entries)

@dataclass
class SequenceStats:
    is_slow: bool
    is_monotone: bool
    max_step: int
    frequency: FrequencyTable

def _prefix(init, n_max):
    values = [0] * (n_max + 1)
    L = min(len(init), n_max)
    values[1:L + 1] = init.values[:L]
    return values, L

def eval_general(params, init, n_max):
    """
    Evaluate R(n) = sum_{i=1}^k R(n-s-(i-1)j-R(n-ij)) + nu for 1 <= n <= n_max

    params:     GeneralParams
    init:       InitialConditions, R(n) for n <= len(init)
    n_max:      number of terms

    Returns a SequenceBuffer; raises EvalError when a nested argument leaves
    [1, n-1] or a value does not fit a signed 64 bit integer.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive, got %i" % n_max)

    k, j, s, nu = params.k, params.j, params.s, params.nu
    R, L = _prefix(init, n_max)

    for n in range(L + 1, n_max + 1):
        total = nu
        for i in range(1, k + 1):
            a = n - i * j
            if a < 1:
                raise EvalError(ErrorKind.ARGUMENT_OUT_OF_RANGE, n, a, R[1:n])
            b = n - s - (i - 1) * j - R[a]
            if b < 1 or b > n - 1:
                raise EvalError(ErrorKind.ARGUMENT_OUT_OF_RANGE, n, b, R[1:n])
            total += R[b]
        if total < INT64_MIN or total > INT64_MAX:
            raise EvalError(ErrorKind.OVERFLOW, n, total, R[1:n])
        R[n] = total

    logger.debug("evaluated %i terms of the general recursion %s", n_max, params)
    return SequenceBuffer(R[1:], params, Source.RECURSION)

def eval_golomb(params, init, n_max):
    """
    Evaluate g(n) = g(n - s - g(n-j)) + lambda*j for 1 <= n <= n_max

    Same contract as eval_general with k=1 and nu=lambda*j; this is the
    single-term loop without the inner sum.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive, got %i" % n_max)

    j, s, step = params.j, params.s, params.lam * params.j
    g, L = _prefix(init, n_max)

    for n in range(L + 1, n_max + 1):
        a = n - j
        if a < 1:
            raise EvalError(ErrorKind.ARGUMENT_OUT_OF_RANGE, n, a, g[1:n])
        b = n - s - g[a]
        if b < 1 or b > n - 1:
            raise EvalError(ErrorKind.ARGUMENT_OUT_OF_RANGE, n, b, g[1:n])
        value = g[b] + step
        if value < INT64_MIN or value > INT64_MAX:
            raise EvalError(ErrorKind.OVERFLOW, n, value, g[1:n])
        g[n] = value

    logger.debug("evaluated %i terms of the Golomb recursion %s", n_max, params)
    return SequenceBuffer(g[1:], params, Source.RECURSION)

def eval_naive(params, init, n):
    """
    Evaluate R(n) by plain nested recursion without any memo

    Exponential in n; only meant as a reference for small instances.
    Accepts GeneralParams or GolombParams.
    """
    if isinstance(params, GolombParams):
        params = params.to_general()
    if n <= len(init):
        return init[n]

    total = params.nu
    for i in range(1, params.k + 1):
        a = n - i * params.j
        if a < 1:
            raise EvalError(ErrorKind.ARGUMENT_OUT_OF_RANGE, n, a)
        b = n - params.s - (i - 1) * params.j - eval_naive(params, init, a)
        if b < 1 or b > n - 1:
            raise EvalError(ErrorKind.ARGUMENT_OUT_OF_RANGE, n, b)
        total += eval_naive(params, init, b)
    return check_int64(total, n)

def frequency_table(seq):
    """
    Count every value of the buffer
    """
    counts = Counter(int(v) for v in seq.values)
    return FrequencyTable(dict(counts), len(seq))

def complete_frequencies(seq):
    """
    Frequency table of a monotone buffer restricted to the values whose run
    lies entirely inside the prefix (the value at the last index is dropped)
    """
    table = frequency_table(seq)
    if len(seq) > 0:
        table.entries.pop(seq[len(seq)], None)
        table.N = sum(table.entries.values())
    return table

def analyze(seq):
    """
    Slowness, monotonicity and step statistics of a non-empty buffer
    """
    if len(seq) < 1:
        raise ValueError("Cannot analyze an empty sequence")

    # object dtype: differences of int64 values can exceed the int64 range
    steps = np.diff(seq.values.astype(object))
    max_step = int(max(steps)) if len(steps) > 0 else 0
    is_monotone = all(d >= 0 for d in steps)
    is_slow = all(d in (0, 1) for d in steps)

    return SequenceStats(is_slow=is_slow,
                         is_monotone=is_monotone,
                         max_step=max_step,
                         frequency=frequency_table(seq))

def frequency_of(seq, value):
    """
    Number of occurrences of value in the buffer
    """
    return int(np.count_nonzero(seq.values == value))
