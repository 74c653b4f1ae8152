"""Encoding for arbitrary arrays: a run bitmap stored by combinadic rank
plus the colored encoding of the run-compressed array.

Payload approaches log2(13) * n bits; queries on original indices are
routed through the run index maps.
"""

import math
from math import comb

from .arrays import (RunStructure, compute_runs, map_answer_to_original,
                     map_query_index)
from .bitio import BitStream, subset_rank, subset_rank_width, subset_unrank
from .colored import decode_colored, encode_colored
from .errors import CorruptionError, RangeError
from .queries import TREE_QUERIES
from .trees import build_max_heap, build_min_heap, colorize

LOG2_13 = math.log2(13)


class GeneralEncoding:
    """Run bitmap rank plus the colored encoding of the reduced array."""

    __slots__ = ("n", "k", "c_rank_bits", "colored")

    def __init__(self, n, k, c_rank_bits, colored):
        if not 0 <= k <= max(n - 1, 0):
            raise CorruptionError("run count k out of range")
        if len(c_rank_bits) != subset_rank_width(n - 1, k):
            raise CorruptionError("c rank segment has wrong width")
        if colored.n != n - k:
            raise CorruptionError("colored part must cover n-k elements")
        self.n = n
        self.k = k
        self.c_rank_bits = c_rank_bits
        self.colored = colored

    def __eq__(self, other):
        return (isinstance(other, GeneralEncoding) and self.n == other.n
                and self.k == other.k and self.c_rank_bits == other.c_rank_bits
                and self.colored == other.colored)

    def payload_bits(self):
        return len(self.c_rank_bits) + self.colored.payload_bits()


def encode_general(a):
    """Encode any array: runs first, then the reduced array's colored pair."""
    rs = compute_runs(a)
    ones = [i - 1 for i in range(1, a.n) if rs.c_bits[i - 1] == 1]
    k, rank = subset_rank(ones, a.n - 1)
    width = subset_rank_width(a.n - 1, k)
    c_rank_bits = BitStream()
    c_rank_bits.write_uint(rank, width)
    reduced = rs.reduced_array()
    min_t = build_min_heap(reduced)
    max_t = build_max_heap(reduced)
    colored = encode_colored(colorize(min_t, reduced), colorize(max_t, reduced))
    return GeneralEncoding(a.n, k, c_rank_bits, colored)


class GeneralQueryStructure:
    """Answers all four queries on original indices, without the array."""

    __slots__ = ("runs", "cmin", "cmax")

    def __init__(self, runs, cmin, cmax):
        self.runs = runs
        self.cmin = cmin
        self.cmax = cmax

    @property
    def n(self):
        return self.runs.n

    def query(self, kind, i):
        if not 1 <= i <= self.runs.n:
            raise RangeError("index %d out of range 1..%d" % (i, self.runs.n))
        ip = map_query_index(self.runs, i)
        tree = self.cmin if kind in ("psv", "nsv") else self.cmax
        jp = TREE_QUERIES[kind](tree, ip)
        return map_answer_to_original(self.runs, jp, kind)

    def psv(self, i):
        return self.query("psv", i)

    def plv(self, i):
        return self.query("plv", i)

    def nsv(self, i):
        return self.query("nsv", i)

    def nlv(self, i):
        return self.query("nlv", i)


def decode_general(enc):
    """Materialize the run structure and both colored trees for querying."""
    enc.c_rank_bits.reset()
    width = subset_rank_width(enc.n - 1, enc.k)
    rank = enc.c_rank_bits.read_uint(width)
    if not enc.c_rank_bits.at_end():
        raise CorruptionError("trailing bits after subset rank")
    ones = subset_unrank(enc.k, rank, enc.n - 1)
    c_bits = [0] * (enc.n - 1)
    for p in ones:
        c_bits[p] = 1
    runs = RunStructure(c_bits, enc.n)
    cmin, cmax = decode_colored(enc.colored)
    return GeneralQueryStructure(runs, cmin, cmax)


def check_subset_coding_inequality(c, n, k, tol_per_n=1e-6):
    """Verify c(n-k) + log2 C(n,k) <= log2(2^c + 1) * n within tol * n."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError("need n >= 1 and 0 <= k <= n")
    if c <= 0:
        raise ValueError("c must be positive")
    lhs = c * (n - k) + math.log2(comb(n, k))
    rhs = math.log2(2 ** c + 1) * n
    return lhs <= rhs + tol_per_n * n
