"""Randomized and exhaustive self-checks: encode, decode, query against
the brute-force oracles, and verify every structural invariant.

Deterministic per seed; used by both the CLI and the test suite.
"""

import itertools
import math
import random

from .arrays import ORACLES, QUERY_KINDS, ValueArray, compute_runs
from .colored import (colored_size_bound, count_good_bad, decode_colored,
                      encode_colored)
from .container import deserialize, serialize
from .general import LOG2_13, decode_general, encode_general
from .joint import decode_joint, encode_joint
from .queries import TREE_QUERIES, plv_from_tree, psv_from_tree
from .trees import (build_max_heap, build_min_heap, check_leaf_internal_duality, check_red_leaf_rule,
                    check_preorder_labels, check_sibling_monotonicity, colorize)

DISTRIBUTIONS = ("distinct", "alphabet", "runs")


def random_array(rng, max_n, alphabet, dist):
    n = rng.randint(1, max_n)
    if dist == "distinct":
        values = rng.sample(range(10 * n + 1), n)
    elif dist == "alphabet":
        values = [rng.randint(1, alphabet) for _ in range(n)]
    else:  # long runs
        values = []
        while len(values) < n:
            values.extend([rng.randint(1, alphabet)] * rng.randint(1, max(2, n // 4)))
        values = values[:n]
    return ValueArray(values)


def all_arrays(max_n, alphabet):
    for n in range(1, max_n + 1):
        for combo in itertools.product(range(1, alphabet + 1), repeat=n):
            yield ValueArray(combo)


def general_payload_bound(n):
    return LOG2_13 * n + 2 * math.ceil(math.log2(max(n, 2))) + 96


def colored_payload_bound(n):
    return 3.586 * n + 70


def check_array(a):
    """Run every check on one array; returns a list of failure messages."""
    failures = []
    min_t = build_min_heap(a)
    max_t = build_max_heap(a)
    cmin = colorize(min_t, a)
    cmax = colorize(max_t, a)

    for tree, kind in ((min_t, "min"), (max_t, "max")):
        if not check_preorder_labels(tree):
            failures.append("preorder labels broken in %s heap" % kind)
        if not check_sibling_monotonicity(tree, a, kind):
            failures.append("sibling monotonicity broken in %s heap" % kind)

    no_equal_runs = a.has_consecutive_equal() is None
    if no_equal_runs:
        if check_leaf_internal_duality(min_t, max_t) is not None:
            failures.append("leaf/internal duality violated")
        if not (check_red_leaf_rule(cmin) and check_red_leaf_rule(cmax)):
            failures.append("red-leaf rule violated")
        g, b = count_good_bad(min_t, max_t)
        if g != b:
            failures.append("good count %d != bad count %d" % (g, b))

        joint = encode_joint(min_t, max_t)
        if joint.payload_bits() != 3 * a.n - 1:
            failures.append("joint payload is not 3n-1 bits")
        dmin, dmax = decode_joint(joint)
        if dmin != min_t or dmax != max_t:
            failures.append("joint decode does not round-trip")
        if encode_joint(dmin, dmax) != joint:
            failures.append("joint re-encode differs")
        for i in range(1, a.n + 1):
            if psv_from_tree(colorize(dmin, a), i) != ORACLES["psv"](a, i):
                failures.append("joint psv mismatch at %d" % i)
                break
            if plv_from_tree(colorize(dmax, a), i) != ORACLES["plv"](a, i):
                failures.append("joint plv mismatch at %d" % i)
                break
        data = serialize(joint)
        if serialize(deserialize(data)) != data:
            failures.append("joint container round-trip differs")

        colored = encode_colored(cmin, cmax)
        if colored.payload_bits() > colored_payload_bound(a.n):
            failures.append("colored payload exceeds bound")
        ccmin, ccmax = decode_colored(colored)
        if ccmin != cmin or ccmax != cmax:
            failures.append("colored decode does not round-trip")
        if encode_colored(ccmin, ccmax) != colored:
            failures.append("colored re-encode differs")
        data = serialize(colored)
        if serialize(deserialize(data)) != data:
            failures.append("colored container round-trip differs")
        for kind in QUERY_KINDS:
            tree = ccmin if kind in ("psv", "nsv") else ccmax
            for i in range(1, a.n + 1):
                if TREE_QUERIES[kind](tree, i) != ORACLES[kind](a, i):
                    failures.append("colored %s mismatch at %d" % (kind, i))
                    break

    general = encode_general(a)
    if general.payload_bits() > general_payload_bound(a.n):
        failures.append("general payload exceeds bound")
    qs = decode_general(general)
    reduced = compute_runs(a).reduced_array()
    if reduced.has_consecutive_equal() is not None:
        failures.append("reduced array still has equal neighbours")
    if encode_general(a) != general:
        failures.append("general encode is not deterministic")
    data = serialize(general)
    if serialize(deserialize(data)) != data:
        failures.append("general container round-trip differs")
    for kind in QUERY_KINDS:
        for i in range(1, a.n + 1):
            if qs.query(kind, i) != ORACLES[kind](a, i):
                failures.append("general %s mismatch at %d" % (kind, i))
                break
    return failures


def shrink(values, fails):
    """Greedy minimization: drop elements, then shrink values, while the
    failure predicate keeps holding."""
    values = list(values)
    changed = True
    while changed and len(values) > 1:
        changed = False
        for i in range(len(values)):
            candidate = values[:i] + values[i + 1:]
            if candidate and fails(candidate):
                values = candidate
                changed = True
                break
    for i, v in enumerate(values):
        for smaller in (0, 1):
            if v > smaller:
                candidate = values[:i] + [smaller] + values[i + 1:]
                if fails(candidate):
                    values[i] = smaller
                    break
    return values


class FuzzReport:
    __slots__ = ("arrays_checked", "failures", "reproducer")

    def __init__(self):
        self.arrays_checked = 0
        self.failures = []
        self.reproducer = None

    @property
    def ok(self):
        return not self.failures


def run_fuzz(count, max_n, alphabet, seed, exhaustive=False, log=None):
    """Fuzz ``count`` random arrays (or every array up to max_n when
    exhaustive); deterministic per seed."""
    report = FuzzReport()
    if exhaustive:
        arrays = all_arrays(max_n, alphabet)
    else:
        rng = random.Random(seed)
        arrays = (random_array(rng, max_n, alphabet,
                               DISTRIBUTIONS[i % len(DISTRIBUTIONS)])
                  for i in range(count))
    for a in arrays:
        failures = check_array(a)
        report.arrays_checked += 1
        if failures:
            small = shrink(list(a.values),
                           lambda vs: bool(check_array(ValueArray(vs))))
            report.failures = failures
            report.reproducer = small
            if log:
                log("FAIL on %r: %s" % (list(a.values), "; ".join(failures)))
                log("minimized reproducer: %r" % (small,))
            return report
    if log:
        log("%d arrays checked, 0 failures" % report.arrays_checked)
    return report
