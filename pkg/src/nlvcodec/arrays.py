"""Input arrays, brute-force query oracles, and the run-compression reduction.

Indices are 1-based at the API boundary.  Index 0 and index n+1 act as
virtual sentinels for the previous-* and next-* queries respectively.
"""

from .errors import EmptyArrayError, ParseError, RangeError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

QUERY_KINDS = ("psv", "plv", "nsv", "nlv")


class ValueArray:
    """An immutable array of signed 64-bit integers, indexed 1..n."""

    __slots__ = ("values", "n")

    def __init__(self, values):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise EmptyArrayError("array must contain at least one element")
        for v in vals:
            if not INT64_MIN <= v <= INT64_MAX:
                raise ValueError("value %d outside signed 64-bit range" % v)
        self.values = vals
        self.n = len(vals)

    def __getitem__(self, i):
        if not 1 <= i <= self.n:
            raise RangeError("index %d out of range 1..%d" % (i, self.n))
        return self.values[i - 1]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, ValueArray) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "ValueArray(%r)" % (list(self.values),)

    def has_consecutive_equal(self):
        """Return the first index i with A[i] == A[i+1], or None."""
        for i in range(1, self.n):
            if self.values[i - 1] == self.values[i]:
                return i
        return None


def parse_array_text(text):
    """Parse whitespace-separated integers into a ValueArray; strict."""
    tokens = text.split()
    if not tokens:
        raise ParseError("no integers found in input")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok, 10))
        except ValueError:
            raise ParseError("not an integer: %r" % tok) from None
    try:
        return ValueArray(values)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_array_text(a):
    """Inverse of parse_array_text: one integer per line."""
    return "\n".join(str(v) for v in a.values) + "\n"


def _check_index(a, i):
    if not 1 <= i <= a.n:
        raise RangeError("index %d out of range 1..%d" % (i, a.n))


def oracle_psv(a, i):
    """Largest j < i with A[j] < A[i], else 0.  Brute-force scan."""
    _check_index(a, i)
    for j in range(i - 1, 0, -1):
        if a[j] < a[i]:
            return j
    return 0


def oracle_plv(a, i):
    """Largest j < i with A[j] > A[i], else 0."""
    _check_index(a, i)
    for j in range(i - 1, 0, -1):
        if a[j] > a[i]:
            return j
    return 0


def oracle_nsv(a, i):
    """Smallest j > i with A[j] < A[i], else n+1."""
    _check_index(a, i)
    for j in range(i + 1, a.n + 1):
        if a[j] < a[i]:
            return j
    return a.n + 1


def oracle_nlv(a, i):
    """Smallest j > i with A[j] > A[i], else n+1."""
    _check_index(a, i)
    for j in range(i + 1, a.n + 1):
        if a[j] > a[i]:
            return j
    return a.n + 1


ORACLES = {
    "psv": oracle_psv,
    "plv": oracle_plv,
    "nsv": oracle_nsv,
    "nlv": oracle_nlv,
}


class RunStructure:
    """Marks runs of equal consecutive values and maps indices between the
    original array and the run-compressed one.

    c_bits[i-1] == 1 (for 1 <= i <= n-1) iff A[i] == A[i+1].  The reduced
    array keeps the last element of every run, so kept positions are the
    indices i with i == n or c_bits[i-1] == 0.
    """

    __slots__ = ("n", "c_bits", "k", "kept_positions", "rank_map", "_values")

    def __init__(self, c_bits, n, values=None):
        c_bits = tuple(int(b) for b in c_bits)
        if n < 1:
            raise EmptyArrayError("run structure requires n >= 1")
        if len(c_bits) != n - 1:
            raise ValueError("c_bits must have length n-1")
        if any(b not in (0, 1) for b in c_bits):
            raise ValueError("c_bits must be binary")
        self.n = n
        self.c_bits = c_bits
        self.k = sum(c_bits)
        kept = [i for i in range(1, n) if c_bits[i - 1] == 0]
        kept.append(n)
        self.kept_positions = tuple(kept)
        # rank_map[i-1]: reduced position of the last element of i's run
        rank_map = [0] * n
        r = 0
        run_members = []
        for i in range(1, n + 1):
            run_members.append(i)
            if i == n or c_bits[i - 1] == 0:
                r += 1
                for m in run_members:
                    rank_map[m - 1] = r
                run_members = []
        self.rank_map = tuple(rank_map)
        self._values = values

    def reduced_array(self):
        """The array A' of run-last elements (requires source values)."""
        if self._values is None:
            raise ValueError("run structure was built without values")
        return ValueArray(self._values[p - 1] for p in self.kept_positions)


def compute_runs(a):
    """Build the RunStructure of a ValueArray."""
    c_bits = [1 if a.values[i - 1] == a.values[i] else 0 for i in range(1, a.n)]
    return RunStructure(c_bits, a.n, values=a.values)


def map_query_index(rs, i):
    """Reduced-array position of the last element of index i's run."""
    if not 1 <= i <= rs.n:
        raise RangeError("index %d out of range 1..%d" % (i, rs.n))
    return rs.rank_map[i - 1]


def map_answer_to_original(rs, jp, kind):
    """Translate a reduced-array query answer back to original coordinates.

    PSV/PLV answers are run ends and map straight to the kept position.
    NSV/NLV answers map to the first element of the answering run.
    """
    if kind not in QUERY_KINDS:
        raise ValueError("unknown query kind %r" % (kind,))
    n_reduced = rs.n - rs.k
    if jp == 0:
        return 0
    if jp == n_reduced + 1:
        return rs.n + 1
    if not 1 <= jp <= n_reduced:
        raise RangeError("reduced index %d out of range" % jp)
    p = rs.kept_positions[jp - 1]
    if kind in ("psv", "plv"):
        return p
    # next-value answers point at the run start
    q = p
    while q > 1 and rs.c_bits[q - 2] == 1:
        q -= 1
    return q
