"""Bit-exact primitives shared by the codecs.

Covers MSB-first bitstreams, unary degree codes, fixed-block ternary
packing, and combinadic subset ranking over exact big integers.
"""

try:
    # exact big-integer binomials; orders of magnitude faster than
    # math.comb at the sizes the subset coder hits
    from gmpy2 import bincoef as comb, mpz
except ImportError:  # pragma: no cover
    from math import comb

    mpz = int

from .errors import CorruptionError

# 3^41 < 2^65, so 41 trits always fit a 65-bit block.
TRITS_PER_BLOCK = 41
BITS_PER_BLOCK = 65


class BitStream:
    """Append-only MSB-first bit sequence with a separate read cursor.

    Single writer / single reader while mutating; a finished stream can be
    shared freely for reads via fresh cursors (``reset``).
    """

    __slots__ = ("_bits", "_pos")

    def __init__(self, bits=()):
        self._bits = [int(b) for b in bits]
        if any(b not in (0, 1) for b in self._bits):
            raise ValueError("bits must be 0 or 1")
        self._pos = 0

    def __len__(self):
        return len(self._bits)

    def __eq__(self, other):
        return isinstance(other, BitStream) and self._bits == other._bits

    def __repr__(self):
        return "BitStream(%s)" % "".join(map(str, self._bits))

    @property
    def bits(self):
        return tuple(self._bits)

    @property
    def position(self):
        return self._pos

    @property
    def remaining(self):
        return len(self._bits) - self._pos

    def at_end(self):
        return self._pos == len(self._bits)

    def reset(self):
        self._pos = 0

    def write_bit(self, b):
        if b not in (0, 1):
            raise ValueError("bit must be 0 or 1")
        self._bits.append(b)

    def write_bits(self, bits):
        for b in bits:
            self.write_bit(b)

    def write_uint(self, value, width):
        """Write ``value`` as ``width`` bits, most significant bit first."""
        if value < 0 or value >> width:
            raise ValueError("value %d does not fit in %d bits" % (value, width))
        for shift in range(width - 1, -1, -1):
            self._bits.append((value >> shift) & 1)

    def read_bit(self):
        if self._pos >= len(self._bits):
            raise CorruptionError("bitstream truncated: read past end")
        b = self._bits[self._pos]
        self._pos += 1
        return b

    def read_bits(self, count):
        if count < 0:
            raise ValueError("count must be non-negative")
        if self._pos + count > len(self._bits):
            raise CorruptionError("bitstream truncated: read past end")
        out = self._bits[self._pos:self._pos + count]
        self._pos += count
        return out

    def read_uint(self, width):
        value = 0
        for b in self.read_bits(width):
            value = (value << 1) | b
        return value

    def to_bytes(self):
        """Pack into bytes, MSB first, final byte zero-padded."""
        out = bytearray((len(self._bits) + 7) // 8)
        for pos, b in enumerate(self._bits):
            if b:
                out[pos >> 3] |= 0x80 >> (pos & 7)
        return bytes(out)

    @classmethod
    def from_bytes(cls, data, nbits):
        if nbits > 8 * len(data):
            raise CorruptionError("declared bit length exceeds payload")
        s = cls()
        s._bits = [(data[pos >> 3] >> (7 - (pos & 7))) & 1 for pos in range(nbits)]
        return s


def write_degree(s, d):
    """Append the unary degree code: d-1 ones followed by a zero."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    s.write_bits([1] * (d - 1))
    s.write_bit(0)


def read_degree(s):
    """Inverse of write_degree."""
    d = 1
    while s.read_bit() == 1:
        d += 1
    return d


def trit_pack_bits(m):
    """Exact bit cost of packing m trits with the fixed-block scheme."""
    full, rest = divmod(m, TRITS_PER_BLOCK)
    return full * BITS_PER_BLOCK + (3 ** rest - 1).bit_length()


def pack_trits(trits):
    """Pack a {0,1,2} string into a BitStream, 41 trits per 65-bit block.

    A final partial block of t trits uses bitlen(3^t - 1) bits.
    """
    trits = list(trits)
    if any(t not in (0, 1, 2) for t in trits):
        raise ValueError("trits must be 0, 1 or 2")
    s = BitStream()
    for start in range(0, len(trits), TRITS_PER_BLOCK):
        block = trits[start:start + TRITS_PER_BLOCK]
        value = 0
        for t in block:
            value = value * 3 + t
        if len(block) == TRITS_PER_BLOCK:
            width = BITS_PER_BLOCK
        else:
            width = (3 ** len(block) - 1).bit_length()
        s.write_uint(value, width)
    return s


def unpack_trits(s, m):
    """Read m trits previously written by pack_trits."""
    out = []
    remaining = m
    while remaining > 0:
        blen = min(remaining, TRITS_PER_BLOCK)
        if blen == TRITS_PER_BLOCK:
            width = BITS_PER_BLOCK
        else:
            width = (3 ** blen - 1).bit_length()
        value = s.read_uint(width)
        if value >= 3 ** blen:
            raise CorruptionError("trit block value %d out of range" % value)
        block = [0] * blen
        for pos in range(blen - 1, -1, -1):
            value, block[pos] = divmod(value, 3)
        out.extend(block)
        remaining -= blen
    return out


def subset_rank(positions, length):
    """Combinadic rank of a sorted subset of {0..length-1}.

    Returns (k, rank) with 0 <= rank < comb(length, k); the j-th smallest
    position p (1-based j) contributes comb(p, j).
    """
    positions = list(positions)
    k = len(positions)
    if k > length:
        raise ValueError("more positions than slots")
    prev = -1
    for p in positions:
        if p <= prev or p >= length:
            raise ValueError("positions must be strictly increasing and < length")
        prev = p
    if k == 0:
        return 0, 0
    # Single downward scan with incremental binomials; avoids k large
    # comb() calls at big k.
    rank = mpz(0)
    c = length - 1
    j = k
    b = mpz(comb(c, j))
    idx = k - 1
    while j > 0:
        if positions[idx] == c:
            rank += b
            b = b * j // c if c else 0
            j -= 1
            idx -= 1
        else:
            b = b * (c - j) // c
        c -= 1
    return k, int(rank)


def subset_unrank(k, rank, length):
    """Inverse of subset_rank."""
    if k < 0 or k > length:
        raise CorruptionError("invalid subset size %d for length %d" % (k, length))
    if rank < 0 or rank >= comb(length, k):
        raise CorruptionError("subset rank %d out of range" % rank)
    if k == 0:
        return []
    positions = []
    rank = mpz(rank)
    c = length - 1
    j = k
    b = mpz(comb(c, j))
    while j > 0:
        if b <= rank:
            rank -= b
            positions.append(c)
            b = b * j // c if c else 0
            j -= 1
        else:
            b = b * (c - j) // c
        c -= 1
    positions.reverse()
    return positions


def subset_rank_width(length, k):
    """Bits needed to store any rank of a k-subset: ceil(log2 comb(L,k))."""
    return int(comb(length, k) - 1).bit_length()
