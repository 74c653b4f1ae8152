"""Flat-file container for the three encodings.

Layout: magic "NLVE", version byte, scheme byte, varint header fields,
then the payload bit segments concatenated MSB-first with the final byte
zero-padded.  Varints are LEB128 (base-128 groups, little-endian).
"""

from .bitio import BitStream, subset_rank_width, trit_pack_bits, pack_trits, unpack_trits
from .colored import ColoredEncoding
from .errors import CorruptionError
from .general import GeneralEncoding
from .joint import JointEncoding

MAGIC = b"NLVE"
VERSION = 1

SCHEME_JOINT = 1
SCHEME_COLORED = 2
SCHEME_GENERAL = 3

SCHEME_NAMES = {"joint": SCHEME_JOINT, "colored": SCHEME_COLORED,
                "general": SCHEME_GENERAL}
SCHEME_IDS = {v: k for k, v in SCHEME_NAMES.items()}


def write_varint(buf, value):
    if value < 0:
        raise ValueError("varint must be non-negative")
    while True:
        group = value & 0x7F
        value >>= 7
        if value:
            buf.append(group | 0x80)
        else:
            buf.append(group)
            return


def read_varint(data, pos):
    value = 0
    shift = 0
    while True:
        if pos >= len(data):
            raise CorruptionError("truncated varint")
        byte = data[pos]
        pos += 1
        value |= (byte & 0x7F) << shift
        shift += 7
        if not byte & 0x80:
            return value, pos
        if shift > 63:
            raise CorruptionError("varint too long")


def _concat_segments(segments):
    payload = BitStream()
    lengths = []
    for seg in segments:
        bits = seg.bits if isinstance(seg, BitStream) else tuple(seg)
        lengths.append(len(bits))
        payload.write_bits(bits)
    return lengths, payload


def _segments_of(enc):
    if isinstance(enc, JointEncoding):
        return SCHEME_JOINT, [enc.u, enc.t_min, enc.t_max]
    if isinstance(enc, ColoredEncoding):
        return SCHEME_COLORED, [enc.u_gb, enc.v_bad, pack_trits(enc.v_neutral),
                                enc.t_min, enc.t_max]
    if isinstance(enc, GeneralEncoding):
        c = enc.colored
        return SCHEME_GENERAL, [c.u_gb, c.v_bad, pack_trits(c.v_neutral),
                                c.t_min, c.t_max]
    raise TypeError("unsupported encoding type %r" % type(enc).__name__)


def serialize(enc):
    """Encode any of the three payload types into container bytes."""
    scheme, segments = _segments_of(enc)
    buf = bytearray(MAGIC)
    buf.append(VERSION)
    buf.append(scheme)
    write_varint(buf, enc.n)
    if scheme == SCHEME_GENERAL:
        write_varint(buf, enc.k)
    lengths, payload = _concat_segments(segments)
    if scheme == SCHEME_GENERAL:
        # the subset-rank segment width is derivable from n and k, so it is
        # prepended to the payload without its own length field
        full = BitStream()
        full.write_bits(enc.c_rank_bits.bits)
        full.write_bits(payload.bits)
        payload = full
    for length in lengths:
        write_varint(buf, length)
    buf.extend(payload.to_bytes())
    return bytes(buf)


def _split_segments(payload_bytes, lengths, offset_bits=0):
    total = offset_bits + sum(lengths)
    if (total + 7) // 8 != len(payload_bytes):
        raise CorruptionError("segment lengths do not match payload size")
    if total % 8 and payload_bytes[-1] & ((1 << (8 - total % 8)) - 1):
        raise CorruptionError("nonzero padding bits")
    stream = BitStream.from_bytes(payload_bytes, total)
    stream.read_bits(offset_bits)
    return [BitStream(stream.read_bits(length)) for length in lengths]


def deserialize(data):
    """Parse container bytes back into the matching encoding object."""
    if len(data) < 6 or data[:4] != MAGIC:
        raise CorruptionError("bad magic")
    if data[4] != VERSION:
        raise CorruptionError("unsupported version %d" % data[4])
    scheme = data[5]
    if scheme not in SCHEME_IDS:
        raise CorruptionError("unknown scheme %d" % scheme)
    pos = 6
    n, pos = read_varint(data, pos)
    if n < 1:
        raise CorruptionError("n must be >= 1")
    k = None
    if scheme == SCHEME_GENERAL:
        k, pos = read_varint(data, pos)
        if k > n - 1:
            raise CorruptionError("run count k out of range")
    nseg = 3 if scheme == SCHEME_JOINT else 5
    lengths = []
    for _ in range(nseg):
        length, pos = read_varint(data, pos)
        lengths.append(length)
    payload = data[pos:]
    if scheme == SCHEME_JOINT:
        u, t_min, t_max = _split_segments(payload, lengths)
        if len(u) != n - 1:
            raise CorruptionError("U segment has wrong length")
        return JointEncoding(n, u.bits, t_min, t_max)
    if scheme == SCHEME_COLORED:
        return _colored_from_segments(n, payload, lengths)
    # general: leading subset-rank bits, then the colored segments of A'
    rank_width = subset_rank_width(n - 1, k)
    parts = _split_segments(payload, [rank_width] + lengths)
    colored = _colored_segments_to_encoding(n - k, parts[1:])
    return GeneralEncoding(n, k, parts[0], colored)


def _colored_from_segments(n, payload, lengths):
    return _colored_segments_to_encoding(n, _split_segments(payload, lengths))


def _colored_segments_to_encoding(n, parts):
    u_gb, v_bad, packed, t_min, t_max = parts
    if len(u_gb) != 2 * len(v_bad):
        raise CorruptionError("|u_gb| must be twice |v_bad|")
    m = n - 1 - len(u_gb)
    if m < 0 or trit_pack_bits(m) != len(packed):
        raise CorruptionError("packed trit segment has wrong length")
    v_neutral = unpack_trits(packed, m)
    if not packed.at_end():
        raise CorruptionError("trailing bits in trit segment")
    return ColoredEncoding(n, t_min, t_max, u_gb.bits, v_bad.bits, v_neutral)


def scheme_of(data):
    """Scheme id of a container without fully parsing it."""
    if len(data) < 6 or data[:4] != MAGIC:
        raise CorruptionError("bad magic")
    return data[5]
