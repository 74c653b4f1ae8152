import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlvcodec import (BitStream, CorruptionError, pack_trits, read_degree,
                      subset_rank, subset_rank_width, subset_unrank,
                      trit_pack_bits, unpack_trits, write_degree)
from nlvcodec.bitio import BITS_PER_BLOCK, TRITS_PER_BLOCK


class TestBitStream:
    def test_write_read(self):
        s = BitStream()
        s.write_bits([1, 0, 1, 1])
        assert len(s) == 4
        assert s.read_bits(4) == [1, 0, 1, 1]
        assert s.at_end()

    def test_read_past_end(self):
        s = BitStream([1])
        s.read_bit()
        with pytest.raises(CorruptionError):
            s.read_bit()

    def test_uint_msb_first(self):
        s = BitStream()
        s.write_uint(5, 4)
        assert s.bits == (0, 1, 0, 1)
        assert s.read_uint(4) == 5

    def test_uint_width_check(self):
        s = BitStream()
        with pytest.raises(ValueError):
            s.write_uint(8, 3)

    def test_bytes_round_trip(self):
        s = BitStream([1, 0, 1, 1, 0, 0, 1, 0, 1, 1])
        data = s.to_bytes()
        assert len(data) == 2
        assert data[0] == 0b10110010
        assert data[1] == 0b11000000  # zero-padded
        assert BitStream.from_bytes(data, 10) == s

    @given(st.lists(st.integers(0, 1), max_size=200))
    def test_bytes_round_trip_property(self, bits):
        s = BitStream(bits)
        assert BitStream.from_bytes(s.to_bytes(), len(bits)).bits == tuple(bits)


class TestDegreeCodes:
    def test_figure_values(self):
        s = BitStream()
        write_degree(s, 3)
        assert s.bits == (1, 1, 0)
        s2 = BitStream()
        write_degree(s2, 1)
        assert s2.bits == (0,)

    def test_round_trip(self):
        s = BitStream()
        write_degree(s, 7)
        assert s.bits == (1, 1, 1, 1, 1, 1, 0)
        assert read_degree(s) == 7

    def test_invalid_degree(self):
        with pytest.raises(ValueError):
            write_degree(BitStream(), 0)

    def test_truncated(self):
        with pytest.raises(CorruptionError):
            read_degree(BitStream([1, 1]))

    @given(st.lists(st.integers(1, 40), max_size=30))
    def test_sequence_round_trip(self, degrees):
        s = BitStream()
        for d in degrees:
            write_degree(s, d)
        assert [read_degree(s) for _ in degrees] == degrees
        assert s.at_end()


class TestTritPacking:
    def test_small_block(self):
        s = pack_trits([2, 0, 2, 2])
        # base-3 value 62 in bitlen(3^4 - 1) = 7 bits
        assert s.bits == (0, 1, 1, 1, 1, 1, 0)
        assert unpack_trits(s, 4) == [2, 0, 2, 2]

    def test_empty(self):
        assert pack_trits([]).bits == ()
        assert unpack_trits(BitStream(), 0) == []

    def test_full_zero_block(self):
        s = pack_trits([0] * TRITS_PER_BLOCK)
        assert s.bits == (0,) * BITS_PER_BLOCK

    def test_block_capacity(self):
        assert 3 ** TRITS_PER_BLOCK < 2 ** BITS_PER_BLOCK

    def test_corrupt_block_detected(self):
        s = BitStream([1, 1, 1, 1, 1, 1, 1])  # 127 >= 3^4
        with pytest.raises(CorruptionError):
            unpack_trits(s, 4)

    def test_bit_cost_formula(self):
        for m in (0, 1, 40, 41, 42, 100, 1000):
            assert trit_pack_bits(m) == len(pack_trits([1] * m))

    def test_per_trit_cost_bound(self):
        # full blocks cost 65/41 < 1.58537 bits per trit; a partial final
        # block adds at most a constant, so total slack <= 0.00041 m + 65
        assert BITS_PER_BLOCK / TRITS_PER_BLOCK <= 1.58537
        for m in range(0, 2000):
            assert trit_pack_bits(m) <= 1.58537 * m + 65

    @given(st.lists(st.integers(0, 2), max_size=150))
    @settings(max_examples=200)
    def test_round_trip_property(self, trits):
        s = pack_trits(trits)
        assert unpack_trits(s, len(trits)) == trits
        assert s.at_end()


class TestSubsetCoding:
    def test_singleton_example(self):
        k, rank = subset_rank([1], 3)
        assert (k, rank) == (1, 1)
        assert subset_rank_width(3, 1) == 2

    def test_empty_subset(self):
        assert subset_rank([], 10) == (0, 0)
        assert subset_rank_width(10, 0) == 0
        assert subset_unrank(0, 0, 10) == []

    def test_full_subset(self):
        k, rank = subset_rank(range(5), 5)
        assert (k, rank) == (5, 0)
        assert subset_rank_width(5, 5) == 0

    def test_invalid_positions(self):
        with pytest.raises(ValueError):
            subset_rank([2, 1], 5)
        with pytest.raises(ValueError):
            subset_rank([0, 5], 5)

    def test_corrupt_rank(self):
        with pytest.raises(CorruptionError):
            subset_unrank(1, 3, 3)
        with pytest.raises(CorruptionError):
            subset_unrank(4, 0, 3)

    def test_bijection_exhaustive(self):
        for length in range(13):
            for k in range(length + 1):
                ranks = set()
                for pos in itertools.combinations(range(length), k):
                    got_k, rank = subset_rank(pos, length)
                    assert got_k == k
                    assert 0 <= rank < comb(length, k)
                    assert subset_unrank(k, rank, length) == list(pos)
                    ranks.add(rank)
                assert ranks == set(range(comb(length, k)))

    @given(st.sets(st.integers(0, 499), max_size=60))
    @settings(max_examples=100)
    def test_round_trip_property(self, posset):
        positions = sorted(posset)
        k, rank = subset_rank(positions, 500)
        assert subset_unrank(k, rank, 500) == positions
