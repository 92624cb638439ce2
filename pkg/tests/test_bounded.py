"""Bounded-draw primitives: exact products, thresholds, rejection behavior."""

import random

import pytest

from batchrand import (
    BoundEncoding,
    BoundOverflow,
    ExhaustiveSource,
    FixedSequenceSource,
    SourceExhausted,
    falling_factorial,
    mul_full,
    roll_single,
    roll_single_traced,
    threshold,
)


def test_mul_full_4bit_worked_row():
    # 6 * 14 = 84 = 5 * 16 + 4
    assert mul_full(6, 14, 4) == (5, 4)
    assert mul_full(2, 0, 4) == (0, 0)


def test_mul_full_wide():
    # 3 * 2**63 = 2**64 + 2**63
    assert mul_full(2**63, 3, 64) == (1, 2**63)


def test_mul_full_reconstructs_big_product():
    rng = random.Random(0xC0FFEE)
    for bits in (4, 8, 16, 32, 64):
        top = 1 << bits
        for _ in range(100_000):
            a = rng.getrandbits(bits)
            b = rng.getrandbits(bits)
            hi, lo = mul_full(a, b, bits)
            assert hi * top + lo == a * b
            assert 0 <= lo < top


def test_threshold_known_values():
    assert threshold(BoundEncoding.of(12, 4)) == 4  # 16 mod 12
    for bits in (4, 8, 16, 64):
        assert threshold(BoundEncoding.of(1, bits)) == 0
    # modular-exponentiation oracle for the wide case
    assert threshold(BoundEncoding.of(6, 64)) == pow(2, 64, 6)
    assert threshold(BoundEncoding.of(1 << 64, 64)) == 0


def test_threshold_equals_direct_remainder_exhaustively():
    for bits in (4, 8):
        for b in range(1, (1 << bits) + 1):
            assert threshold(BoundEncoding.of(b, bits)) == (1 << bits) % b


def test_bound_encoding_full_range_flag():
    enc = BoundEncoding.of(16, 4)
    assert enc.raw == 0 and enc.is_full_range and enc.value == 16
    enc = BoundEncoding.of(15, 4)
    assert enc.raw == 15 and not enc.is_full_range
    with pytest.raises(BoundOverflow):
        BoundEncoding.of(17, 4)
    with pytest.raises(BoundOverflow):
        BoundEncoding.of(0, 4)


def test_roll_single_accepts_documented_word():
    # bound 12 at 4 bits, word 7: product 84 = (5, 4), low word 4 >= threshold 4
    out = roll_single_traced(FixedSequenceSource([7], 4), BoundEncoding.of(12, 4))
    assert out.value == 5
    assert out.words_consumed == 1
    assert out.remainder_ops == 1  # 4 < 12, so the threshold was derived


def test_roll_single_bound_one_and_full_range_never_reject():
    for word in (0, 7, 15):
        assert roll_single(FixedSequenceSource([word], 4), 1) == 0
        assert roll_single(FixedSequenceSource([word], 4), 16) == word


def test_roll_single_rejects_bad_bounds():
    with pytest.raises(BoundOverflow):
        roll_single(FixedSequenceSource([1], 4), 17)
    with pytest.raises(BoundOverflow):
        roll_single(FixedSequenceSource([1], 4), 0)


def first_draw_census(b, bits=4):
    """Tally first-draw outcomes of roll_single over every word of the width."""
    enc = BoundEncoding.of(b, bits)
    hits = [0] * b
    rejected = 0
    for word in range(1 << bits):
        try:
            hits[roll_single_traced(FixedSequenceSource([word], bits), enc).value] += 1
        except SourceExhausted:
            rejected += 1
    return hits, rejected


def test_roll_single_exactly_uniform_for_every_bound_at_4_bits():
    for b in range(1, 17):
        t = threshold(BoundEncoding.of(b, 4))
        hits, rejected = first_draw_census(b)
        assert hits == [(16 - t) // b] * b, f"bound {b}: {hits}"
        assert rejected == t


def test_accepted_count_divisible_by_bound():
    for bits in (4, 8, 16):
        for b in range(1, (1 << bits) + 1):
            t = threshold(BoundEncoding.of(b, bits))
            assert ((1 << bits) - t) % b == 0
    for b in (3, 6, 52 * 51, 10**9 + 7, (1 << 64) - 1):
        t = threshold(BoundEncoding.of(b, 64))
        assert ((1 << 64) - t) % b == 0


def test_roll_single_remainder_only_when_low_word_under_bound():
    for b in range(1, 17):
        enc = BoundEncoding.of(b, 4)
        for word in range(16):
            lo = (b * word) & 0xF
            try:
                out = roll_single_traced(FixedSequenceSource([word], 4), enc)
            except SourceExhausted:
                continue  # rejected first draw still computed the threshold
            assert out.remainder_ops == (0 if lo >= b else 1)


def test_roll_single_retries_until_acceptance():
    # bound 12 at 4 bits rejects words {0, 4, 8, 12} (final remainder < 4)
    out = roll_single_traced(FixedSequenceSource([0, 4, 7], 4), BoundEncoding.of(12, 4))
    assert out.value == 5
    assert out.words_consumed == 3
    assert out.remainder_ops == 1


def test_exhaustive_source_emits_each_word_once():
    src = ExhaustiveSource(4)
    assert src.word_bits == 4
    words = [src.next_word() for _ in range(16)]
    assert words == list(range(16))
    assert src.exhausted
    with pytest.raises(SourceExhausted):
        src.next_word()


def test_falling_factorial_values():
    assert falling_factorial(6, 6, 64) == 720
    assert falling_factorial(7, 3, 64) == 210
    assert falling_factorial(5, 0, 64) == 1
    assert falling_factorial(2**64, 1, 64) == 2**64  # exactly full range fits


def test_falling_factorial_overflow_boundary():
    assert falling_factorial(2**32, 2, 64) == 2**32 * (2**32 - 1)
    with pytest.raises(BoundOverflow):
        falling_factorial(2**32 + 1, 2, 64)
    with pytest.raises(ValueError):
        falling_factorial(3, 4, 64)
