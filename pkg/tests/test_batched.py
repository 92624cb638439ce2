"""Batched rolls: digit chains, rejection accounting, baseline agreement."""

import pytest

from batchrand import (
    BatchSpec,
    BoundOverflow,
    FixedSequenceSource,
    LehmerSource,
    RadixBases,
    SourceExhausted,
    digit_pass,
    encode,
    mul_full,
    roll_batch,
    roll_batch_known_threshold,
    roll_batch_naive,
    roll_single_traced,
)

COIN_DIE = RadixBases.of((2, 6), bits=4)


def test_digit_pass_worked_rows():
    assert digit_pass(1, COIN_DIE) == ((0, 0), 12)
    assert digit_pass(15, COIN_DIE) == ((1, 5), 4)
    assert digit_pass(2, COIN_DIE) == ((0, 1), 8)


def test_digit_pass_all_ones_bases_pass_word_through():
    ones = RadixBases.of((1, 1, 1), bits=8)
    for r0 in (0, 7, 255):
        assert digit_pass(r0, ones) == ((0, 0, 0), r0)


def test_known_threshold_rejects_then_accepts():
    spec = BatchSpec.with_threshold(COIN_DIE)
    assert spec.precomputed_threshold == 4
    result = roll_batch_known_threshold(FixedSequenceSource([0, 7], 4), spec)
    assert result.digits == (0, 5)
    assert result.words_consumed == 2
    assert result.threshold_computed is False
    assert result.final_remainder == 4


def test_known_threshold_single_base_one():
    spec = BatchSpec.with_threshold(RadixBases.of((1,), bits=4))
    result = roll_batch_known_threshold(FixedSequenceSource([9], 4), spec)
    assert result.digits == (0,)
    assert result.words_consumed == 1


def test_known_threshold_exhaustive_acceptance_count():
    bases = RadixBases.of((4, 3, 2), bits=16)
    spec = BatchSpec.with_threshold(bases)
    accepted = 0
    for word in range(1 << 16):
        try:
            roll_batch_known_threshold(FixedSequenceSource([word], 16), spec)
            accepted += 1
        except SourceExhausted:
            pass
    assert accepted == (1 << 16) - pow(2, 16, 24)  # 65520


def test_roll_batch_slow_path_sets_flag():
    # word 2: digits (0, 1), remainder 8 < product 12, so the threshold (4)
    # is derived and the batch still accepted
    result = roll_batch(FixedSequenceSource([2], 4), BatchSpec(COIN_DIE))
    assert result.digits == (0, 1)
    assert result.threshold_computed is True
    assert result.words_consumed == 1


def test_roll_batch_fast_path_skips_division():
    # word 1: remainder 12 >= product 12, accepted with no division
    result = roll_batch(FixedSequenceSource([1], 4), BatchSpec(COIN_DIE))
    assert result.digits == (0, 0)
    assert result.threshold_computed is False


def test_roll_batch_rerolls_while_below_threshold():
    # words 0 and 4 leave remainder 0 < threshold 4; word 7 is accepted
    result = roll_batch(FixedSequenceSource([0, 4, 7], 4), BatchSpec(COIN_DIE))
    assert result.digits == (0, 5)
    assert result.words_consumed == 3
    assert result.threshold_computed is True


def test_roll_batch_upper_bound_short_circuits():
    spec = BatchSpec(COIN_DIE, upper_bound=13)
    result = roll_batch(FixedSequenceSource([1], 4), spec)
    assert result.threshold_computed is False
    # behavior (acceptance and digits) is unchanged by the bound
    for word in range(16):
        with_u = without_u = None
        try:
            with_u = roll_batch(FixedSequenceSource([word], 4), spec)
        except SourceExhausted:
            pass
        try:
            without_u = roll_batch(FixedSequenceSource([word], 4), BatchSpec(COIN_DIE))
        except SourceExhausted:
            pass
        if with_u is None:
            assert without_u is None
        else:
            assert without_u is not None
            assert with_u.digits == without_u.digits


def test_batch_spec_validation():
    with pytest.raises(ValueError):
        BatchSpec(COIN_DIE, precomputed_threshold=5)
    with pytest.raises(BoundOverflow):
        BatchSpec(COIN_DIE, upper_bound=11)
    with pytest.raises(ValueError):
        roll_batch_known_threshold(FixedSequenceSource([1], 4), BatchSpec(COIN_DIE))


def test_roll_batch_wide_bases_never_touch_threshold():
    bases = RadixBases.of((52, 51), bits=64)
    spec = BatchSpec(bases)
    source = LehmerSource(2024)
    for _ in range(1_000_000):
        result = roll_batch(source, spec)
        if result.threshold_computed or result.words_consumed != 1:
            pytest.fail(f"slow path at 52*51/2**64: {result}")


def test_methods_accept_same_words_with_same_digits():
    for bases, bits in (((5, 3), 8), ((6, 5), 8), ((4, 3, 2), 16)):
        rb = RadixBases.of(bases, bits=bits)
        spec_known = BatchSpec.with_threshold(rb)
        spec_lazy = BatchSpec(rb)
        for word in range(1 << bits):
            try:
                known = roll_batch_known_threshold(FixedSequenceSource([word], bits), spec_known)
            except SourceExhausted:
                known = None
            try:
                lazy = roll_batch(FixedSequenceSource([word], bits), spec_lazy)
            except SourceExhausted:
                lazy = None
            if known is None:
                assert lazy is None
            else:
                assert lazy is not None and lazy.digits == known.digits


def test_naive_batch_decodes_accepted_draw():
    # word 15 at 4 bits: 12 * 15 = (11, 4), low word 4 >= threshold, value 11
    assert roll_batch_naive(FixedSequenceSource([15], 4), COIN_DIE) == (1, 5)


def test_naive_single_die_equals_roll_single():
    bases = RadixBases.of((10,), bits=8)
    for word in range(256):
        try:
            naive = roll_batch_naive(FixedSequenceSource([word], 8), bases)
        except SourceExhausted:
            naive = None
        try:
            single = roll_single_traced(FixedSequenceSource([word], 8), bases.product).value
        except SourceExhausted:
            single = None
        assert naive == (None if single is None else (single,))


@pytest.mark.parametrize(
    "bases,bits",
    [
        ((2, 6), 4),
        ((3, 5), 4),
        ((4, 4), 4),
        ((2, 2, 2, 2), 4),
        ((16,), 4),
        ((6, 5), 8),
        ((5, 3, 2), 8),
        ((13, 19), 8),
        ((256,), 8),
    ],
)
def test_digit_chain_reconstructs_single_multiply(bases, bits):
    # chaining the per-base multiplies is exactly one full-width multiply
    # by the base product: b (x) r0 == (encoded digits, final remainder)
    rb = RadixBases.of(bases, bits=bits)
    b = rb.product.value
    for r0 in range(1 << bits):
        digits, rk = digit_pass(r0, rb)
        assert all(0 <= d < base for d, base in zip(digits, bases))
        hi, lo = mul_full(b, r0, bits)
        assert encode(digits, rb) == hi
        assert rk == lo


def test_digit_chain_reconstruction_wide_random_words():
    rb = RadixBases.of((52, 51), bits=64)
    b = 52 * 51
    source = LehmerSource(7)
    mask = (1 << 64) - 1
    for _ in range(100_000):
        r0 = source.next_word()
        digits, rk = digit_pass(r0, rb)
        assert encode(digits, rb) * (1 << 64) + rk == b * r0
        assert rk == (b * r0) & mask
