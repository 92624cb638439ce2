"""Producers of uniformly random fixed-width binary words.

Three production generators, all emitting 64-bit words: a 128-bit
multiplicative Lehmer generator, PCG64 (XSL-RR output on 128-bit state),
and a ChaCha20 keystream. Two deterministic sources back the test and
verification suites: an exhaustive enumerator for small word widths and a
fixed replay sequence.
"""

from __future__ import annotations

from .errors import SourceExhausted, UnknownGenerator

MASK32 = 0xFFFFFFFF
MASK64 = 0xFFFFFFFFFFFFFFFF
MASK128 = (1 << 128) - 1

LEHMER_MULTIPLIER = 0xDA942042E4DD58B5
PCG_MULTIPLIER = 0x2360ED051FC65DA44385DF649FCCF645


def splitmix64_stream(seed: int):
    """Yield an endless stream of 64-bit values expanded from one seed.

    Standard splitmix64 step: add the golden-gamma constant, then two
    xor-shift-multiply mixes. Used only to spread small seeds across the
    generators' wider states.
    """
    x = seed & MASK64
    while True:
        x = (x + 0x9E3779B97F4A7C15) & MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


class WordSource:
    """A stream of uniformly random integers in [0, 2**word_bits).

    Instances hold single-owner mutable state: never share one instance
    between threads, though independent instances may run in parallel.
    """

    word_bits: int = 64

    def next_word(self) -> int:
        raise NotImplementedError


class LehmerSource(WordSource):
    """Multiplicative congruential generator on 128 bits of state.

    Each step multiplies the state by a fixed 64-bit constant modulo 2**128
    and returns the top 64 bits. The state must be odd to stay on the
    maximal orbit, so seeding forces the low bit.
    """

    word_bits = 64

    def __init__(self, seed: int = 0):
        chunks = splitmix64_stream(seed)
        self.state = ((next(chunks) << 64) | next(chunks)) | 1

    def next_word(self) -> int:
        self.state = s = (self.state * LEHMER_MULTIPLIER) & MASK128
        return s >> 64


class Pcg64Source(WordSource):
    """PCG with 128-bit LCG state and the XSL-RR 64-bit output function.

    State update: s <- s * mult + inc (mod 2**128), with odd inc selecting
    the stream. Output: xor-fold the two state halves, then rotate right by
    the state's top 6 bits. The output is taken from the post-update state.
    """

    word_bits = 64

    def __init__(self, seed: int = 0):
        chunks = splitmix64_stream(seed)
        self.state = (next(chunks) << 64) | next(chunks)
        self.increment = ((next(chunks) << 64) | next(chunks)) | 1

    def next_word(self) -> int:
        self.state = s = (self.state * PCG_MULTIPLIER + self.increment) & MASK128
        rot = s >> 122
        x = ((s >> 64) ^ s) & MASK64
        return ((x >> rot) | (x << ((-rot) & 63))) & MASK64


# Quarter-round index pattern for one ChaCha double round: four column
# rounds followed by four diagonal rounds.
_CHACHA_ROUND_INDICES = (
    (0, 4, 8, 12), (1, 5, 9, 13), (2, 6, 10, 14), (3, 7, 11, 15),
    (0, 5, 10, 15), (1, 6, 11, 12), (2, 7, 8, 13), (3, 4, 9, 14),
)

_CHACHA_CONSTANTS = (0x61707865, 0x3320646E, 0x79622D32, 0x6B206574)


def chacha_block(key_words, counter: int, nonce: int, rounds: int = 20):
    """Return one 16-word ChaCha block for the given key/counter/nonce.

    ``key_words`` are eight 32-bit little-endian key words. The 64-bit
    counter occupies state words 12-13 and the 64-bit nonce words 14-15,
    both split little-endian. 20 rounds, per RFC 8439.
    """
    init = [
        *_CHACHA_CONSTANTS,
        *key_words,
        counter & MASK32, (counter >> 32) & MASK32,
        nonce & MASK32, (nonce >> 32) & MASK32,
    ]
    x = list(init)
    for _ in range(rounds // 2):
        for a, b, c, d in _CHACHA_ROUND_INDICES:
            xa = (x[a] + x[b]) & MASK32
            xd = x[d] ^ xa
            xd = ((xd << 16) | (xd >> 16)) & MASK32
            xc = (x[c] + xd) & MASK32
            xb = x[b] ^ xc
            xb = ((xb << 12) | (xb >> 20)) & MASK32
            xa = (xa + xb) & MASK32
            xd ^= xa
            xd = ((xd << 8) | (xd >> 24)) & MASK32
            xc = (xc + xd) & MASK32
            xb ^= xc
            x[a] = xa
            x[b] = ((xb << 7) | (xb >> 25)) & MASK32
            x[c] = xc
            x[d] = xd
    return [(v + w) & MASK32 for v, w in zip(x, init)]


class ChaChaSource(WordSource):
    """ChaCha20 keystream consumed as 64-bit words.

    Each 16-word block yields eight words; consecutive 32-bit keystream
    words are combined little-endian (first word is the low half). The
    block counter advances once per block and the buffer is regenerated
    exactly when exhausted.
    """

    word_bits = 64

    def __init__(self, seed: int = 0):
        chunks = splitmix64_stream(seed)
        key = [next(chunks) for _ in range(4)]
        self.key_words = tuple(w for c in key for w in (c & MASK32, (c >> 32) & MASK32))
        self.nonce = next(chunks)
        self.counter = 0
        self._buffer = [0] * 16
        self._pos = 16  # empty; filled on first use

    def next_word(self) -> int:
        pos = self._pos
        if pos == 16:
            self._buffer = chacha_block(self.key_words, self.counter, self.nonce)
            self.counter = (self.counter + 1) & MASK64
            pos = 0
        buf = self._buffer
        self._pos = pos + 2
        return buf[pos] | (buf[pos + 1] << 32)


class ExhaustiveSource(WordSource):
    """Emits every word of a small width exactly once, in ascending order.

    Only sensible for word_bits <= 16; raises SourceExhausted past the end.
    """

    def __init__(self, bit_width: int):
        if not 1 <= bit_width <= 16:
            raise ValueError(f"bit_width must be in [1, 16], got {bit_width}")
        self.word_bits = bit_width
        self.cursor = 0

    @property
    def exhausted(self) -> bool:
        return self.cursor == 1 << self.word_bits

    def next_word(self) -> int:
        if self.exhausted:
            raise SourceExhausted(f"all {1 << self.word_bits} words emitted")
        word = self.cursor
        self.cursor += 1
        return word


class FixedSequenceSource(WordSource):
    """Replays a predetermined word sequence verbatim; errors on over-read."""

    def __init__(self, words, bit_width: int = 64):
        self.word_bits = bit_width
        self.words = list(words)
        for w in self.words:
            if not 0 <= w < 1 << bit_width:
                raise ValueError(f"word {w} does not fit in {bit_width} bits")
        self.cursor = 0

    def next_word(self) -> int:
        if self.cursor >= len(self.words):
            raise SourceExhausted(f"sequence of {len(self.words)} words over-read")
        word = self.words[self.cursor]
        self.cursor += 1
        return word


GENERATORS = {
    "lehmer": LehmerSource,
    "pcg64": Pcg64Source,
    "chacha": ChaChaSource,
}


def make_source(name: str, seed: int = 0) -> WordSource:
    """Build one of the named 64-bit generators: lehmer, pcg64 or chacha."""
    try:
        cls = GENERATORS[name]
    except KeyError:
        raise UnknownGenerator(
            f"unknown generator {name!r}; expected one of {sorted(GENERATORS)}"
        ) from None
    return cls(seed)
