"""Unbiased bounded random integers in batches, applied to fast shuffling.

One uniformly random binary word yields several independent bounded
integers through a chain of full-width multiplications, with a single
rejection test on the final remainder. The package wires that primitive
into Fisher-Yates shuffles, models the batch-size tradeoff, and ships
exhaustive small-width verification plus a benchmark CLI.
"""

from .batched import (
    BatchResult,
    BatchSpec,
    digit_pass,
    roll_batch,
    roll_batch_known_threshold,
    roll_batch_naive,
)
from .bounded import (
    BoundEncoding,
    FullProduct,
    RollOutcome,
    falling_factorial,
    mul_full,
    roll_single,
    roll_single_traced,
    threshold,
)
from .cost_model import CostParams, build_schedule, cost_per_roll, find_nk
from .errors import (
    BatchRandError,
    BoundOverflow,
    DigitOutOfRange,
    InsufficientTrials,
    NoCrossover,
    SourceExhausted,
    UnknownAlgorithm,
    UnknownGenerator,
    ValueOutOfRange,
)
from .mixed_radix import RadixBases, decode, encode
from .shuffle import (
    DEFAULT_SCHEDULE,
    PAIR_SCHEDULE,
    ShuffleSchedule,
    default_schedule,
    partial_shuffle_batch,
    shuffle_batched,
    shuffle_naive_batched,
    shuffle_unbatched,
)
from .wordsource import (
    ChaChaSource,
    ExhaustiveSource,
    FixedSequenceSource,
    LehmerSource,
    Pcg64Source,
    WordSource,
    chacha_block,
    make_source,
)

__version__ = "0.1.0"

__all__ = [
    "BatchRandError",
    "BatchResult",
    "BatchSpec",
    "BoundEncoding",
    "BoundOverflow",
    "ChaChaSource",
    "CostParams",
    "DEFAULT_SCHEDULE",
    "DigitOutOfRange",
    "ExhaustiveSource",
    "FixedSequenceSource",
    "FullProduct",
    "InsufficientTrials",
    "LehmerSource",
    "NoCrossover",
    "PAIR_SCHEDULE",
    "Pcg64Source",
    "RadixBases",
    "RollOutcome",
    "ShuffleSchedule",
    "SourceExhausted",
    "UnknownAlgorithm",
    "UnknownGenerator",
    "ValueOutOfRange",
    "WordSource",
    "build_schedule",
    "chacha_block",
    "cost_per_roll",
    "decode",
    "default_schedule",
    "digit_pass",
    "encode",
    "falling_factorial",
    "find_nk",
    "make_source",
    "mul_full",
    "partial_shuffle_batch",
    "roll_batch",
    "roll_batch_known_threshold",
    "roll_batch_naive",
    "roll_single",
    "roll_single_traced",
    "shuffle_batched",
    "shuffle_naive_batched",
    "shuffle_unbatched",
    "threshold",
]
