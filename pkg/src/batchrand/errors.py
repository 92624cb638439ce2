"""Exception types shared across the package."""


class BatchRandError(Exception):
    """Base class for all batchrand errors."""


class SourceExhausted(BatchRandError):
    """A finite word source ran out of words mid-operation."""


class BoundOverflow(BatchRandError):
    """A bound or product does not fit in the word width."""


class DigitOutOfRange(BatchRandError):
    """A mixed-radix digit is negative or not below its base."""


class ValueOutOfRange(BatchRandError):
    """A value lies outside the range representable by the bases."""


class NoCrossover(BatchRandError):
    """Batches of size k never beat batches of size k-1."""


class InsufficientTrials(BatchRandError):
    """Too few trials for a meaningful goodness-of-fit test."""


class UnknownGenerator(BatchRandError):
    """Generator name not recognized."""


class UnknownAlgorithm(BatchRandError):
    """Shuffle algorithm name not recognized."""
