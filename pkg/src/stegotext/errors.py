"""Exception types shared across the toolkit."""


class StegotextError(Exception):
    """Base class for all stegotext errors."""


class InvalidUtf8(StegotextError):
    """Byte sequence is not valid UTF-8; ``offset`` is the first offending byte."""

    def __init__(self, offset, message=None):
        self.offset = offset
        super().__init__(message or f"invalid UTF-8 at byte offset {offset}")


class MarkerCollision(StegotextError):
    """Payload contains the end marker, so marker-only framing would truncate it."""


class MarkerNotFound(StegotextError):
    """No end marker present in the extracted byte stream."""


class LengthOutOfRange(StegotextError):
    """Declared payload length exceeds the available bytes."""

    def __init__(self, declared, available):
        self.declared = declared
        self.available = available
        super().__init__(f"declared payload length {declared} exceeds available {available} bytes")


class CapacityExceeded(StegotextError):
    """Payload needs more bits than the image can hold."""

    def __init__(self, needed, available):
        self.needed = needed
        self.available = available
        super().__init__(f"payload needs {needed} bits but image holds {available}")


class CountExceedsCapacity(StegotextError):
    """Requested more bits than the image contains."""


class DimensionMismatch(StegotextError):
    """Two images (or bit streams) must have identical dimensions."""


class LengthMismatch(StegotextError):
    """Bit streams must have equal length."""


class InvalidProbability(StegotextError):
    """Noise probability must lie in [0, 1]."""


class InvalidSigma(StegotextError):
    """Gaussian sigma must be non-negative."""


class InvalidNoiseSpec(StegotextError):
    """Noise specification string could not be parsed."""


class SpanTooLong(StegotextError):
    """Repair span exceeds the configured byte limit."""


class EmptyCorpus(StegotextError):
    """Corpus contains no characters."""


class CorrectorUnavailable(StegotextError):
    """External corrector process could not be spawned or died immediately."""


class CorrectorTimeout(StegotextError):
    """External corrector did not answer within the configured timeout."""


class CorrectorProtocolError(StegotextError):
    """External corrector violated the wire protocol."""


class UnsupportedFormat(StegotextError):
    """Image file format is not supported for steganography."""


class CorruptFile(StegotextError):
    """File exists but could not be parsed as an image."""


class IoFailure(StegotextError):
    """Underlying file I/O failed."""
