"""Text-in-image LSB steganography with corruption-tolerant extraction.

Embeds UTF-8 text in the least significant bits of RGB images and gets it
back out even after channel noise, using a resynchronizing decoder, a
bounded bit-flip repair search guided by a character n-gram model, and an
optional external corrector process.
"""

from .codec import (
    END_MARKER,
    Framing,
    bits_to_bytes,
    bytes_to_bits,
    bytes_to_text_strict,
    deframe,
    deframe_lenient,
    frame,
    text_to_bytes,
)
from .corrector import correct_external
from .errors import (
    CapacityExceeded,
    CorrectorProtocolError,
    CorrectorTimeout,
    CorrectorUnavailable,
    CorruptFile,
    CountExceedsCapacity,
    DimensionMismatch,
    EmptyCorpus,
    InvalidNoiseSpec,
    InvalidProbability,
    InvalidSigma,
    InvalidUtf8,
    IoFailure,
    LengthMismatch,
    LengthOutOfRange,
    MarkerCollision,
    MarkerNotFound,
    SpanTooLong,
    StegotextError,
    UnsupportedFormat,
)
from .images import load_image, save_image, synthetic_cover
from .lsb import (
    capacity_bits,
    embed,
    embed_text,
    extract_bits,
    extract_payload,
    extract_text_strict,
)
from .metrics import (
    AccuracyReport,
    DistortionReport,
    bit_error_rate,
    char_accuracy,
    lcs_length,
    mse,
)
from .ngram import CharNGramModel, train
from .noise import NoiseSpec, apply_noise, flip_count, parse_noise_spec
from .recovery import (
    DecodedText,
    RecoveryConfig,
    RepairCandidate,
    decode_resync,
    enumerate_repairs,
    recover_pipeline,
    repair,
)
from .sweep import SweepConfig, generate_message, load_corpus, parse_config, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AccuracyReport",
    "CapacityExceeded",
    "CharNGramModel",
    "CorrectorProtocolError",
    "CorrectorTimeout",
    "CorrectorUnavailable",
    "CorruptFile",
    "CountExceedsCapacity",
    "DecodedText",
    "DimensionMismatch",
    "DistortionReport",
    "EmptyCorpus",
    "END_MARKER",
    "Framing",
    "InvalidNoiseSpec",
    "InvalidProbability",
    "InvalidSigma",
    "InvalidUtf8",
    "IoFailure",
    "LengthMismatch",
    "LengthOutOfRange",
    "MarkerCollision",
    "MarkerNotFound",
    "NoiseSpec",
    "RecoveryConfig",
    "RepairCandidate",
    "SpanTooLong",
    "StegotextError",
    "SweepConfig",
    "UnsupportedFormat",
    "apply_noise",
    "bit_error_rate",
    "bits_to_bytes",
    "bytes_to_bits",
    "bytes_to_text_strict",
    "capacity_bits",
    "char_accuracy",
    "correct_external",
    "decode_resync",
    "deframe",
    "deframe_lenient",
    "embed",
    "embed_text",
    "enumerate_repairs",
    "extract_bits",
    "extract_payload",
    "extract_text_strict",
    "flip_count",
    "frame",
    "generate_message",
    "lcs_length",
    "load_corpus",
    "load_image",
    "mse",
    "parse_config",
    "parse_noise_spec",
    "recover_pipeline",
    "repair",
    "run_sweep",
    "save_image",
    "synthetic_cover",
    "text_to_bytes",
    "train",
]
