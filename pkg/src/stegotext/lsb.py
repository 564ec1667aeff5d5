"""Least-significant-bit embedding and extraction.

Images are numpy arrays of shape (height, width, 3), dtype uint8, scanned
row by row from the top-left corner with channels in R, G, B order.  Bit k
of the payload lands in the LSB of flattened sample k, so a C-contiguous
reshape gives the exact write order.
"""

from __future__ import annotations

import numpy as np

from . import codec
from .codec import Framing
from .errors import (
    CapacityExceeded,
    CountExceedsCapacity,
    DimensionMismatch,
    InvalidUtf8,
    MarkerNotFound,
)


def check_image(img: np.ndarray) -> np.ndarray:
    """Validate an RGB image buffer and return it as a uint8 array."""
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise DimensionMismatch(f"expected (height, width, 3) RGB array, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        raise DimensionMismatch(f"expected uint8 samples, got {arr.dtype}")
    return arr


def capacity_bits(img: np.ndarray) -> int:
    """Number of payload bits the image can hold (one per channel sample)."""
    img = check_image(img)
    return img.shape[0] * img.shape[1] * 3


def embed(img: np.ndarray, bits) -> np.ndarray:
    """Return a copy of ``img`` with ``bits`` written into the leading LSBs.

    Samples beyond the payload keep all eight bits untouched; every written
    sample changes by at most 1.
    """
    img = check_image(img)
    bits = np.asarray(bits, dtype=np.uint8)
    cap = capacity_bits(img)
    if len(bits) > cap:
        raise CapacityExceeded(len(bits), cap)
    out = img.copy()
    flat = out.reshape(-1)
    k = len(bits)
    flat[:k] = (flat[:k] & 0xFE) | bits
    return out


def extract_bits(img: np.ndarray, count: int | None = None) -> np.ndarray:
    """Read ``count`` LSBs in embed order (all samples when ``count`` is None)."""
    img = check_image(img)
    cap = capacity_bits(img)
    if count is None:
        count = cap
    elif count > cap:
        raise CountExceedsCapacity(f"requested {count} bits, capacity is {cap}")
    return img.reshape(-1)[:count] & 1


def embed_text(img: np.ndarray, text: str, framing: Framing = Framing.MARKER) -> np.ndarray:
    """Frame ``text`` as a UTF-8 payload and embed it."""
    payload = codec.frame(codec.text_to_bytes(text), framing)
    return embed(img, codec.bytes_to_bits(payload))


def extract_text_strict(img: np.ndarray, framing: Framing = Framing.MARKER) -> str:
    """Extract and decode a framed payload, raising on any inconsistency.

    Raises :class:`MarkerNotFound` when the end marker is absent and
    :class:`InvalidUtf8` when the payload bytes do not decode.
    """
    data, _ = codec.bits_to_bytes(extract_bits(img))
    payload, marker_found = codec.deframe(data, framing)
    if not marker_found:
        raise MarkerNotFound("end marker absent; extraction incomplete or corrupted")
    return codec.bytes_to_text_strict(payload)


def extract_payload(img: np.ndarray, framing: Framing = Framing.MARKER) -> tuple[bytes, bool]:
    """Extract the framed payload bytes leniently (for recovery pipelines)."""
    data, _ = codec.bits_to_bytes(extract_bits(img))
    return codec.deframe_lenient(data, framing)
