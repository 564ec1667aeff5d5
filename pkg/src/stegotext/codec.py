"""Text payload codec: UTF-8 bytes, end-marker framing, and bit packing.

The embedded payload is plain UTF-8 terminated by a four-byte end marker of
0xFF bytes.  0xFF can never occur inside valid UTF-8, so the marker is an
unambiguous terminator for uncorrupted payloads.  An optional length-prefixed
framing adds a 32-bit big-endian byte count in front of the payload (and still
appends the marker), which gives extraction a payload boundary that survives a
corrupted marker.
"""

from __future__ import annotations

import enum
import struct

import numpy as np

from .errors import InvalidUtf8, LengthOutOfRange, MarkerCollision

END_MARKER = b"\xff\xff\xff\xff"

_LEN_HEADER = struct.Struct(">I")


class Framing(enum.Enum):
    """How the payload is delimited inside the extracted byte stream."""

    MARKER = "marker"
    LENGTH = "length"


def text_to_bytes(text: str) -> bytes:
    """UTF-8 encode a message."""
    return text.encode("utf-8")


def bytes_to_text_strict(data: bytes) -> str:
    """Decode ``data`` as UTF-8, raising :class:`InvalidUtf8` on any defect.

    The raised error carries the offset of the first offending byte so the
    caller can fall back to resynchronizing decoding.
    """
    try:
        return bytes(data).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidUtf8(exc.start) from None


def frame(payload: bytes, framing: Framing = Framing.MARKER) -> bytes:
    """Append the end marker (and, for LENGTH framing, prepend a byte count)."""
    payload = bytes(payload)
    if END_MARKER in payload:
        raise MarkerCollision("payload contains the end marker byte sequence")
    if framing is Framing.MARKER:
        return payload + END_MARKER
    return _LEN_HEADER.pack(len(payload)) + payload + END_MARKER


def deframe(data: bytes, framing: Framing = Framing.MARKER) -> tuple[bytes, bool]:
    """Split a raw extracted stream into ``(payload, marker_found)``.

    MARKER framing returns everything before the first marker occurrence; if
    no marker exists the full input is returned with ``marker_found`` False
    and the caller should treat extraction as incomplete.  LENGTH framing
    slices the declared number of bytes and reports whether the following
    four bytes equal the marker.
    """
    data = bytes(data)
    if framing is Framing.MARKER:
        pos = data.find(END_MARKER)
        if pos < 0:
            return data, False
        return data[:pos], True
    if len(data) < _LEN_HEADER.size:
        raise LengthOutOfRange(0, len(data))
    (declared,) = _LEN_HEADER.unpack_from(data)
    body = data[_LEN_HEADER.size:]
    if declared > len(body):
        raise LengthOutOfRange(declared, len(body))
    payload = body[:declared]
    marker_found = body[declared:declared + 4] == END_MARKER
    return payload, marker_found


def deframe_lenient(data: bytes, framing: Framing = Framing.MARKER) -> tuple[bytes, bool]:
    """Best-effort deframing for noisy streams; never raises.

    For LENGTH framing the declared length and the marker position are
    cross-checked: when they disagree, an intact marker wins over a corrupted
    length header, and an out-of-range header falls back to a marker scan.
    Returns ``(payload, clean)`` where ``clean`` means the framing structure
    was fully consistent.
    """
    data = bytes(data)
    if framing is Framing.MARKER:
        return deframe(data, framing)
    if len(data) < _LEN_HEADER.size:
        return data, False
    (declared,) = _LEN_HEADER.unpack_from(data)
    body = data[_LEN_HEADER.size:]
    marker_pos = body.find(END_MARKER)
    if declared <= len(body) and body[declared:declared + 4] == END_MARKER:
        return body[:declared], True
    if marker_pos >= 0:
        return body[:marker_pos], False
    if declared <= len(body):
        return body[:declared], False
    return body, False


def bytes_to_bits(data: bytes) -> np.ndarray:
    """Expand bytes into a bit array (one uint8 per bit), MSB of each byte first."""
    return np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))


def bits_to_bytes(bits) -> tuple[bytes, int]:
    """Pack a bit sequence back into bytes.

    A trailing partial byte is dropped rather than rejected, because noisy
    extraction may yield a usable prefix that is not a multiple of 8 bits.
    Returns ``(data, dropped_bit_count)``.
    """
    bits = np.asarray(bits, dtype=np.uint8)
    dropped = len(bits) % 8
    if dropped:
        bits = bits[: len(bits) - dropped]
    return np.packbits(bits).tobytes(), dropped
