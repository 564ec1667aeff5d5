from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from stegotext import (
    END_MARKER,
    Framing,
    InvalidUtf8,
    LengthOutOfRange,
    MarkerCollision,
    MarkerNotFound,
    bits_to_bytes,
    bytes_to_bits,
    bytes_to_text_strict,
    deframe,
    deframe_lenient,
    frame,
    text_to_bytes,
)

text_messages = st.text(alphabet=st.characters(codec="utf-8"), max_size=200)


def test_marker_value():
    assert END_MARKER == b"\xff\xff\xff\xff"


def test_text_roundtrip_cjk():
    data = text_to_bytes("你好世界")
    assert data == "你好世界".encode("utf-8")
    assert bytes_to_text_strict(data) == "你好世界"


def test_strict_decode_reports_offset():
    bad = b"ab\xff\xfecd"
    with pytest.raises(InvalidUtf8) as exc_info:
        bytes_to_text_strict(bad)
    assert exc_info.value.offset == 2


@given(text_messages, st.sampled_from(list(Framing)))
def test_frame_roundtrip(message, framing):
    payload = text_to_bytes(message)
    framed = frame(payload, framing)
    assert deframe(framed, framing) == (payload, True)
    assert bytes_to_text_strict(payload) == message


@given(text_messages)
def test_marker_never_inside_valid_utf8(message):
    # 0xFF cannot appear in well-formed UTF-8, so the marker cannot collide
    assert END_MARKER not in text_to_bytes(message)


def test_framing_overhead():
    payload = "abc".encode()
    assert len(frame(payload, Framing.MARKER)) == len(payload) + 4
    assert len(frame(payload, Framing.LENGTH)) == len(payload) + 8


def test_frame_rejects_marker_collision():
    with pytest.raises(MarkerCollision):
        frame(b"a" + END_MARKER + b"b", Framing.MARKER)
    with pytest.raises(MarkerCollision):
        frame(END_MARKER, Framing.LENGTH)


def test_deframe_marker_stops_at_first_marker():
    framed = b"abc" + END_MARKER + b"def" + END_MARKER
    assert deframe(framed, Framing.MARKER) == (b"abc", True)


def test_deframe_marker_missing():
    assert deframe(b"abcdef", Framing.MARKER) == (b"abcdef", False)


def test_deframe_length_declared_out_of_range():
    framed = bytearray(frame(b"abc", Framing.LENGTH))
    framed[0:4] = (10_000).to_bytes(4, "big")
    with pytest.raises(LengthOutOfRange):
        deframe(bytes(framed), Framing.LENGTH)


def test_deframe_length_truncated_header():
    with pytest.raises(LengthOutOfRange):
        deframe(b"\x00\x01", Framing.LENGTH)


def test_deframe_lenient_corrupt_header_recovers_via_marker():
    framed = bytearray(frame(b"hello world", Framing.LENGTH))
    framed[1] ^= 0xFF  # scramble the declared length
    payload, clean = deframe_lenient(bytes(framed), Framing.LENGTH)
    assert payload == b"hello world"
    assert not clean


def test_deframe_lenient_corrupt_marker_uses_declared_length():
    framed = bytearray(frame(b"hello world", Framing.LENGTH))
    framed[-2] ^= 0x01  # break the end marker
    payload, clean = deframe_lenient(bytes(framed), Framing.LENGTH)
    assert payload == b"hello world"
    assert not clean


@given(st.binary(max_size=64), st.sampled_from(list(Framing)))
def test_deframe_lenient_total(data, framing):
    payload, clean = deframe_lenient(data, framing)
    assert isinstance(payload, bytes)
    assert isinstance(clean, bool)


@given(st.binary(max_size=128))
def test_bit_roundtrip(data):
    bits = bytes_to_bits(data)
    assert bits.dtype == np.uint8
    assert len(bits) == 8 * len(data)
    recovered, dropped = bits_to_bytes(bits)
    assert recovered == data
    assert dropped == 0


def test_bits_msb_first():
    assert bytes_to_bits(b"\x80").tolist() == [1, 0, 0, 0, 0, 0, 0, 0]
    assert bytes_to_bits(b"\x01").tolist() == [0, 0, 0, 0, 0, 0, 0, 1]


def test_bits_to_bytes_drops_partial_trailing_byte():
    bits = bytes_to_bits(b"\xab\xcd")
    recovered, dropped = bits_to_bytes(bits[:11])
    assert recovered == b"\xab"
    assert dropped == 3
