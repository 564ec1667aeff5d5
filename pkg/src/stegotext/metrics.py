"""Accuracy and distortion metrics.

Character accuracy is N/T where T is the length of the original text and N
counts recovered characters, under one of two matching rules:

* ``positional``: the character at index i must match exactly.
* ``aligned``: N is the length of the longest common subsequence, which
  forgives the index shifts that byte-level damage introduces.

Image distortion is reported as mean squared error over all samples plus
the usual PSNR against peak value 255.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, LengthMismatch
from .lsb import check_image

MODE_POSITIONAL = "positional"
MODE_ALIGNED = "aligned"


def lcs_length(a: str, b: str) -> int:
    """Length of the longest common subsequence of two strings.

    Bit-parallel row update (Allison-Dix): the DP row is stored as the bit
    vector of its increments, so each input character costs a handful of
    word operations on a len(a)-bit integer, O(len(a)*len(b)/wordsize)
    overall instead of the quadratic cell-by-cell table.
    """
    if len(a) > len(b):
        a, b = b, a
    if not a:
        return 0
    masks: dict[str, int] = {}
    bit = 1
    for ch in a:
        masks[ch] = masks.get(ch, 0) | bit
        bit <<= 1
    v = 0
    for ch in b:
        t = v | masks.get(ch, 0)
        # subtract the shifted row to propagate a borrow through each run of
        # matches, keeping exactly one new bit per run
        v = t & ~(t - ((v << 1) | 1))
    return v.bit_count()


@dataclass
class AccuracyReport:
    """Recovered-character count N over original length T."""

    matched: int
    total: int
    mode: str

    @property
    def accuracy(self) -> float:
        return 1.0 if self.total == 0 else self.matched / self.total

    def as_dict(self) -> dict:
        return {
            "N": self.matched,
            "T": self.total,
            "accuracy": self.accuracy,
            "mode": self.mode,
        }


def char_accuracy(original: str, extracted: str, mode: str = MODE_ALIGNED) -> AccuracyReport:
    """Fraction of the original characters present in the extraction."""
    if mode == MODE_POSITIONAL:
        matched = sum(1 for x, y in zip(original, extracted) if x == y)
    elif mode == MODE_ALIGNED:
        matched = lcs_length(original, extracted)
    else:
        raise ValueError(f"unknown accuracy mode {mode!r}")
    return AccuracyReport(matched, len(original), mode)


@dataclass
class DistortionReport:
    mse: float
    psnr: float
    sample_count: int

    def as_dict(self) -> dict:
        # JSON has no Infinity; identical images serialize psnr as null
        return {
            "mse": self.mse,
            "psnr": None if math.isinf(self.psnr) else self.psnr,
            "sample_count": self.sample_count,
        }


def mse(a: np.ndarray, b: np.ndarray) -> DistortionReport:
    """Mean squared error over every sample of two equal-shape images."""
    check_image(a)
    check_image(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"image shapes differ: {a.shape} vs {b.shape}")
    diff = a.astype(np.float64) - b.astype(np.float64)
    value = float(np.mean(diff * diff))
    psnr = math.inf if value == 0.0 else 10.0 * math.log10(255.0 ** 2 / value)
    return DistortionReport(value, psnr, a.size)


def bit_error_rate(sent: np.ndarray, received: np.ndarray) -> float:
    """Fraction of differing bits between two equal-length bit arrays."""
    sent = np.asarray(sent)
    received = np.asarray(received)
    if sent.shape != received.shape:
        raise LengthMismatch(f"bit array shapes differ: {sent.shape} vs {received.shape}")
    if sent.size == 0:
        return 0.0
    return float(np.mean(sent != received))
