"""Seeded channel corruption for stego images.

Randomness comes from a counter-based Philox generator keyed by
``(seed, purpose)``, so a given (image, spec) pair always yields a
bit-identical result regardless of how callers batch or parallelize runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidNoiseSpec, InvalidProbability, InvalidSigma
from .lsb import check_image

LSB_FLIP = "lsb-flip"
SALT_PEPPER = "salt-pepper"
GAUSSIAN = "gaussian"

_KINDS = (LSB_FLIP, SALT_PEPPER, GAUSSIAN)

# Philox key domains; message sampling uses domain 1 (see sweep module).
_NOISE_DOMAIN = 0


@dataclass(frozen=True)
class NoiseSpec:
    """Corruption description: kind, intensity parameter, and seed."""

    kind: str
    param: float
    seed: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidNoiseSpec(f"unknown noise kind {self.kind!r}; expected one of {_KINDS}")
        if self.kind in (LSB_FLIP, SALT_PEPPER):
            if not 0.0 <= self.param <= 1.0:
                raise InvalidProbability(f"probability {self.param} outside [0, 1]")
        elif self.param < 0.0:
            raise InvalidSigma(f"sigma {self.param} is negative")

    def __str__(self):
        return f"{self.kind}:{self.param:g}"


def parse_noise_spec(text: str, seed: int = 0) -> NoiseSpec:
    """Parse the CLI syntax ``kind:param``, e.g. ``lsb-flip:0.001``."""
    kind, sep, param = text.partition(":")
    if not sep:
        raise InvalidNoiseSpec(f"expected kind:param, got {text!r}")
    try:
        value = float(param)
    except ValueError:
        raise InvalidNoiseSpec(f"bad noise parameter {param!r}") from None
    return NoiseSpec(kind.strip(), value, seed)


def _rng(seed: int) -> np.random.Generator:
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, _NOISE_DOMAIN], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def apply_noise(img: np.ndarray, spec: NoiseSpec) -> np.ndarray:
    """Return a corrupted copy of ``img``; the input is never modified."""
    img = check_image(img)
    rng = _rng(spec.seed)
    flat = img.reshape(-1)
    n = flat.size

    if spec.kind == LSB_FLIP:
        # Inverts LSBs only; the upper 7 bits of every sample are preserved.
        mask = (rng.random(n) < spec.param).astype(np.uint8)
        out = flat ^ mask
    elif spec.kind == SALT_PEPPER:
        hit = rng.random(n) < spec.param
        salt = rng.random(n) < 0.5
        out = flat.copy()
        out[hit] = np.where(salt[hit], 255, 0).astype(np.uint8)
    else:
        delta = rng.normal(0.0, spec.param, n) if spec.param > 0 else np.zeros(n)
        shifted = flat.astype(np.float64) + delta
        # Round half away from zero, then clamp to the sample range.
        rounded = np.sign(shifted) * np.floor(np.abs(shifted) + 0.5)
        out = np.clip(rounded, 0, 255).astype(np.uint8)

    return out.reshape(img.shape)


def flip_count(a: np.ndarray, b: np.ndarray) -> int:
    """Hamming distance over the LSB plane of two equally sized images."""
    a = check_image(a)
    b = check_image(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    return int(np.count_nonzero((a ^ b) & 1))
