"""Image loading, saving, and synthetic cover generation.

Only lossless containers are supported: PNG and binary PPM.  Lossy formats
would destroy the least significant bits on the way through, so they are
rejected loudly rather than silently corrupting payloads.
"""

from __future__ import annotations

import logging

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import CorruptFile, IoFailure, UnsupportedFormat
from .lsb import check_image

logger = logging.getLogger(__name__)

_LOSSLESS = {"PNG", "PPM"}
_LOSSY = {"JPEG", "JPEG2000", "WEBP", "GIF"}


def load_image(path: str) -> np.ndarray:
    """Read a lossless image as an (H, W, 3) uint8 array.

    Non-RGB inputs are converted and a warning logged; alpha is dropped.
    """
    try:
        with Image.open(path) as img:
            fmt = img.format
            if fmt not in _LOSSLESS:
                if fmt in _LOSSY:
                    raise UnsupportedFormat(
                        f"{fmt} is lossy and would destroy embedded bits; use PNG or PPM")
                raise UnsupportedFormat(f"unsupported image format {fmt!r}; use PNG or PPM")
            if img.mode != "RGB":
                logger.warning("converting %s image to RGB (extra channels dropped)", img.mode)
                img = img.convert("RGB")
            arr = np.asarray(img, dtype=np.uint8)
    except UnidentifiedImageError as exc:
        raise CorruptFile(f"cannot parse image {path!r}: {exc}") from exc
    except FileNotFoundError as exc:
        raise IoFailure(f"cannot read {path!r}: {exc}") from exc
    except OSError as exc:
        # Pillow raises plain OSError for truncated or malformed pixel data
        raise CorruptFile(f"damaged image data in {path!r}: {exc}") from exc
    return check_image(arr)


def save_image(img: np.ndarray, path: str) -> None:
    """Write an (H, W, 3) uint8 array losslessly; format chosen by extension."""
    check_image(img)
    lower = path.lower()
    if lower.endswith(".png"):
        fmt = "PNG"
    elif lower.endswith(".ppm"):
        fmt = "PPM"
    else:
        raise UnsupportedFormat(f"refusing to write {path!r}: use a .png or .ppm extension")
    try:
        Image.fromarray(img, mode="RGB").save(path, format=fmt)
    except OSError as exc:
        raise IoFailure(f"cannot write {path!r}: {exc}") from exc


def synthetic_cover(width: int = 512, height: int = 512, seed: int = 0) -> np.ndarray:
    """Deterministic photo-like test pattern: smooth gradients plus grain.

    The grain keeps the LSB plane non-degenerate so embedding tests do not
    run against an accidentally all-zero bit plane.
    """
    y, x = np.mgrid[0:height, 0:width].astype(np.float64)
    r = 255.0 * x / max(width - 1, 1)
    g = 255.0 * y / max(height - 1, 1)
    b = 127.5 + 127.5 * np.sin(x / 17.0) * np.cos(y / 23.0)
    img = np.stack([r, g, b], axis=-1)
    rng = np.random.Generator(np.random.Philox(key=np.array([seed, 2], dtype=np.uint64)))
    img += rng.integers(-8, 9, size=img.shape).astype(np.float64)
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)
