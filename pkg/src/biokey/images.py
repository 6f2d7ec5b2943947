"""PGM (P2/P5) parsing and serialization for grayscale and binary rasters.

Grayscale images are 2-D uint8 arrays with 256 intensity levels.  Binary
images are 2-D uint8 arrays of {0, 1} where 1 marks ridge (foreground);
they serialize with ridges black (intensity 0) on a white background.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "PgmError",
    "PgmHeaderError",
    "PgmMaxvalError",
    "PgmDataError",
    "ensure_gray",
    "ensure_binary",
    "load_gray",
    "save_gray",
    "save_binary",
]

_WHITESPACE = b" \t\r\n\v\f"


class PgmError(ValueError):
    """Base class for PGM parsing failures."""


class PgmHeaderError(PgmError):
    """Missing, unknown, or malformed header tokens."""


class PgmMaxvalError(PgmError):
    """Maxval other than 255 (only 8-bit images are supported)."""


class PgmDataError(PgmError):
    """Pixel data truncated, surplus, or out of range."""


def ensure_gray(img) -> np.ndarray:
    """Validate and return a 2-D uint8 grayscale raster."""
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-D raster, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError(f"expected integer intensities, got dtype {arr.dtype}")
        if arr.min() < 0 or arr.max() > 255:
            raise ValueError("intensities outside [0, 255]")
        arr = arr.astype(np.uint8)
    return arr


def ensure_binary(img) -> np.ndarray:
    """Validate and return a 2-D uint8 raster of {0, 1} (1 = ridge)."""
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-D raster, got shape {arr.shape}")
    if arr.dtype == bool:
        return arr.astype(np.uint8)
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"expected integer pixels, got dtype {arr.dtype}")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("binary image may contain only 0 and 1")
    return arr.astype(np.uint8)


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Return the next header token and the offset just past it.

    Skips whitespace and '#' comments (which run to end of line).
    """
    n = len(data)
    while pos < n:
        byte = data[pos:pos + 1]
        if byte in _WHITESPACE:
            pos += 1
        elif byte == b"#":
            while pos < n and data[pos:pos + 1] not in b"\r\n":
                pos += 1
        else:
            break
    if pos >= n:
        raise PgmHeaderError("unexpected end of header")
    start = pos
    while pos < n and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _header_int(token: bytes, name: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise PgmHeaderError(f"{name} is not an integer: {token!r}") from None


def load_gray(data: bytes) -> np.ndarray:
    """Parse a P2 (ASCII) or P5 (binary) PGM into a grayscale raster.

    Only maxval 255 is accepted; pixel values are copied verbatim.
    """
    magic, pos = _next_token(data, 0)
    if magic not in (b"P2", b"P5"):
        raise PgmHeaderError(f"unsupported magic {magic!r} (want P2 or P5)")
    width_tok, pos = _next_token(data, pos)
    height_tok, pos = _next_token(data, pos)
    maxval_tok, pos = _next_token(data, pos)
    width = _header_int(width_tok, "width")
    height = _header_int(height_tok, "height")
    maxval = _header_int(maxval_tok, "maxval")
    if width < 1 or height < 1:
        raise PgmHeaderError(f"non-positive dimensions {width}x{height}")
    if maxval != 255:
        raise PgmMaxvalError(f"maxval {maxval} unsupported (only 255)")

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
            raise PgmDataError("missing raster data after header")
        raster = data[pos + 1:pos + 1 + count]
        if len(raster) < count:
            raise PgmDataError(
                f"truncated raster: expected {count} bytes, found {len(raster)}")
        pixels = np.frombuffer(raster, dtype=np.uint8, count=count)
    else:
        values = []
        while len(values) < count:
            try:
                token, pos = _next_token(data, pos)
            except PgmHeaderError:
                raise PgmDataError(
                    f"truncated raster: expected {count} samples, "
                    f"found {len(values)}") from None
            value = _header_int(token, "sample")
            if not 0 <= value <= 255:
                raise PgmDataError(f"sample {value} outside [0, 255]")
            values.append(value)
        pixels = np.array(values, dtype=np.uint8)
    return pixels.reshape(height, width)


def save_gray(img) -> bytes:
    """Serialize a grayscale raster as binary PGM (P5, maxval 255)."""
    arr = ensure_gray(img)
    height, width = arr.shape
    return b"P5\n%d %d\n255\n" % (width, height) + arr.tobytes()


def save_binary(img) -> bytes:
    """Serialize a binary raster as P5 with ridges black (0) on white (255)."""
    arr = ensure_binary(img)
    return save_gray((1 - arr) * np.uint8(255))
