"""Crossing-number minutiae extraction and false-minutiae filtering.

The 3x3 window around a skeleton pixel is read as a ring (x grows right,
y grows down):

    P4 P3 P2
    P5  C P1
    P6 P7 P8

P1 sits east of the center and the ring proceeds counter-clockwise.  The
crossing number is half the sum of absolute differences between ring
neighbors (P9 = P1); it is the same for any consistent ring ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .images import ensure_binary
from .morphology import has_2x2_block

__all__ = [
    "MinutiaKind",
    "Minutia",
    "MinutiaeSet",
    "NotThinnedError",
    "crossing_number",
    "extract_minutiae",
    "remove_false_minutiae",
]


class NotThinnedError(ValueError):
    """Raised when a skeleton operation receives a non-thinned image."""


class MinutiaKind(IntEnum):
    """Skeleton pixel classes; the value is the crossing number."""

    ISOLATED_POINT = 0
    RIDGE_ENDING = 1
    CONTINUING_RIDGE = 2
    BIFURCATION = 3
    CROSSING_POINT = 4

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    MinutiaKind.ISOLATED_POINT: "isolated",
    MinutiaKind.RIDGE_ENDING: "ending",
    MinutiaKind.CONTINUING_RIDGE: "continuing",
    MinutiaKind.BIFURCATION: "bifurcation",
    MinutiaKind.CROSSING_POINT: "crossing",
}


@dataclass(frozen=True)
class Minutia:
    """A classified skeleton feature at column x, row y."""

    x: int
    y: int
    cn: int
    kind: MinutiaKind

    def __post_init__(self):
        if not 0 <= self.cn <= 4:
            raise ValueError(f"crossing number {self.cn} outside [0, 4]")
        if self.kind != MinutiaKind(self.cn):
            raise ValueError(f"kind {self.kind!r} does not match cn {self.cn}")


@dataclass(frozen=True)
class MinutiaeSet:
    """Ridge endings and bifurcations sorted by (y, x), plus source size."""

    minutiae: tuple[Minutia, ...]
    source_dims: tuple[int, int]  # (width, height)

    def __post_init__(self):
        coords = [(m.y, m.x) for m in self.minutiae]
        if coords != sorted(set(coords)):
            raise ValueError("minutiae must be strictly sorted by (y, x)")
        for m in self.minutiae:
            if m.kind not in (MinutiaKind.RIDGE_ENDING, MinutiaKind.BIFURCATION):
                raise ValueError(f"{m.kind!r} is not a minutia kind")

    def __len__(self) -> int:
        return len(self.minutiae)

    def __iter__(self):
        return iter(self.minutiae)

    def count(self, kind: MinutiaKind) -> int:
        return sum(1 for m in self.minutiae if m.kind == kind)

    def to_text(self) -> str:
        """One ASCII line per minutia: 'x y kind cn', sorted by (y, x)."""
        return "".join(f"{m.x} {m.y} {m.kind.label} {m.cn}\n" for m in self.minutiae)


def crossing_number(window) -> int:
    """Crossing number of the 3x3 window's center pixel."""
    w = np.asarray(window)
    if w.shape != (3, 3):
        raise ValueError(f"expected a 3x3 window, got shape {w.shape}")
    if not np.isin(w, (0, 1)).all():
        raise ValueError("window values must be 0 or 1")
    ring = (int(w[1, 2]), int(w[0, 2]), int(w[0, 1]), int(w[0, 0]),
            int(w[1, 0]), int(w[2, 0]), int(w[2, 1]), int(w[2, 2]))
    return sum(abs(ring[i] - ring[(i + 1) % 8]) for i in range(8)) // 2


def extract_minutiae(skeleton) -> MinutiaeSet:
    """Classify every interior skeleton pixel and collect the minutiae.

    Pixels with crossing number 1 become ridge endings, 3 become
    bifurcations; everything else is not a minutia.  The outermost
    1-pixel border is skipped (its window is incomplete).  Input that
    still contains a 2x2 foreground block has not been thinned and is
    rejected.
    """
    arr = ensure_binary(skeleton)
    if has_2x2_block(arr):
        raise NotThinnedError("skeleton contains a 2x2 foreground block; run thin() first")
    height, width = arr.shape
    p = np.pad(arr, 1)
    ring = (p[1:-1, 2:], p[:-2, 2:], p[:-2, 1:-1], p[:-2, :-2],
            p[1:-1, :-2], p[2:, :-2], p[2:, 1:-1], p[2:, 2:])
    transitions = sum(np.abs(ring[i].astype(np.int16) - ring[(i + 1) % 8])
                      for i in range(8))
    cn = transitions // 2

    interior = np.zeros_like(arr, dtype=bool)
    if height > 2 and width > 2:
        interior[1:-1, 1:-1] = True
    candidates = (arr == 1) & interior & ((cn == 1) | (cn == 3))
    found = tuple(
        Minutia(x=int(x), y=int(y), cn=int(cn[y, x]), kind=MinutiaKind(int(cn[y, x])))
        for y, x in np.argwhere(candidates))
    return MinutiaeSet(minutiae=found, source_dims=(width, height))


def remove_false_minutiae(mset: MinutiaeSet, dist: float = 6.0,
                          border: int = 10) -> MinutiaeSet:
    """Filter artifacts: trim the image border, then drop close pairs.

    A minutia within `border` pixels of any image edge is removed, then
    every pair closer than `dist` loses both members regardless of kind
    (covers ridge breaks, spurs, and bridges).  Applying the same filter
    twice changes nothing.
    """
    if dist <= 0:
        raise ValueError(f"dist must be positive, got {dist}")
    if border < 0:
        raise ValueError(f"border must be non-negative, got {border}")
    width, height = mset.source_dims
    inner = [m for m in mset
             if border <= m.x < width - border and border <= m.y < height - border]

    close = set()
    for i, a in enumerate(inner):
        for b in inner[i + 1:]:
            if (a.x - b.x) ** 2 + (a.y - b.y) ** 2 < dist * dist:
                close.add((a.y, a.x))
                close.add((b.y, b.x))
    kept = tuple(m for m in inner if (m.y, m.x) not in close)
    return MinutiaeSet(minutiae=kept, source_dims=mset.source_dims)
