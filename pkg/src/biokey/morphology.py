"""Binary morphology and skeleton thinning.

All operators use a 3x3 square structuring element and treat pixels
outside the image as background.  thin() runs parallel two-subpass
Zhang-Suen iterations to a fixpoint, then dissolves any leftover 2x2
foreground blocks by deleting topology-preserving pixels, so skeletons
come out one pixel wide with connectivity intact.
"""

from __future__ import annotations

import numpy as np

from .images import ensure_binary

__all__ = ["erode", "dilate", "clean_artifacts", "thin", "has_2x2_block"]


def _neighborhood(img: np.ndarray):
    """Views of the 8 neighbors of every pixel, zero beyond the border.

    Returned clockwise from north: n, ne, e, se, s, sw, w, nw.
    """
    p = np.pad(img, 1)
    return (p[:-2, 1:-1], p[:-2, 2:], p[1:-1, 2:], p[2:, 2:],
            p[2:, 1:-1], p[2:, :-2], p[1:-1, :-2], p[:-2, :-2])


def erode(img) -> np.ndarray:
    """Pixel survives only if its full 3x3 neighborhood is foreground."""
    arr = ensure_binary(img)
    out = arr.copy()
    for view in _neighborhood(arr):
        out &= view
    return out


def dilate(img) -> np.ndarray:
    """Pixel becomes foreground if anything in its 3x3 neighborhood is."""
    arr = ensure_binary(img)
    out = arr.copy()
    for view in _neighborhood(arr):
        out |= view
    return out


def clean_artifacts(img) -> np.ndarray:
    """Drop isolated foreground pixels and fill single-pixel holes."""
    arr = ensure_binary(img)
    support = sum(view.astype(np.uint8) for view in _neighborhood(arr))
    out = arr.copy()
    out[(arr == 1) & (support == 0)] = 0
    out[(arr == 0) & (support == 8)] = 1
    return out


def has_2x2_block(img) -> bool:
    """True if any 2x2 window is entirely foreground."""
    arr = ensure_binary(img)
    return bool((arr[:-1, :-1] & arr[:-1, 1:] & arr[1:, :-1] & arr[1:, 1:]).any())


def _zs_subpass(img: np.ndarray, second: bool) -> np.ndarray:
    """One parallel Zhang-Suen subpass; reads img, returns a fresh raster.

    Deletes foreground pixels with 2..6 foreground neighbors, exactly one
    0->1 transition around the neighbor ring, and the subpass's two
    directional products zero.
    """
    n, ne, e, se, s, sw, w, nw = _neighborhood(img)
    ring = (n, ne, e, se, s, sw, w, nw)
    support = sum(v.astype(np.uint8) for v in ring)
    transitions = sum(((ring[i] == 0) & (ring[(i + 1) % 8] == 1)).astype(np.uint8)
                      for i in range(8))
    if not second:
        directional = ((n & e & s) == 0) & ((e & s & w) == 0)
    else:
        directional = ((n & e & w) == 0) & ((n & s & w) == 0)
    doomed = (img == 1) & (support >= 2) & (support <= 6) \
        & (transitions == 1) & directional
    out = img.copy()
    out[doomed] = 0
    return out


def _yokoi8(e, ne, n, nw, w, sw, s, se) -> int:
    """8-connectivity number of the center pixel (1 means deletable)."""
    ring = (1 - e, 1 - ne, 1 - n, 1 - nw, 1 - w, 1 - sw, 1 - s, 1 - se)
    total = 0
    for k in (0, 2, 4, 6):
        total += ring[k] - ring[k] * ring[(k + 1) % 8] * ring[(k + 2) % 8]
    return total


def _dissolve_2x2(img: np.ndarray) -> np.ndarray:
    """Break residual 2x2 blocks by deleting simple (safe) pixels.

    Deletions happen sequentially in raster order and only where the
    8-connectivity number is 1, so components never split or vanish.
    Blocks where no member is simple (crossing-like junctions) stay.
    """
    p = np.pad(img, 1)
    while True:
        deleted = False
        blocks = np.argwhere(p[:-1, :-1] & p[:-1, 1:] & p[1:, :-1] & p[1:, 1:])
        for by, bx in blocks:
            if not (p[by, bx] and p[by, bx + 1] and p[by + 1, bx] and p[by + 1, bx + 1]):
                continue
            for y, x in ((by, bx), (by, bx + 1), (by + 1, bx), (by + 1, bx + 1)):
                simple = _yokoi8(
                    int(p[y, x + 1]), int(p[y - 1, x + 1]), int(p[y - 1, x]),
                    int(p[y - 1, x - 1]), int(p[y, x - 1]), int(p[y + 1, x - 1]),
                    int(p[y + 1, x]), int(p[y + 1, x + 1])) == 1
                if simple:
                    p[y, x] = 0
                    deleted = True
                    break
        if not deleted:
            return p[1:-1, 1:-1]


def thin(img) -> np.ndarray:
    """Thin foreground to a one-pixel-wide skeleton (Zhang-Suen).

    Subpasses repeat until nothing changes, then residual 2x2 blocks are
    dissolved and the whole cycle reruns until a global fixpoint, which
    makes thin idempotent.  Note the parallel subpasses erase isolated
    2x2 squares entirely; larger components keep their connectivity.
    """
    current = ensure_binary(img).copy()
    while True:
        skeleton = current
        while True:
            after = _zs_subpass(_zs_subpass(skeleton, second=False), second=True)
            if (after == skeleton).all():
                break
            skeleton = after
        skeleton = _dissolve_2x2(skeleton)
        if (skeleton == current).all():
            return current
        current = skeleton
