"""Contrast enhancement and ridge/valley binarization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .images import ensure_gray

__all__ = ["HistogramMap", "histogram_equalize", "binarize"]


@dataclass(frozen=True)
class HistogramMap:
    """Level remapping produced by equalization.

    mapping[j] is the output intensity for input level j; it is
    monotonically non-decreasing.  source_histogram holds the input
    level counts the mapping was derived from.
    """

    mapping: np.ndarray
    source_histogram: np.ndarray


def histogram_equalize(img) -> tuple[np.ndarray, HistogramMap]:
    """Equalize contrast by remapping each level to its scaled cdf.

    Output level for input level j is round(255 * cdf(j)) with ties
    rounded up, so a constant image maps to full scale.
    """
    arr = ensure_gray(img)
    hist = np.bincount(arr.ravel(), minlength=256)
    cdf = np.cumsum(hist) / arr.size
    mapping = np.floor(255.0 * cdf + 0.5).astype(np.uint8)
    return mapping[arr], HistogramMap(mapping=mapping, source_histogram=hist)


def binarize(img, block: int = 16, flatness: int = 8) -> np.ndarray:
    """Adaptive threshold: ridge (1) where intensity < its block's mean.

    The image is tiled into block x block cells aligned to the origin
    (edge cells may be smaller).  Cells whose intensity range is below
    `flatness` carry no ridge structure and become background entirely.
    """
    arr = ensure_gray(img)
    if block < 1:
        raise ValueError(f"block must be positive, got {block}")
    height, width = arr.shape
    out = np.zeros((height, width), dtype=np.uint8)
    for top in range(0, height, block):
        for left in range(0, width, block):
            cell = arr[top:top + block, left:left + block]
            if int(cell.max()) - int(cell.min()) < flatness:
                continue
            out[top:top + block, left:left + block] = cell < cell.mean()
    return out
