"""End-to-end wiring: grayscale image -> skeleton -> minutiae -> key.

Stage order: histogram equalization, adaptive binarization, one artifact
cleanup pass, thinning, crossing-number extraction, false-minutiae
filtering, bit encoding, drop-and-swap reduction.  Every run is fully
deterministic for a given image and configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Optional

import numpy as np

from .enhance import HistogramMap, binarize, histogram_equalize
from .images import ensure_gray
from .keygen import (DesKey, InsufficientMinutiaeError, encode_minutiae,
                     reduce_key, reduction_iterations)
from .minutiae import MinutiaeSet, extract_minutiae, remove_false_minutiae
from .morphology import clean_artifacts, thin

__all__ = ["PipelineConfig", "PipelineResult", "run_pipeline", "derive_key"]


@dataclass(frozen=True)
class PipelineConfig:
    """Every tunable the derivation depends on, with its default."""

    block_size: int = 16
    flatness: int = 8
    false_minutiae_dist: float = 6.0
    border_trim: int = 10

    def __post_init__(self):
        for field in fields(self):
            if getattr(self, field.name) <= 0:
                raise ValueError(f"{field.name} must be strictly positive")

    @classmethod
    def from_text(cls, text: str) -> "PipelineConfig":
        """Parse 'key = value' lines; '#' comments and blank lines allowed."""
        known = {field.name for field in fields(cls)}
        values = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not key or not value:
                raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
            if key not in known:
                raise ValueError(f"line {lineno}: unknown option {key!r}")
            try:
                values[key] = float(value) if key == "false_minutiae_dist" else int(value)
            except ValueError:
                raise ValueError(f"line {lineno}: bad value {value!r} for {key}") from None
        return cls(**values)


@dataclass(frozen=True)
class PipelineResult:
    """All intermediate stages plus the derived key (None if too few minutiae)."""

    equalized: np.ndarray
    histogram: HistogramMap
    binary: np.ndarray
    cleaned: np.ndarray
    thinned: np.ndarray
    raw_minutiae: MinutiaeSet
    minutiae: MinutiaeSet
    bits: tuple[int, ...]
    iterations: Optional[int]
    key: Optional[DesKey]


def run_pipeline(img, config: PipelineConfig = PipelineConfig()) -> PipelineResult:
    """Run every stage and keep the intermediates for inspection."""
    gray = ensure_gray(img)
    equalized, histogram = histogram_equalize(gray)
    binary = binarize(equalized, block=config.block_size, flatness=config.flatness)
    cleaned = clean_artifacts(binary)
    thinned = thin(cleaned)
    raw = extract_minutiae(thinned)
    filtered = remove_false_minutiae(raw, dist=config.false_minutiae_dist,
                                     border=config.border_trim)
    bits = tuple(encode_minutiae(filtered))
    try:
        key = reduce_key(bits)
        iterations = reduction_iterations(len(bits))
    except InsufficientMinutiaeError:
        key = None
        iterations = None
    return PipelineResult(equalized=equalized, histogram=histogram, binary=binary,
                          cleaned=cleaned, thinned=thinned, raw_minutiae=raw,
                          minutiae=filtered, bits=bits, iterations=iterations, key=key)


def derive_key(img, config: PipelineConfig = PipelineConfig()) -> DesKey:
    """Run the pipeline and return the key, or raise InsufficientMinutiaeError."""
    result = run_pipeline(img, config)
    if result.key is None:
        raise InsufficientMinutiaeError(len(result.bits))
    return result.key
