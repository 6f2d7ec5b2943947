#!/usr/bin/env python3
"""Regenerate tests/data/fingerprint.pgm.

The fixture is a deterministic synthetic ridge pattern: concentric
ridges with a smooth random phase field (whose dislocations create
endings and bifurcations), uneven illumination to exercise the adaptive
threshold, and a flat margin so edge tiles classify as background.
Uses the legacy RandomState generator, which is stable across numpy
versions and platforms.
"""

from pathlib import Path

import numpy as np

from biokey.images import save_gray

HEIGHT, WIDTH = 288, 256
SEED = 42
WAVES = 5
RIDGE_FREQ = 0.55


def make_fingerprint() -> np.ndarray:
    rng = np.random.RandomState(SEED)
    yy, xx = np.mgrid[0:HEIGHT, 0:WIDTH].astype(np.float64)
    radius = np.hypot(yy - HEIGHT / 2.0, xx - WIDTH / 2.0)
    phase = np.zeros((HEIGHT, WIDTH))
    for _ in range(WAVES):
        u, v = rng.uniform(-0.03, 0.03, 2)
        amplitude = rng.uniform(0.4, 1.0) * np.pi
        phase += amplitude * np.sin(
            2 * np.pi * (u * xx + v * yy) + rng.uniform(0, 2 * np.pi))
    ridges = np.sin(RIDGE_FREQ * radius + phase)
    edge = np.minimum.reduce([yy, xx, HEIGHT - 1 - yy, WIDTH - 1 - xx])
    window = np.clip((edge - 8.0) / 24.0, 0.0, 1.0)
    shading = 0.15 * np.sin(2 * np.pi * xx / WIDTH) + 0.1 * (yy / HEIGHT)
    img = 128 + 95 * ridges * window + 25 * shading
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "fingerprint.pgm"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(save_gray(make_fingerprint()))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
