from pathlib import Path

import pytest

FIXTURE_PGM = Path(__file__).parent / "data" / "fingerprint.pgm"

# golden regression values for the checked-in fixture, produced by the
# finished pipeline at default configuration and frozen here
GOLDEN_KEY = "AFA515EE46AB2B0D"
GOLDEN_ENDINGS = 21
GOLDEN_BIFURCATIONS = 19
GOLDEN_RAW_ENDINGS = 64
GOLDEN_RAW_BIFURCATIONS = 47
GOLDEN_BITS = 320
GOLDEN_ITERATIONS = 4


@pytest.fixture(scope="session")
def fixture_bytes() -> bytes:
    return FIXTURE_PGM.read_bytes()


@pytest.fixture(scope="session")
def fixture_image(fixture_bytes):
    from biokey.images import load_gray

    return load_gray(fixture_bytes)
