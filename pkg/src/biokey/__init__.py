"""Fingerprint-derived DES keys.

A grayscale fingerprint is enhanced, binarized, thinned, and scanned for
ridge endings and bifurcations; the surviving minutiae are packed into a
bit string and recursively reduced to a 64-bit key, which drives a
from-scratch DES (ECB + PKCS#7) for text encryption.
"""

from .des import (BadPadding, MalformedCiphertext, RoundKeySchedule,
                  decrypt_block, decrypt_text, encrypt_block, encrypt_text,
                  feistel_f, is_weak_key, key_schedule)
from .enhance import HistogramMap, binarize, histogram_equalize
from .images import (PgmDataError, PgmError, PgmHeaderError, PgmMaxvalError,
                     load_gray, save_binary, save_gray)
from .keygen import (DesKey, InsufficientMinutiaeError, encode_minutiae,
                     key_to_hex, reduce_key)
from .minutiae import (Minutia, MinutiaeSet, MinutiaKind, NotThinnedError,
                       crossing_number, extract_minutiae, remove_false_minutiae)
from .morphology import clean_artifacts, dilate, erode, has_2x2_block, thin
from .pipeline import PipelineConfig, PipelineResult, derive_key, run_pipeline

__version__ = "0.1.0"

__all__ = [
    "BadPadding",
    "MalformedCiphertext",
    "RoundKeySchedule",
    "decrypt_block",
    "decrypt_text",
    "encrypt_block",
    "encrypt_text",
    "feistel_f",
    "is_weak_key",
    "key_schedule",
    "HistogramMap",
    "binarize",
    "histogram_equalize",
    "PgmDataError",
    "PgmError",
    "PgmHeaderError",
    "PgmMaxvalError",
    "load_gray",
    "save_binary",
    "save_gray",
    "DesKey",
    "InsufficientMinutiaeError",
    "encode_minutiae",
    "key_to_hex",
    "reduce_key",
    "Minutia",
    "MinutiaeSet",
    "MinutiaKind",
    "NotThinnedError",
    "crossing_number",
    "extract_minutiae",
    "remove_false_minutiae",
    "clean_artifacts",
    "dilate",
    "erode",
    "has_2x2_block",
    "thin",
    "PipelineConfig",
    "PipelineResult",
    "derive_key",
    "run_pipeline",
    "__version__",
]
