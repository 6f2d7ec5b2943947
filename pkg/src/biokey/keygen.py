"""Minutiae encoding and recursive reduction to a 64-bit cipher key.

Each minutia contributes one fixed-width 8-bit record (the low four bits
of each coordinate), giving a bit string that the drop-and-swap loop
compresses: trim the length to a multiple of 64, then repeatedly drop
the outer 32 bits on each side and swap the remaining halves until
exactly 64 bits are left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .minutiae import MinutiaeSet

__all__ = [
    "DesKey",
    "InsufficientMinutiaeError",
    "encode_minutiae",
    "reduce_key",
    "reduction_iterations",
    "key_to_hex",
]

MIN_BITS = 128
MIN_MINUTIAE = MIN_BITS // 8


class InsufficientMinutiaeError(ValueError):
    """Too little key material to run the reduction."""

    def __init__(self, bit_count: int):
        self.bit_count = bit_count
        super().__init__(
            f"key reduction needs at least {MIN_BITS} bits after trimming "
            f"({MIN_MINUTIAE} minutiae); got {bit_count} bits")


@dataclass(frozen=True)
class DesKey:
    """A 64-bit key, most-significant-bit first."""

    value: int

    def __post_init__(self):
        if not 0 <= self.value < 1 << 64:
            raise ValueError("key value outside 64 bits")

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (63 - i)) & 1 for i in range(64))

    @property
    def hex(self) -> str:
        return f"{self.value:016X}"

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "DesKey":
        if len(bits) != 64:
            raise ValueError(f"expected 64 bits, got {len(bits)}")
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit value {b!r} is not 0 or 1")
            value = (value << 1) | b
        return cls(value)

    @classmethod
    def from_hex(cls, text: str) -> "DesKey":
        if len(text) != 16 or not all(c in "0123456789abcdefABCDEF" for c in text):
            raise ValueError(f"expected 16 hex digits, got {len(text)}: {text!r}")
        return cls(int(text, 16))


def encode_minutiae(mset: MinutiaeSet) -> list[int]:
    """Concatenate one 8-bit record per minutia in (y, x) order.

    The high nibble is x mod 16 and the low nibble y mod 16, each
    most-significant-bit first.
    """
    bits: list[int] = []
    for m in mset:
        record = ((m.x % 16) << 4) | (m.y % 16)
        bits.extend((record >> (7 - i)) & 1 for i in range(8))
    return bits


def reduce_key(keyset: Sequence[int]) -> DesKey:
    """Compress a bit string to 64 bits by the drop-and-swap recursion.

    Trailing length-mod-64 bits are discarded first; the trimmed string
    must hold at least 128 bits.  Each pass drops the first and last 32
    bits and swaps the halves of what remains, ending at exactly 64.
    """
    bits = list(keyset)
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bit value {b!r} is not 0 or 1")
    trimmed = bits[:len(bits) - (len(bits) % 64)] if len(bits) % 64 else bits
    if len(trimmed) < MIN_BITS:
        raise InsufficientMinutiaeError(len(bits))
    while len(trimmed) > 64:
        middle = trimmed[32:-32]
        half = len(middle) // 2
        trimmed = middle[half:] + middle[:half]
    return DesKey.from_bits(trimmed)


def reduction_iterations(bit_count: int) -> int:
    """Number of drop-and-swap passes reduce_key runs for this length."""
    trimmed = bit_count - (bit_count % 64)
    if trimmed < MIN_BITS:
        raise InsufficientMinutiaeError(bit_count)
    return trimmed // 64 - 1


def key_to_hex(key: DesKey) -> str:
    """16 uppercase hex digits, most significant nibble first."""
    return key.hex
