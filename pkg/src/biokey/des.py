"""Data Encryption Standard built from the published tables.

Blocks, halves, and round keys are plain ints.  Bit numbering follows
the standard convention (bit 1 = most significant), so the permutation
tables read exactly as published.  Text encryption is ECB with PKCS#7
padding: deterministic and unauthenticated, kept for study purposes, not
as a secure construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .keygen import DesKey

__all__ = [
    "RoundKeySchedule",
    "MalformedCiphertext",
    "BadPadding",
    "key_schedule",
    "feistel_f",
    "encrypt_block",
    "decrypt_block",
    "encrypt_text",
    "decrypt_text",
    "is_weak_key",
    "IP", "FP", "E", "P", "PC1", "PC2", "KEY_SHIFTS", "SBOXES",
]


class MalformedCiphertext(ValueError):
    """Ciphertext length is not a positive multiple of the block size."""


class BadPadding(ValueError):
    """Decrypted data does not end in valid PKCS#7 padding."""


# initial permutation and its inverse (the final permutation)
IP = (58, 50, 42, 34, 26, 18, 10, 2,
      60, 52, 44, 36, 28, 20, 12, 4,
      62, 54, 46, 38, 30, 22, 14, 6,
      64, 56, 48, 40, 32, 24, 16, 8,
      57, 49, 41, 33, 25, 17, 9, 1,
      59, 51, 43, 35, 27, 19, 11, 3,
      61, 53, 45, 37, 29, 21, 13, 5,
      63, 55, 47, 39, 31, 23, 15, 7)
FP = (40, 8, 48, 16, 56, 24, 64, 32,
      39, 7, 47, 15, 55, 23, 63, 31,
      38, 6, 46, 14, 54, 22, 62, 30,
      37, 5, 45, 13, 53, 21, 61, 29,
      36, 4, 44, 12, 52, 20, 60, 28,
      35, 3, 43, 11, 51, 19, 59, 27,
      34, 2, 42, 10, 50, 18, 58, 26,
      33, 1, 41, 9, 49, 17, 57, 25)

# expansion of the right half from 32 to 48 bits
E = (32, 1, 2, 3, 4, 5,
     4, 5, 6, 7, 8, 9,
     8, 9, 10, 11, 12, 13,
     12, 13, 14, 15, 16, 17,
     16, 17, 18, 19, 20, 21,
     20, 21, 22, 23, 24, 25,
     24, 25, 26, 27, 28, 29,
     28, 29, 30, 31, 32, 1)

# straight permutation after the S-boxes
P = (16, 7, 20, 21, 29, 12, 28, 17,
     1, 15, 23, 26, 5, 18, 31, 10,
     2, 8, 24, 14, 32, 27, 3, 9,
     19, 13, 30, 6, 22, 11, 4, 25)

# parity drop (64 -> 56) and compression (56 -> 48) for the key schedule
PC1 = (57, 49, 41, 33, 25, 17, 9,
       1, 58, 50, 42, 34, 26, 18,
       10, 2, 59, 51, 43, 35, 27,
       19, 11, 3, 60, 52, 44, 36,
       63, 55, 47, 39, 31, 23, 15,
       7, 62, 54, 46, 38, 30, 22,
       14, 6, 61, 53, 45, 37, 29,
       21, 13, 5, 28, 20, 12, 4)
PC2 = (14, 17, 11, 24, 1, 5,
       3, 28, 15, 6, 21, 10,
       23, 19, 12, 4, 26, 8,
       16, 7, 27, 20, 13, 2,
       41, 52, 31, 37, 47, 55,
       30, 40, 51, 45, 33, 48,
       44, 49, 39, 56, 34, 53,
       46, 42, 50, 36, 29, 32)

KEY_SHIFTS = (1, 1, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 1)

# eight 6->4 substitution boxes, four rows of sixteen each; the row is
# selected by the outer two input bits, the column by the inner four
SBOXES = (
    # S1
    ((14, 4, 13, 1, 2, 15, 11, 8, 3, 10, 6, 12, 5, 9, 0, 7),
     (0, 15, 7, 4, 14, 2, 13, 1, 10, 6, 12, 11, 9, 5, 3, 8),
     (4, 1, 14, 8, 13, 6, 2, 11, 15, 12, 9, 7, 3, 10, 5, 0),
     (15, 12, 8, 2, 4, 9, 1, 7, 5, 11, 3, 14, 10, 0, 6, 13)),
    # S2
    ((15, 1, 8, 14, 6, 11, 3, 4, 9, 7, 2, 13, 12, 0, 5, 10),
     (3, 13, 4, 7, 15, 2, 8, 14, 12, 0, 1, 10, 6, 9, 11, 5),
     (0, 14, 7, 11, 10, 4, 13, 1, 5, 8, 12, 6, 9, 3, 2, 15),
     (13, 8, 10, 1, 3, 15, 4, 2, 11, 6, 7, 12, 0, 5, 14, 9)),
    # S3
    ((10, 0, 9, 14, 6, 3, 15, 5, 1, 13, 12, 7, 11, 4, 2, 8),
     (13, 7, 0, 9, 3, 4, 6, 10, 2, 8, 5, 14, 12, 11, 15, 1),
     (13, 6, 4, 9, 8, 15, 3, 0, 11, 1, 2, 12, 5, 10, 14, 7),
     (1, 10, 13, 0, 6, 9, 8, 7, 4, 15, 14, 3, 11, 5, 2, 12)),
    # S4
    ((7, 13, 14, 3, 0, 6, 9, 10, 1, 2, 8, 5, 11, 12, 4, 15),
     (13, 8, 11, 5, 6, 15, 0, 3, 4, 7, 2, 12, 1, 10, 14, 9),
     (10, 6, 9, 0, 12, 11, 7, 13, 15, 1, 3, 14, 5, 2, 8, 4),
     (3, 15, 0, 6, 10, 1, 13, 8, 9, 4, 5, 11, 12, 7, 2, 14)),
    # S5
    ((2, 12, 4, 1, 7, 10, 11, 6, 8, 5, 3, 15, 13, 0, 14, 9),
     (14, 11, 2, 12, 4, 7, 13, 1, 5, 0, 15, 10, 3, 9, 8, 6),
     (4, 2, 1, 11, 10, 13, 7, 8, 15, 9, 12, 5, 6, 3, 0, 14),
     (11, 8, 12, 7, 1, 14, 2, 13, 6, 15, 0, 9, 10, 4, 5, 3)),
    # S6
    ((12, 1, 10, 15, 9, 2, 6, 8, 0, 13, 3, 4, 14, 7, 5, 11),
     (10, 15, 4, 2, 7, 12, 9, 5, 6, 1, 13, 14, 0, 11, 3, 8),
     (9, 14, 15, 5, 2, 8, 12, 3, 7, 0, 4, 10, 1, 13, 11, 6),
     (4, 3, 2, 12, 9, 5, 15, 10, 11, 14, 1, 7, 6, 0, 8, 13)),
    # S7
    ((4, 11, 2, 14, 15, 0, 8, 13, 3, 12, 9, 7, 5, 10, 6, 1),
     (13, 0, 11, 7, 4, 9, 1, 10, 14, 3, 5, 12, 2, 15, 8, 6),
     (1, 4, 11, 13, 12, 3, 7, 14, 10, 15, 6, 8, 0, 5, 9, 2),
     (6, 11, 13, 8, 1, 4, 10, 7, 9, 5, 0, 15, 14, 2, 3, 12)),
    # S8
    ((13, 2, 8, 4, 6, 15, 11, 1, 10, 9, 3, 14, 5, 0, 12, 7),
     (1, 15, 13, 8, 10, 3, 7, 4, 12, 5, 6, 11, 0, 14, 9, 2),
     (7, 11, 4, 1, 9, 12, 14, 2, 0, 6, 10, 13, 15, 3, 5, 8),
     (2, 1, 14, 7, 4, 10, 8, 13, 15, 12, 9, 0, 3, 5, 6, 11)),
)


def _permute(value: int, width: int, table) -> int:
    """Reorder bits of a width-bit value; table entries index from bit 1 = MSB."""
    out = 0
    for pos in table:
        out = (out << 1) | ((value >> (width - pos)) & 1)
    return out


def _sbox_lookup(box_index: int, six_bits: int) -> int:
    row = ((six_bits >> 4) & 0b10) | (six_bits & 1)
    col = (six_bits >> 1) & 0xF
    return SBOXES[box_index][row][col]


def _build_sp() -> tuple[tuple[int, ...], ...]:
    """Per-box tables mapping 6 input bits straight to the permuted output."""
    tables = []
    for i in range(8):
        placed = [_permute(_sbox_lookup(i, v) << (4 * (7 - i)), 32, P)
                  for v in range(64)]
        tables.append(tuple(placed))
    return tuple(tables)


_SP = _build_sp()
_MASK28 = (1 << 28) - 1


@dataclass(frozen=True)
class RoundKeySchedule:
    """The sixteen 48-bit round keys, in encryption order."""

    round_keys: tuple[int, ...]

    def __post_init__(self):
        if len(self.round_keys) != 16:
            raise ValueError(f"expected 16 round keys, got {len(self.round_keys)}")
        for k in self.round_keys:
            if not 0 <= k < 1 << 48:
                raise ValueError("round key outside 48 bits")

    def __iter__(self):
        return iter(self.round_keys)

    def __len__(self) -> int:
        return 16


def key_schedule(key: DesKey | int) -> RoundKeySchedule:
    """Derive the round keys: PC-1, per-round left rotations, PC-2.

    The eight parity bit positions are dropped by PC-1, never checked.
    """
    value = key.value if isinstance(key, DesKey) else DesKey(key).value
    cd = _permute(value, 64, PC1)
    c, d = cd >> 28, cd & _MASK28
    keys = []
    for shift in KEY_SHIFTS:
        c = ((c << shift) | (c >> (28 - shift))) & _MASK28
        d = ((d << shift) | (d >> (28 - shift))) & _MASK28
        keys.append(_permute((c << 28) | d, 56, PC2))
    return RoundKeySchedule(tuple(keys))


def feistel_f(right: int, round_key: int) -> int:
    """The round function: expand, whiten, substitute, permute."""
    if not 0 <= right < 1 << 32:
        raise ValueError("right half outside 32 bits")
    if not 0 <= round_key < 1 << 48:
        raise ValueError("round key outside 48 bits")
    x = _permute(right, 32, E) ^ round_key
    out = 0
    for i in range(8):
        out |= _SP[i][(x >> (6 * (7 - i))) & 0x3F]
    return out


def _crypt(block: int, round_keys) -> int:
    if not 0 <= block < 1 << 64:
        raise ValueError("block outside 64 bits")
    permuted = _permute(block, 64, IP)
    left, right = permuted >> 32, permuted & 0xFFFFFFFF
    for k in round_keys:
        left, right = right, left ^ feistel_f(right, k)
    return _permute((right << 32) | left, 64, FP)


def encrypt_block(plain: int, schedule: RoundKeySchedule) -> int:
    """IP, sixteen Feistel rounds, the pre-output swap, then FP."""
    return _crypt(plain, schedule.round_keys)


def decrypt_block(cipher: int, schedule: RoundKeySchedule) -> int:
    """Identical structure with the round keys in reverse order."""
    return _crypt(cipher, tuple(reversed(schedule.round_keys)))


def is_weak_key(key: DesKey | int) -> bool:
    """True for weak and semi-weak keys (at most two distinct round keys).

    Judged from the schedule itself, so keys differing only in the
    dropped parity bits are flagged the same way.
    """
    return len(set(key_schedule(key).round_keys)) <= 2


def _pkcs7_pad(data: bytes) -> bytes:
    pad = 8 - (len(data) % 8)
    return data + bytes([pad]) * pad


def _pkcs7_unpad(data: bytes) -> bytes:
    pad = data[-1]
    if not 1 <= pad <= 8:
        raise BadPadding(f"pad byte {pad} outside [1, 8]")
    if data[-pad:] != bytes([pad]) * pad:
        raise BadPadding("pad bytes disagree with pad length")
    return data[:-pad]


def encrypt_text(plaintext: bytes, key: DesKey) -> bytes:
    """ECB-encrypt arbitrary bytes; PKCS#7 always appends 1..8 pad bytes."""
    schedule = key_schedule(key)
    padded = _pkcs7_pad(plaintext)
    out = bytearray()
    for i in range(0, len(padded), 8):
        block = int.from_bytes(padded[i:i + 8], "big")
        out += encrypt_block(block, schedule).to_bytes(8, "big")
    return bytes(out)


def decrypt_text(ciphertext: bytes, key: DesKey) -> bytes:
    """ECB-decrypt and strip padding; rejects malformed input distinctly."""
    if len(ciphertext) == 0 or len(ciphertext) % 8:
        raise MalformedCiphertext(
            f"ciphertext length {len(ciphertext)} is not a positive multiple of 8")
    schedule = key_schedule(key)
    out = bytearray()
    for i in range(0, len(ciphertext), 8):
        block = int.from_bytes(ciphertext[i:i + 8], "big")
        out += decrypt_block(block, schedule).to_bytes(8, "big")
    return _pkcs7_unpad(bytes(out))
