import random

import pytest

from biokey.keygen import (DesKey, InsufficientMinutiaeError, encode_minutiae,
                           key_to_hex, reduce_key, reduction_iterations)
from biokey.minutiae import Minutia, MinutiaeSet, MinutiaKind


def reduce_oracle(bits):
    """Naive index-traced reduction: returns (output bits, source indices).

    Works on (value, original_index) pairs so every output bit provably
    comes from some input position; mirrors the drop-and-swap loop in
    the most literal way possible.
    """
    seq = [(b, i) for i, b in enumerate(bits)]
    rem = len(seq) % 64
    if rem:
        seq = seq[:len(seq) - rem]
    if len(seq) < 128:
        raise ValueError("too short")
    while len(seq) > 64:
        seq = seq[32:len(seq) - 32]
        half = len(seq) // 2
        left, right = seq[:half], seq[half:]
        seq = right + left
    return [v for v, _ in seq], [i for _, i in seq]


def make_set(coords):
    ms = tuple(Minutia(x=x, y=y, cn=cn, kind=MinutiaKind(cn))
               for x, y, cn in sorted(coords, key=lambda c: (c[1], c[0])))
    return MinutiaeSet(minutiae=ms, source_dims=(64, 64))


def test_encode_empty_set():
    assert encode_minutiae(make_set([])) == []


def test_encode_single_minutia():
    bits = encode_minutiae(make_set([(5, 3, 1)]))
    assert bits == [0, 1, 0, 1, 0, 0, 1, 1]


def test_encode_uses_mod16_nibbles():
    bits = encode_minutiae(make_set([(1, 2, 1), (17, 2, 3)]))
    assert bits == [0, 0, 0, 1, 0, 0, 1, 0] * 2


def test_encode_length_is_eight_per_minutia():
    coords = [(x, y, 1) for x, y in [(10, 10), (20, 10), (30, 30), (40, 40)]]
    assert len(encode_minutiae(make_set(coords))) == 32


def test_reduce_128_bit_hand_trace():
    rng = random.Random(12)
    bits = [rng.randint(0, 1) for _ in range(128)]
    key = reduce_key(bits)
    expected = bits[64:96] + bits[32:64]
    assert list(key.bits) == expected


def test_reduce_130_bits_drops_trailing_pair():
    rng = random.Random(13)
    bits = [rng.randint(0, 1) for _ in range(128)]
    assert reduce_key(bits + [1, 0]) == reduce_key(bits)


def test_reduce_192_bits_two_iterations():
    rng = random.Random(14)
    bits = [rng.randint(0, 1) for _ in range(192)]
    key = reduce_key(bits)
    oracle_bits, _ = reduce_oracle(bits)
    assert list(key.bits) == oracle_bits
    assert reduction_iterations(192) == 2


def test_reduce_matches_oracle_across_lengths():
    rng = random.Random(15)
    for length in range(128, 1025, 8):
        bits = [rng.randint(0, 1) for _ in range(length)]
        oracle_bits, sources = reduce_oracle(bits)
        key = reduce_key(bits)
        assert list(key.bits) == oracle_bits
        assert len(key.bits) == 64
        # provenance: the algorithm permutes and discards, never invents
        assert all(bits[src] == out for src, out in zip(sources, key.bits))


def test_trimmed_trailing_bits_cannot_matter():
    rng = random.Random(16)
    for length in (129, 150, 200, 321):
        bits = [rng.randint(0, 1) for _ in range(length)]
        rem = length % 64
        flipped = bits[:length - rem] + [1 - b for b in bits[length - rem:]]
        assert reduce_key(bits) == reduce_key(flipped)


def test_insufficient_bits_raise():
    with pytest.raises(InsufficientMinutiaeError) as info:
        reduce_key([0] * 127)  # trims to 64
    assert "16" in str(info.value)
    with pytest.raises(InsufficientMinutiaeError):
        reduce_key([1] * 64)
    with pytest.raises(InsufficientMinutiaeError):
        reduction_iterations(120)


def test_fifteen_minutiae_are_not_enough():
    coords = [(4 * i + 2, 40, 1) for i in range(15)]
    with pytest.raises(InsufficientMinutiaeError):
        reduce_key(encode_minutiae(make_set(coords)))


def test_sixteen_minutiae_suffice():
    coords = [(3 * i + 2, 2 * i + 1, 1 if i % 2 else 3) for i in range(16)]
    key = reduce_key(encode_minutiae(make_set(coords)))
    assert len(key.hex) == 16


def test_reduce_rejects_non_bits():
    with pytest.raises(ValueError):
        reduce_key([0, 1, 2] * 64)


def test_identical_sets_give_identical_keys():
    coords = [(2 * i + 3, (7 * i) % 50 + 5, 3 if i % 3 else 1) for i in range(20)]
    a = reduce_key(encode_minutiae(make_set(coords)))
    b = reduce_key(encode_minutiae(make_set(list(reversed(coords)))))
    assert a == b


def test_key_to_hex_trivials():
    assert key_to_hex(DesKey(0)) == "0000000000000000"
    assert key_to_hex(DesKey((1 << 64) - 1)) == "FFFFFFFFFFFFFFFF"
    assert key_to_hex(DesKey(0x0123456789ABCDEF)) == "0123456789ABCDEF"


def test_deskey_hex_bits_roundtrip():
    key = DesKey(0x42CB030E21FAC860)
    assert DesKey.from_hex(key.hex) == key
    assert DesKey.from_bits(key.bits) == key
    assert len(key.bits) == 64


def test_deskey_from_hex_rejects_wrong_width():
    with pytest.raises(ValueError, match="16 hex digits"):
        DesKey.from_hex("42CB030E21FAC86")  # 15 digits
    with pytest.raises(ValueError):
        DesKey.from_hex("0123456789ABCDEF0")
    with pytest.raises(ValueError):
        DesKey.from_hex("0123456789ABCDEG")


def test_deskey_value_range():
    with pytest.raises(ValueError):
        DesKey(1 << 64)
    with pytest.raises(ValueError):
        DesKey(-1)
