"""Acceptance gate: one test per release criterion, each timed against
its budget and reporting a PASS/FAIL line (run with -s to watch them).
"""

import itertools
import random
import time
from contextlib import contextmanager

import numpy as np

from biokey.des import (FP, IP, SBOXES, decrypt_block, decrypt_text,
                        encrypt_block, encrypt_text, key_schedule, _permute)
from biokey.enhance import histogram_equalize
from biokey.images import load_gray
from biokey.keygen import DesKey, reduce_key
from biokey.minutiae import crossing_number, MinutiaKind
from biokey.morphology import has_2x2_block, thin
from biokey.pipeline import run_pipeline
from conftest import GOLDEN_KEY
from shapes import count_components, gallery

MASK64 = (1 << 64) - 1


@contextmanager
def criterion(name: str, budget_seconds: float):
    start = time.perf_counter()
    try:
        yield
    except Exception:
        print(f"FAIL {name}")
        raise
    elapsed = time.perf_counter() - start
    assert elapsed < budget_seconds, \
        f"{name} took {elapsed:.2f}s, budget {budget_seconds}s"
    print(f"PASS {name} ({elapsed:.2f}s)")


def test_des_worked_example_vector():
    with criterion("des worked-example vector", 1.0):
        key = DesKey(0x133457799BBCDFF1)
        schedule = key_schedule(key)
        assert schedule.round_keys[0] == 0x1B02EFFC7072
        assert encrypt_block(0x0123456789ABCDEF, schedule) == 0x85E813540F0AB405
        assert decrypt_block(0x85E813540F0AB405, schedule) == 0x0123456789ABCDEF


def test_des_property_suite():
    with criterion("des property suite", 10.0):
        rng = random.Random(2024)
        for _ in range(10_000):
            schedule = key_schedule(DesKey(rng.getrandbits(64)))
            block = rng.getrandbits(64)
            assert decrypt_block(encrypt_block(block, schedule), schedule) == block
        for _ in range(1_000):
            key, block = rng.getrandbits(64), rng.getrandbits(64)
            direct = encrypt_block(block, key_schedule(DesKey(key)))
            flipped = encrypt_block(block ^ MASK64,
                                    key_schedule(DesKey(key ^ MASK64)))
            assert flipped == direct ^ MASK64
        for value in (0, MASK64, 0x0123456789ABCDEF, rng.getrandbits(64)):
            assert _permute(_permute(value, 64, IP), 64, FP) == value
        for box in SBOXES:
            for row in box:
                assert sorted(row) == list(range(16))


def test_crossing_number_oracle():
    with criterion("crossing-number oracle", 1.0):
        offsets = ((-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1),
                   (0, -1), (-1, -1))
        for bits in range(256):
            window = np.zeros((3, 3), np.uint8)
            window[1, 1] = 1
            for i, (dy, dx) in enumerate(offsets):
                window[1 + dy, 1 + dx] = (bits >> i) & 1
            ring = [(bits >> i) & 1 for i in range(8)]
            loop = ring + ring[:1]
            expected = sum(abs(a - b) for a, b in zip(loop, loop[1:])) // 2
            got = crossing_number(window)
            assert got == expected
            assert 0 <= got <= 4
            MinutiaKind(got)  # every value lands in a named class


def test_thinning_invariants():
    with criterion("thinning invariants", 5.0):
        shapes = gallery()
        assert len(shapes) >= 20
        for shape in shapes:
            skeleton = thin(shape)
            assert not has_2x2_block(skeleton)
            assert (thin(skeleton) == skeleton).all()
            assert count_components(skeleton) == count_components(shape)


def test_reduce_key_oracle_equivalence():
    with criterion("reduce-key oracle equivalence", 5.0):
        rng = random.Random(2025)
        for length in range(128, 1025, 8):
            bits = [rng.randint(0, 1) for _ in range(length)]
            seq = [(b, i) for i, b in enumerate(bits)]
            seq = seq[:len(seq) - (len(seq) % 64)] if len(seq) % 64 else seq
            while len(seq) > 64:
                seq = seq[32:len(seq) - 32]
                half = len(seq) // 2
                seq = seq[half:] + seq[:half]
            key = reduce_key(bits)
            assert len(key.bits) == 64
            assert list(key.bits) == [v for v, _ in seq]
            assert all(bits[i] == v for v, i in seq)
            rem = length % 64
            if rem:
                flipped = bits[:length - rem] + [1 - b for b in bits[length - rem:]]
                assert reduce_key(flipped) == key


def test_histogram_equalization_properties():
    with criterion("histogram equalization", 5.0):
        constant, _ = histogram_equalize(np.full((16, 16), 31, np.uint8))
        assert (constant == 255).all()
        rng = np.random.RandomState(2026)
        for _ in range(100):
            img = rng.randint(0, 256, (24, 24)).astype(np.uint8)
            out, hmap = histogram_equalize(img)
            assert (np.diff(hmap.mapping.astype(int)) >= 0).all()
            order = np.argsort(img.ravel(), kind="stable")
            assert (np.diff(out.ravel()[order].astype(int)) >= 0).all()
            twice, _ = histogram_equalize(out)
            assert np.abs(twice.astype(int) - out.astype(int)).max() <= 1


def test_end_to_end_golden_key(fixture_bytes):
    with criterion("end-to-end golden key", 5.0):
        first = run_pipeline(load_gray(fixture_bytes))
        second = run_pipeline(load_gray(fixture_bytes))
        assert first.key is not None
        assert first.key.hex == GOLDEN_KEY
        assert second.key == first.key
        assert (first.thinned == second.thinned).all()

        message = b"The quick brown fox jumps over the lazy dog.\n" * 4
        cipher = encrypt_text(message, first.key)
        assert decrypt_text(cipher, first.key) == message
