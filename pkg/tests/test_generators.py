"""Seeded generation: determinism, ranges, reciprocity."""

import hashlib

import numpy as np
import pytest

import pcmkit as pk


def test_random_pcm_is_deterministic():
    a = pk.random_pcm(5, 123)
    b = pk.random_pcm(5, 123)
    assert a == b
    assert a.entries.tobytes() == b.entries.tobytes()
    assert pk.random_pcm(5, 124) != a


def test_random_pcm_range_and_reciprocity():
    for n in (3, 4, 6, 8):
        m = pk.random_pcm(n, 9 * n)
        e = m.entries
        off = e[~np.eye(n, dtype=bool)]
        assert off.min() >= 1 / 9 and off.max() <= 9.0
        for i in range(n):
            assert e[i, i] == 1.0
            for j in range(i + 1, n):
                assert e[j, i] == 1.0 / e[i, j]  # exact, not approximate


def test_random_consistent():
    for n in (3, 5, 7):
        m = pk.random_consistent(n, n)
        assert pk.is_consistent(m)
        assert m == pk.random_consistent(n, n)


def test_random_weights():
    w = pk.random_weights(6, 77)
    assert w.shape == (6,)
    assert np.all(w > 0)
    assert np.array_equal(w, pk.random_weights(6, 77))


def test_random_permutation():
    for n in (3, 4, 9):
        p = pk.random_permutation(n, 3)
        assert sorted(p) == list(range(n))
    a = pk.random_permutation(8, 1)
    assert a == pk.random_permutation(8, 1)


def test_rng_from_seed_validation():
    pk.rng_from_seed(0)
    pk.rng_from_seed(2 ** 64 - 1)
    for bad in (-1, 2 ** 64, 1.5, "7", True):
        with pytest.raises(pk.ConfigError):
            pk.rng_from_seed(bad)


def test_derive_seed_matches_reference():
    def ref(*parts):
        blob = "\x1f".join(str(p) for p in parts).encode("utf-8")
        return int.from_bytes(hashlib.sha256(blob).digest()[:8], "big")

    assert pk.derive_seed(12345, "K", "P1", 3) == ref(12345, "K", "P1", 3)
    assert pk.derive_seed(0) == ref(0)
    assert pk.derive_seed("a", "b") != pk.derive_seed("ab")


def test_derive_seed_frozen_value():
    # guard against silent changes to the derivation scheme
    assert pk.derive_seed(12345, "K", "P1", 3) == 17308947927585392310
