"""Both kernel backends must agree bit-for-bit on random inputs."""

import random

import numpy as np
import pytest

from spinspread import _kernels_py as kpy
from spinspread import kernels

try:
    from spinspread import _kernels_cy as kcy
except ImportError:
    kcy = None

needs_compiled = pytest.mark.skipif(kcy is None, reason="compiled backend absent")


def random_packed(rng, n_rows, n_cols):
    words = kpy.words_for(n_cols)
    m = np.zeros((n_rows, words), dtype=np.uint64)
    for i in range(n_rows):
        val = rng.getrandbits(n_cols)
        for w in range(words):
            m[i, w] = (val >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return m


def test_backend_reported():
    assert kernels.backend() in ("compiled", "python")


@needs_compiled
def test_echelonize_agrees():
    rng = random.Random(7)
    for _ in range(60):
        r = rng.randrange(1, 14)
        c = rng.randrange(1, 140)
        m = random_packed(rng, r, c)
        a, b = m.copy(), m.copy()
        piv_py = kpy.echelonize(a, c)
        piv_cy = kcy.echelonize(b, c)
        assert piv_py == piv_cy
        assert np.array_equal(a, b)


@needs_compiled
def test_echelonize_with_augment_agrees():
    # Trailing words beyond n_cols act as an augmented block and must be
    # carried along identically.
    rng = random.Random(8)
    for _ in range(40):
        r = rng.randrange(1, 10)
        c = rng.randrange(1, 70)
        extra = rng.randrange(1, 3)
        m = random_packed(rng, r, c + 64 * extra)
        a, b = m.copy(), m.copy()
        assert kpy.echelonize(a, c) == kcy.echelonize(b, c)
        assert np.array_equal(a, b)


@needs_compiled
def test_mul_agrees():
    rng = random.Random(9)
    for _ in range(60):
        r = rng.randrange(1, 12)
        k = rng.randrange(1, 90)
        c = rng.randrange(1, 90)
        a = random_packed(rng, r, k)
        b = random_packed(rng, k, c)
        assert np.array_equal(kpy.mul(a, k, b, c), kcy.mul(a, k, b, c))


@needs_compiled
def test_mul_bt_agrees():
    rng = random.Random(10)
    for _ in range(60):
        r = rng.randrange(1, 12)
        c = rng.randrange(1, 12)
        k = rng.randrange(1, 130)
        a = random_packed(rng, r, k)
        b = random_packed(rng, c, k)
        assert np.array_equal(kpy.mul_bt(a, b, k), kcy.mul_bt(a, b, k))


@needs_compiled
def test_transpose_agrees():
    rng = random.Random(11)
    for _ in range(60):
        r = rng.randrange(1, 80)
        c = rng.randrange(1, 80)
        m = random_packed(rng, r, c)
        assert np.array_equal(kpy.transpose(m, c), kcy.transpose(m, c))


@needs_compiled
def test_gather_columns_agrees():
    rng = random.Random(12)
    for _ in range(60):
        r = rng.randrange(1, 10)
        c = rng.randrange(1, 120)
        m = random_packed(rng, r, c)
        take = rng.randrange(1, c + 1)
        cols = np.array([rng.randrange(c) for _ in range(take)], dtype=np.int64)
        assert np.array_equal(
            kpy.gather_columns(m, c, cols), kcy.gather_columns(m, c, cols)
        )


def test_mul_matches_naive():
    rng = random.Random(13)
    for _ in range(30):
        r = rng.randrange(1, 8)
        k = rng.randrange(1, 40)
        c = rng.randrange(1, 40)
        a = random_packed(rng, r, k)
        b = random_packed(rng, k, c)
        out = kernels.mul(a, k, b, c)
        for i in range(r):
            for j in range(c):
                acc = 0
                for t in range(k):
                    abit = (int(a[i, t >> 6]) >> (t & 63)) & 1
                    bbit = (int(b[t, j >> 6]) >> (j & 63)) & 1
                    acc ^= abit & bbit
                assert ((int(out[i, j >> 6]) >> (j & 63)) & 1) == acc


def test_transpose_is_involution():
    rng = random.Random(14)
    for _ in range(30):
        r = rng.randrange(1, 50)
        c = rng.randrange(1, 50)
        m = random_packed(rng, r, c)
        back = kernels.transpose(kernels.transpose(m, c), r)
        assert np.array_equal(back, m)
