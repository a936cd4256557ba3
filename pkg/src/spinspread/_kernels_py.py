"""Pure-Python (numpy) implementations of the packed GF(2) kernels.

Matrices are numpy arrays of shape (n_rows, n_words), dtype uint64,
C-contiguous.  Bit i of a row lives in word i >> 6 at position i & 63, so
coordinate 0 is the least significant bit of word 0.  Every function here
must stay bit-exact with the compiled backend in ``_kernels_cy``.
"""

from __future__ import annotations

import sys

import numpy as np

if sys.byteorder != "little":  # pragma: no cover
    raise ImportError("packed-bit kernels assume a little-endian host")

_ONE = np.uint64(1)


def words_for(n_cols: int) -> int:
    """Number of uint64 words needed to hold n_cols bits."""
    return (n_cols + 63) >> 6


def echelonize(m: np.ndarray, n_cols: int) -> list:
    """In-place reduced row echelon form, pivoting on columns [0, n_cols).

    Word columns beyond ``words_for(n_cols)`` (if present) are carried along
    as an augment.  On return the pivot rows come first, ordered by pivot
    column; every other row is zero on [0, n_cols).  Returns the pivot
    columns.
    """
    n_rows = m.shape[0]
    pivots = []
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        w = col >> 6
        bit = np.uint64(col & 63)
        hits = np.nonzero((m[rank:, w] >> bit) & _ONE)[0]
        if hits.size == 0:
            continue
        piv = rank + int(hits[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        mask = ((m[:, w] >> bit) & _ONE).astype(bool)
        mask[rank] = False
        if mask.any():
            m[mask] ^= m[rank]
        pivots.append(col)
        rank += 1
    return pivots


def _unpack(m: np.ndarray, n_cols: int) -> np.ndarray:
    """Unpack to a (n_rows, n_cols) uint8 0/1 array."""
    if m.shape[0] == 0 or n_cols == 0:
        return np.zeros((m.shape[0], n_cols), dtype=np.uint8)
    bits = np.unpackbits(m.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :n_cols]


def _pack(bits: np.ndarray) -> np.ndarray:
    """Pack a (n_rows, n_cols) 0/1 array into words."""
    n_rows, n_cols = bits.shape
    nw = words_for(n_cols)
    out = np.zeros((n_rows, nw * 8), dtype=np.uint8)
    if n_rows and n_cols:
        packed = np.packbits(bits, axis=1, bitorder="little")
        out[:, : packed.shape[1]] = packed
    return np.ascontiguousarray(out).view(np.uint64)


def _parity_pack(counts: np.ndarray) -> np.ndarray:
    return _pack((counts & 1).astype(np.uint8))


def mul(a: np.ndarray, n_cols_a: int, b: np.ndarray, n_cols_b: int) -> np.ndarray:
    """GF(2) product A @ B; A has n_cols_a columns (= rows of B)."""
    ab = _unpack(a, n_cols_a)
    bb = _unpack(b, n_cols_b)
    # Exact in float64: entries of the integer product are at most n_cols_a.
    counts = ab.astype(np.float64) @ bb.astype(np.float64)
    return _parity_pack(counts.astype(np.int64))


def mul_bt(a: np.ndarray, b: np.ndarray, n_cols: int) -> np.ndarray:
    """GF(2) product A @ B^T where A and B share a column count."""
    ab = _unpack(a, n_cols)
    bb = _unpack(b, n_cols)
    counts = ab.astype(np.float64) @ bb.astype(np.float64).T
    return _parity_pack(counts.astype(np.int64))


def transpose(m: np.ndarray, n_cols: int) -> np.ndarray:
    return _pack(_unpack(m, n_cols).T)


def gather_columns(m: np.ndarray, n_cols: int, cols: np.ndarray) -> np.ndarray:
    """out[:, k] = m[:, cols[k]]."""
    bits = _unpack(m, n_cols)
    take = bits[:, np.asarray(cols, dtype=np.intp)]
    return _pack(take)
