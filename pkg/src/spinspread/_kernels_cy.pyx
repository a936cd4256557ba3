# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled packed GF(2) kernels.

Same storage contract and signatures as ``_kernels_py``: uint64 words,
coordinate 0 in the least significant bit of word 0, bit-exact outputs.
"""

import numpy as np

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_parityll(unsigned long long) nogil


def words_for(n_cols):
    return (n_cols + 63) >> 6


def echelonize(m, n_cols):
    cdef uint64_t[:, ::1] mv = m
    cdef Py_ssize_t n_rows = mv.shape[0]
    cdef Py_ssize_t n_words = mv.shape[1]
    cdef Py_ssize_t rank = 0, col, w, r, piv, k
    cdef uint64_t bit, tmp
    pivots = []
    for col in range(n_cols):
        if rank == n_rows:
            break
        w = col >> 6
        bit = (<uint64_t>1) << (col & 63)
        piv = -1
        for r in range(rank, n_rows):
            if mv[r, w] & bit:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            with nogil:
                for k in range(n_words):
                    tmp = mv[rank, k]
                    mv[rank, k] = mv[piv, k]
                    mv[piv, k] = tmp
        with nogil:
            for r in range(n_rows):
                if r != rank and (mv[r, w] & bit):
                    for k in range(n_words):
                        mv[r, k] ^= mv[rank, k]
        pivots.append(col)
        rank += 1
    return pivots


def mul(a, n_cols_a, b, n_cols_b):
    out = np.zeros((a.shape[0], (n_cols_b + 63) >> 6), dtype=np.uint64)
    cdef const uint64_t[:, ::1] av = a
    cdef const uint64_t[:, ::1] bv = b
    cdef uint64_t[:, ::1] ov = out
    cdef Py_ssize_t n_rows = av.shape[0], wa = av.shape[1], wb = ov.shape[1]
    cdef Py_ssize_t wa_used = (n_cols_a + 63) >> 6
    cdef Py_ssize_t i, w, j, k
    cdef uint64_t v, tail
    if (n_cols_a & 63) != 0:
        tail = ((<uint64_t>1) << (n_cols_a & 63)) - 1
    else:
        tail = <uint64_t>0 - 1
    if wa_used > wa:
        wa_used = wa
    with nogil:
        for i in range(n_rows):
            for w in range(wa_used):
                v = av[i, w]
                if w == wa_used - 1:
                    v &= tail
                while v:
                    j = (w << 6) + __builtin_ctzll(v)
                    v &= v - 1
                    for k in range(wb):
                        ov[i, k] ^= bv[j, k]
    return out


def mul_bt(a, b, n_cols):
    out = np.zeros((a.shape[0], (b.shape[0] + 63) >> 6), dtype=np.uint64)
    cdef const uint64_t[:, ::1] av = a
    cdef const uint64_t[:, ::1] bv = b
    cdef uint64_t[:, ::1] ov = out
    cdef Py_ssize_t ra = av.shape[0], rb = bv.shape[0]
    cdef Py_ssize_t w_used = (n_cols + 63) >> 6
    cdef Py_ssize_t i, j, w
    cdef uint64_t acc, tail
    if (n_cols & 63) != 0:
        tail = ((<uint64_t>1) << (n_cols & 63)) - 1
    else:
        tail = <uint64_t>0 - 1
    if w_used > av.shape[1]:
        w_used = av.shape[1]
    with nogil:
        for i in range(ra):
            for j in range(rb):
                acc = 0
                for w in range(w_used):
                    if w == w_used - 1:
                        acc ^= (av[i, w] & bv[j, w]) & tail
                    else:
                        acc ^= av[i, w] & bv[j, w]
                if __builtin_parityll(acc):
                    ov[i, j >> 6] |= (<uint64_t>1) << (j & 63)
    return out


def transpose(m, n_cols):
    out = np.zeros((n_cols, (m.shape[0] + 63) >> 6), dtype=np.uint64)
    cdef const uint64_t[:, ::1] mv = m
    cdef uint64_t[:, ::1] ov = out
    cdef Py_ssize_t n_rows = mv.shape[0]
    cdef Py_ssize_t w_used = (n_cols + 63) >> 6
    cdef Py_ssize_t i, w, j
    cdef uint64_t v, tail
    if (n_cols & 63) != 0:
        tail = ((<uint64_t>1) << (n_cols & 63)) - 1
    else:
        tail = <uint64_t>0 - 1
    if w_used > mv.shape[1]:
        w_used = mv.shape[1]
    with nogil:
        for i in range(n_rows):
            for w in range(w_used):
                v = mv[i, w]
                if w == w_used - 1:
                    v &= tail
                while v:
                    j = (w << 6) + __builtin_ctzll(v)
                    v &= v - 1
                    ov[j, i >> 6] |= (<uint64_t>1) << (i & 63)
    return out


def gather_columns(m, n_cols, cols):
    cols = np.ascontiguousarray(cols, dtype=np.int64)
    out = np.zeros((m.shape[0], (cols.shape[0] + 63) >> 6), dtype=np.uint64)
    cdef const uint64_t[:, ::1] mv = m
    cdef uint64_t[:, ::1] ov = out
    cdef const int64_t[::1] cv = cols
    cdef Py_ssize_t n_rows = mv.shape[0], n_take = cv.shape[0]
    cdef Py_ssize_t r, k
    cdef int64_t c
    with nogil:
        for r in range(n_rows):
            for k in range(n_take):
                c = cv[k]
                if (mv[r, c >> 6] >> (c & 63)) & 1:
                    ov[r, k >> 6] |= (<uint64_t>1) << (k & 63)
    return out
