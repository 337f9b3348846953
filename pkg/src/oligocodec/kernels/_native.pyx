# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: 9/7 lifting over rows and per-base read edits.

Mirrors ``_fallback.py`` operation for operation; the two backends must
produce bit-identical results.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef double ALPHA = -1.58613434205992
cdef double BETA = -0.05298011857296
cdef double GAMMA = 0.88291107553093
cdef double DELTA = 0.44350685204397
cdef double SCALE = 1.14960439886024
cdef double INV_SCALE = 1.0 / 1.14960439886024


cdef void _lift_row(double* x, Py_ssize_t n, double coef, int parity) noexcept nogil:
    cdef Py_ssize_t j, left, right
    for j in range(parity, n, 2):
        left = j - 1
        if left < 0:
            left = 1
        right = j + 1
        if right >= n:
            right = 2 * (n - 1) - right
        x[j] += coef * (x[left] + x[right])


def analyze_rows(double[:, ::1] a not None):
    """One-level 9/7 analysis of every row, in place, packed [low | high]."""
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t n_low = (n + 1) // 2
    if n < 2:
        raise ValueError("row length must be >= 2")
    cdef cnp.ndarray scratch_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] scratch = scratch_arr
    cdef double* x
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(rows):
            x = &a[i, 0]
            _lift_row(x, n, ALPHA, 1)
            _lift_row(x, n, BETA, 0)
            _lift_row(x, n, GAMMA, 1)
            _lift_row(x, n, DELTA, 0)
            for j in range(0, n, 2):
                x[j] *= SCALE
            for j in range(1, n, 2):
                x[j] *= INV_SCALE
            for j in range(n_low):
                scratch[j] = x[2 * j]
            for j in range(n - n_low):
                scratch[n_low + j] = x[2 * j + 1]
            for j in range(n):
                x[j] = scratch[j]


def synthesize_rows(double[:, ::1] a not None):
    """Inverse of :func:`analyze_rows`: rows packed [low | high] -> samples."""
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t n_low = (n + 1) // 2
    if n < 2:
        raise ValueError("row length must be >= 2")
    cdef cnp.ndarray scratch_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] scratch = scratch_arr
    cdef double* x
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(rows):
            x = &a[i, 0]
            for j in range(n_low):
                scratch[2 * j] = x[j]
            for j in range(n - n_low):
                scratch[2 * j + 1] = x[n_low + j]
            for j in range(0, n, 2):
                scratch[j] *= INV_SCALE
            for j in range(1, n, 2):
                scratch[j] *= SCALE
            _lift_row(&scratch[0], n, -DELTA, 0)
            _lift_row(&scratch[0], n, -GAMMA, 1)
            _lift_row(&scratch[0], n, -BETA, 0)
            _lift_row(&scratch[0], n, -ALPHA, 1)
            for j in range(n):
                x[j] = scratch[j]


def apply_read_edits(
    const unsigned char[:, ::1] codes not None,
    const unsigned char[:, ::1] ins_mask not None,
    const unsigned char[:, ::1] del_mask not None,
    const unsigned char[:, ::1] sub_mask not None,
    const unsigned char[:, ::1] ins_base not None,
    const unsigned char[:, ::1] sub_shift not None,
):
    """Apply per-base channel edits to a batch of equal-length reads.

    Same contract as the fallback: per position emit the inserted base
    first, then the surviving (possibly substituted) original base.
    """
    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t length = codes.shape[1]
    cdef cnp.ndarray out_arr = np.empty(n * 2 * length, dtype=np.uint8)
    cdef cnp.ndarray len_arr = np.zeros(n, dtype=np.int64)
    cdef unsigned char[::1] out = out_arr
    cdef cnp.int64_t[::1] lengths = len_arr
    cdef Py_ssize_t i, j, pos = 0, start
    cdef unsigned char b
    with nogil:
        for i in range(n):
            start = pos
            for j in range(length):
                if ins_mask[i, j]:
                    out[pos] = ins_base[i, j]
                    pos += 1
                if not del_mask[i, j]:
                    b = codes[i, j]
                    if sub_mask[i, j]:
                        b = (b + sub_shift[i, j]) & 3
                    out[pos] = b
                    pos += 1
            lengths[i] = pos - start
    return out_arr[:pos].copy(), len_arr
