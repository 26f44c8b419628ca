# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration and containment kernels.

Same signatures and semantics as ``mincode._pykernels``.  The loops release
the GIL so callers can partition message or representative ranges across
threads.
"""

import numpy as np

from libc.stdint cimport int64_t, uint8_t, uint64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def codeword_block(const uint8_t[:, :, ::1] mults, const uint8_t[:, ::1] add_table,
                   int q, long long start, long long stop):
    cdef Py_ssize_t k = mults.shape[0]
    cdef Py_ssize_t n = mults.shape[2]
    cdef Py_ssize_t count = max(stop - start, 0)
    out = np.zeros((count, n), dtype=np.uint8)
    if count == 0:
        return out
    cdef uint8_t[:, ::1] o = out
    levels = np.zeros((k + 1, n), dtype=np.uint8)
    cdef uint8_t[:, ::1] s = levels
    digits_arr = np.zeros(k, dtype=np.int64)
    cdef int64_t[::1] digits = digits_arr
    cdef long long x, rest = start
    cdef Py_ssize_t i, j, l, row = 0
    for j in range(k - 1, -1, -1):
        digits[j] = rest % q
        rest //= q
    with nogil:
        for l in range(k):
            for i in range(n):
                s[l + 1, i] = add_table[s[l, i], mults[l, digits[l], i]]
        x = start
        while True:
            for i in range(n):
                o[row, i] = s[k, i]
            row += 1
            x += 1
            if x >= stop:
                break
            j = k - 1
            digits[j] += 1
            while digits[j] == q:
                digits[j] = 0
                j -= 1
                digits[j] += 1
            for l in range(j, k):
                for i in range(n):
                    s[l + 1, i] = add_table[s[l, i], mults[l, digits[l], i]]
    return out


def weight_histogram(const uint8_t[:, :, ::1] mults, const uint8_t[:, ::1] add_table,
                     int q, long long start, long long stop):
    cdef Py_ssize_t k = mults.shape[0]
    cdef Py_ssize_t n = mults.shape[2]
    hist = np.zeros(n + 1, dtype=np.int64)
    if stop <= start:
        return hist
    cdef int64_t[::1] h = hist
    levels = np.zeros((k + 1, n), dtype=np.uint8)
    cdef uint8_t[:, ::1] s = levels
    digits_arr = np.zeros(k, dtype=np.int64)
    cdef int64_t[::1] digits = digits_arr
    cdef long long x, rest = start
    cdef Py_ssize_t i, j, l, w
    for j in range(k - 1, -1, -1):
        digits[j] = rest % q
        rest //= q
    with nogil:
        for l in range(k):
            for i in range(n):
                s[l + 1, i] = add_table[s[l, i], mults[l, digits[l], i]]
        x = start
        while True:
            w = 0
            for i in range(n):
                if s[k, i] != 0:
                    w += 1
            h[w] += 1
            x += 1
            if x >= stop:
                break
            j = k - 1
            digits[j] += 1
            while digits[j] == q:
                digits[j] = 0
                j -= 1
                digits[j] += 1
            for l in range(j, k):
                for i in range(n):
                    s[l + 1, i] = add_table[s[l, i], mults[l, digits[l], i]]
    return hist


def weight_histogram_binary(const uint64_t[:, ::1] rows, Py_ssize_t n,
                            long long start, long long stop):
    # Gray-code walk: consecutive indices differ in one generator row.
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t words = rows.shape[1]
    hist = np.zeros(n + 1, dtype=np.int64)
    if stop <= start:
        return hist
    cdef int64_t[::1] h = hist
    cur_arr = np.zeros(words, dtype=np.uint64)
    cdef uint64_t[::1] cur = cur_arr
    cdef unsigned long long gray = start ^ (start >> 1)
    cdef unsigned long long x
    cdef Py_ssize_t j, t, w
    for j in range(k):
        if (gray >> (k - 1 - j)) & 1:
            for t in range(words):
                cur[t] ^= rows[j, t]
    with nogil:
        x = start
        while True:
            w = 0
            for t in range(words):
                w += __builtin_popcountll(cur[t])
            h[w] += 1
            x += 1
            if x >= <unsigned long long>stop:
                break
            j = k - 1 - __builtin_ctzll(x)
            for t in range(words):
                cur[t] ^= rows[j, t]
    return hist


cdef inline bint _contained(const uint64_t[:, ::1] masks, Py_ssize_t inner,
                            Py_ssize_t outer, Py_ssize_t words) noexcept nogil:
    cdef Py_ssize_t t
    for t in range(words):
        if masks[inner, t] & ~masks[outer, t]:
            return False
    return True


def first_containment(const uint64_t[:, ::1] masks, const int64_t[::1] weights,
                      long long start, long long stop):
    cdef Py_ssize_t rows = masks.shape[0]
    cdef Py_ssize_t words = masks.shape[1]
    cdef Py_ssize_t i, j
    cdef Py_ssize_t hit_i = -1, hit_j = -1
    cdef int64_t wi
    with nogil:
        for i in range(start, stop):
            wi = weights[i]
            for j in range(rows):
                if j == i or weights[j] > wi:
                    continue
                if _contained(masks, j, i, words):
                    hit_i = i
                    hit_j = j
                    break
            if hit_i >= 0:
                break
    return hit_i, hit_j
