"""Numpy implementations of the enumeration and containment kernels.

Used when the compiled ``_ckernels`` extension is unavailable or when
``MINCODE_KERNELS=python`` is set.  Function signatures match the compiled
module exactly.

Messages are indexed by integers whose base-q digits, most significant first,
are the coefficients of the generator rows.  Enumeration splits every index
into a high and a low part: all combinations of the low rows are tabulated
once and each high combination is added to the whole table in one vectorised
step.
"""

from __future__ import annotations

import numpy as np

LOW_TABLE_LIMIT = 1 << 14


def _split(q: int, k: int) -> int:
    lo = 0
    while lo < k and q ** (lo + 1) <= LOW_TABLE_LIMIT:
        lo += 1
    return lo


def _combine(mults, add_table, q, first_row, nrows, indices):
    """Codewords sum_j d_j * g_{first_row+j} for the digit expansions of ``indices``."""
    n = mults.shape[2]
    indices = np.asarray(indices, dtype=np.int64)
    out = np.zeros((indices.size, n), dtype=np.uint8)
    for j in range(nrows):
        digit = (indices // q ** (nrows - 1 - j)) % q
        out = add_table[out, mults[first_row + j][digit]]
    return out


def codeword_block(mults, add_table, q, start, stop):
    k = mults.shape[0]
    return _combine(mults, add_table, q, 0, k, np.arange(start, stop, dtype=np.int64))


def weight_histogram(mults, add_table, q, start, stop):
    k, _, n = mults.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    if stop <= start:
        return hist
    lo = _split(q, k)
    hi = k - lo
    span = q**lo
    low = _combine(mults, add_table, q, hi, lo, np.arange(span))
    for h in range(start // span, (stop - 1) // span + 1):
        a = max(start, h * span) - h * span
        b = min(stop, (h + 1) * span) - h * span
        head = _combine(mults, add_table, q, 0, hi, [h])[0]
        block = add_table[head[None, :], low[a:b]]
        hist += np.bincount(np.count_nonzero(block, axis=1), minlength=n + 1)
    return hist


def _xor_table(rows: np.ndarray, indices: np.ndarray) -> np.ndarray:
    k = rows.shape[0]
    out = np.zeros((indices.size, rows.shape[1]), dtype=np.uint64)
    for j in range(k):
        bit = (indices >> (k - 1 - j)) & 1
        out ^= rows[j][None, :] * bit[:, None].astype(np.uint64)
    return out


def weight_histogram_binary(rows, n, start, stop):
    """Weight histogram of a binary code from bit-packed generator rows.

    ``[start, stop)`` are positions in Gray-code order, matching the compiled
    walk: position ``x`` is message ``x ^ (x >> 1)``.
    """
    rows = np.asarray(rows, dtype=np.uint64)
    k = rows.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    if stop <= start:
        return hist
    lo = min(k, 14)
    hi = k - lo
    span = 1 << lo
    low = _xor_table(rows[hi:], np.arange(span, dtype=np.int64))
    pos = np.arange(span, dtype=np.int64)
    gray_low = pos ^ (pos >> 1)
    for h in range(start // span, (stop - 1) // span + 1):
        a = max(start, h * span) - h * span
        b = min(stop, (h + 1) * span) - h * span
        # gray(h*span + l) = gray(h)*span + (gray(l) ^ (h&1) << (lo-1))
        head = _xor_table(rows[:hi], np.array([h ^ (h >> 1)], dtype=np.int64))[0]
        flip = (h & 1) << (lo - 1)
        block = low[gray_low[a:b] ^ flip] ^ head[None, :]
        w = np.bitwise_count(block).sum(axis=1, dtype=np.int64)
        hist += np.bincount(w, minlength=n + 1)
    return hist


def first_containment(masks, weights, start, stop):
    """First ``(i, j)``, i in ``[start, stop)``, j != i, with supp(j) inside supp(i).

    Pairs are ordered by ``i`` and then ``j``; ``(-1, -1)`` when none exists.
    """
    masks = np.asarray(masks, dtype=np.uint64)
    weights = np.asarray(weights, dtype=np.int64)
    for i in range(start, stop):
        idx = np.flatnonzero(weights <= weights[i])
        outside = masks[idx] & ~masks[i]
        inside = ~np.any(outside, axis=1)
        inside &= idx != i
        hits = idx[inside]
        if hits.size:
            return i, int(hits[0])
    return -1, -1
