"""Vectors and matrices over a :class:`~mincode.galois.Field`.

Vectors and matrices are plain ``uint8`` numpy arrays whose entries are
field element codes; the field travels alongside as an explicit argument.
Supports of single vectors are :class:`SupportMask` values backed by a
Python int, and supports of many codewords at once are packed into
``uint64`` word matrices (bit ``i`` of the row <-> coordinate ``i``) for the
containment kernels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from mincode.errors import DimensionMismatch
from mincode.galois import Field


@dataclass(frozen=True)
class SupportMask:
    """Support of a length-``n`` vector as a bit set."""

    bits: int
    n: int

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def issubset(self, other: "SupportMask") -> bool:
        return self.bits & ~other.bits == 0

    def __le__(self, other: "SupportMask") -> bool:
        return self.issubset(other)

    def indices(self) -> list[int]:
        return [i for i in range(self.n) if self.bits >> i & 1]

    @classmethod
    def from_vector(cls, v) -> "SupportMask":
        v = np.asarray(v)
        bits = 0
        for i in np.flatnonzero(v):
            bits |= 1 << int(i)
        return cls(bits, v.shape[0])


def as_matrix(M, field: Field) -> np.ndarray:
    A = np.array(M, dtype=np.int64, ndmin=2)
    if A.size and (A.min() < 0 or A.max() >= field.q):
        raise ValueError(f"entries must lie in [0, {field.q})")
    return A.astype(np.uint8)


def weight_and_support(v) -> tuple[int, SupportMask]:
    mask = SupportMask.from_vector(v)
    return mask.weight, mask


def weights(codewords: np.ndarray) -> np.ndarray:
    return np.count_nonzero(codewords, axis=-1)


def pack_supports(codewords: np.ndarray) -> np.ndarray:
    """Pack the supports of the rows of ``codewords`` into ``uint64`` words."""
    codewords = np.atleast_2d(codewords)
    rows, n = codewords.shape
    words = max(1, -(-n // 64))
    bits = np.zeros((rows, words * 64), dtype=bool)
    bits[:, :n] = codewords != 0
    packed = np.packbits(bits, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64, copy=False)


def scale(field: Field, a: int, v: np.ndarray) -> np.ndarray:
    return field.mul_table[a, v]


def vec_add(field: Field, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return field.add_table[u, v]


def vec_sub(field: Field, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return field.sub_table[u, v]


def normalize_leading(field: Field, v: np.ndarray) -> np.ndarray:
    """Scale ``v`` so its first nonzero entry is 1 (zero vectors unchanged)."""
    v = np.asarray(v, dtype=np.uint8)
    nz = np.flatnonzero(v)
    if nz.size == 0:
        return v.copy()
    return field.mul_table[field.inv_table[v[nz[0]]], v]


def normalize_columns(field: Field, M: np.ndarray) -> np.ndarray:
    """Scale every column so its topmost nonzero entry is 1."""
    M = np.asarray(M, dtype=np.uint8)
    nonzero = M != 0
    lead_row = np.argmax(nonzero, axis=0)
    lead = M[lead_row, np.arange(M.shape[1])]
    factor = field.inv_table[np.where(lead == 0, 1, lead)]
    return field.mul_table[factor[None, :], M]


def rref_rank(field: Field, M) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Pivots are taken in the leftmost available column from the topmost
    eligible row, so the output is a deterministic function of ``M``.
    """
    R = np.array(M, dtype=np.uint8, ndmin=2, copy=True)
    rows, cols = R.shape
    mul, sub, inv_t = field.mul_table, field.sub_table, field.inv_table
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = mul[inv_t[R[r, c]], R[r]]
        factors = R[:, c].copy()
        factors[r] = 0
        R = sub[R, mul[factors[:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(field: Field, M) -> int:
    return rref_rank(field, M)[1]


def mat_mul(field: Field, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.uint8)
    B = np.asarray(B, dtype=np.uint8)
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    mul, add = field.mul_table, field.add_table
    for l in range(A.shape[1]):
        out = add[out, mul[A[:, l, None], B[None, l, :]]]
    return out


def vec_mat(field: Field, v, M) -> np.ndarray:
    return mat_mul(field, np.asarray(v, dtype=np.uint8)[None, :], M)[0]


def gram(field: Field, G) -> np.ndarray:
    """``G @ G.T`` over the field."""
    G = np.asarray(G, dtype=np.uint8)
    return mat_mul(field, G, G.T)
