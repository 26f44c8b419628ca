"""Linear codes given by a generator matrix, and exhaustive enumeration.

A :class:`LinearCode` keeps its generator matrix exactly as supplied: the
extension construction depends on which codewords occupy which rows, so
nothing here silently row-reduces ``G``.

Every operation that walks the codewords refuses to start when ``q**k``
exceeds the enumeration cap (``2**22`` by default, overridable with the
``MINCODE_CAP`` environment variable or per call).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Mapping

import numpy as np

from mincode import kernels
from mincode.errors import (
    DimensionTooSmall,
    EnumerationTooLarge,
    RankDeficient,
    WrongCharacteristic,
)
from mincode.galois import Field, field_new
from mincode.linalg import (
    SupportMask,
    as_matrix,
    gram,
    normalize_columns,
    pack_supports,
    rank,
    rref_rank,
)

DEFAULT_CAP = 1 << 22
BLOCK = 1 << 14


def default_cap() -> int:
    env = os.environ.get("MINCODE_CAP")
    return int(env) if env else DEFAULT_CAP


def _resolve_cap(cap: int | None) -> int:
    return default_cap() if cap is None else int(cap)


@dataclass(frozen=True)
class WeightDistribution:
    """Number of codewords of each weight; zero counts are dropped."""

    counts: Mapping[int, int]

    def __post_init__(self):
        clean = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_histogram(cls, hist) -> "WeightDistribution":
        return cls({w: int(c) for w, c in enumerate(hist) if c})

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def __iter__(self):
        return iter(self.counts)

    def items(self):
        return self.counts.items()

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w in self.counts if w > 0]

    @property
    def min_weight(self) -> int:
        return min(self.nonzero_weights)

    @property
    def max_weight(self) -> int:
        return max(self.nonzero_weights)

    def without_zero(self) -> dict[int, int]:
        return {w: c for w, c in self.counts.items() if w > 0}

    def pairs(self) -> list[list[int]]:
        return [[w, c] for w, c in self.counts.items()]

    def enumerator(self) -> str:
        """Weight enumerator as a polynomial in z, e.g. ``1+28z^12+3z^16``."""
        terms = []
        for w, c in self.counts.items():
            if w == 0:
                terms.append(str(c))
            else:
                terms.append(f"{'' if c == 1 else c}z^{w}")
        return "+".join(terms)


@dataclass(frozen=True)
class ProjectiveRep:
    """One codeword per scalar class: its message has leading coefficient 1."""

    message: tuple[int, ...]
    codeword: np.ndarray = dc_field(repr=False, compare=False)
    mask: SupportMask


class LinearCode:
    """A linear ``[n, k]_q`` code spanned by the rows of ``G``."""

    def __init__(self, field: Field, G: np.ndarray, name: str | None = None):
        G = np.array(G, dtype=np.uint8, copy=True)
        G.setflags(write=False)
        self.field = field
        self.G = G
        self.k, self.n = G.shape
        self.name = name
        self._distribution: WeightDistribution | None = None
        self._mults: np.ndarray | None = None

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}]_{self.q}>"

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return self.q**self.k

    @property
    def multiples(self) -> np.ndarray:
        """``mults[j, a] = a * G[j]`` for every row ``j`` and scalar ``a``."""
        if self._mults is None:
            mul = self.field.mul_table
            self._mults = np.ascontiguousarray(mul[np.arange(self.q)[None, :, None], self.G[:, None, :]])
        return self._mults

    def check_enumerable(self, cap: int | None = None, size: int | None = None) -> None:
        cap = _resolve_cap(cap)
        size = self.size if size is None else size
        if size > cap:
            raise EnumerationTooLarge(size, cap)

    def encode(self, message) -> np.ndarray:
        msg = np.asarray(message, dtype=np.int64)
        out = np.zeros(self.n, dtype=np.uint8)
        for j, a in enumerate(msg):
            out = self.field.add_table[out, self.multiples[j, a]]
        return out

    def message_digits(self, index: int) -> tuple[int, ...]:
        q, k = self.q, self.k
        return tuple((index // q ** (k - 1 - j)) % q for j in range(k))

    def codewords(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Codewords for message indices ``[start, stop)`` in lexicographic order."""
        stop = self.size if stop is None else stop
        return kernels.codeword_block(self.multiples, self.field.add_table, self.q, start, stop)

    def weight_distribution(self, cap: int | None = None, workers: int = 1) -> WeightDistribution:
        return weight_distribution(self, cap=cap, workers=workers)

    @property
    def min_weight(self) -> int:
        return self.weight_distribution().min_weight

    @property
    def max_weight(self) -> int:
        return self.weight_distribution().max_weight

    def is_codeword(self, v) -> bool:
        v = np.asarray(v, dtype=np.uint8)
        if v.shape != (self.n,):
            return False
        return rank(self.field, np.vstack([self.G, v])) == self.k


def code_from_generator(field: Field | int, G, name: str | None = None) -> LinearCode:
    """Validate ``G`` (full row rank, at least one row and column) and wrap it."""
    if isinstance(field, int):
        field = field_new(field)
    G = as_matrix(G, field)
    if G.shape[0] < 1 or G.shape[1] < 1:
        raise ValueError("generator matrix must have at least one row and one column")
    r = rank(field, G)
    if r != G.shape[0]:
        raise RankDeficient(r, G.shape[0])
    return LinearCode(field, G, name=name)


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts)]


def enumerate_codewords(C: LinearCode, cap: int | None = None) -> Iterator[tuple[tuple[int, ...], np.ndarray]]:
    """Yield ``(message, codeword)`` for all ``q**k`` messages in lexicographic order."""
    C.check_enumerable(cap)
    for start in range(0, C.size, BLOCK):
        stop = min(C.size, start + BLOCK)
        block = C.codewords(start, stop)
        for offset, cw in enumerate(block):
            yield C.message_digits(start + offset), cw


def packed_rows(C: LinearCode) -> np.ndarray:
    return np.ascontiguousarray(pack_supports(C.G))


def weight_histogram(C: LinearCode, start: int, stop: int) -> np.ndarray:
    if C.q == 2:
        return kernels.weight_histogram_binary(packed_rows(C), C.n, start, stop)
    return kernels.weight_histogram(C.multiples, C.field.add_table, C.q, start, stop)


def weight_distribution(C: LinearCode, cap: int | None = None, workers: int = 1) -> WeightDistribution:
    """Exact weight distribution by full enumeration, cached on ``C``.

    With ``workers > 1`` the message range is split into contiguous slices
    counted concurrently and summed; the result does not depend on the split.
    """
    if C._distribution is not None:
        return C._distribution
    C.check_enumerable(cap)
    ranges = _ranges(C.size, workers)
    if len(ranges) == 1:
        hist = weight_histogram(C, 0, C.size)
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = list(pool.map(lambda r: weight_histogram(C, *r), ranges))
        hist = np.sum(parts, axis=0)
    C._distribution = WeightDistribution.from_histogram(hist)
    return C._distribution


def representative_indices(q: int, k: int) -> np.ndarray:
    """Message indices whose leading nonzero digit is 1, ascending.

    These are the integers in ``[q**e, 2*q**e)`` for ``e = 0 .. k-1``.
    """
    return np.concatenate([np.arange(q**e, 2 * q**e, dtype=np.int64) for e in range(k)])


def representative_codewords(C: LinearCode, cap: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """``(message indices, codewords)`` of the projective representatives."""
    count = (C.size - 1) // (C.q - 1)
    C.check_enumerable(cap, size=count)
    idx = representative_indices(C.q, C.k)
    blocks = [C.codewords(C.q**e, 2 * C.q**e) for e in range(C.k)]
    return idx, np.concatenate(blocks)


def projective_representatives(C: LinearCode, cap: int | None = None) -> list[ProjectiveRep]:
    idx, words = representative_codewords(C, cap)
    return [
        ProjectiveRep(C.message_digits(int(i)), w, SupportMask.from_vector(w))
        for i, w in zip(idx, words)
    ]


def is_projective(C: LinearCode) -> bool:
    """No zero column and no two columns proportional."""
    if np.any(~C.G.any(axis=0)):
        return False
    cols = normalize_columns(C.field, C.G).T
    return len({c.tobytes() for c in cols}) == C.n


def is_self_orthogonal(C: LinearCode) -> bool:
    return not gram(C.field, C.G).any()


def is_doubly_even(C: LinearCode, cap: int | None = None) -> bool:
    if C.q != 2:
        raise WrongCharacteristic(f"doubly even is defined for binary codes, not q={C.q}")
    return all(w % 4 == 0 for w in C.weight_distribution(cap).nonzero_weights)


def row_removed_subcode(C: LinearCode, row: int) -> LinearCode:
    if C.k < 2:
        raise DimensionTooSmall("cannot remove a row from a one-dimensional code")
    keep = [i for i in range(C.k) if i != row]
    return LinearCode(C.field, C.G[keep], name=f"{C.name or 'C'} minus row {row}")


def canonical(C: LinearCode) -> LinearCode:
    """Same code with its generator in reduced row echelon form."""
    R, r, _ = rref_rank(C.field, C.G)
    return LinearCode(C.field, R[:r], name=C.name)
