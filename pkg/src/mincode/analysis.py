"""Verification: minimality, the Ashikhmin-Barg (AB) test, Griesmer bound, reports."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from mincode import kernels
from mincode.codes import (
    LinearCode,
    WeightDistribution,
    _ranges,
    _resolve_cap,
    default_cap,
    is_doubly_even,
    is_projective,
    is_self_orthogonal,
    representative_codewords,
    weight_distribution,
)
from mincode.errors import EnumerationTooLarge, NotACodeword, ZeroCodeword
from mincode.linalg import normalize_leading, pack_supports

SKIPPED = "skipped"


def representative_count(C: LinearCode) -> int:
    return (C.size - 1) // (C.q - 1)


def is_minimal_codeword(C: LinearCode, c, cap: int | None = None) -> bool:
    """True iff every codeword supported inside ``supp(c)`` is a multiple of ``c``."""
    c = np.asarray(c, dtype=np.uint8)
    if not C.is_codeword(c):
        raise NotACodeword(f"vector is not a codeword of {C!r}")
    if not c.any():
        raise ZeroCodeword("minimality is defined for nonzero codewords")
    _, words = representative_codewords(C, cap)
    outside = (words != 0) & (c == 0)[None, :]
    inside = words[~outside.any(axis=1)]
    target = normalize_leading(C.field, c)
    return all(np.array_equal(normalize_leading(C.field, w), target) for w in inside)


def _witness_search(masks: np.ndarray, weights: np.ndarray, workers: int) -> tuple[int, int]:
    ranges = _ranges(len(weights), workers)
    if len(ranges) == 1:
        return kernels.first_containment(masks, weights, 0, len(weights))
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        hits = list(pool.map(lambda r: kernels.first_containment(masks, weights, *r), ranges))
    found = [h for h in hits if h[0] >= 0]
    return min(found) if found else (-1, -1)


def is_minimal(
    C: LinearCode, cap: int | None = None, workers: int = 1
) -> tuple[bool, tuple[np.ndarray, np.ndarray] | None]:
    """All-pairs support containment over projective representatives.

    Returns ``(True, None)`` or ``(False, (c1, c2))`` where ``supp(c2)`` lies
    inside ``supp(c1)`` and ``c2`` is not a multiple of ``c1``.  The witness is
    the first such pair with representatives in message order.
    """
    _, words = representative_codewords(C, cap)
    # Containment ignores coordinate order.  Shuffling the packed bits makes
    # structured codes (simplex-like prefixes) fail the word test early.
    order = np.random.default_rng(0).permutation(C.n)
    masks = np.ascontiguousarray(pack_supports(words[:, order]))
    weights = np.count_nonzero(words, axis=1).astype(np.int64)
    i, j = _witness_search(masks, weights, workers)
    if i < 0:
        return True, None
    return False, (words[i].copy(), words[j].copy())


def ab_ratio(q: int, w_min: int, w_max: int) -> tuple[Fraction, bool]:
    return Fraction(w_min, w_max), q * w_min > (q - 1) * w_max


def ab_status(C: LinearCode, cap: int | None = None) -> tuple[Fraction, bool]:
    A = weight_distribution(C, cap)
    return ab_ratio(C.q, A.min_weight, A.max_weight)


def griesmer(q: int, k: int, d: int) -> int:
    if k < 1 or d < 1:
        raise ValueError("griesmer bound needs k >= 1 and d >= 1")
    return sum(-(-d // q**i) for i in range(k))


def griesmer_defect(C: LinearCode, cap: int | None = None) -> int:
    return C.n - griesmer(C.q, C.k, weight_distribution(C, cap).min_weight)


@dataclass
class CodeReport:
    q: int
    n: int
    k: int
    d: int | None
    w_max: int | None
    distribution: WeightDistribution | None
    ab_ratio: Fraction | None
    ab_satisfied: bool | None
    minimal: bool | str
    witness: tuple[np.ndarray, np.ndarray] | None
    projective: bool
    self_orthogonal: bool
    doubly_even: bool | None
    griesmer_length: int | None
    griesmer_defect: int | None
    name: str | None = None
    n_prime: int | None = None
    pad: int | None = None
    predicted_distribution: WeightDistribution | None = None
    complement_threshold_met: bool | None = None

    @property
    def predicted_matches(self) -> bool | None:
        if self.predicted_distribution is None or self.distribution is None:
            return None
        return self.predicted_distribution == self.distribution

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dict with a fixed key order; optional fields appear only when set."""
        out: dict[str, Any] = {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "w_max": self.w_max,
            "distribution": self.distribution.pairs() if self.distribution else None,
            "ab_ratio": [self.ab_ratio.numerator, self.ab_ratio.denominator] if self.ab_ratio is not None else None,
            "ab_satisfied": self.ab_satisfied,
            "minimal": self.minimal,
        }
        if self.witness is not None:
            out["witness"] = [w.tolist() for w in self.witness]
        out["projective"] = self.projective
        out["self_orthogonal"] = self.self_orthogonal
        if self.doubly_even is not None:
            out["doubly_even"] = self.doubly_even
        out["griesmer_length"] = self.griesmer_length
        out["griesmer_defect"] = self.griesmer_defect
        if self.n_prime is not None:
            out["n_prime"] = self.n_prime
        if self.pad is not None:
            out["pad"] = self.pad
        if self.predicted_distribution is not None:
            out["predicted_distribution"] = self.predicted_distribution.pairs()
            out["predicted_matches"] = self.predicted_matches
        if self.complement_threshold_met is not None:
            out["complement_threshold_met"] = self.complement_threshold_met
        if self.name:
            out["construction"] = self.name
        return out


def analyze(
    C: LinearCode,
    skip_minimality: bool = False,
    cap: int | None = None,
    workers: int = 1,
) -> CodeReport:
    """Full report for ``C``.

    ``cap`` bounds the minimality scan (number of projective representatives);
    above it minimality is reported as skipped.  The weight distribution is
    enumerated under the larger of ``cap`` and the default enumeration cap.
    When even that is exceeded the call fails, unless minimality is skipped,
    in which case the enumeration-dependent fields are left empty.
    """
    cap = _resolve_cap(cap)
    enum_cap = max(cap, default_cap())
    base = dict(
        q=C.q, n=C.n, k=C.k,
        projective=is_projective(C),
        self_orthogonal=is_self_orthogonal(C),
        name=C.name,
    )
    if C.size > enum_cap:
        if not skip_minimality:
            raise EnumerationTooLarge(C.size, enum_cap)
        return CodeReport(
            d=None, w_max=None, distribution=None, ab_ratio=None, ab_satisfied=None,
            minimal=SKIPPED, witness=None, doubly_even=None,
            griesmer_length=None, griesmer_defect=None, **base,
        )
    A = weight_distribution(C, enum_cap, workers=workers)
    d, w = A.min_weight, A.max_weight
    ratio, ok = ab_ratio(C.q, d, w)
    minimal: bool | str = SKIPPED
    witness = None
    if not skip_minimality and representative_count(C) <= cap:
        minimal, witness = is_minimal(C, cap, workers=workers)
    g = griesmer(C.q, C.k, d)
    return CodeReport(
        d=d, w_max=w, distribution=A, ab_ratio=ratio, ab_satisfied=ok,
        minimal=minimal, witness=witness,
        doubly_even=is_doubly_even(C, enum_cap) if C.q == 2 else None,
        griesmer_length=g, griesmer_defect=C.n - g, **base,
    )
