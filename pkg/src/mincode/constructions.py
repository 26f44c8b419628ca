"""Explicit code constructions.

Base families: :func:`simplex`, :func:`even_weight_code`,
:func:`solomon_stiffler` and :func:`dual_bch_trace`.  Transforms:
:func:`simplex_complement` turns a projective code into one satisfying the
Ashikhmin-Barg (AB) condition, and :func:`ab_violating_extend` /
:func:`self_orthogonal_extend` turn a code satisfying AB into a minimal code
violating it.

Extension layout
----------------
For a base code ``C`` with extremal weights ``w_min`` and ``w_max`` the
extended generator is::

    [ c'_1 .. c'_{n'}  1 .. 1 (pad) | r_1 ]
    [ 0    ..  0       0 .. 0       | r_2 ]
    [          ...                  | ... ]

with ``n' = ceil(q w_min / (q-1)) - w_max``.  ``r_1`` is the max-weight
codeword with the smallest message.  Rows ``r_2 .. r_k`` span the hyperplane
of ``C`` vanishing at ``j``, the first coordinate where ``r_1`` is nonzero;
``r_2`` is its lowest-weight codeword of smallest message and the rest come
from projecting the original generator rows along ``r_1`` and keeping each
one that raises the rank.  Choosing a coordinate hyperplane makes the
subcode distribution ``A*_w`` equal ``A_w (n - w) / n`` for codes with a
transitive automorphism group, e.g. the dual BCH codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import numpy as np

from mincode.codes import (
    BLOCK,
    LinearCode,
    WeightDistribution,
    code_from_generator,
    is_projective,
    is_self_orthogonal,
    representative_indices,
    weight_distribution,
)
from mincode.errors import (
    ABConditionFails,
    BadValuesLength,
    ColumnNotFound,
    DimensionTooSmall,
    InconsistentInputs,
    InvalidProfile,
    LengthTooSmall,
    MincodeError,
    NotProjective,
    NotSelfOrthogonal,
    PaddingExhausted,
    RankDeficient,
    UnsupportedDegree,
)
from mincode.galois import field_new
from mincode.linalg import gram, normalize_columns, rank


def _index_digits(indices: np.ndarray, q: int, length: int) -> np.ndarray:
    """Base-q digits of each index, most significant first, one per row."""
    indices = np.asarray(indices, dtype=np.int64)
    return np.stack([(indices // q ** (length - 1 - i)) % q for i in range(length)]).astype(np.uint8)


def _column_indices(M: np.ndarray, q: int) -> np.ndarray:
    k = M.shape[0]
    weights = np.array([q ** (k - 1 - i) for i in range(k)], dtype=np.int64)
    return weights @ M.astype(np.int64)


def simplex(q: int, m: int) -> LinearCode:
    """The ``[(q^m-1)/(q-1), m, q^(m-1)]_q`` simplex code.

    Columns are the projective points of GF(q)^m with leading coordinate 1,
    ordered by their integer encoding (first coordinate most significant).
    """
    if m < 1:
        raise ValueError("simplex dimension must be at least 1")
    field = field_new(q)
    G = _index_digits(representative_indices(q, m), q, m)
    return LinearCode(field, G, name=f"simplex({q},{m})")


def even_weight_code(n: int) -> LinearCode:
    """Binary ``[n, n-1, 2]`` parity code with generator ``[I | 1]``."""
    if n < 3:
        raise LengthTooSmall(f"even-weight code needs n >= 3, got {n}")
    G = np.zeros((n - 1, n), dtype=np.uint8)
    G[:, : n - 1] = np.eye(n - 1, dtype=np.uint8)
    G[:, n - 1] = 1
    return LinearCode(field_new(2), G, name=f"even-weight({n})")


def solomon_stiffler(k: int, u: Sequence[int]) -> LinearCode:
    """Binary Solomon-Stiffler code: simplex(2, k) minus disjoint subspaces.

    Subspace ``S_i`` is spanned by the standard basis vectors in the
    coordinate block starting at ``u_1 + ... + u_{i-1}``.
    """
    u = [int(x) for x in u]
    if not u:
        raise InvalidProfile("profile u must be nonempty")
    if u[0] < 1 or any(a >= b for a, b in zip(u, u[1:])) or u[-1] >= k:
        raise InvalidProfile(f"need k > u_t > ... > u_1 >= 1, got k={k}, u={u}")
    if sum(u) > k:
        raise InvalidProfile(f"blocks overlap: sum(u) = {sum(u)} > k = {k}")
    S = simplex(2, k).G
    drop = np.zeros(S.shape[1], dtype=bool)
    offset = 0
    for size in u:
        outside = np.ones(k, dtype=bool)
        outside[offset : offset + size] = False
        drop |= ~S[outside].any(axis=0)
        offset += size
    G = S[:, ~drop]
    return LinearCode(field_new(2), G, name=f"solomon-stiffler({k},{tuple(u)})")


@dataclass(frozen=True)
class ComplementResult:
    code: LinearCode
    h: int
    base_max_weight: int
    threshold_met: bool  # h > log_q(w_max) - k + 2


def complement_threshold(q: int, k: int, h: int, w: int) -> bool:
    """Exact test of ``h > log_q(w) - k + 2``, i.e. ``q^(h+k-2) > w``."""
    e = h + k - 2
    return e >= 0 and q**e > w


def simplex_complement(C: LinearCode, h: int, cap: int | None = None) -> ComplementResult:
    """Delete the columns of projective ``C``, padded with ``h`` zeros, from simplex(q, k+h)."""
    if h < 0:
        raise ValueError("h must be non-negative")
    if not is_projective(C):
        raise NotProjective(f"{C!r} has a zero or repeated projective column")
    q, K = C.q, C.k + h
    total = (q**K - 1) // (q - 1)
    if C.n >= total:
        raise ValueError(f"need n < (q^(k+h)-1)/(q-1) = {total}, got n = {C.n}")
    embedded = np.zeros((K, C.n), dtype=np.uint8)
    embedded[: C.k] = normalize_columns(C.field, C.G)
    remove = set(_column_indices(embedded, q).tolist())
    simplex_idx = representative_indices(q, K)
    keep = ~np.isin(simplex_idx, list(remove))
    if int((~keep).sum()) != len(remove):
        raise ColumnNotFound("an embedded column is not a simplex column")
    G = _index_digits(simplex_idx[keep], q, K)
    code = code_from_generator(C.field, G, name=f"complement({C.name or 'C'},h={h})")
    w = weight_distribution(C, cap).max_weight
    return ComplementResult(code, h, w, complement_threshold(q, C.k, h, w))


@dataclass(frozen=True)
class ExtensionResult:
    code: LinearCode
    n_prime: int
    base_max_weight: int
    base_min_weight: int
    predicted: WeightDistribution
    pad: int = 0
    base_distribution: WeightDistribution | None = None
    subcode_distribution: WeightDistribution | None = None
    anchor: int = 0  # coordinate of the base code defining the subcode hyperplane
    values: tuple[int, ...] = dc_field(default=())


def extension_length(q: int, w_min: int, w_max: int) -> int:
    return -(-q * w_min // (q - 1)) - w_max


def ab_satisfied(q: int, w_min: int, w_max: int) -> bool:
    return q * w_min > (q - 1) * w_max


def predict_extension_distribution(A: WeightDistribution, A_star: WeightDistribution, n_prime: int) -> WeightDistribution:
    """Distribution of the extended code from those of ``C`` and the row-removed subcode.

    Codewords of the subcode keep their weight; the others gain ``n_prime``.
    Weights produced both ways are summed.
    """
    for w, c in A_star.items():
        if c > A[w]:
            raise InconsistentInputs(f"A*[{w}] = {c} exceeds A[{w}] = {A[w]}")
    out: dict[int, int] = {0: 1}
    for w, c in A_star.items():
        if w:
            out[w] = out.get(w, 0) + c
    for w, c in A.items():
        if w and c - A_star[w]:
            out[w + n_prime] = out.get(w + n_prime, 0) + c - A_star[w]
    return WeightDistribution(out)


def _first_max_weight_codeword(C: LinearCode, w_max: int) -> np.ndarray:
    for start in range(0, C.size, BLOCK):
        block = C.codewords(start, min(C.size, start + BLOCK))
        hits = np.flatnonzero(np.count_nonzero(block, axis=1) == w_max)
        if hits.size:
            return block[hits[0]].copy()
    raise AssertionError("max weight not attained")  # unreachable for a correct distribution


def _lightest_codeword_vanishing_at(C: LinearCode, j: int) -> np.ndarray:
    best_w, best = C.n + 1, None
    for start in range(0, C.size, BLOCK):
        block = C.codewords(start, min(C.size, start + BLOCK))
        w = np.count_nonzero(block, axis=1)
        ok = (block[:, j] == 0) & (w > 0)
        if ok.any():
            i = int(np.flatnonzero(ok)[np.argmin(w[ok])])
            if w[i] < best_w:
                best_w, best = int(w[i]), block[i].copy()
    if best is None:
        raise DimensionTooSmall("no nonzero codeword vanishes at the anchor coordinate")
    return best


def extension_basis(C: LinearCode, w_max: int) -> tuple[np.ndarray, int]:
    """Rows ``r_1 .. r_k`` for the extension and the anchor coordinate."""
    f = C.field
    r1 = _first_max_weight_codeword(C, w_max)
    j = int(np.flatnonzero(r1)[0])
    r2 = _lightest_codeword_vanishing_at(C, j)
    scale = f.inv_table[r1[j]]
    rows = [r2]
    for g in C.G:
        if len(rows) == C.k - 1:
            break
        proj = f.sub_table[g, f.mul_table[f.mul_table[g[j], scale], r1]]
        if rank(f, np.vstack(rows + [proj])) > len(rows):
            rows.append(proj)
    basis = np.vstack([r1] + rows)
    if rank(f, basis) != C.k:
        raise RankDeficient(rank(f, basis), C.k)
    return basis, j


def _extended_generator(basis: np.ndarray, values: Sequence[int], pad: int) -> np.ndarray:
    k, n = basis.shape
    head = len(values) + pad
    G = np.zeros((k, head + n), dtype=np.uint8)
    G[0, : len(values)] = values
    G[0, len(values) : head] = 1
    G[:, head:] = basis
    return G


def ab_violating_extend(
    C: LinearCode,
    values: Sequence[int] | None = None,
    cap: int | None = None,
) -> ExtensionResult:
    """Minimal code violating AB from a code satisfying it.

    ``values`` are the nonzero entries placed in the ``n'`` new coordinates of
    the first row (all ones by default).
    """
    if C.k < 2:
        raise DimensionTooSmall("the extension needs k >= 2")
    A = weight_distribution(C, cap)
    q, w_min, w_max = C.q, A.min_weight, A.max_weight
    ratio = Fraction(w_min, w_max)
    if not ab_satisfied(q, w_min, w_max):
        raise ABConditionFails(ratio, q)
    n_prime = extension_length(q, w_min, w_max)
    if n_prime <= 0:
        raise ABConditionFails(ratio, q, reason=f"n' = {n_prime}")
    if values is None:
        values = (1,) * n_prime
    values = tuple(int(v) for v in values)
    if len(values) != n_prime:
        raise BadValuesLength(f"expected {n_prime} values, got {len(values)}")
    if any(not 0 < v < q for v in values):
        raise BadValuesLength(f"values must be nonzero elements of GF({q})")
    basis, anchor = extension_basis(C, w_max)
    sub = LinearCode(C.field, basis[1:])
    A_star = weight_distribution(sub, cap)
    G = _extended_generator(basis, values, 0)
    code = LinearCode(C.field, G, name=f"extend({C.name or 'C'})")
    return ExtensionResult(
        code=code,
        n_prime=n_prime,
        base_max_weight=w_max,
        base_min_weight=w_min,
        predicted=predict_extension_distribution(A, A_star, n_prime),
        base_distribution=A,
        subcode_distribution=A_star,
        anchor=anchor,
        values=values,
    )


MINIMALITY_CHECK_LIMIT = 1 << 14


def self_orthogonal_extend(C: LinearCode, cap: int | None = None) -> ExtensionResult:
    """Extension whose output is self-orthogonal.

    After the plain extension, columns carrying a 1 in the first row only are
    appended until the Gram matrix vanishes; at most ``q`` are tried.
    """
    if not is_self_orthogonal(C):
        raise NotSelfOrthogonal(f"{C!r} is not self-orthogonal")
    base = ab_violating_extend(C, cap=cap)
    basis = base.code.G[:, base.n_prime :]
    f = C.field
    for pad in range(C.q + 1):
        G = _extended_generator(basis, base.values, pad)
        if not gram(f, G).any():
            break
    else:
        raise PaddingExhausted(f"no padding of at most {C.q} columns makes the code self-orthogonal")
    code = LinearCode(f, G, name=f"so-extend({C.name or 'C'})")
    predicted = predict_extension_distribution(base.base_distribution, base.subcode_distribution, base.n_prime + pad)
    result = ExtensionResult(
        code=code,
        n_prime=base.n_prime,
        base_max_weight=base.base_max_weight,
        base_min_weight=base.base_min_weight,
        predicted=predicted,
        pad=pad,
        base_distribution=base.base_distribution,
        subcode_distribution=base.subcode_distribution,
        anchor=base.anchor,
        values=base.values,
    )
    _verify_self_orthogonal_extension(result, cap)
    return result


def _verify_self_orthogonal_extension(result: ExtensionResult, cap: int | None) -> None:
    from mincode.analysis import is_minimal

    C = result.code
    D = weight_distribution(C, cap)
    if ab_satisfied(C.q, D.min_weight, D.max_weight):
        raise MincodeError("padded extension unexpectedly satisfies the AB condition")
    if (C.size - 1) // (C.q - 1) <= MINIMALITY_CHECK_LIMIT and not is_minimal(C, cap=cap)[0]:
        raise MincodeError("padded extension is not minimal")


# -- dual BCH codes via the trace map ---------------------------------------

# Primitive moduli of GF(2^m) as bit masks, x^m included.
BCH_MODULI = {3: 0b1011, 5: 0b100101, 7: 0b10000011, 9: 0b1000010001}


def _gf2m_mul(a: int, b: int, m: int, modulus: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= modulus
    return out


def _trace(y: int, m: int, modulus: int) -> int:
    acc, t = 0, y
    for _ in range(m):
        acc ^= t
        t = _gf2m_mul(t, t, m, modulus)
    assert acc in (0, 1)
    return acc


def dual_bch_trace(m: int) -> LinearCode:
    """Dual of the binary primitive BCH code with zeros alpha, alpha^3.

    Row ``j`` is ``Tr(x^j alpha^i)`` and row ``m + j`` is ``Tr(x^j alpha^{3i})``
    for ``i = 0 .. 2^m - 2``, with ``alpha = x`` primitive.
    """
    if m not in BCH_MODULI:
        raise UnsupportedDegree(f"dual BCH supported for odd m in {sorted(BCH_MODULI)}, got {m}")
    modulus, N = BCH_MODULI[m], 2**m - 1
    powers = [1]
    for _ in range(N - 1):
        powers.append(_gf2m_mul(powers[-1], 2, m, modulus))
    if len(set(powers)) != N:
        raise UnsupportedDegree(f"x is not primitive modulo {bin(modulus)}")
    G = np.zeros((2 * m, N), dtype=np.uint8)
    for j in range(m):
        e = 1 << j
        for i in range(N):
            G[j, i] = _trace(_gf2m_mul(e, powers[i], m, modulus), m, modulus)
            G[m + j, i] = _trace(_gf2m_mul(e, powers[3 * i % N], m, modulus), m, modulus)
    field = field_new(2)
    r = rank(field, G)
    if r != 2 * m:
        raise RankDeficient(r, 2 * m)
    return LinearCode(field, G, name=f"dual-bch({m})")


__all__ = [
    "ComplementResult",
    "ExtensionResult",
    "ab_violating_extend",
    "complement_threshold",
    "dual_bch_trace",
    "even_weight_code",
    "extension_length",
    "predict_extension_distribution",
    "self_orthogonal_extend",
    "simplex",
    "simplex_complement",
    "solomon_stiffler",
]
