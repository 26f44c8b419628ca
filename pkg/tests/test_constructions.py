import itertools

import numpy as np
import pytest

import oracles
from mincode import constructions as cons
from mincode.analysis import griesmer_defect, is_minimal
from mincode.codes import WeightDistribution, code_from_generator, is_projective, is_self_orthogonal, weight_distribution
from mincode.errors import (
    ABConditionFails,
    BadValuesLength,
    DimensionTooSmall,
    InconsistentInputs,
    InvalidProfile,
    LengthTooSmall,
    NotProjective,
    NotSelfOrthogonal,
    UnsupportedDegree,
)
from mincode.galois import field_new
from mincode.linalg import normalize_columns


def params(C):
    A = weight_distribution(C)
    return C.n, C.k, A.min_weight, A.max_weight


def column_set(C, K=None):
    K = K or C.k
    M = np.zeros((K, C.n), dtype=np.uint8)
    M[: C.k] = normalize_columns(C.field, C.G)
    return {tuple(c) for c in M.T}


@pytest.mark.parametrize("q,m", [(2, 1), (2, 3), (2, 5), (3, 2), (3, 4), (4, 3), (5, 2), (7, 2), (8, 2), (9, 2)])
def test_simplex_is_one_weight_and_projective(q, m):
    C = cons.simplex(q, m)
    assert (C.n, C.k) == ((q**m - 1) // (q - 1), m)
    assert weight_distribution(C).without_zero() == {q ** (m - 1): q**m - 1}
    assert is_projective(C)
    encoded = [int("".join(map(str, col)), q) for col in C.G.T] if q < 10 else None
    assert encoded == sorted(encoded)


def test_simplex_small_cases():
    assert params(cons.simplex(2, 3)) == (7, 3, 4, 4)
    assert params(cons.simplex(3, 2)) == (4, 2, 3, 3)
    assert params(cons.simplex(2, 1)) == (1, 1, 1, 1)


def test_even_weight_code():
    assert params(cons.even_weight_code(4)) == (4, 3, 2, 4)
    assert params(cons.even_weight_code(5)) == (5, 4, 2, 4)
    for n in (3, 6, 7):
        words = oracles.all_codewords(2, cons.even_weight_code(n).G)
        assert np.all(words.sum(axis=1) % 2 == 0)
    with pytest.raises(LengthTooSmall):
        cons.even_weight_code(2)


@pytest.mark.parametrize("k,u,expect", [
    ((4, [1, 2], (11, 4, 5, 8))),
    ((5, [3], (24, 5, 12, 16))),
    ((5, [1, 3], (23, 5, 11, 16))),
    ((6, [1, 4], (47, 6, 23, 32))),
])
def test_solomon_stiffler_parameters(k, u, expect):
    C = cons.solomon_stiffler(k, u)
    assert params(C) == expect
    assert griesmer_defect(C) == 0
    assert is_projective(C)


def test_solomon_stiffler_enumerator_and_profiles():
    assert weight_distribution(cons.solomon_stiffler(5, [3])).counts == {0: 1, 12: 28, 16: 3}
    assert params(cons.solomon_stiffler(5, [2, 3]))[:3] == (21, 5, 10)
    for bad in ([], [0], [2, 2], [3, 2], [5], [1, 2, 3]):
        with pytest.raises(InvalidProfile):
            cons.solomon_stiffler(5, bad)


def ternary_7_3_4():
    f = field_new(3)
    cols = [c for c in itertools.product(range(3), repeat=3) if any(c) and c[next(i for i, x in enumerate(c) if x)] == 1]
    for chosen in itertools.combinations(cols, 7):
        G = np.array(chosen, dtype=np.uint8).T
        w = np.count_nonzero(oracles.all_codewords(3, G)[1:], axis=1)
        if w.min() == 4 and w.max() == 7:
            return code_from_generator(f, G)
    raise AssertionError("no [7,3,4]_3 among projective column sets")


def test_simplex_complement_examples():
    r = cons.simplex_complement(cons.even_weight_code(4), 2)
    assert params(r.code) == (27, 5, 12, 16)
    r = cons.simplex_complement(ternary_7_3_4(), 1)
    assert params(r.code) == (33, 4, 20, 27)
    r = cons.simplex_complement(cons.even_weight_code(6), 0)
    assert params(r.code)[:3] == (25, 5, 10)
    with pytest.raises(NotProjective):
        cons.simplex_complement(code_from_generator(2, [[1, 1, 0], [0, 0, 1]]), 1)


@pytest.mark.parametrize("C,h", [
    (cons.even_weight_code(4), 1), (cons.even_weight_code(5), 2), (cons.simplex(3, 2), 1),
    (cons.solomon_stiffler(4, [1, 2]), 1), (cons.simplex(4, 2), 1),
])
def test_complement_weights_and_column_sets(C, h):
    r = cons.simplex_complement(C, h)
    q, K = C.q, C.k + h
    w = weight_distribution(C).max_weight
    n, k, d, wmax = params(r.code)
    assert (n, k) == ((q**K - 1) // (q - 1) - C.n, K)
    assert d == q ** (K - 1) - w
    if h >= 1:
        assert wmax == q ** (K - 1)
    assert r.threshold_met == (q ** (K - 2) > w)
    # complement and embedded columns partition the projective points
    points = column_set(cons.simplex(q, K))
    assert column_set(r.code).isdisjoint(column_set(C, K))
    assert column_set(r.code) | column_set(C, K) == points


def random_point_subset(rng, q, k, size):
    """Projective code on random points such that the leftover points also span."""
    S = cons.simplex(q, k).G
    while True:
        pick = np.zeros(S.shape[1], dtype=bool)
        pick[rng.choice(S.shape[1], size, replace=False)] = True
        if oracles.row_space_rank(q, S[:, pick]) == k and oracles.row_space_rank(q, S[:, ~pick]) == k:
            return code_from_generator(q, S[:, pick])


@pytest.mark.parametrize("q,k,size", [(2, 4, 6), (2, 5, 12), (3, 3, 5), (4, 3, 9)])
def test_double_complement_restores_columns(q, k, size):
    C = random_point_subset(np.random.default_rng(q * 100 + k), q, k, size)
    back = cons.simplex_complement(cons.simplex_complement(C, 0).code, 0).code
    assert column_set(back) == column_set(C)


@pytest.mark.parametrize("C", [cons.simplex(2, 3), cons.simplex(3, 3), cons.simplex(4, 2), cons.solomon_stiffler(5, [3]),
                               cons.solomon_stiffler(4, [1, 2]), cons.dual_bch_trace(5), cons.even_weight_code(3)])
def test_extension_invariants(C):
    A = weight_distribution(C)
    r = cons.ab_violating_extend(C)
    B = weight_distribution(r.code)
    assert r.n_prime == -(-C.q * A.min_weight // (C.q - 1)) - A.max_weight >= 1
    assert r.code.n == C.n + r.n_prime
    assert B.min_weight == A.min_weight
    assert B.max_weight == A.max_weight + r.n_prime
    assert C.q * B.min_weight <= (C.q - 1) * B.max_weight
    assert r.predicted == B
    assert is_minimal(r.code)[0]
    # the last n columns span the original code
    assert weight_distribution(code_from_generator(C.field, r.code.G[:, r.n_prime:])) == A


def test_extension_examples():
    r = cons.ab_violating_extend(cons.simplex(2, 3))
    assert r.n_prime == 4 and params(r.code) == (11, 3, 4, 8)
    assert weight_distribution(r.code).counts == {0: 1, 4: 3, 8: 4}
    r = cons.ab_violating_extend(cons.solomon_stiffler(5, [3]))
    assert r.n_prime == 8
    assert weight_distribution(r.code).counts == {0: 1, 12: 14, 16: 1, 20: 14, 24: 2}
    with pytest.raises(ABConditionFails) as info:
        cons.ab_violating_extend(cons.even_weight_code(4))
    assert "1/2" in str(info.value) and info.value.exit_code == 2
    with pytest.raises(DimensionTooSmall):
        cons.ab_violating_extend(cons.simplex(3, 1))


def test_extension_values_do_not_change_weights():
    C = cons.simplex(5, 2)
    r = cons.ab_violating_extend(C)
    alt = cons.ab_violating_extend(C, values=[2, 3, 4][: r.n_prime] + [1] * max(0, r.n_prime - 3))
    assert weight_distribution(alt.code) == weight_distribution(r.code)
    with pytest.raises(BadValuesLength):
        cons.ab_violating_extend(C, values=[1] * (r.n_prime + 1))
    with pytest.raises(BadValuesLength):
        cons.ab_violating_extend(C, values=[0] * r.n_prime)


def test_predicted_distribution_examples():
    A = WeightDistribution({0: 1, 12: 28, 16: 3})
    A_star = WeightDistribution({0: 1, 12: 14, 16: 1})
    assert cons.predict_extension_distribution(A, A_star, 8).counts == {0: 1, 12: 14, 16: 1, 20: 14, 24: 2}
    assert cons.predict_extension_distribution(A, A, 5) == A
    bch = cons.ab_violating_extend(cons.dual_bch_trace(5))
    merged = cons.predict_extension_distribution(bch.base_distribution, bch.subcode_distribution, 4)
    assert merged.without_zero() == {12: 190, 16: 375, 20: 338, 24: 120}
    with pytest.raises(InconsistentInputs):
        cons.predict_extension_distribution(A_star, A, 3)


@pytest.mark.parametrize("C", [cons.simplex(2, 3), cons.simplex(3, 2), cons.simplex(3, 3), cons.solomon_stiffler(5, [3]),
                               cons.solomon_stiffler(6, [4]), cons.simplex(2, 4)])
def test_self_orthogonal_extension(C):
    r = cons.self_orthogonal_extend(C)
    assert is_self_orthogonal(r.code)
    assert 0 <= r.pad <= C.q
    assert r.code.n == C.n + r.n_prime + r.pad
    B = weight_distribution(r.code)
    assert B.max_weight == r.base_max_weight + r.n_prime + r.pad
    assert r.predicted == B
    if C.q == 2:
        assert all(w % 4 == 0 for w in B.nonzero_weights)


def test_self_orthogonal_examples():
    r = cons.self_orthogonal_extend(cons.simplex(3, 2))
    assert (r.n_prime, r.pad) == (2, 1)
    assert params(r.code) == (7, 2, 3, 6)
    assert cons.self_orthogonal_extend(cons.simplex(2, 3)).pad == 0
    assert weight_distribution(cons.self_orthogonal_extend(cons.simplex(2, 3)).code).nonzero_weights == [4, 8]
    with pytest.raises(NotSelfOrthogonal):
        cons.self_orthogonal_extend(cons.simplex(2, 2))


@pytest.mark.parametrize("m", [3, 5, 7])
def test_dual_bch(m):
    C = cons.dual_bch_trace(m)
    assert (C.n, C.k) == (2**m - 1, 2 * m)
    A = weight_distribution(C)
    if m >= 5:
        s = 2 ** ((m - 1) // 2)
        h = 2 ** (m - 1)
        assert A.without_zero() == {
            h - s: (2**m - 1) * (2 ** (m - 2) + 2 ** ((m - 3) // 2)),
            h: (2**m - 1) * (h + 1),
            h + s: (2**m - 1) * (2 ** (m - 2) - 2 ** ((m - 3) // 2)),
        }


def test_dual_bch_examples_and_errors():
    assert weight_distribution(cons.dual_bch_trace(5)).counts == {0: 1, 12: 310, 16: 527, 20: 186}
    for m in (4, 11):
        with pytest.raises(UnsupportedDegree):
            cons.dual_bch_trace(m)
