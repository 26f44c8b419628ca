import os
import subprocess
import sys

import numpy as np
import pytest

import oracles
from mincode import _pykernels, kernels
from mincode.codes import code_from_generator, packed_rows
from mincode.linalg import pack_supports

compiled = kernels.compiled()
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")
rng = np.random.default_rng(2024)


def random_code(q, k, n):
    return code_from_generator(q, oracles.random_full_rank(rng, q, k, n))


BACKENDS = [pytest.param(_pykernels, id="numpy"), pytest.param(compiled, id="cython", marks=needs_compiled)]


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize("q,k,n", [(2, 5, 9), (3, 4, 7), (4, 3, 6), (9, 2, 5), (2, 1, 3)])
def test_codeword_block_matches_direct_encoding(impl, q, k, n):
    C = random_code(q, k, n)
    full = oracles.all_codewords(q, C.G)
    for start, stop in [(0, q**k), (1, q**k - 1), (q**k - 1, q**k), (1, 1)]:
        got = impl.codeword_block(C.multiples, C.field.add_table, q, start, stop)
        assert np.array_equal(got, full[start:stop])


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize("q,k,n", [(3, 5, 11), (4, 4, 9), (5, 3, 8), (7, 3, 6), (8, 2, 10)])
def test_weight_histogram_slices(impl, q, k, n):
    C = random_code(q, k, n)
    w = np.count_nonzero(oracles.all_codewords(q, C.G), axis=1)
    for start, stop in [(0, q**k), (5, q**k - 2), (q**k // 3, q**k // 2)]:
        got = impl.weight_histogram(C.multiples, C.field.add_table, q, start, stop)
        assert np.array_equal(got, np.bincount(w[start:stop], minlength=n + 1))


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize("k,n", [(6, 10), (10, 70), (15, 130), (3, 64)])
def test_binary_histogram_walks_gray_order(impl, k, n):
    C = random_code(2, k, n)
    w = np.count_nonzero(oracles.all_codewords(2, C.G), axis=1)
    size = 2**k
    assert np.array_equal(impl.weight_histogram_binary(packed_rows(C), n, 0, size), np.bincount(w, minlength=n + 1))
    pos = np.arange(size)
    in_gray_order = w[pos ^ (pos >> 1)]
    for start, stop in [(1, size - 3), (size // 2 + 1, size), (3, 4)]:
        got = impl.weight_histogram_binary(packed_rows(C), n, start, stop)
        assert np.array_equal(got, np.bincount(in_gray_order[start:stop], minlength=n + 1))


def _naive_first(masks, weights, start, stop):
    for i in range(start, stop):
        for j in range(len(weights)):
            if j != i and not np.any(masks[j] & ~masks[i]):
                return i, j
    return -1, -1


@pytest.mark.parametrize("impl", BACKENDS)
def test_first_containment_matches_naive_scan(impl):
    for trial in range(30):
        rows, n = int(rng.integers(2, 40)), int(rng.integers(3, 140))
        density = rng.uniform(0.3, 0.95)
        supp = (rng.random((rows, n)) < density).astype(np.uint8)
        supp[supp.sum(axis=1) == 0, 0] = 1
        masks = np.ascontiguousarray(pack_supports(supp))
        weights = supp.sum(axis=1).astype(np.int64)
        start = int(rng.integers(0, rows))
        assert impl.first_containment(masks, weights, start, rows) == _naive_first(masks, weights, start, rows)


@needs_compiled
def test_backends_agree_on_large_binary_code():
    C = random_code(2, 18, 100)
    a = compiled.weight_histogram_binary(packed_rows(C), C.n, 0, C.size)
    b = _pykernels.weight_histogram_binary(packed_rows(C), C.n, 0, C.size)
    assert np.array_equal(a, b)


def test_backend_selection_by_environment():
    code = "from mincode import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, MINCODE_KERNELS="python")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    if compiled is not None:
        env["MINCODE_KERNELS"] = "cython"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        assert out.stdout.strip() == "cython"
