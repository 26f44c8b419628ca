"""Compare the compiled and numpy kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each row times one kernel call over a full message range and checks that
both backends return identical results.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from mincode import _pykernels, kernels
from mincode import constructions as cons
from mincode.codes import code_from_generator, packed_rows, representative_codewords
from mincode.linalg import pack_supports


def random_code(q: int, k: int, n: int, seed: int):
    rng = np.random.default_rng(seed)
    while True:
        try:
            return code_from_generator(q, rng.integers(0, q, size=(k, n)))
        except Exception:
            continue


def binary_histogram(C):
    rows = packed_rows(C)
    return lambda impl: impl.weight_histogram_binary(rows, C.n, 0, C.size)


def qary_histogram(C):
    return lambda impl: impl.weight_histogram(C.multiples, C.field.add_table, C.q, 0, C.size)


def containment(C):
    _, words = representative_codewords(C)
    order = np.random.default_rng(0).permutation(C.n)
    masks = np.ascontiguousarray(pack_supports(words[:, order]))
    weights = np.count_nonzero(words, axis=1).astype(np.int64)
    return lambda impl: impl.first_containment(masks, weights, 0, len(weights))


def cases(quick: bool):
    k_bin = 16 if quick else 20
    yield f"binary histogram [128,{k_bin}]", binary_histogram(random_code(2, k_bin, 128, 1))
    yield "GF(3) histogram [60,10]", qary_histogram(random_code(3, 10 if quick else 12, 60, 2))
    yield "GF(4) histogram [40,8]", qary_histogram(random_code(4, 8, 40, 3))
    yield "minimality scan [35,10,12]", containment(cons.ab_violating_extend(cons.dual_bch_trace(5)).code)
    if not quick:
        yield "minimality scan [167,14,56]", containment(cons.ab_violating_extend(cons.dual_bch_trace(7)).code)


def best_of(fn, impl, repeat: int) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - start)
    return best, result


def same(a, b) -> bool:
    if isinstance(a, tuple):
        return a == b
    return np.array_equal(a, b)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()
    compiled = kernels.compiled()
    if compiled is None:
        print("compiled kernels not built; timing the numpy kernels only")
    print(f"{'case':<32}{'cython':>10}{'numpy':>10}{'speedup':>9}")
    for name, fn in cases(args.quick):
        t_py, r_py = best_of(fn, _pykernels, args.repeat)
        if compiled is None:
            print(f"{name:<32}{'-':>10}{t_py:>10.4f}{'-':>9}")
            continue
        t_c, r_c = best_of(fn, compiled, args.repeat)
        flag = "" if same(r_c, r_py) else "  MISMATCH"
        print(f"{name:<32}{t_c:>10.4f}{t_py:>10.4f}{t_py / t_c:>8.1f}x{flag}")


if __name__ == "__main__":
    main()
