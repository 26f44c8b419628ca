"""Backend selection for the hot enumeration and containment loops.

The compiled extension ``mincode._ckernels`` is used when it imports; the
numpy module ``mincode._pykernels`` is the fallback.  ``MINCODE_KERNELS``
forces a choice: ``python`` always uses the fallback, ``cython`` fails at
import if the extension is missing.
"""

from __future__ import annotations

import os
from types import ModuleType

from mincode import _pykernels


def _load() -> tuple[ModuleType, str]:
    choice = os.environ.get("MINCODE_KERNELS", "").strip().lower()
    if choice == "python":
        return _pykernels, "python"
    try:
        from mincode import _ckernels
    except ImportError:
        if choice == "cython":
            raise
        return _pykernels, "python"
    return _ckernels, "cython"


impl, BACKEND = _load()


def compiled() -> ModuleType | None:
    """The compiled module, or ``None`` when it was not built."""
    try:
        from mincode import _ckernels
    except ImportError:
        return None
    return _ckernels


def codeword_block(mults, add_table, q, start, stop):
    return impl.codeword_block(mults, add_table, q, start, stop)


def weight_histogram(mults, add_table, q, start, stop):
    return impl.weight_histogram(mults, add_table, q, start, stop)


def weight_histogram_binary(rows, n, start, stop):
    return impl.weight_histogram_binary(rows, n, start, stop)


def first_containment(masks, weights, start, stop):
    return impl.first_containment(masks, weights, start, stop)
