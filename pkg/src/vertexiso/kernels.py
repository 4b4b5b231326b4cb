"""Backend selection for the hot subset scan.

The compiled extension is used when it imports; otherwise the pure-Python
implementation takes over.  Set ``VERTEXISO_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os
from array import array

from . import _pykernels

try:
    if os.environ.get("VERTEXISO_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _kernels as _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

__all__ = ["BACKEND", "available_backends", "scan_subsets"]


def available_backends() -> list[str]:
    return ["cython", "python"] if _ckernels is not None else ["python"]


def _pack(masks: list[int], nwords: int) -> array:
    out = array("Q", bytes(8 * nwords * len(masks)))
    lo = (1 << 64) - 1
    for p, m in enumerate(masks):
        base = p * nwords
        for w in range(nwords):
            out[base + w] = (m >> (64 * w)) & lo
    return out


def scan_subsets(masks: list[int], n: int, first_lo: int = 0, first_hi: int | None = None,
                 store_limit: int = 64, backend: str | None = None):
    """Branch-and-bound minimum of ``popcount(OR of n masks)`` over n-subsets.

    Subsets are index tuples in lexicographic order, restricted to those
    whose first index lies in ``[first_lo, first_hi)``.  Returns
    ``(best, count, witnesses, leaves)`` where ``count`` is the number of
    minimising subsets, ``witnesses`` the first ``store_limit`` of them and
    ``leaves`` the number of complete subsets evaluated.
    """
    backend = backend or BACKEND
    if first_hi is None:
        first_hi = len(masks)
    if backend == "python":
        return _pykernels.scan_subsets(masks, n, first_lo, first_hi, store_limit)
    if backend != "cython":
        raise ValueError(f"unknown backend {backend!r}")
    if _ckernels is None:
        raise RuntimeError("compiled kernel is not available")
    nbits = max((m.bit_length() for m in masks), default=0)
    nwords = max(1, -(-nbits // 64))
    if not masks:
        return -1, 0, [], 0
    return _ckernels.scan_subsets(_pack(masks, nwords), nwords, n, first_lo, first_hi,
                                  store_limit)
