"""Pure-Python subset scan; same traversal and pruning as ``_kernels.pyx``.

Masks are arbitrary-precision ints, so the word count is irrelevant here.
"""

from __future__ import annotations


def scan_subsets(masks: list[int], n: int, first_lo: int, first_hi: int, store_limit: int):
    if n < 1:
        raise ValueError("n must be >= 1")
    npoints = len(masks)
    first_hi = min(first_hi, npoints)
    if first_lo >= first_hi or npoints < n:
        return -1, 0, [], 0

    best = sum(m.bit_length() for m in masks) + 1
    count = leaves = 0
    store: list[tuple[int, ...]] = []
    idx = [0] * n

    def dfs(depth: int, start: int, acc: int) -> None:
        nonlocal best, count, leaves
        last = npoints - (n - depth)
        if depth == 0:
            last = min(last, first_hi - 1)
        leaf = depth + 1 == n
        for p in range(start, last + 1):
            child = acc | masks[p]
            c = child.bit_count()
            if c > best:
                continue
            idx[depth] = p
            if not leaf:
                dfs(depth + 1, p + 1, child)
                continue
            leaves += 1
            if c < best:
                best, count = c, 0
                store.clear()
            count += 1
            if len(store) < store_limit:
                store.append(tuple(idx))

    dfs(0, first_lo, 0)
    if not leaves:
        return -1, 0, [], 0
    return best, count, store, leaves
