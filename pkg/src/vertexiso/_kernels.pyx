# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset scan for the exhaustive oracle.

Each candidate point carries its closed neighbourhood as a bit vector of
``nwords`` 64-bit words.  The scan walks n-subsets in lexicographic order,
OR-ing masks incrementally and pruning any prefix whose boundary already
exceeds the best value found.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef struct Scan:
    const uint64_t* masks
    int nwords
    int npoints
    int n
    int first_hi
    uint64_t* acc
    int* idx
    int64_t best
    int64_t count
    int64_t leaves
    int64_t store_limit
    int64_t stored
    int* store


cdef inline int64_t _or_count(const uint64_t* a, const uint64_t* b, uint64_t* out,
                              int nwords) noexcept nogil:
    cdef int w
    cdef int64_t c = 0
    for w in range(nwords):
        out[w] = a[w] | b[w]
        c += __builtin_popcountll(out[w])
    return c


cdef void _dfs(Scan* s, int depth, int start) noexcept nogil:
    cdef int p, t, last
    cdef int64_t c
    cdef uint64_t* parent = s.acc + depth * s.nwords
    cdef uint64_t* child = parent + s.nwords
    last = s.npoints - (s.n - depth)
    if depth == 0 and s.first_hi - 1 < last:
        last = s.first_hi - 1
    for p in range(start, last + 1):
        c = _or_count(parent, s.masks + p * s.nwords, child, s.nwords)
        if c > s.best:
            continue
        s.idx[depth] = p
        if depth + 1 < s.n:
            _dfs(s, depth + 1, p + 1)
            continue
        s.leaves += 1
        if c < s.best:
            s.best = c
            s.count = 0
            s.stored = 0
        s.count += 1
        if s.stored < s.store_limit:
            for t in range(s.n):
                s.store[s.stored * s.n + t] = s.idx[t]
            s.stored += 1


def scan_subsets(const uint64_t[::1] masks, int nwords, int n, int first_lo, int first_hi,
                 Py_ssize_t store_limit):
    """Minimum boundary over n-subsets whose first index lies in [first_lo, first_hi).

    Returns ``(best, count, witnesses, leaves)``; ``best`` is -1 when the
    range holds no subset.
    """
    cdef Scan s
    cdef int npoints = masks.shape[0] // nwords if nwords else 0
    cdef Py_ssize_t i, t
    if n < 1:
        raise ValueError("n must be >= 1")
    if first_hi > npoints:
        first_hi = npoints
    if first_lo >= first_hi or npoints < n:
        return -1, 0, [], 0
    s.masks = &masks[0]
    s.nwords = nwords
    s.npoints = npoints
    s.n = n
    s.first_hi = first_hi
    s.best = nwords * 64 + 1
    s.count = 0
    s.leaves = 0
    s.store_limit = store_limit
    s.stored = 0
    s.acc = <uint64_t*> malloc((n + 1) * nwords * sizeof(uint64_t))
    s.idx = <int*> malloc(n * sizeof(int))
    s.store = <int*> malloc((store_limit * n + 1) * sizeof(int))
    if s.acc == NULL or s.idx == NULL or s.store == NULL:
        free(s.acc); free(s.idx); free(s.store)
        raise MemoryError()
    memset(s.acc, 0, nwords * sizeof(uint64_t))
    try:
        with nogil:
            _dfs(&s, 0, first_lo)
        witnesses = [tuple(s.store[i * n + t] for t in range(n)) for i in range(s.stored)]
    finally:
        free(s.acc); free(s.idx); free(s.store)
    if s.leaves == 0:
        return -1, 0, [], 0
    return s.best, s.count, witnesses, s.leaves
