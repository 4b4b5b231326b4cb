"""Compression operators.

A fibre of size ``m`` along an integer coordinate is *centred* when it is
``{-a..a}`` or ``{-a..a+1}``; these are exactly the first ``m`` integers of
the base order ``0, 1, -1, 2, ...``.  Along a natural coordinate the target
is ``{0..m-1}``.  Both operators therefore replace a fibre by the ``m``
smallest values of its coordinate's base order.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .lattice import PointSet, fibers, insert_coordinate
from .ordering import initial_segment, z_unrank

__all__ = [
    "Kind",
    "compress",
    "i_compress",
    "central_compress",
    "downward_compress",
    "centralize",
    "is_centrally_compressed",
    "is_downward_compressed",
    "is_compressed",
    "uncompressed_coordinate",
]


class Kind(str, Enum):
    SECTIONS = "sections"
    CENTRAL = "central"
    DOWNWARD = "downward"


@lru_cache(maxsize=1024)
def _centred(m: int) -> tuple[int, ...]:
    return tuple(z_unrank(r) for r in range(m))


@lru_cache(maxsize=1024)
def _lowest(m: int) -> tuple[int, ...]:
    return tuple(range(m))


def _replace_fibers(S: PointSet, i: int, target) -> PointSet:
    j = i - 1
    sizes: dict = {}
    for x in S.members:
        base = x[:j] + x[i:]
        sizes[base] = sizes.get(base, 0) + 1
    return PointSet._from_members(
        S.sig, [b[:j] + (v,) + b[j:] for b, m in sizes.items() for v in target(m)])


def central_compress(S: PointSet, i: int) -> PointSet:
    """Move every fibre along integer coordinate ``i`` onto the centred segment of its size."""
    if not S.sig.is_z_coord(i):
        raise ValueError(f"coordinate {i} is natural-valued; central compression needs 1..{S.sig.k}")
    return _replace_fibers(S, i, _centred)


def downward_compress(S: PointSet, j: int) -> PointSet:
    """Push every fibre along natural coordinate ``j`` down onto ``{0..m-1}``."""
    if S.sig.is_z_coord(j):
        raise ValueError(
            f"coordinate {j} is integer-valued; downward compression needs "
            f"{S.sig.k + 1}..{S.sig.dim}")
    return _replace_fibers(S, j, _lowest)


def i_compress(A: PointSet, i: int) -> PointSet:
    """Replace each hyperplane section ``{x : x_i = j}`` by an initial segment of Z^(k-1).

    Defined for pure integer lattices of dimension at least 2.
    """
    sig = A.sig
    if sig.d:
        raise ValueError("i-compression is defined only on pure integer lattices Z^k")
    if sig.k < 2:
        raise ValueError("i-compression needs k >= 2")
    sig.check_index(i)
    sub = sig.delete([i])
    sizes: dict[int, int] = {}
    for x in A.points:
        sizes[x[i - 1]] = sizes.get(x[i - 1], 0) + 1
    out = []
    for j, m in sizes.items():
        out.extend(insert_coordinate(p, j, i) for p in initial_segment(sub, m))
    return PointSet._from_members(sig, out)


def compress(S: PointSet, kind: Kind | str, coordinate: int) -> PointSet:
    kind = Kind(kind)
    if kind is Kind.SECTIONS:
        return i_compress(S, coordinate)
    if kind is Kind.CENTRAL:
        return central_compress(S, coordinate)
    return downward_compress(S, coordinate)


def _fibers_ok(S: PointSet, i: int, target) -> bool:
    return all(xs == sorted(target(len(xs))) for xs in fibers(S, i).values())


def is_centrally_compressed(S: PointSet, i: int) -> bool:
    if not S.sig.is_z_coord(i):
        raise ValueError(f"coordinate {i} is not integer-valued")
    return _fibers_ok(S, i, _centred)


def is_downward_compressed(S: PointSet, j: int) -> bool:
    if S.sig.is_z_coord(j):
        raise ValueError(f"coordinate {j} is not natural-valued")
    return _fibers_ok(S, j, _lowest)


def uncompressed_coordinate(S: PointSet) -> int | None:
    """First coordinate along which ``S`` is not compressed, or ``None``."""
    for i in range(1, S.sig.dim + 1):
        target = _centred if i <= S.sig.k else _lowest
        if not _fibers_ok(S, i, target):
            return i
    return None


def is_compressed(S: PointSet) -> bool:
    return uncompressed_coordinate(S) is None


def centralize(S: PointSet) -> PointSet:
    """Apply the single-coordinate compressions round-robin until nothing moves.

    Each pass that changes the set strictly lowers the total rank of all
    coordinates, so the loop terminates.  The result is compressed in every
    coordinate and has no larger boundary; it need not be a minimiser.
    """
    k = S.sig.k
    current = S
    changed = True
    while changed:
        changed = False
        for i in range(1, S.sig.dim + 1):
            step = central_compress(current, i) if i <= k else downward_compress(current, i)
            if step != current:
                current, changed = step, True
    return current
