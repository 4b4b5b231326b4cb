"""The well-ordering on Z^k, N^k and mixed Z^k x N^d.

Every coordinate is first mapped to its *rank* under the 1-D base order
(``0, 1, -1, 2, -2, ...`` for integer coordinates, ``0, 1, 2, ...`` for
natural ones).  The multi-dimensional order only ever looks at ranks, so
Z^k and N^k are order-isomorphic through the coordinatewise rank map and one
implementation serves both.
"""

from __future__ import annotations

from enum import IntEnum
from typing import TYPE_CHECKING, Iterator, Sequence

if TYPE_CHECKING:
    from .lattice import DomainSignature, PointSet

__all__ = [
    "Ordering",
    "z_rank",
    "z_unrank",
    "compare_z",
    "succ_z",
    "plus_minus",
    "point_ranks",
    "point_from_ranks",
    "order_key",
    "compare_points",
    "successor_point",
    "iter_points",
    "initial_segment",
]

INT64_MAX = 2**63 - 1


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _cmp(a: int, b: int) -> Ordering:
    return Ordering((a > b) - (a < b))


def z_rank(a: int) -> int:
    """Position of ``a`` in the list ``0, 1, -1, 2, -2, ...``."""
    r = 2 * a - 1 if a > 0 else -2 * a
    if r > INT64_MAX:
        raise OverflowError(f"rank of {a} does not fit in 64 bits")
    return r


def z_unrank(r: int) -> int:
    if r < 0:
        raise ValueError(f"rank must be non-negative, got {r}")
    if r > INT64_MAX:
        raise OverflowError(f"rank {r} does not fit in 64 bits")
    return (r + 1) // 2 if r % 2 else -(r // 2)


def compare_z(a: int, b: int) -> Ordering:
    return _cmp(z_rank(a), z_rank(b))


def succ_z(a: int) -> int:
    return z_unrank(z_rank(a) + 1)


def plus_minus(a: int) -> tuple[int, int]:
    """Return ``(a+, a-)``: the largest and smallest of ``{a, a+1, a-1}``."""
    trio = (a, a + 1, a - 1)
    return max(trio, key=z_rank), min(trio, key=z_rank)


def _n_rank(a: int) -> int:
    if a < 0:
        raise ValueError(f"natural coordinate must be >= 0, got {a}")
    if a > INT64_MAX:
        raise OverflowError(f"coordinate {a} does not fit in 64 bits")
    return a


def point_ranks(x: Sequence[int], sig: DomainSignature) -> tuple[int, ...]:
    sig.check_point(x)
    k = sig.k
    return tuple(z_rank(c) if i < k else _n_rank(c) for i, c in enumerate(x))


def point_from_ranks(ranks: Sequence[int], sig: DomainSignature) -> tuple[int, ...]:
    k = sig.k
    return tuple(z_unrank(r) if i < k else _n_rank(r) for i, r in enumerate(ranks))


def key_from_ranks(ranks: Sequence[int]) -> tuple[int, ...]:
    """Flatten the recursive comparison rule into a lexicographic key.

    Each level contributes ``(rank of the max entry, distance of its first
    occurrence from the end)``; later first occurrences sort earlier.
    """
    rest = list(ranks)
    key: list[int] = []
    while rest:
        m = max(rest)
        i = rest.index(m)
        key.append(m)
        key.append(len(rest) - 1 - i)
        del rest[i]
    return tuple(key)


def order_key(x: Sequence[int], sig: DomainSignature) -> tuple[int, ...]:
    return key_from_ranks(point_ranks(x, sig))


def _compare_ranks(u: Sequence[int], v: Sequence[int]) -> Ordering:
    if len(u) == 0:
        return Ordering.EQUAL
    mu, mv = max(u), max(v)
    if mu != mv:
        return _cmp(mu, mv)
    iu, iv = u.index(mu), v.index(mv)
    if iu != iv:
        # the point whose maximum appears first is the larger one
        return Ordering.GREATER if iu < iv else Ordering.LESS
    return _compare_ranks(u[:iu] + u[iu + 1:], v[:iv] + v[iv + 1:])


def compare_points(u: Sequence[int], v: Sequence[int], sig: DomainSignature) -> Ordering:
    """Compare two points with the recursive max/first-position rule."""
    if len(u) != sig.dim or len(v) != sig.dim:
        raise ValueError(
            f"dimension mismatch: expected {sig.dim}, got {len(u)} and {len(v)}")
    return _compare_ranks(list(point_ranks(u, sig)), list(point_ranks(v, sig)))


def successor_ranks(ranks: Sequence[int]) -> tuple[int, ...]:
    y = list(ranks)
    m = min(y)
    im = len(y) - 1 - y[::-1].index(m)
    for j in range(im):
        if y[j] == m:
            y[j] = 0
    for j in range(im + 1, len(y)):
        if y[j] == m + 1:
            y[j] = 0
    if m + 1 > INT64_MAX:
        raise OverflowError("successor rank does not fit in 64 bits")
    y[im] = m + 1
    return tuple(y)


def successor_point(x: Sequence[int], sig: DomainSignature) -> tuple[int, ...]:
    """Immediate successor of ``x``.

    Let ``m`` be the smallest entry and ``i`` the last position holding it.
    Entry ``i`` becomes the successor of ``m``; earlier copies of ``m`` and
    later copies of that successor are reset to 0.
    """
    if len(x) != sig.dim:
        raise ValueError(f"dimension mismatch: expected {sig.dim}, got {len(x)}")
    if sig.dim == 0:
        raise ValueError("the zero-dimensional point has no successor")
    return point_from_ranks(successor_ranks(point_ranks(x, sig)), sig)


def iter_points(sig: DomainSignature) -> Iterator[tuple[int, ...]]:
    """Yield the whole domain in increasing order, starting at the origin."""
    if sig.dim == 0:
        yield ()
        return
    ranks = (0,) * sig.dim
    while True:
        yield point_from_ranks(ranks, sig)
        ranks = successor_ranks(ranks)


def initial_segment(sig: DomainSignature, n: int) -> PointSet:
    from .lattice import PointSet

    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    pts = []
    it = iter_points(sig)
    for _ in range(n):
        pts.append(next(it))
    return PointSet._from_sorted(sig, tuple(pts))
