"""Closed-form boundary counts.

For a set compressed in every coordinate, the boundary size is a weighted
count of its coordinate-deleting projections::

    |dS| = sum over I of 2^|I & K| * |P_I(S)|

where ``I`` runs over all subsets of coordinates and ``K`` is the set of
integer-valued coordinates.  Initial segments grow their boundary by
``3^l`` (Z^k) or ``2^l`` (N^k) per added point, ``l`` being the number of
zero coordinates of the new point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .compression import uncompressed_coordinate
from .lattice import DomainSignature, PointSet
from .ordering import INT64_MAX, iter_points, plus_minus

__all__ = [
    "NotCompressedError",
    "ZeroProfile",
    "zero_profile",
    "projection_functional",
    "boundary_via_projections",
    "segment_boundary_increment",
    "initial_segment_boundary_size",
    "find_corner_point",
]


class NotCompressedError(ValueError):
    """The set is not compressed in every coordinate."""


@dataclass(frozen=True)
class ZeroProfile:
    z_k: frozenset[int]
    z_d: frozenset[int]

    @property
    def weight(self) -> int:
        """Boundary points owned by a corner with this profile: ``3^|z_k| * 2^|z_d|``."""
        return _checked_pow(3, len(self.z_k)) * _checked_pow(2, len(self.z_d))


def zero_profile(x, sig: DomainSignature) -> ZeroProfile:
    sig.check_point(x)
    zk = frozenset(i + 1 for i in range(sig.k) if x[i] == 0)
    zd = frozenset(i + 1 for i in range(sig.k, sig.dim) if x[i] == 0)
    return ZeroProfile(zk, zd)


def _checked_pow(base: int, e: int) -> int:
    v = base**e
    if v > INT64_MAX:
        raise OverflowError(f"{base}^{e} does not fit in 64 bits")
    return v


def projection_functional(S: PointSet) -> int:
    """``sum_I 2^|I & K| |P_I(S)|`` for any finite set, compressed or not."""
    sig = S.sig
    if not len(S):
        return 0
    total = 0
    for r in range(sig.dim + 1):
        for I in itertools.combinations(range(sig.dim), r):
            keep = [j for j in range(sig.dim) if j not in I]
            n_proj = len({tuple(p[j] for j in keep) for p in S._members})
            total += (1 << sum(1 for i in I if i < sig.k)) * n_proj
    return total


def _require_compressed(S: PointSet) -> None:
    if not len(S):
        raise ValueError("the set is empty")
    i = uncompressed_coordinate(S)
    if i is not None:
        kind = "centrally" if i <= S.sig.k else "downward"
        raise NotCompressedError(f"set is not {kind} compressed in coordinate {i}")


def boundary_via_projections(S: PointSet) -> int:
    """Boundary size of a compressed set via the projection sum.

    Refuses sets that are not compressed in every coordinate: the formula
    undercounts for general sets.
    """
    _require_compressed(S)
    return projection_functional(S)


def _pure_base(sig: DomainSignature) -> int:
    if sig.is_pure_z:
        return 3
    if sig.is_pure_n:
        return 2
    raise ValueError(f"increment rule needs a pure Z^k or N^k domain, got {sig}")


def segment_boundary_increment(v, sig: DomainSignature) -> int:
    base = _pure_base(sig)
    sig.check_point(v)
    return _checked_pow(base, sum(1 for c in v if c == 0))


def initial_segment_boundary_size(sig: DomainSignature, n: int) -> int:
    """``|d I_n|`` accumulated from the increments, without building the boundary."""
    base = _pure_base(sig)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0
    for v, _ in zip(iter_points(sig), range(n)):
        total += _checked_pow(base, v.count(0))
    return total


def find_corner_point(S: PointSet):
    """A point whose bumps all leave ``S``, chosen greatest in canonical order.

    The bump of an integer coordinate ``a`` is ``a+`` (the latest of
    ``a-1, a, a+1`` in the base order); a natural coordinate is bumped by 1.
    """
    _require_compressed(S)
    sig = S.sig
    for z in reversed(S.points):
        if all(z[:i] + (plus_minus(z[i])[0] if i < sig.k else z[i] + 1,) + z[i + 1:] not in S
               for i in range(sig.dim)):
            return z
    raise AssertionError("a finite compressed set always has a corner")
