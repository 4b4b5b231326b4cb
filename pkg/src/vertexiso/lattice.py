"""Finite point sets in Z^k x N^d under the l-infinity adjacency.

Coordinate indices in the public API are 1-based, matching the usual
mathematical notation: coordinates ``1..k`` are integer-valued and
``k+1..k+d`` are natural-valued.  Points are plain tuples of ints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .ordering import key_from_ranks, point_ranks

__all__ = [
    "DomainSignature",
    "PointSet",
    "PointSetFormatError",
    "neighbors",
    "vertex_boundary",
    "project",
    "section",
    "fibers",
    "insert_coordinate",
    "parse_pointset",
    "format_pointset",
    "read_pointset",
    "write_pointset",
]

INT64_MIN, INT64_MAX = -(2**63), 2**63 - 1
# largest |x| whose Z-rank (2|x|) still fits in a signed 64-bit word
COORD_LIMIT = 2**62 - 1

Point = tuple[int, ...]


@dataclass(frozen=True, order=True)
class DomainSignature:
    """``k`` integer coordinates followed by ``d`` natural coordinates.

    The zero-dimensional signature ``(0, 0)`` is legal only as the target of
    a projection that deletes every coordinate.
    """

    k: int
    d: int = 0

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.d, int)):
            raise TypeError("k and d must be ints")
        if self.k < 0 or self.d < 0:
            raise ValueError(f"k and d must be non-negative, got ({self.k}, {self.d})")

    @property
    def dim(self) -> int:
        return self.k + self.d

    @property
    def is_pure_z(self) -> bool:
        return self.d == 0 and self.k > 0

    @property
    def is_pure_n(self) -> bool:
        return self.k == 0 and self.d > 0

    def is_z_coord(self, i: int) -> bool:
        self.check_index(i)
        return i <= self.k

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.dim:
            raise IndexError(f"coordinate index {i} out of range 1..{self.dim}")

    def check_point(self, x: Sequence[int]) -> None:
        if len(x) != self.dim:
            raise ValueError(f"dimension mismatch: expected {self.dim}, got {len(x)}")
        for i, c in enumerate(x):
            if not -COORD_LIMIT <= c <= COORD_LIMIT:
                raise OverflowError(f"coordinate {c} outside the supported 64-bit range")
            if i >= self.k and c < 0:
                raise ValueError(f"natural coordinate {i + 1} is negative in {tuple(x)}")

    def delete(self, indices: Iterable[int]) -> "DomainSignature":
        """Signature left after deleting the given (1-based) coordinates."""
        idx = set(indices)
        for i in idx:
            self.check_index(i)
        dz = sum(1 for i in idx if i <= self.k)
        return DomainSignature(self.k - dz, self.d - (len(idx) - dz))

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append(f"Z^{self.k}")
        if self.d:
            parts.append(f"N^{self.d}")
        return " x ".join(parts) or "Z^0"


class PointSet:
    """Immutable, duplicate-free set of points kept in canonical order.

    Canonical order is the well-ordering on the signature's domain, so
    iteration and text output are deterministic.
    """

    __slots__ = ("sig", "_points", "_members", "_hash")

    def __init__(self, sig: DomainSignature, points: Iterable[Sequence[int]] = ()):
        members = set()
        for p in points:
            p = tuple(p)
            sig.check_point(p)
            members.add(p)
        self._init(sig, None, frozenset(members))

    @classmethod
    def _from_sorted(cls, sig: DomainSignature, points: tuple[Point, ...]) -> "PointSet":
        self = object.__new__(cls)
        self._init(sig, points, frozenset(points))
        return self

    @classmethod
    def _from_members(cls, sig: DomainSignature, members: Iterable[Point]) -> "PointSet":
        # trusted points: no validation
        self = object.__new__(cls)
        self._init(sig, None, frozenset(members))
        return self

    def _init(self, sig, points, members):
        self.sig = sig
        self._points = points
        self._members = members
        self._hash = None

    @property
    def points(self) -> tuple[Point, ...]:
        """Members in canonical order (sorted on first use)."""
        if self._points is None:
            sig = self.sig
            self._points = tuple(sorted(self._members, key=lambda p: _sort_key(p, sig)))
        return self._points

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.sig == other.sig and self._members == other._members

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.sig, self._members))
        return self._hash

    def __repr__(self) -> str:
        return f"PointSet({self.sig.k}, {self.sig.d}, {list(self.points)!r})"

    @property
    def members(self) -> frozenset:
        return self._members

    def issubset(self, other: "PointSet") -> bool:
        return self._members <= other._members

    def last(self) -> Point:
        """The largest point in canonical order."""
        if not self._members:
            raise ValueError("empty point set has no last element")
        return self.points[-1]


def _sort_key(p: Point, sig: DomainSignature) -> tuple[int, ...]:
    return key_from_ranks(point_ranks(p, sig))


@lru_cache(maxsize=None)
def _offsets(dim: int) -> tuple[Point, ...]:
    return tuple(itertools.product((-1, 0, 1), repeat=dim))


def _ball(x: Point, k: int, offsets) -> Iterator[Point]:
    for eps in offsets:
        y = tuple(a + e for a, e in zip(x, eps))
        if all(c >= 0 for c in y[k:]):
            yield y


def neighbors(x: Sequence[int], sig: DomainSignature) -> PointSet:
    """Closed unit ball around ``x``, clipped at the floor of natural coordinates."""
    x = tuple(x)
    sig.check_point(x)
    return PointSet._from_members(sig, _ball(x, sig.k, _offsets(sig.dim)))


def _boundary_codes(S: PointSet):
    """Boundary of ``S`` as integer codes in a box padded by one on every side.

    A point is coded in mixed radix, so a unit step along coordinate ``i`` is
    a shift by that coordinate's stride and the padding rules out wraparound.
    The l-infinity ball is a product of intervals, so the boundary is grown
    one axis at a time.  Returns ``(codes, lows, widths, strides)``.
    """
    dim, k = S.sig.dim, S.sig.k
    pts = S._members
    lows, widths = [], []
    for i in range(dim):
        vals = [p[i] for p in pts]
        lows.append(min(vals) - 1)
        widths.append(max(vals) - min(vals) + 3)
    strides = [1] * dim
    for i in range(dim - 2, -1, -1):
        strides[i] = strides[i + 1] * widths[i + 1]
    codes = {sum((c - lo) * st for c, lo, st in zip(p, lows, strides)) for p in pts}
    for i in range(dim):
        st = strides[i]
        up = {c + st for c in codes}
        if i < k or lows[i] >= 0:
            down = {c - st for c in codes}
        else:
            # a natural coordinate may not step below 0, which is coded as -lows[i]
            zero, w = -lows[i], widths[i]
            down = {c - st for c in codes if (c // st) % w != zero}
        codes |= up
        codes |= down
    return codes, lows, widths, strides


def boundary_members(S: PointSet) -> set[Point]:
    if not S._members:
        return set()
    codes, lows, widths, strides = _boundary_codes(S)
    return {tuple((c // st) % w + lo for lo, w, st in zip(lows, widths, strides))
            for c in codes}


def vertex_boundary(S: PointSet) -> PointSet:
    """All points within l-infinity distance 1 of ``S`` (``S`` included)."""
    return PointSet._from_members(S.sig, boundary_members(S))


def boundary_size(S: PointSet) -> int:
    if not S._members:
        return 0
    return len(_boundary_codes(S)[0])


def _normalize_indices(I: Iterable[int], sig: DomainSignature) -> tuple[int, ...]:
    idx = sorted(set(I))
    for i in idx:
        sig.check_index(i)
    return tuple(idx)


def project(S: PointSet, I: Iterable[int]) -> PointSet:
    """Delete the coordinates in ``I`` from every point of ``S``."""
    idx = _normalize_indices(I, S.sig)
    keep = [j for j in range(S.sig.dim) if j + 1 not in idx]
    sig = S.sig.delete(idx)
    return PointSet._from_members(sig, (tuple(p[j] for j in keep) for p in S._members))


def insert_coordinate(p: Sequence[int], x: int, i: int) -> Point:
    """Place ``x`` at (1-based) position ``i`` of ``p``, shifting the rest right."""
    p = tuple(p)
    return p[:i - 1] + (x,) + p[i - 1:]


def section(S: PointSet, i: int, p: Sequence[int]) -> frozenset[int]:
    """The 1-D fibre ``{x : p with x inserted at coordinate i is in S}``."""
    S.sig.check_index(i)
    p = tuple(p)
    if len(p) != S.sig.dim - 1:
        raise ValueError(f"dimension mismatch: expected {S.sig.dim - 1}, got {len(p)}")
    S.sig.delete([i]).check_point(p)
    return frozenset(x[i - 1] for x in S._members if x[:i - 1] + x[i:] == p)


def fibers(S: PointSet, i: int) -> dict[Point, list[int]]:
    """Group ``S`` into lines parallel to coordinate ``i``.

    Maps each base point (coordinate ``i`` deleted) to the sorted list of
    values taken by coordinate ``i`` over it.
    """
    S.sig.check_index(i)
    out: dict[Point, list[int]] = {}
    for x in S._members:
        out.setdefault(x[:i - 1] + x[i:], []).append(x[i - 1])
    for v in out.values():
        v.sort()
    return out


class PointSetFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_pointset(text: str) -> PointSet:
    """Parse the point-set text format.

    First data line is ``domain k d``; each further line holds one point
    as ``k+d`` integers.  ``#`` starts a comment; blank lines are ignored.
    Repeated points are rejected.
    """
    sig = None
    seen: dict[Point, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if sig is None:
            if len(fields) != 3 or fields[0] != "domain":
                raise PointSetFormatError("expected header 'domain k d'", lineno)
            try:
                sig = DomainSignature(int(fields[1]), int(fields[2]))
            except ValueError as exc:
                raise PointSetFormatError(f"bad domain header: {exc}", lineno) from None
            if sig.dim == 0:
                raise PointSetFormatError("domain must have k + d >= 1", lineno)
            continue
        if len(fields) != sig.dim:
            raise PointSetFormatError(
                f"expected {sig.dim} coordinates, got {len(fields)}", lineno)
        try:
            p = tuple(int(f) for f in fields)
            sig.check_point(p)
        except (ValueError, OverflowError) as exc:
            raise PointSetFormatError(str(exc), lineno) from None
        if p in seen:
            raise PointSetFormatError(f"duplicate point (first on line {seen[p]})", lineno)
        seen[p] = lineno
    if sig is None:
        raise PointSetFormatError("missing 'domain k d' header")
    return PointSet._from_members(sig, seen)


def format_pointset(S: PointSet) -> str:
    lines = [f"domain {S.sig.k} {S.sig.d}"]
    lines.extend(" ".join(map(str, p)) for p in S.points)
    return "\n".join(lines) + "\n"


def read_pointset(path: str | Path) -> PointSet:
    return parse_pointset(Path(path).read_text())


def write_pointset(S: PointSet, path: str | Path) -> None:
    Path(path).write_text(format_pointset(S))
