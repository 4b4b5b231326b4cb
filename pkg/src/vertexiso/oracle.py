"""Exhaustive certification that initial segments minimise the vertex boundary.

Two search modes are offered:

``full``
    every n-subset of a finite box, scored by its boundary in the unbounded
    lattice (compiled kernel, see :mod:`vertexiso.kernels`).
``compressed_only``
    only sets compressed in every coordinate.  Compressing never increases
    the boundary, so the minimum over these is the global minimum.

In rank coordinates a set compressed in every coordinate is exactly a
down-set of N^(k+d) under the product order, and the well-ordering is a
linear extension of that order.  Down-sets are therefore generated by adding
points in increasing well-order, which produces each one exactly once.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from . import kernels
from .formula import initial_segment_boundary_size, projection_functional
from .lattice import DomainSignature, PointSet, boundary_size, format_pointset, parse_pointset
from .ordering import initial_segment, key_from_ranks, point_from_ranks, point_ranks

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_WITNESS_CAP",
    "BudgetExceeded",
    "VerificationReport",
    "default_box",
    "brute_force_min_boundary",
    "enumerate_compressed_candidates",
    "compressed_min_boundary",
    "verify_theorem1",
    "functional_minimum",
    "canonicalize_witness",
]

DEFAULT_BUDGET = 50_000_000
DEFAULT_WITNESS_CAP = 64
# minimisers kept before symmetry reduction
RAW_WITNESS_LIMIT = 4096

Box = tuple[tuple[int, int], ...]


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int, what: str = "subsets"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"search needs {needed} {what}, budget is {budget}")


@dataclass
class VerificationReport:
    sig: DomainSignature
    n: int
    mode: str
    min_boundary_found: int | None
    initial_segment_boundary: int
    witness_count: int
    witnesses: list[PointSet] = field(default_factory=list)
    search_space_size: int = 0
    elapsed: float = 0.0
    box: Box | None = None
    budget_exceeded: bool = False

    @property
    def falsified(self) -> bool:
        return (self.min_boundary_found is not None
                and self.min_boundary_found < self.initial_segment_boundary)

    @property
    def status(self) -> str:
        if self.budget_exceeded:
            return "BUDGET_EXCEEDED"
        return "FALSIFIED" if self.falsified else "PASS"

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "k": self.sig.k,
            "d": self.sig.d,
            "n": self.n,
            "mode": self.mode,
            "status": self.status,
            "min_boundary_found": self.min_boundary_found,
            "initial_segment_boundary": self.initial_segment_boundary,
            "witness_count": self.witness_count,
            "witnesses": [format_pointset(w) for w in self.witnesses],
            "search_space_size": self.search_space_size,
            "box": [list(b) for b in self.box] if self.box else None,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            sig=DomainSignature(data["k"], data["d"]),
            n=data["n"],
            mode=data["mode"],
            min_boundary_found=data["min_boundary_found"],
            initial_segment_boundary=data["initial_segment_boundary"],
            witness_count=data["witness_count"],
            witnesses=[parse_pointset(w) for w in data["witnesses"]],
            search_space_size=data["search_space_size"],
            elapsed=data.get("elapsed", 0.0),
            box=tuple(tuple(b) for b in data["box"]) if data.get("box") else None,
            budget_exceeded=data["status"] == "BUDGET_EXCEEDED",
        )

    def to_text(self, timing: bool = True) -> str:
        found = "-" if self.min_boundary_found is None else self.min_boundary_found
        lines = [
            f"{self.status} {self.sig} n={self.n} mode={self.mode} "
            f"min={found} segment={self.initial_segment_boundary}",
            f"  search_space_size {self.search_space_size}",
            f"  witness_count {self.witness_count}",
        ]
        if self.box:
            lines.append("  box " + " ".join(f"[{lo},{hi}]" for lo, hi in self.box))
        if timing:
            lines.append(f"  elapsed {self.elapsed:.3f}")
        for i, w in enumerate(self.witnesses, 1):
            lines.append(f"  witness {i}")
            lines.extend("    " + ln for ln in format_pointset(w).splitlines())
        return "\n".join(lines) + "\n"


def _require_pure(sig: DomainSignature) -> None:
    if not (sig.is_pure_z or sig.is_pure_n):
        raise ValueError(f"the oracle works on pure Z^k or N^k domains, got {sig}")


def default_box(sig: DomainSignature, n: int) -> Box:
    """Smallest symmetric box holding every compressed set of size ``n``.

    A centred fibre of size ``m <= n`` lies in ``[-ceil(n/2), ceil(n/2)]``;
    a downward fibre in ``[0, n-1]``.
    """
    r = -(-n // 2)
    return tuple((-r, r) if i < sig.k else (0, max(n - 1, 0)) for i in range(sig.dim))


def _check_box(sig: DomainSignature, box: Sequence[Sequence[int]]) -> Box:
    box = tuple((int(lo), int(hi)) for lo, hi in box)
    if len(box) != sig.dim:
        raise ValueError(f"box has {len(box)} intervals, domain has dimension {sig.dim}")
    for i, (lo, hi) in enumerate(box):
        if lo > hi:
            raise ValueError(f"empty interval [{lo},{hi}] in box")
        if i >= sig.k and lo < 0:
            raise ValueError(f"natural coordinate {i + 1} interval starts below 0")
    return box


def _box_points(sig: DomainSignature, box: Box) -> list[tuple[int, ...]]:
    pts = list(itertools.product(*(range(lo, hi + 1) for lo, hi in box)))
    pts.sort(key=lambda p: key_from_ranks(point_ranks(p, sig)))
    return pts


def _neighbourhood_masks(sig: DomainSignature, pts: list[tuple[int, ...]]) -> list[int]:
    offsets = list(itertools.product((-1, 0, 1), repeat=sig.dim))
    bit: dict[tuple[int, ...], int] = {}
    masks = []
    for p in pts:
        m = 0
        for eps in offsets:
            q = tuple(a + e for a, e in zip(p, eps))
            if any(c < 0 for c in q[sig.k:]):
                continue
            b = bit.get(q)
            if b is None:
                b = bit[q] = len(bit)
            m |= 1 << b
        masks.append(m)
    return masks


def _scan_chunk(args):
    masks, n, lo, hi, limit, backend = args
    return kernels.scan_subsets(masks, n, lo, hi, limit, backend=backend)


def _partitions(npoints: int, n: int, workers: int) -> list[tuple[int, int]]:
    """Split first-index values into ranges of roughly equal subset counts."""
    weights = [math.comb(npoints - 1 - p, n - 1) for p in range(npoints - n + 1)]
    total = sum(weights)
    parts, lo, acc = [], 0, 0
    for p, w in enumerate(weights):
        acc += w
        if acc * workers >= total * (len(parts) + 1) or p == len(weights) - 1:
            parts.append((lo, p + 1))
            lo = p + 1
    return parts


def _canonical_distinct(sets: Iterator[PointSet], cap: int) -> list[PointSet]:
    seen: dict[PointSet, None] = {}
    for s in sets:
        seen.setdefault(canonicalize_witness(s), None)
        if len(seen) >= cap:
            break
    return sorted(seen, key=_set_key)


def brute_force_min_boundary(sig: DomainSignature, n: int, box: Sequence | None = None, *,
                             budget: int = DEFAULT_BUDGET,
                             witness_cap: int = DEFAULT_WITNESS_CAP,
                             workers: int = 1, backend: str | None = None) -> VerificationReport:
    """Exhaustively minimise ``|dA|`` over all n-subsets ``A`` of ``box``.

    Boundaries are taken in the unbounded lattice.  ``witnesses`` holds up to
    ``witness_cap`` minimisers, one per symmetry class; ``witness_count``
    counts every minimising subset.
    """
    _require_pure(sig)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    box = _check_box(sig, default_box(sig, n) if box is None else box)
    seg = initial_segment(sig, n)
    if any(not lo <= c <= hi for p in seg for c, (lo, hi) in zip(p, box)):
        raise ValueError(f"box {box} does not contain the initial segment of size {n}")
    npoints = math.prod(hi - lo + 1 for lo, hi in box)
    space = math.comb(npoints, n)
    if space > budget:
        raise BudgetExceeded(space, budget)

    t0 = time.perf_counter()
    pts = _box_points(sig, box)
    masks = _neighbourhood_masks(sig, pts)
    limit = max(witness_cap, RAW_WITNESS_LIMIT)
    if workers > 1:
        jobs = [(masks, n, lo, hi, limit, backend)
                for lo, hi in _partitions(npoints, n, workers)]
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_scan_chunk, jobs))
    else:
        results = [_scan_chunk((masks, n, 0, npoints, limit, backend))]

    best = min(r[0] for r in results if r[0] >= 0)
    count = sum(r[1] for r in results if r[0] == best)
    raw = [w for r in results if r[0] == best for w in r[2]][:limit]
    witnesses = _canonical_distinct(
        (PointSet._from_sorted(sig, tuple(pts[i] for i in w)) for w in raw), witness_cap)
    return VerificationReport(
        sig=sig, n=n, mode="full", min_boundary_found=best,
        initial_segment_boundary=initial_segment_boundary_size(sig, n),
        witness_count=count, witnesses=witnesses, search_space_size=space,
        elapsed=time.perf_counter() - t0, box=box)


def _rank_downsets(dim: int, n: int) -> Iterator[list[tuple[int, ...]]]:
    members: set[tuple[int, ...]] = set()
    chosen: list[tuple[int, ...]] = []
    units = [tuple(int(j == i) for j in range(dim)) for i in range(dim)]

    def addable(c, last_key):
        if c in members or key_from_ranks(c) <= last_key:
            return False
        return all(tuple(a - b for a, b in zip(c, u)) in members
                   for u, ci in zip(units, c) if ci > 0)

    def grow(last_key):
        if len(chosen) == n:
            yield list(chosen)
            return
        if not chosen:
            cands = {(0,) * dim}
        else:
            cands = {tuple(a + b for a, b in zip(x, u)) for x in chosen for u in units}
        for c in sorted((c for c in cands if addable(c, last_key)), key=key_from_ranks):
            members.add(c)
            chosen.append(c)
            yield from grow(key_from_ranks(c))
            chosen.pop()
            members.discard(c)

    yield from grow(())


def enumerate_compressed_candidates(sig: DomainSignature, n: int, *,
                                    budget: int = DEFAULT_BUDGET) -> Iterator[PointSet]:
    """Yield every size-``n`` set compressed in every coordinate, once each.

    Raises :class:`BudgetExceeded` once more than ``budget`` sets are produced.
    """
    if sig.dim < 1:
        raise ValueError("domain must have k + d >= 1")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    for produced, ranks in enumerate(_rank_downsets(sig.dim, n), 1):
        if produced > budget:
            raise BudgetExceeded(produced, budget, "candidates")
        yield PointSet._from_sorted(sig, tuple(point_from_ranks(r, sig) for r in ranks))


def compressed_min_boundary(sig: DomainSignature, n: int, *, budget: int = DEFAULT_BUDGET,
                            witness_cap: int = DEFAULT_WITNESS_CAP) -> VerificationReport:
    """Minimum boundary over compressed candidates, scored by direct boundary count."""
    _require_pure(sig)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    t0 = time.perf_counter()
    best, minimisers, seen = None, [], 0
    for cand in enumerate_compressed_candidates(sig, n, budget=budget):
        seen += 1
        b = boundary_size(cand)
        if best is None or b < best:
            best, minimisers = b, [cand]
        elif b == best:
            minimisers.append(cand)
    return VerificationReport(
        sig=sig, n=n, mode="compressed_only", min_boundary_found=best,
        initial_segment_boundary=initial_segment_boundary_size(sig, n),
        witness_count=len(minimisers),
        witnesses=_canonical_distinct(iter(minimisers), witness_cap),
        search_space_size=seen, elapsed=time.perf_counter() - t0)


def verify_theorem1(sig: DomainSignature, n_max: int, mode: str = "full", *,
                    box: Sequence | None = None, budget: int = DEFAULT_BUDGET,
                    witness_cap: int = DEFAULT_WITNESS_CAP, workers: int = 1,
                    backend: str | None = None) -> list[VerificationReport]:
    """One report per ``n`` in ``1..n_max``.

    ``box`` applies to every ``n`` in full mode; by default each ``n`` gets
    :func:`default_box`.  A size whose search exceeds ``budget`` yields a
    report flagged ``budget_exceeded`` and the run continues.
    """
    _require_pure(sig)
    if mode not in ("full", "compressed_only"):
        raise ValueError(f"unknown mode {mode!r}")
    reports = []
    for n in range(1, n_max + 1):
        try:
            if mode == "full":
                rep = brute_force_min_boundary(sig, n, box, budget=budget,
                                               witness_cap=witness_cap, workers=workers,
                                               backend=backend)
            else:
                rep = compressed_min_boundary(sig, n, budget=budget, witness_cap=witness_cap)
        except BudgetExceeded as exc:
            rep = VerificationReport(
                sig=sig, n=n, mode=mode, min_boundary_found=None,
                initial_segment_boundary=initial_segment_boundary_size(sig, n),
                witness_count=0, search_space_size=exc.needed, budget_exceeded=True,
                box=_check_box(sig, default_box(sig, n) if box is None else box)
                if mode == "full" else None)
        if rep.min_boundary_found is not None and \
                rep.min_boundary_found > rep.initial_segment_boundary:
            raise RuntimeError(
                f"search missed the initial segment itself ({sig}, n={n}); this is a bug")
        reports.append(rep)
    return reports


def functional_minimum(sig: DomainSignature, n: int, *,
                       budget: int = DEFAULT_BUDGET) -> tuple[int, int, int]:
    """Minimum of the projection-sum functional over compressed candidates.

    Returns ``(minimum, value at the initial segment, candidates scanned)``.
    """
    _require_pure(sig)
    best, seen = None, 0
    for cand in enumerate_compressed_candidates(sig, n, budget=budget):
        seen += 1
        f = projection_functional(cand)
        best = f if best is None else min(best, f)
    return best, projection_functional(initial_segment(sig, n)), seen


@lru_cache(maxsize=1 << 16)
def _point_key(p: tuple[int, ...], sig: DomainSignature) -> tuple[int, ...]:
    return key_from_ranks(point_ranks(p, sig))


def _set_key(S: PointSet) -> tuple:
    sig = S.sig
    return tuple(sorted(_point_key(p, sig) for p in S.members))


def canonicalize_witness(S: PointSet) -> PointSet:
    """Least member of the orbit of ``S`` under the lattice graph's symmetries.

    On Z^k the group is generated by translations, coordinate permutations
    and sign flips; on N^k only coordinate permutations preserve the graph.
    Translates are normalised so that every coordinate's minimum is 0.
    """
    sig = S.sig
    _require_pure(sig)
    if not len(S):
        return S
    dim = sig.dim
    signs = itertools.product((1, -1), repeat=dim) if sig.k else [(1,) * dim]
    signs = list(signs)
    best, best_key = None, None
    for perm in itertools.permutations(range(dim)):
        for sg in signs:
            img = [tuple(sg[j] * p[perm[j]] for j in range(dim)) for p in S.points]
            if sig.k:
                lows = [min(q[j] for q in img) for j in range(dim)]
                img = [tuple(c - lo for c, lo in zip(q, lows)) for q in img]
            cand = PointSet._from_members(sig, img)
            key = _set_key(cand)
            if best_key is None or key < best_key:
                best, best_key = cand, key
    return best
