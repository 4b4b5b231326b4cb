import itertools
import random

import pytest
from hypothesis import strategies as st

from vertexiso.lattice import DomainSignature, PointSet

Z1, Z2, Z3 = DomainSignature(1), DomainSignature(2), DomainSignature(3)
N1, N2, N3 = DomainSignature(0, 1), DomainSignature(0, 2), DomainSignature(0, 3)
Z1N1 = DomainSignature(1, 1)

# every signature with 1 <= k + d <= 4
ALL_SIGS = [DomainSignature(k, d) for k in range(5) for d in range(5) if 1 <= k + d <= 4]

SQUARE = PointSet(Z2, [(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)])


def naive_boundary(S: PointSet) -> set:
    """Boundary straight from the definition: scan the padded bounding box."""
    if not len(S):
        return set()
    sig = S.sig
    lo = [min(p[i] for p in S) - 1 for i in range(sig.dim)]
    hi = [max(p[i] for p in S) + 1 for i in range(sig.dim)]
    out = set()
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if any(c < 0 for c in x[sig.k:]):
            continue
        if any(max(abs(a - b) for a, b in zip(x, s)) <= 1 for s in S):
            out.add(x)
    return out


def random_set(rng: random.Random, sig: DomainSignature, size: int, lo=-5, hi=5) -> PointSet:
    pts = set()
    while len(pts) < size:
        pts.add(tuple(rng.randint(lo, hi) if i < sig.k else rng.randint(0, hi)
                      for i in range(sig.dim)))
    return PointSet(sig, pts)


def point_sets(sig: DomainSignature, max_size=12, lo=-4, hi=4):
    coord = [st.integers(lo, hi) if i < sig.k else st.integers(0, hi) for i in range(sig.dim)]
    return st.sets(st.tuples(*coord), max_size=max_size).map(lambda pts: PointSet(sig, pts))


signatures = st.sampled_from(ALL_SIGS)


@st.composite
def sig_and_set(draw, max_size=12):
    sig = draw(signatures)
    return draw(point_sets(sig, max_size=max_size))


# verdict lines from the acceptance module, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20101)
