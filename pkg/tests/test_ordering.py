import functools
import itertools
import random

import pytest
from hypothesis import given, strategies as st

from vertexiso.ordering import (Ordering, compare_points, compare_z, initial_segment,
                                iter_points, order_key, plus_minus, point_ranks, succ_z,
                                successor_point, z_rank, z_unrank)
from vertexiso.lattice import DomainSignature, section

from conftest import N1, N2, N3, Z1, Z1N1, Z2, Z3

# first forty points of Z^3 in the well-ordering, as a fixed reference listing
TABLE_Z3 = [
    (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0),
    (1, 0, 1), (1, 1, 0), (1, 1, 1), (0, 0, -1), (0, 1, -1),
    (1, 0, -1), (1, 1, -1), (0, -1, 0), (0, -1, 1), (1, -1, 0),
    (1, -1, 1), (0, -1, -1), (1, -1, -1), (-1, 0, 0), (-1, 0, 1),
    (-1, 1, 0), (-1, 1, 1), (-1, 0, -1), (-1, 1, -1), (-1, -1, 0),
    (-1, -1, 1), (-1, -1, -1), (0, 0, 2), (0, 1, 2), (1, 0, 2),
    (1, 1, 2), (0, -1, 2), (1, -1, 2), (-1, 0, 2), (-1, 1, 2),
    (-1, -1, 2), (0, 2, 0), (0, 2, 1), (1, 2, 0), (1, 2, 1),
]


@pytest.mark.parametrize("a, b, expected", [
    (0, 1, Ordering.LESS),
    (1, -1, Ordering.LESS),
    (2, 2, Ordering.EQUAL),
    (-2, 3, Ordering.LESS),
    (-1, 1, Ordering.GREATER),
])
def test_compare_z(a, b, expected):
    assert compare_z(a, b) == expected


@pytest.mark.parametrize("a, expected", [(0, 1), (1, -1), (-1, 2), (2, -2), (-2, 3)])
def test_succ_z(a, expected):
    assert succ_z(a) == expected


@pytest.mark.parametrize("a, expected", [(1, (2, 0)), (-1, (-2, 0)), (0, (-1, 0)), (3, (4, 2)), (-3, (-4, -2))])
def test_plus_minus(a, expected):
    assert plus_minus(a) == expected


def test_rank_is_a_bijection():
    listed = [0]
    for i in range(1, 50):
        listed += [i, -i]
    assert [z_rank(a) for a in listed] == list(range(len(listed)))
    for a in range(-500, 501):
        assert z_unrank(z_rank(a)) == a
        assert z_rank(succ_z(a)) == z_rank(a) + 1
    assert z_rank(0) == 0


def test_rank_overflow_is_loud():
    with pytest.raises(OverflowError):
        z_rank(2**63)
    with pytest.raises(OverflowError):
        z_unrank(2**64)


@pytest.mark.parametrize("u, v, expected", [
    ((0, 0, 1), (0, 1, 0), Ordering.LESS),
    ((1, 1, 1), (0, 0, -1), Ordering.LESS),
    ((0, -1, 2), (0, 2, 0), Ordering.LESS),
])
def test_compare_points_table_entries(u, v, expected):
    assert compare_points(u, v, Z3) == expected
    assert compare_points(v, u, Z3) == -expected


def test_compare_points_reflexive_and_dimension_checked():
    assert compare_points((2, 5), (2, 5), Z2) == Ordering.EQUAL
    with pytest.raises(ValueError):
        compare_points((1, 2), (1, 2, 3), Z2)


@pytest.mark.parametrize("x, expected", [
    ((0, 0, 0), (0, 0, 1)),
    ((1, 1, 1), (0, 0, -1)),
    ((-1, -1, -1), (0, 0, 2)),
])
def test_successor_point_examples(x, expected):
    assert successor_point(x, Z3) == expected


def test_initial_segment_examples():
    assert list(initial_segment(Z3, 1)) == [(0, 0, 0)]
    assert list(initial_segment(Z3, 5)) == TABLE_Z3[:5]
    assert list(initial_segment(N2, 6)) == [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (1, 2)]
    assert len(initial_segment(Z2, 0)) == 0


def test_table_reproduction():
    assert list(initial_segment(Z3, 40)) == TABLE_Z3


def _rank_cube(sig, r):
    """All points whose coordinate ranks are all < r."""
    axes = [[z_unrank(i) for i in range(r)] if j < sig.k else list(range(r))
            for j in range(sig.dim)]
    return list(itertools.product(*axes))


@pytest.mark.parametrize("sig, r", [(Z1, 40), (Z2, 12), (Z3, 7), (DomainSignature(4), 4),
                                    (N1, 40), (N2, 12), (N3, 7), (Z1N1, 12)])
def test_enumeration_matches_brute_force_sort(sig, r):
    # a rank cube is an initial segment: anything before a cube point has smaller max rank
    cube = _rank_cube(sig, r)
    by_rule = sorted(cube, key=functools.cmp_to_key(lambda u, v: compare_points(u, v, sig)))
    enumerated = list(itertools.islice(iter_points(sig), len(cube)))
    assert enumerated == by_rule


@pytest.mark.parametrize("sig", [Z2, Z3, DomainSignature(4), N3])
def test_successor_soundness(sig):
    count = 10_000
    pts = list(itertools.islice(iter_points(sig), count + 1))
    for p, q in zip(pts[:300], pts[1:301]):
        assert compare_points(p, q, sig) == Ordering.LESS
    # every point preceding the last one has max rank <= that of the last one,
    # so a sorted rank cube of that size contains the whole true prefix
    r = max(max(point_ranks(p, sig)) for p in pts) + 1
    truth = sorted(_rank_cube(sig, r), key=lambda p: order_key(p, sig))
    assert pts == truth[:count + 1]


def test_key_agrees_with_comparator():
    rng = random.Random(7)
    for _ in range(100_000):
        sig = rng.choice([Z2, Z3, N2, N3, Z1N1, DomainSignature(2, 2)])
        u = tuple(rng.randint(-4, 4) if i < sig.k else rng.randint(0, 4) for i in range(sig.dim))
        v = tuple(rng.randint(-4, 4) if i < sig.k else rng.randint(0, 4) for i in range(sig.dim))
        ku, kv = order_key(u, sig), order_key(v, sig)
        assert compare_points(u, v, sig) == (ku > kv) - (ku < kv)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5),
       st.lists(st.integers(-30, 30), min_size=1, max_size=5))
def test_key_agrees_with_comparator_property(u, v):
    n = min(len(u), len(v))
    sig = DomainSignature(n)
    u, v = tuple(u[:n]), tuple(v[:n])
    ku, kv = order_key(u, sig), order_key(v, sig)
    assert compare_points(u, v, sig) == (ku > kv) - (ku < kv)


@pytest.mark.parametrize("sig", [Z1, Z2, Z3, N2, Z1N1])
def test_origin_is_minimum(sig):
    origin = (0,) * sig.dim
    assert next(iter_points(sig)) == origin
    assert all(order_key(p, sig) > order_key(origin, sig)
               for p in itertools.islice(iter_points(sig), 1, 300))


def test_natural_coordinates_reject_negatives():
    with pytest.raises(ValueError):
        point_ranks((0, -1), N2)


@pytest.mark.parametrize("sig", [Z2, Z3])
def test_sections_of_initial_segments_are_initial_segments(sig):
    sub = DomainSignature(sig.k - 1)
    for n in range(1, 201):
        seg = initial_segment(sig, n)
        for i in range(1, sig.k + 1):
            for j in {p[i - 1] for p in seg}:
                fibre = {p[:i - 1] + p[i:] for p in seg if p[i - 1] == j}
                assert fibre == set(initial_segment(sub, len(fibre)))


def test_section_of_table_segment():
    assert section(initial_segment(Z3, 8), 3, (0, 0)) == {0, 1}
