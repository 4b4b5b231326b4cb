import pytest
from hypothesis import given, settings

from vertexiso.compression import (Kind, central_compress, centralize, compress,
                                   downward_compress, i_compress, is_centrally_compressed,
                                   is_compressed, is_downward_compressed,
                                   uncompressed_coordinate)
from vertexiso.lattice import DomainSignature, PointSet, boundary_size, fibers
from vertexiso.ordering import initial_segment, z_rank

from conftest import N1, N2, SQUARE, Z1, Z1N1, Z2, Z3, point_sets, random_set, sig_and_set

FOUR_POINTS = PointSet(Z3, [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)])


def is_centred(xs):
    """The fibre is {-a..a} or {-a..a+1} for some a >= 0."""
    lo, hi = min(xs), max(xs)
    return sorted(xs) == list(range(lo, hi + 1)) and lo <= 0 and hi in (-lo, -lo + 1)


def is_downward(xs):
    return sorted(xs) == list(range(len(xs)))


def fibre_sizes(S, i):
    return {base: len(xs) for base, xs in fibers(S, i).items()}


def test_central_compress_examples():
    S = PointSet(Z1, [(3,), (4,), (5,)])
    assert set(central_compress(S, 1)) == {(-1,), (0,), (1,)}
    S = PointSet(Z1, [(10,), (11,), (12,), (13,)])
    assert set(central_compress(S, 1)) == {(-1,), (0,), (1,), (2,)}
    assert central_compress(SQUARE, 1) == SQUARE


def test_downward_compress_examples():
    S = PointSet(N1, [(2,), (5,), (7,)])
    assert set(downward_compress(S, 1)) == {(0,), (1,), (2,)}
    assert downward_compress(PointSet(N1, [(0,)]), 1) == PointSet(N1, [(0,)])
    T = PointSet(Z1N1, [(4, 0), (4, 1), (-3, 0)])
    assert downward_compress(T, 2) == T


def test_wrong_coordinate_type_is_rejected():
    with pytest.raises(ValueError):
        central_compress(PointSet(Z1N1, [(0, 0)]), 2)
    with pytest.raises(ValueError):
        downward_compress(PointSet(Z1N1, [(0, 0)]), 1)
    with pytest.raises(ValueError):
        i_compress(PointSet(Z1N1, [(0, 0)]), 1)
    with pytest.raises(ValueError):
        i_compress(PointSet(Z1, [(0,)]), 1)
    with pytest.raises(IndexError):
        central_compress(SQUARE, 3)


def test_i_compress_examples():
    for i in (1, 2, 3):
        assert i_compress(FOUR_POINTS, i) == FOUR_POINTS
    seg = initial_segment(Z2, 7)
    assert i_compress(seg, 1) == seg and i_compress(seg, 2) == seg
    A = PointSet(Z2, [(0, 5), (0, 7)])
    # sections fixing coordinate 2 are singletons: each becomes the origin of Z^1
    assert i_compress(A, 2) == A
    # fixing coordinate 1 leaves one section {5, 7} of size 2 -> {0, 1}
    assert i_compress(A, 1) == PointSet(Z2, [(0, 0), (0, 1)])


def test_fixpoint_that_is_not_an_initial_segment():
    assert all(i_compress(FOUR_POINTS, i) == FOUR_POINTS for i in (1, 2, 3))
    assert FOUR_POINTS != initial_segment(Z3, 4)


@given(point_sets(Z3, max_size=15))
def test_i_compress_sections_are_initial_segments(A):
    for i in (1, 2, 3):
        C = i_compress(A, i)
        assert len(C) == len(A)
        sub = DomainSignature(2)
        for j in {p[i - 1] for p in A}:
            a_sec = {p for p in A if p[i - 1] == j}
            c_sec = {p[:i - 1] + p[i:] for p in C if p[i - 1] == j}
            assert c_sec == set(initial_segment(sub, len(a_sec)))


@given(sig_and_set(max_size=15))
def test_single_coordinate_operators(S):
    for i in range(1, S.sig.dim + 1):
        if i <= S.sig.k:
            T, shape = central_compress(S, i), is_centred
        else:
            T, shape = downward_compress(S, i), is_downward
        assert len(T) == len(S)
        assert fibre_sizes(T, i) == fibre_sizes(S, i)
        assert all(shape(xs) for xs in fibers(T, i).values())
        assert boundary_size(T) <= boundary_size(S)
        op = central_compress if i <= S.sig.k else downward_compress
        assert op(T, i) == T


@given(point_sets(Z3, max_size=15))
def test_i_compress_is_idempotent_and_no_worse(A):
    for i in (1, 2, 3):
        C = i_compress(A, i)
        assert i_compress(C, i) == C
        assert boundary_size(C) <= boundary_size(A)


def test_centralize_examples():
    assert centralize(PointSet(Z2, [(7, 3)])) == PointSet(Z2, [(0, 0)])
    block = PointSet(Z2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert centralize(block) == block


def test_centralize_random_sets(rng):
    for _ in range(20):
        S = random_set(rng, Z2, 10)
        T = centralize(S)
        assert len(T) == len(S) and boundary_size(T) <= boundary_size(S)
        assert is_compressed(T)


@settings(max_examples=150)
@given(sig_and_set(max_size=15))
def test_centralize_fixpoint_soundness(S):
    T = centralize(S)
    assert len(T) == len(S)
    assert boundary_size(T) <= boundary_size(S)
    for i in range(1, S.sig.dim + 1):
        shape = is_centred if i <= S.sig.k else is_downward
        assert all(shape(xs) for xs in fibers(T, i).values())
    assert uncompressed_coordinate(T) is None
    assert centralize(T) == T


def _potential(S):
    return sum(z_rank(c) if i < S.sig.k else c for p in S for i, c in enumerate(p))


@given(sig_and_set(max_size=15))
def test_compression_never_raises_rank_potential(S):
    for i in range(1, S.sig.dim + 1):
        T = central_compress(S, i) if i <= S.sig.k else downward_compress(S, i)
        if T != S:
            assert _potential(T) < _potential(S)
        else:
            assert _potential(T) == _potential(S)


def test_compress_dispatch():
    S = PointSet(Z1N1, [(5, 3), (6, 3)])
    assert compress(S, "central", 1) == central_compress(S, 1)
    assert compress(S, Kind.DOWNWARD, 2) == downward_compress(S, 2)
    assert compress(FOUR_POINTS, "sections", 2) == FOUR_POINTS
    with pytest.raises(ValueError):
        compress(S, "sideways", 1)


def test_compressedness_predicates():
    assert is_centrally_compressed(SQUARE, 1)
    assert not is_centrally_compressed(PointSet(Z2, [(1, 0)]), 1)
    assert is_downward_compressed(PointSet(N2, [(0, 0), (0, 1)]), 2)
    assert not is_downward_compressed(PointSet(N2, [(0, 1)]), 2)
    with pytest.raises(ValueError):
        is_downward_compressed(SQUARE, 1)
