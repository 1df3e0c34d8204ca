import pytest

from conftest import N3, SQUARE, TWO_ZERO, face_by_rays
from semicoh import exactlin as xl
from semicoh.acceptance import random_cones
from semicoh.errors import NotAnEdge, NotSaturated
from semicoh.localcoh import (CLOSED_FORM_EDGE, HOMOLOGY_ENGINE, GradedPrime, canonical_lc_piece,
                              converse_report, edge_lc_piece_closed, graded_piece, krull_dim,
                              socle_infinite_edge, socle_scan)
from semicoh.semigroup import AffineSemigroup

X, Y, V, U = (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)


@pytest.fixture(scope="module")
def square():
    return AffineSemigroup(SQUARE)


def test_examples(square):
    xy = GradedPrime(face_by_rays(square, X, Y))
    assert xy.dim == 2 and krull_dim(square) == 3
    assert canonical_lc_piece(square, xy, 2, (0, -1, 0)) == 1
    for n in range(1, 8):
        assert edge_lc_piece_closed(square, xy, (0, -n, 0)) == 1
    assert edge_lc_piece_closed(square, xy, (0, 0, 0)) == 0
    assert edge_lc_piece_closed(square, xy, (1, -1, 0)) == 0
    m = GradedPrime(square.cone.face_lattice().empty)
    assert m.is_maximal
    assert canonical_lc_piece(square, m, 3, (0, 0, -1)) == 1
    assert canonical_lc_piece(square, m, 3, (0, 0, 1)) == 0
    N = AffineSemigroup(N3)
    for F in N.cone.face_lattice():
        assert canonical_lc_piece(N, GradedPrime(F), 0, (0, 0, 0)) == 0


def test_reports(square):
    xy = GradedPrime(face_by_rays(square, X, Y))
    r = graded_piece(square, xy, 2, (0, -2, 0))
    assert (r.dim, r.method) == (1, CLOSED_FORM_EDGE)
    r = graded_piece(square, xy, 2, (0, -2, 0), verify=True)
    assert (r.dim, r.method) == (1, HOMOLOGY_ENGINE)
    r = graded_piece(square, xy, 2, (0, -2, 0), field=3)
    assert r.dim == 1 and r.field_note.startswith("F_3: 1")


@pytest.mark.parametrize("gens", [SQUARE, N3, TWO_ZERO, [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 1)]])
def test_duality_at_maximal_prime(gens):
    Q = AffineSemigroup(gens)
    m = GradedPrime(Q.cone.face_lattice().empty)
    d = krull_dim(Q)
    for a in Q.points_in_tau_box([-3] * Q.r, [3] * Q.r):
        assert canonical_lc_piece(Q, m, d, a) == int(Q.membership(xl.vec_neg(a)))


@pytest.mark.parametrize("gens", [SQUARE, N3, TWO_ZERO])
def test_vanishing_band(gens):
    Q = AffineSemigroup(gens)
    d = krull_dim(Q)
    for F in Q.cone.face_lattice():
        P = GradedPrime(F)
        height = d - P.dim
        seen = set()
        for a in Q.points_in_tau_box([-2] * Q.r, [2] * Q.r):
            for j in range(-1, d + 2):
                v = canonical_lc_piece(Q, P, j, a)
                if j < height or j > d:
                    assert v == 0
                elif v:
                    seen.add(j)
        # the band is attained at its bottom degree
        assert height in seen


@pytest.mark.parametrize("gens", [SQUARE, N3, [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 1)]])
def test_closed_form_matches_engine(gens):
    Q = AffineSemigroup(gens)
    d = krull_dim(Q)
    for e in Q.cone.face_lattice().of_dim(1):
        P = GradedPrime(e)
        for a in Q.points_in_tau_box([-5] * Q.r, [5] * Q.r):
            assert edge_lc_piece_closed(Q, P, a) == canonical_lc_piece(Q, P, d - 1, a)


def test_socle(square):
    xy = GradedPrime(face_by_rays(square, X, Y))
    assert socle_infinite_edge(square, xy)
    assert [c.degree for c in socle_scan(square, xy, 6)] == [(0, -n, 0) for n in range(1, 7)]
    counts = [len(socle_scan(square, xy, b)) for b in (2, 4, 8)]
    assert counts == [2, 4, 8]
    xv = GradedPrime(face_by_rays(square, X, V))
    assert [c.degree for c in socle_scan(square, xv, 4)] == [(-n, 0, 0) for n in range(1, 5)]
    N = AffineSemigroup(N3)
    for e in N.cone.face_lattice().of_dim(1):
        assert not socle_infinite_edge(N, GradedPrime(e))
        assert socle_scan(N, GradedPrime(e), 3) == []


def test_errors(square):
    with pytest.raises(NotAnEdge):
        edge_lc_piece_closed(square, GradedPrime(square.cone.face_lattice().top), (0, 0, 0))
    F = AffineSemigroup([(4, 0), (3, 1), (1, 3), (0, 4)])
    with pytest.raises(NotSaturated):
        canonical_lc_piece(F, GradedPrime(F.cone.face_lattice().top), 0, (0, 0))


def test_converse(square):
    rep = converse_report(square)
    assert not rep.simplicial and rep.consistent
    assert len(rep.infinite_socle_edges) == 4 == len(rep.edges)
    assert len(rep.disjoint_pairs) == 4
    two = converse_report(AffineSemigroup(TWO_ZERO))
    assert two.simplicial and two.consistent and not two.infinite_socle_edges
    n3 = converse_report(AffineSemigroup(N3))
    assert n3.simplicial and n3.consistent and not n3.disjoint_pairs


def test_converse_random_and_corpus(corpus):
    for Q in corpus.values():
        assert converse_report(Q, sample_box=1).consistent
    for gens in random_cones(count=12, seed=99):
        assert converse_report(AffineSemigroup(gens), sample_box=1).consistent
