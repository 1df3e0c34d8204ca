import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semicoh import exactlin as xl
from semicoh.acceptance import raw_elements
from semicoh.errors import NotInGroup
from semicoh.semigroup import AffineSemigroup, tau_plus

TWO_ZERO = [(2, 0), (1, 1), (0, 2)]
SQUARE = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
FOUR = [(4, 0), (3, 1), (1, 3), (0, 4)]
NUM = [(2,), (3,)]


def box_points(d, lo, hi):
    return itertools.product(range(lo, hi + 1), repeat=d)


@pytest.mark.parametrize("gens,hi", [(NUM, 40), (TWO_ZERO, 12), (FOUR, 14), (SQUARE, 5),
                                     ([(3, 0), (2, 1), (0, 3)], 10), ([(1, 2), (2, 1), (1, 1)], 9)])
def test_membership_matches_enumeration(gens, hi):
    Q = AffineSemigroup(gens)
    raw = raw_elements(gens, 0, hi)
    for p in box_points(len(gens[0]), -2, hi):
        assert Q.membership(p) == (p in raw), p


def test_membership_with_units():
    Q = AffineSemigroup([(1, 0), (-1, 0), (0, 2), (1, 3)])
    assert Q.membership((-7, 2)) and Q.membership((5, 3)) and not Q.membership((0, 1))
    assert not Q.membership((0, -2))
    assert Q.units and len(Q.nonunit_generators) == 2


def test_tau_and_tau_plus():
    Q = AffineSemigroup(TWO_ZERO)
    assert Q.tau((-1, 3)) == (-1, 3)
    S = AffineSemigroup(SQUARE)
    assert S.tau((0, -1, 0)) == (0, -1, 1, 0)
    assert tau_plus((-1, 3, 0)) == (0, 3, 0)
    with pytest.raises(NotInGroup):
        AffineSemigroup(FOUR).tau((1, 0))


def test_numerical_example():
    Q = AffineSemigroup(NUM)
    assert Q.saturation_hilbert_basis() == [(1,)]
    assert sorted(Q.hilbert_basis_tau()) == [(2,), (3,)]
    assert Q.conductor_to_saturation() == (2,)
    assert Q.global_face_bound() == (2,)
    assert Q.intersection_eq((-2,), (0,)).equal
    assert Q.sufficient_equality((2,), (-4,))
    assert not Q.intersection_eq((-1,), (0,)).equal


def test_hilbert_bases():
    Q = AffineSemigroup(TWO_ZERO)
    assert sorted(Q.saturation_hilbert_basis()) == [(0, 2), (1, 1), (2, 0)]
    assert sorted(Q.hilbert_basis_tau()) == [(0, 2), (1, 1), (2, 0)]
    S = AffineSemigroup(SQUARE)
    assert sorted(S.saturation_hilbert_basis()) == sorted(SQUARE)
    assert S.is_saturated()
    assert AffineSemigroup([(3, 0), (1, 1), (0, 3)]).is_saturated()


def brute_hilbert_basis(Q, hi):
    """Irreducible nonzero points of the saturation in the box [0, hi]^d."""
    d = Q.d
    pts = [p for p in box_points(d, 0, hi) if any(p) and Q.in_saturation(p)]
    pset = set(pts)
    return {p for p in pts
            if not any(q != p and xl.vec_sub(p, q) in pset for q in pts
                       if all(a <= b for a, b in zip(q, p)))}


@pytest.mark.parametrize("gens,hi", [(TWO_ZERO, 6), (FOUR, 8), ([(3, 0), (2, 1), (0, 3)], 6),
                                     ([(1, 0), (1, 3)], 6), ([(2, 0, 0), (0, 2, 0), (1, 1, 2), (0, 0, 1)], 4)])
def test_saturation_hilbert_basis_brute(gens, hi):
    Q = AffineSemigroup(gens)
    computed = set(Q.saturation_hilbert_basis())
    brute = brute_hilbert_basis(Q, hi)
    assert computed == brute


def test_four_zero_three_one():
    Q = AffineSemigroup(FOUR)
    assert not Q.is_saturated()
    assert Q.in_saturation((2, 2)) and not Q.membership((2, 2))
    mg = Q.saturation_module_generators()
    assert set(mg.elements) == {(0, 0), (2, 2)}
    assert mg.certificate == "parallelepiped"
    assert Q.conductor_to_saturation() == (0, 4)
    assert Q.global_face_bound() == (4, 4)


@pytest.mark.parametrize("gens", [NUM, FOUR, [(2, 0), (3, 0), (0, 1), (1, 1)],
                                  [(3,), (5,)], [(2, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)]])
def test_conductor_box_check(gens):
    Q = AffineSemigroup(gens)
    c = Q.conductor_to_saturation()
    assert Q.membership(c)
    hi = max(max(g) for g in gens) * 4
    raw = raw_elements(gens, 0, hi + max(c))
    for p in box_points(Q.d, 0, hi):
        if Q.in_saturation(p):
            assert xl.vec_add(c, p) in raw


def test_partial_saturation_contains_between():
    Q = AffineSemigroup(FOUR)
    for F in Q.cone.face_lattice():
        aF = Q.face_conductor(F)
        assert Q.membership(aF)
        assert all(Q.tau(aF)[i] == 0 for i in F.van)
        for p in box_points(2, -4, 10):
            if Q.in_partial_saturation(F, p):
                assert Q.in_saturation(p)
                assert Q.membership(xl.vec_add(aF, p))


def windowed(Q, alpha, raw):
    return {g for g in raw if xl.vec_sub(g, alpha) in raw}


def test_sufficient_equality_brute_force():
    """Whenever the face-conductor test fires, the intersection sets agree in a window."""
    for gens in [FOUR, NUM, [(2, 0), (3, 0), (0, 1), (1, 1)]]:
        Q = AffineSemigroup(gens)
        d = Q.d
        W = 34
        raw = raw_elements(gens, 0, W)
        inner = {g for g in raw if all(c <= W - 14 for c in g)}
        rng = random.Random(1)
        fired = 0
        for _ in range(120):
            beta = tuple(rng.randint(-12, 2) for _ in range(d))
            if not Q.in_group(beta):
                continue
            a = xl.vec_add(rng.choice(Q.nonunit_generators), rng.choice(list(Q.generators)))
            if Q.sufficient_equality(a, beta):
                fired += 1
                lhs = windowed(Q, beta, raw) & inner
                rhs = windowed(Q, xl.vec_add(a, beta), raw) & inner
                assert lhs == rhs, (gens, a, beta)
        assert fired, gens


def test_generator_sufficiency_brute_force():
    """Equality for some nonunit element forces equality for some nonunit generator."""
    Q = AffineSemigroup(FOUR)
    W = 30
    raw = raw_elements(FOUR, 0, W)
    inner = {g for g in raw if max(g) <= 16}
    small = [q for q in raw if any(q) and max(q) <= 8]
    for eps in box_points(2, -6, 3):
        if not Q.in_group(eps):
            continue
        base = windowed(Q, eps, raw) & inner
        any_el = any(windowed(Q, xl.vec_add(eps, q), raw) & inner == base for q in small)
        any_gen = any(windowed(Q, xl.vec_add(eps, g), raw) & inner == base
                      for g in Q.nonunit_generators)
        assert any_el == any_gen, eps


def test_intersection_eq_against_window():
    Q = AffineSemigroup(FOUR)
    W = 30
    raw = raw_elements(FOUR, 0, W)
    inner = {g for g in raw if max(g) <= 16}
    pts = [p for p in box_points(2, -5, 5) if Q.in_group(p)]
    for a, b in itertools.combinations(pts[::3], 2):
        v = Q.intersection_eq(a, b)
        same = windowed(Q, a, raw) & inner == windowed(Q, b, raw) & inner
        if v.status == "equal":
            assert same, (a, b)
        elif v.status == "not_equal":
            w = v.witness
            assert Q.in_shifted(a, w) != Q.in_shifted(b, w)


def test_saturated_intersection_rule():
    Q = AffineSemigroup(TWO_ZERO)
    assert Q.intersection_eq((-4, 2), (0, 2)).equal
    v = Q.intersection_eq((1, 1), (0, 0))
    assert not v.equal and Q.in_shifted((1, 1), v.witness) != Q.in_shifted((0, 0), v.witness)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=4))
def test_hypothesis_membership(gens):
    gens = [g for g in gens if any(g)] or [(1, 0)]
    Q = AffineSemigroup(gens)
    raw = raw_elements(gens, 0, 9)
    for p in box_points(2, 0, 9):
        if Q.in_group(p):
            assert Q.membership(p) == (p in raw)
        else:
            assert p not in raw


def test_iter_elements_in_level_order():
    Q = AffineSemigroup(FOUR)
    seen = []
    for x in Q.iter_elements():
        seen.append(x)
        if len(seen) == 30:
            break
    assert all(Q.membership(x) for x in seen)
    assert [Q.sigma(x) for x in seen] == sorted(Q.sigma(x) for x in seen)
    assert len(set(seen)) == len(seen)
