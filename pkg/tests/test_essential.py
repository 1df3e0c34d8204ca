import itertools

import pytest

from conftest import FOUR, SQUARE, TWO_ZERO
from semicoh import exactlin as xl
from semicoh.acceptance import raw_elements
from semicoh.errors import NotSaturated, NotSimplicial, WrongRank
from semicoh.essential import (ESSENTIAL, IN_E, NOT_ESSENTIAL, NOT_IN_E, UNKNOWN, AngleSet,
                               angle_membership, essential_grid_2d, essential_membership,
                               essential_shift_simplicial, essential_test, essentialize,
                               unsaturated_bound)
from semicoh.semigroup import AffineSemigroup

NUM = [(2,), (3,)]


def test_angle_membership():
    assert angle_membership((1, 1), (-1, 5))
    assert not angle_membership((2, 0), (-2, 7))
    assert angle_membership((0, 2), (-100, -1))
    assert (0, 0) in AngleSet((1, 0))
    with pytest.raises(ValueError):
        AngleSet((0, 0))
    with pytest.raises(ValueError):
        angle_membership((1,), (1, 2))


def test_essential_test_examples():
    Q = AffineSemigroup(TWO_ZERO)
    assert essential_test(Q, (-1, 3)).status == ESSENTIAL
    v = essential_test(Q, (-2, 2))
    assert v.status == NOT_ESSENTIAL and v.witness == (2, 0) and v.method == "closed_form"
    N = AffineSemigroup(NUM)
    assert essential_test(N, (-1,)).status == ESSENTIAL
    v = essential_test(N, (-2,))
    assert v.status == NOT_ESSENTIAL and v.witness == (2,)


def test_membership_examples():
    assert essential_membership(AffineSemigroup(TWO_ZERO), (5, 1)).status == IN_E
    N = AffineSemigroup(NUM)
    assert essential_membership(N, (7,)).status == IN_E
    assert essential_membership(N, (-2,)).status == NOT_IN_E
    assert [n for n in range(-8, 9) if essential_membership(N, (n,)).status == IN_E] == \
        list(range(-1, 9))


def test_essentialize():
    Q = AffineSemigroup(TWO_ZERO)
    assert essentialize(Q, (-4, 2)) == (0, 2)
    assert essentialize(Q, (0, 0)) == (0, 0)
    assert essentialize(Q, (-1, 3)) == (-1, 3)
    for a in itertools.product(range(-5, 6), repeat=2):
        if Q.in_group(a):
            e = essentialize(Q, a)
            assert Q.intersection_eq(a, e).equal
    with pytest.raises(NotSaturated):
        essentialize(AffineSemigroup(FOUR), (0, 0))


def test_shifts():
    Q = AffineSemigroup(TWO_ZERO)
    assert essential_shift_simplicial(Q) == (2, 2)
    assert essential_shift_simplicial(AffineSemigroup(NUM)) == (4,)
    with pytest.raises(NotSimplicial):
        essential_shift_simplicial(AffineSemigroup(SQUARE))


@pytest.mark.parametrize("gens,shift", [(TWO_ZERO, None), (TWO_ZERO, (1, 1)), (NUM, None),
                                        (FOUR, None)])
def test_shift_moves_essential_points_into_q(gens, shift):
    Q = AffineSemigroup(gens)
    a = shift or essential_shift_simplicial(Q)
    for e in Q.points_in_tau_box([-6] * Q.r, [6] * Q.r):
        if essential_test(Q, e).status == ESSENTIAL:
            assert Q.membership(xl.vec_add(a, e)), e


def test_shifts_never_shrink_on_square():
    Q = AffineSemigroup(SQUARE)
    ess = [e for e in Q.points_in_tau_box([-4] * 4, [4] * 4)
           if essential_test(Q, e).status == ESSENTIAL]
    for a in Q.points_in_tau_box([0] * 4, [3] * 4):
        if Q.membership(a):
            assert any(not Q.membership(xl.vec_add(a, e)) for e in ess), a


@pytest.mark.parametrize("gens", [TWO_ZERO, SQUARE, FOUR, NUM])
def test_q_stability(gens):
    Q = AffineSemigroup(gens)
    for p in Q.points_in_tau_box([-3] * Q.r, [3] * Q.r):
        if essential_membership(Q, p).status == IN_E:
            for g in Q.generators:
                assert essential_membership(Q, xl.vec_add(p, g)).status == IN_E


@pytest.mark.parametrize("gens", [TWO_ZERO, SQUARE, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]])
def test_normal_consistency(gens):
    Q = AffineSemigroup(gens)
    H = Q.hilbert_basis_tau()
    for e in Q.points_in_tau_box([-4] * Q.r, [4] * Q.r):
        closed = all(angle_membership(h, Q.tau(e)) for h in H)
        assert (essential_test(Q, e).status == ESSENTIAL) == closed


def raw_essential(gens, eps, W, inner):
    """Definition of an essential point evaluated on windowed intersection sets."""
    raw = raw_elements(gens, 0, W)
    core = {g for g in raw if max(g) <= inner}

    def inter(a):
        return {g for g in core if xl.vec_sub(g, a) in raw}

    base = inter(eps)
    return all(inter(xl.vec_add(eps, a)) != base for a in gens)


@pytest.mark.parametrize("gens,lo,hi", [(NUM, -8, 8), (TWO_ZERO, -4, 4), (FOUR, -6, 4)])
def test_definition_oracle(gens, lo, hi):
    Q = AffineSemigroup(gens)
    for e in itertools.product(range(lo, hi + 1), repeat=Q.d):
        if not Q.in_group(e):
            continue
        v = essential_test(Q, e).status
        assert v != UNKNOWN
        assert (v == ESSENTIAL) == raw_essential(gens, e, 40, 24), e


def test_unsaturated_membership_exact_and_bound():
    Q = AffineSemigroup(FOUR)
    a_Q, pred = unsaturated_bound(Q)
    assert a_Q == (4, 4)
    statuses = set()
    for p in Q.points_in_tau_box([-6, -6], [6, 6]):
        if essential_test(Q, p).status == ESSENTIAL:
            assert pred(Q.tau(xl.vec_add(p, a_Q)))
        statuses.add(essential_membership(Q, p).status)
    assert UNKNOWN not in statuses and {IN_E, NOT_IN_E} <= statuses
    N = AffineSemigroup(NUM)
    a, pred = unsaturated_bound(N)
    assert a == (2,) and all(pred(N.tau((e + 2,))) for e in range(-1, 10))
    S = AffineSemigroup(TWO_ZERO)
    assert unsaturated_bound(S)[0] == (0, 0)


def test_essential_shift_for_four():
    Q = AffineSemigroup(FOUR)
    assert essential_shift_simplicial(Q) == (8, 8)


def test_grid():
    g = essential_grid_2d(AffineSemigroup(TWO_ZERO))
    for (z1, z2), kind in g.cells.items():
        fam = (z1 >= 0 and z2 >= 0 and (z1 + z2) % 2 == 0) or \
              (z1 == -1 and z2 > 0 and z2 % 2) or (z2 == -1 and z1 > 0 and z1 % 2)
        if (z1 + z2) % 2:
            assert kind == "off"
        else:
            assert (kind == "essential") == bool(fam), (z1, z2)
    assert "#" in g.to_ascii()
    svg = g.to_svg()
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    n2 = essential_grid_2d(AffineSemigroup([(1, 0), (0, 1)]), box=(-3, 3))
    assert {z for z, k in n2.cells.items() if k == "essential"} == \
        set(itertools.product(range(4), repeat=2))
    with pytest.raises(WrongRank):
        essential_grid_2d(AffineSemigroup([(2, 0), (3, 0)]))
