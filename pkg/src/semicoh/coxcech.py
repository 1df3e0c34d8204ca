"""The Z^r side: orthant unions, angle sets and the Cox irrelevant ideal.

Everything lives in the coordinates ``zeta = tau(alpha)``.  The irrelevant
ideal is generated by the monomials ``x^z`` whose zero set ``van(z)`` sits
inside ``van(F)`` for a nonempty face F of the cross-section polytope; its
minimal generators come from the vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .essential import angle_membership
from .semigroup import tau_plus


@dataclass(frozen=True)
class MonomialIdealNr:
    r: int
    generators: tuple
    faces_used: tuple = ()

    def __post_init__(self):
        for a, b in itertools.permutations(self.generators, 2):
            if all(x <= y for x, y in zip(a, b)):
                raise ValueError(f"generators {a} and {b} are comparable")


def irrelevant_ideal(Q) -> MonomialIdealNr:
    """One squarefree generator per ray: the functionals positive on it."""
    C = Q.cone
    gens = {tuple(0 if C.incidence[j][i] else 1 for i in range(C.num_facets))
            for j in range(len(C.rays))}
    minimal = sorted(g for g in gens
                     if not any(h != g and all(x <= y for x, y in zip(h, g)) for h in gens))
    faces = tuple(F.label() for F in C.face_lattice() if not F.is_empty)
    return MonomialIdealNr(C.num_facets, tuple(minimal), faces)


def cech_support_Nr(B: MonomialIdealNr, zeta) -> bool:
    """Whether ``x^zeta`` survives in the Cech hull: ``zeta^+`` dominates a generator."""
    if len(zeta) != B.r:
        raise ValueError("point and ideal live in different dimensions")
    zp = tau_plus(zeta)
    return any(all(a >= g for a, g in zip(zp, gen)) for gen in B.generators)


def cech_support_by_faces(Q, zeta) -> bool:
    """The same support rule through zero sets: ``van(zeta^+)`` inside some ``van(F)``."""
    van_z = {i for i, v in enumerate(tau_plus(zeta)) if v == 0}
    return any(van_z <= set(F.van) for F in Q.cone.face_lattice() if not F.is_empty)


def _basis(Q):
    return Q.saturation().hilbert_basis_tau()


def u_membership(Q, zeta) -> bool:
    """``zeta`` in every ``U_h``: for each h some ``i`` in its support has ``zeta_i >= 0``."""
    return all(any(z >= 0 for hi, z in zip(h, zeta) if hi > 0) for h in _basis(Q))


def angle_intersection_membership(Q, zeta) -> bool:
    return all(angle_membership(h, zeta) for h in _basis(Q))


@dataclass
class SandwichReport:
    z: tuple
    checked: int
    lower_failures: list = field(default_factory=list)
    upper_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.lower_failures and not self.upper_failures


def sandwich_witness(Q, box: int = 3) -> SandwichReport:
    """A shift z with ``U`` inside ``<H>`` inside ``U - z``, checked on a cube.

    ``z_i`` is one more than the largest ``h_i``.
    """
    H = _basis(Q)
    r = Q.saturation().r
    z = tuple(max((h[i] for h in H), default=0) + 1 for i in range(r))
    rep = SandwichReport(z, 0)
    for zeta in itertools.product(range(-box, box + 1), repeat=r):
        rep.checked += 1
        inside = angle_intersection_membership(Q, zeta)
        if u_membership(Q, zeta) and not inside:
            rep.lower_failures.append(zeta)
        if inside and not u_membership(Q, tuple(a + b for a, b in zip(zeta, z))):
            rep.upper_failures.append(zeta)
    return rep


@dataclass
class IrrelevantCheck:
    total: int
    agree: int
    counterexamples: list
    van_mismatches: list

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.van_mismatches


def prop_irrelevant_check(Q, box: int = 3) -> IrrelevantCheck:
    """Check ``-zeta in U`` iff ``x^zeta`` not in the Cech hull over ``[-box, box]^r``."""
    S = Q.saturation()
    B = irrelevant_ideal(S)
    total = agree = 0
    bad, vbad = [], []
    for zeta in itertools.product(range(-box, box + 1), repeat=S.r):
        total += 1
        lhs = u_membership(S, tuple(-v for v in zeta))
        supp = cech_support_Nr(B, zeta)
        if lhs == (not supp):
            agree += 1
        else:
            bad.append(zeta)
        if supp != cech_support_by_faces(S, zeta):
            vbad.append(zeta)
    return IrrelevantCheck(total, agree, bad, vbad)
