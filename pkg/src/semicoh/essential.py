"""Essential points and the essential set of an affine semigroup.

A degree ``eps`` is an essential point when no nonunit ``a`` of Q gives
``(eps+Q) & Q == (a+eps+Q) & Q``; the essential set is the union of the
translates ``eps + Q``.  Saturated semigroups get exact closed forms through
the angle sets ``<h>`` of the Hilbert basis of ``tau(Q)``; everything else is
tri-state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import exactlin as xl
from .cone import is_simplicial_mod_units
from .errors import BudgetExhausted, NotSaturated, NotSimplicial, WrongRank
from .semigroup import DEFAULT_BOX, AffineSemigroup

ESSENTIAL, NOT_ESSENTIAL, UNKNOWN = "essential", "not_essential", "unknown"
IN_E, NOT_IN_E = "in", "not_in"


@dataclass(frozen=True)
class AngleSet:
    """``<h> = {zeta : zeta_i > -h_i for some i with h_i > 0}``."""

    h: tuple

    def __post_init__(self):
        if any(v < 0 for v in self.h) or not any(self.h):
            raise ValueError(f"angle vector must be nonnegative and nonzero, got {self.h}")

    def __contains__(self, zeta) -> bool:
        return angle_membership(self.h, zeta)


def angle_membership(h: Sequence[int], zeta: Sequence[int]) -> bool:
    if len(h) != len(zeta):
        raise ValueError("angle vector and point differ in length")
    return any(z > -hi for hi, z in zip(h, zeta) if hi > 0)


@dataclass(frozen=True)
class EssentialVerdict:
    """Result of an essential-point test.

    ``method`` is one of ``closed_form``, ``box_search``, ``face_conductor`` or
    ``whole_semigroup``; ``witness`` is the nonunit generator with equal
    intersection sets when the status is ``not_essential``.
    """

    status: str
    method: str
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class MembershipVerdict:
    status: str
    essential_point: Optional[tuple] = None


_METHOD = {"tau_plus": "closed_form", "both_whole": "whole_semigroup",
           "face_conductor": "face_conductor", "witness": "box_search", "undecided": "box_search"}


def essential_test(Q: AffineSemigroup, eps, box: int = DEFAULT_BOX) -> EssentialVerdict:
    eps = tuple(eps)
    Q.coords(eps)
    if Q.is_saturated():
        for h, g in Q.hilbert_basis_tau_with_generators():
            if not angle_membership(h, Q.tau(eps)):
                return EssentialVerdict(NOT_ESSENTIAL, "closed_form", g)
        return EssentialVerdict(ESSENTIAL, "closed_form")
    unknown = False
    for a in Q.nonunit_generators:
        v = Q.intersection_eq(eps, xl.vec_add(eps, a), box)
        if v.status == "equal":
            return EssentialVerdict(NOT_ESSENTIAL, _METHOD[v.reason], a)
        if v.status == "unknown":
            unknown = True
    if unknown:
        return EssentialVerdict(UNKNOWN, "box_search")
    return EssentialVerdict(ESSENTIAL, "box_search")


def tau_bounds_from_axes(Q: AffineSemigroup) -> Optional[list]:
    """Per facet, the smallest axis element of the Hilbert basis of ``tau(Q)``.

    Returns None when some facet has no axis element.
    """
    out = []
    for i in range(Q.r):
        vals = [h[i] for h in Q.hilbert_basis_tau()
                if h[i] > 0 and all(h[j] == 0 for j in range(Q.r) if j != i)]
        if not vals:
            return None
        out.append(min(vals))
    return out


def essential_membership(Q: AffineSemigroup, alpha, box: int = DEFAULT_BOX) -> MembershipVerdict:
    """Decide whether ``alpha`` lies in the essential set.

    In the unsaturated case the candidate points ``alpha - q`` are searched
    over Q-elements ``q``; when every facet carries an axis Hilbert basis
    element the outer bound on essential points makes the search finite and
    the negative answer is exact.
    """
    alpha = tuple(alpha)
    if Q.is_saturated():
        v = essential_test(Q, alpha, box)
        return MembershipVerdict(IN_E, alpha) if v.status == ESSENTIAL else MembershipVerdict(NOT_IN_E)
    ta = Q.tau(alpha)
    axes = tau_bounds_from_axes(Q)
    if axes is not None:
        aq = Q.tau(Q.global_face_bound())
        # essential eps has tau_i(eps) > -axes_i - tau_i(a_Q)
        hi = [ta[i] + axes[i] + aq[i] - 1 for i in range(Q.r)]
        exact = True
    else:
        hi = [max(0, t) + box for t in ta]
        exact = False
    if any(v < 0 for v in hi):
        return MembershipVerdict(NOT_IN_E) if exact else MembershipVerdict(UNKNOWN)
    candidates = sorted(Q.points_in_tau_box([0] * Q.r, hi), key=lambda q: (Q.sigma(q), q))
    undecided = False
    for q in candidates:
        if not Q.membership(q):
            continue
        eps = xl.vec_sub(alpha, q)
        v = essential_test(Q, eps, box)
        if v.status == ESSENTIAL:
            return MembershipVerdict(IN_E, eps)
        if v.status == UNKNOWN:
            undecided = True
    if exact and not undecided:
        return MembershipVerdict(NOT_IN_E)
    return MembershipVerdict(UNKNOWN)


def essentialize(Q: AffineSemigroup, alpha) -> tuple:
    """An essential point with the same intersection set as ``alpha``.

    Coordinates with ``tau_i(alpha) > 0`` stay fixed; the rest range over
    ``[tau_i(alpha), 0]`` and a componentwise maximal point of that finite
    fiber is chosen, ties broken by the lexicographically largest tau.
    """
    if not Q.is_saturated():
        raise NotSaturated("essentialize needs a saturated semigroup")
    alpha = tuple(alpha)
    t = Q.tau(alpha)
    lo = list(t)
    hi = [v if v > 0 else 0 for v in t]
    pts = [(Q.tau(p), p) for p in Q.points_in_tau_box(lo, hi)]
    taus = [tp for tp, _ in pts]

    def dominated(z):
        return any(w != z and all(a >= b for a, b in zip(w, z)) for w in taus)

    best = max((tp, p) for tp, p in pts if not dominated(tp))
    eps = best[1]
    assert essential_test(Q, eps).status == ESSENTIAL
    return eps


def essential_shift_simplicial(Q: AffineSemigroup, budget: Optional[int] = None) -> tuple:
    """A degree ``a`` with ``a + E`` inside Q, for Q whose saturation is simplicial.

    ``a = a_Q + h~`` where ``tau(h~)`` collects the axis Hilbert basis
    elements of ``tau(Q)``; ``h~`` is the sum of generators realizing them.
    """
    if not is_simplicial_mod_units(Q.cone):
        raise NotSimplicial("the saturation is not simplicial modulo units")
    zero = tuple(0 for _ in range(Q.d))
    if Q.r == 0:
        return zero
    reps = dict(Q.hilbert_basis_tau_with_generators())
    h_tilde = zero
    for i in range(Q.r):
        axis = sorted(h for h in reps
                      if h[i] > 0 and all(h[j] == 0 for j in range(Q.r) if j != i))
        if not axis:
            raise BudgetExhausted(f"no axis Hilbert basis element for facet {i}")
        h_tilde = xl.vec_add(h_tilde, reps[axis[0]])
    return xl.vec_add(Q.global_face_bound(budget), h_tilde)


def unsaturated_bound(Q: AffineSemigroup, budget: Optional[int] = None):
    """``(a_Q, pred)``: every essential point ``eps`` satisfies ``pred(tau(eps + a_Q))``."""
    a_Q = Q.global_face_bound(budget)
    H = Q.hilbert_basis_tau()

    def pred(zeta) -> bool:
        return all(angle_membership(h, zeta) for h in H)

    return a_Q, pred


# ----------------------------------------------------------------------
# two-dimensional raster

GRID_CHARS = {"essential": "#", "in": "+", "neither": ".", "unknown": "?", "off": " "}
GRID_COLORS = {"essential": "#1f3b73", "in": "#b8cde8", "neither": "#ffffff",
               "unknown": "#f2c28a", "off": "#ffffff"}


@dataclass(frozen=True)
class EssentialGrid:
    """Classification of every tau-coordinate point in a square box.

    ``cells[(z1, z2)]`` is one of the keys of ``GRID_CHARS``.
    """

    lo: int
    hi: int
    cells: dict

    def to_ascii(self) -> str:
        lines = []
        for z2 in range(self.hi, self.lo - 1, -1):
            row = "".join(GRID_CHARS[self.cells[(z1, z2)]] for z1 in range(self.lo, self.hi + 1))
            lines.append(f"{z2:>4} |{row}")
        lines.append("     +" + "-" * (self.hi - self.lo + 1))
        lines.append(f"      tau_1 from {self.lo} to {self.hi}, tau_2 upward")
        return "\n".join(lines)

    def to_svg(self, cell: int = 16) -> str:
        """Solid spots for essential points, hollow spots for the other lattice
        points, dotted lines between cells whose ``tau^+`` classes differ."""
        n = self.hi - self.lo + 1
        size = n * cell

        def corner(z1, z2):
            return (z1 - self.lo) * cell, (self.hi - z2) * cell

        parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
                 f'viewBox="0 0 {size} {size}">',
                 f'<rect width="{size}" height="{size}" fill="#ffffff"/>']
        dots = 'stroke="#888" stroke-width="1" stroke-dasharray="2,2"'
        for z1 in range(self.lo, self.hi + 1):
            for z2 in range(self.lo, self.hi + 1):
                here = (max(z1, 0), max(z2, 0))
                x, y = corner(z1, z2)
                if z1 < self.hi and (max(z1 + 1, 0), max(z2, 0)) != here:
                    parts.append(f'<line x1="{x + cell}" y1="{y}" x2="{x + cell}" y2="{y + cell}" {dots}/>')
                if z2 < self.hi and (max(z1, 0), max(z2 + 1, 0)) != here:
                    parts.append(f'<line x1="{x}" y1="{y}" x2="{x + cell}" y2="{y}" {dots}/>')
        for (z1, z2), kind in sorted(self.cells.items()):
            if kind == "off":
                continue
            x, y = corner(z1, z2)
            cx, cy, r = x + cell / 2, y + cell / 2, cell * 0.3
            if kind == "essential":
                parts.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{r:g}" fill="{GRID_COLORS[kind]}"/>')
            else:
                parts.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{r:g}" fill="{GRID_COLORS[kind]}" '
                             f'stroke="#1f3b73" stroke-width="1"/>')
        parts.append("</svg>")
        return "\n".join(parts)


def essential_grid_2d(Q: AffineSemigroup, box: tuple = (-5, 7),
                      search_box: int = DEFAULT_BOX,
                      progress: Optional[Callable[[int], None]] = None) -> EssentialGrid:
    if Q.rank != 2 or Q.r != 2:
        raise WrongRank(f"the grid needs a rank-2 group with two facets (rank {Q.rank}, {Q.r} facets)")
    lo, hi = box
    cells = {(a, b): "off" for a in range(lo, hi + 1) for b in range(lo, hi + 1)}
    for p in Q.points_in_tau_box([lo, lo], [hi, hi]):
        z = Q.tau(p)
        if essential_test(Q, p, search_box).status == ESSENTIAL:
            kind = "essential"
        else:
            m = essential_membership(Q, p, search_box).status
            kind = {IN_E: "in", NOT_IN_E: "neither", UNKNOWN: "unknown"}[m]
        cells[z] = kind
        if progress:
            progress(1)
    return EssentialGrid(lo, hi, cells)
