"""Affine semigroups: membership, Hilbert bases, conductors, intersection sets.

An :class:`AffineSemigroup` is built from integer generators.  Everything is
computed in coordinates of the lattice ``Q^gp`` they span; the facet
functionals ``tau_i`` come from :mod:`semicoh.cone`.  Graded searches use the
level function ``sigma = sum_i tau_i``, which is positive on every nonunit.
"""

from __future__ import annotations

import heapq
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import exactlin as xl
from .cone import Face, PointedCone, cone_from_generators
from .errors import BudgetExhausted, DimMismatch, NotInGroup

DEFAULT_BOX = 10
DEFAULT_BUDGET = 200_000


def tau_plus(z: Sequence[int]) -> tuple:
    """Zero out the negative entries of a functional-value vector."""
    return tuple(max(0, v) for v in z)


@dataclass(frozen=True)
class IntersectionVerdict:
    """Outcome of comparing ``(alpha+Q) & Q`` with ``(beta+Q) & Q``.

    ``status`` is ``"equal"``, ``"not_equal"`` or ``"unknown"``; ``reason``
    names the rule that decided it and ``witness`` is a degree in exactly one
    of the two sets when the answer is ``"not_equal"``.
    """

    status: str
    reason: str
    witness: Optional[tuple] = None

    @property
    def equal(self) -> bool:
        return self.status == "equal"


@dataclass(frozen=True)
class ModuleGenerators:
    """Generators of an overmodule of Q found by a sigma-level search.

    ``certificate`` is ``"parallelepiped"`` when the search covered a
    provable bound, ``"band"`` when it stopped after a clean band check.
    """

    elements: tuple
    band_top: int
    certificate: str


class AffineSemigroup:
    """A finitely generated submonoid of ``Z^d``.

    Args:
        generators: integer vectors, all of length ``d``.
        d: ambient dimension; inferred from the generators when omitted.
        budget: default search budget (lattice points examined) for the
            conductor and Hilbert basis searches.
    """

    def __init__(self, generators: Sequence[Sequence[int]], d: Optional[int] = None,
                 budget: int = DEFAULT_BUDGET):
        gens = [tuple(int(x) for x in g) for g in generators]
        if not gens:
            raise ValueError("an affine semigroup needs at least one generator")
        self.d = len(gens[0]) if d is None else d
        for g in gens:
            if len(g) != self.d:
                raise DimMismatch(f"generator {g} is not of dimension {self.d}")
        self.generators = tuple(gens)
        self.budget = budget
        self.cone: PointedCone = cone_from_generators(gens, self.d)
        self.ggroup = self.cone.basis
        self._gen_coords = [xl.lattice_solve(list(self.ggroup), g) for g in gens]
        F = self.cone.functionals_lattice
        self._gen_tau = [tuple(xl.dot(f, c) for f in F) for c in self._gen_coords]
        unit_ids = [k for k, t in enumerate(self._gen_tau) if not any(t)]
        self._nonunit_ids = [k for k in range(len(gens)) if any(self._gen_tau[k])]
        unit_lat = xl.lattice_basis([self._gen_coords[k] for k in unit_ids], self.rank) \
            if unit_ids else []
        self._unit_lat = unit_lat
        self.units = tuple(xl.vecmat(u, list(self.ggroup)) for u in unit_lat)
        if unit_lat:
            S, _, V = xl.smith_normal_form(unit_lat)
            self._qmods = [S[i][i] for i in range(len(unit_lat))]
            self._qV = V
        else:
            self._qmods, self._qV = [], None
        # basis change adapted to the lineality split: first the complement
        compl = list(self.cone.complement_lattice)
        lin = list(self.cone.lineality_lattice)
        self._compl = compl
        stacked = compl + lin
        self._to_split = xl.inverse_rational(stacked) if stacked else []
        self._T = [tuple(xl.dot(f, w) for w in compl) for f in F]
        self._lock = threading.RLock()
        self._cache: dict = {}
        self._memo: dict = {}
        self._tau_memo: dict = {}

    # ------------------------------------------------------------------
    # basic data

    def __repr__(self):
        return f"AffineSemigroup({[list(g) for g in self.generators]})"

    @property
    def rank(self) -> int:
        return self.cone.rank

    @property
    def r(self) -> int:
        return self.cone.num_facets

    @property
    def nonunit_generators(self) -> tuple:
        return tuple(dict.fromkeys(self.generators[k] for k in self._nonunit_ids))

    def _cached(self, key, fn):
        if key in self._cache:
            return self._cache[key]
        with self._lock:
            if key not in self._cache:
                self._cache[key] = fn()
        return self._cache[key]

    def coords(self, alpha: Sequence[int]) -> tuple:
        """Coordinates of ``alpha`` in the lattice basis of ``Q^gp``.

        Raises:
            NotInGroup: if ``alpha`` is not in ``Q^gp``.
        """
        alpha = tuple(int(x) for x in alpha)
        if len(alpha) != self.d:
            raise DimMismatch(f"degree {alpha} is not of dimension {self.d}")
        if self.rank == 0:
            if any(alpha):
                raise NotInGroup(f"{alpha} is not in the group of {self!r}")
            return ()
        x = xl.lattice_solve(list(self.ggroup), alpha)
        if x is None:
            raise NotInGroup(f"{alpha} is not in the group of {self!r}")
        return x

    def in_group(self, alpha) -> bool:
        try:
            self.coords(alpha)
        except NotInGroup:
            return False
        return True

    def ambient(self, coords: Sequence[int]) -> tuple:
        if self.rank == 0:
            return tuple(0 for _ in range(self.d))
        return xl.vecmat(tuple(coords), list(self.ggroup))

    def tau(self, alpha: Sequence[int]) -> tuple:
        return self.cone.tau_lattice(self.coords(alpha))

    def sigma(self, alpha) -> int:
        return sum(self.tau(alpha))

    def _qkey(self, x: tuple) -> tuple:
        if self._qV is None:
            return x
        y = xl.vecmat(x, self._qV)
        k = len(self._qmods)
        return tuple(y[j] % self._qmods[j] for j in range(k) if self._qmods[j] != 1) + y[k:]

    # ------------------------------------------------------------------
    # membership

    def membership(self, gamma: Sequence[int]) -> bool:
        """Decide whether ``gamma`` is a nonnegative integer combination of the generators."""
        try:
            x = self.coords(gamma)
        except NotInGroup:
            return False
        return self._member_lat(x)

    def _member_lat(self, x: tuple) -> bool:
        F = self.cone.functionals_lattice
        if any(xl.dot(f, x) < 0 for f in F):
            return False
        memo = self._memo
        zero_key = self._qkey(tuple(0 for _ in x))
        gens = [self._gen_coords[k] for k in self._nonunit_ids]
        k0 = self._qkey(x)
        if k0 in memo:
            return memo[k0]
        # explicit stack: [coords, key, next generator index, pending child key]
        stack = [[x, k0, 0, None]]
        while stack:
            node = stack[-1]
            cx, ck, i, pending = node
            if ck in memo:
                stack.pop()
                continue
            if pending is not None and memo.get(pending) is True:
                memo[ck] = True
                stack.pop()
                continue
            if ck == zero_key:
                memo[ck] = True
                stack.pop()
                continue
            if i == len(gens):
                memo[ck] = False
                stack.pop()
                continue
            node[2] = i + 1
            node[3] = None
            y = tuple(a - b for a, b in zip(cx, gens[i]))
            if any(xl.dot(f, y) < 0 for f in F):
                continue
            ky = self._qkey(y)
            res = memo.get(ky)
            if res is True:
                memo[ck] = True
                stack.pop()
            elif res is None:
                node[3] = ky
                stack.append([y, ky, 0, None])
        return memo[k0]

    def in_tau_image(self, z: Sequence[int]) -> bool:
        """Decide ``z in tau(Q)`` by dynamic programming on functional values."""
        z = tuple(z)
        if any(v < 0 for v in z):
            return False
        memo = self._tau_memo
        images = list(dict.fromkeys(self._gen_tau[k] for k in self._nonunit_ids))

        def rec(v):
            if v in memo:
                return memo[v]
            if not any(v):
                memo[v] = True
                return True
            ok = False
            for h in images:
                w = tuple(a - b for a, b in zip(v, h))
                if all(c >= 0 for c in w) and rec(w):
                    ok = True
                    break
            memo[v] = ok
            return ok

        return rec(z)

    # ------------------------------------------------------------------
    # lattice point enumeration

    def points_in_tau_box(self, lo: Sequence[int], hi: Sequence[int],
                          budget: Optional[int] = None) -> Iterator[tuple]:
        """Yield one ambient representative (mod lineality) per lattice point
        of ``Q^gp`` whose functional values lie in ``[lo_i, hi_i]``.
        """
        lo, hi = list(lo), list(hi)
        if len(lo) != self.r or len(hi) != self.r:
            raise DimMismatch("box bounds must have one entry per facet")
        w = len(self._compl)
        if w == 0:
            if all(l <= 0 <= h for l, h in zip(lo, hi)):
                yield tuple(0 for _ in range(self.d))
            return
        T = self._T
        sel: list = []
        for i in range(self.r):
            if xl.rank_bareiss([T[j] for j in sel] + [T[i]]) > len(sel):
                sel.append(i)
                if len(sel) == w:
                    break
        Tsub = [T[i] for i in sel]
        D = xl.det(Tsub)
        inv = xl.inverse_rational(Tsub)
        adj = [tuple(int(v * D) for v in row) for row in inv]
        limit = budget if budget is not None else self.budget * 50
        count = 0
        ranges = [range(lo[i], hi[i] + 1) for i in sel]
        for vals in itertools.product(*ranges):
            count += 1
            if count > limit:
                raise BudgetExhausted("lattice box enumeration exceeded budget", level=count)
            num = [xl.dot(row, vals) for row in adj]
            if any(c % D for c in num):
                continue
            z = tuple(c // D for c in num)
            t = [xl.dot(row, z) for row in T]
            if any(t[i] < lo[i] or t[i] > hi[i] for i in range(self.r)):
                continue
            yield self.ambient(xl.vecmat(z, self._compl))

    def split_coords(self, alpha) -> tuple:
        """Coordinates of ``alpha`` in the complement part of the lineality split."""
        x = self.coords(alpha)
        y = xl.vecmat(x, self._to_split) if self._to_split else ()
        return tuple(int(v) for v in y[: len(self._compl)])

    def iter_elements(self, gen_ids=None, budget: Optional[int] = None) -> Iterator[tuple]:
        """Yield elements of Q (or of the subsemigroup on ``gen_ids``) modulo
        units, in order of increasing sigma, ties broken lexicographically.
        """
        ids = self._nonunit_ids if gen_ids is None else [k for k in gen_ids if k in self._nonunit_ids]
        gens = [self._gen_coords[k] for k in ids]
        start = tuple(0 for _ in range(self.rank))
        seen = {self._qkey(start)}
        heap = [(0, self.ambient(start), start)]
        limit = budget if budget is not None else self.budget
        popped = 0
        while heap:
            s, amb, x = heapq.heappop(heap)
            yield amb
            popped += 1
            if popped > limit:
                raise BudgetExhausted("element enumeration exceeded budget", level=s)
            for g in gens:
                y = tuple(a + b for a, b in zip(x, g))
                k = self._qkey(y)
                if k in seen:
                    continue
                seen.add(k)
                heapq.heappush(heap, (sum(self.cone.tau_lattice(y)), self.ambient(y), y))

    # ------------------------------------------------------------------
    # Hilbert bases and saturation

    def _triangulation(self):
        L = self.cone.face_lattice()

        def tri(F):
            if len(F.rays) == F.dim + 1:
                return [F.rays]
            v = F.rays[0]
            out = []
            for G in L.facets_of(F):
                if v not in G.rays:
                    out.extend((v,) + s for s in tri(G))
            return out

        if not self.cone.rays:
            return []
        return tri(L.top)

    def _ray_split(self, j):
        x = self.cone.rays_lattice[j]
        y = xl.vecmat(x, self._to_split)
        return tuple(int(v) for v in y[: len(self._compl)])

    def saturation_hilbert_basis(self, budget: Optional[int] = None) -> list:
        """Minimal generators of ``Q^sat`` modulo units, as ambient vectors.

        Candidates are the lattice points of the half-open fundamental
        parallelepipeds of a pulling triangulation, plus the rays; reducible
        candidates are discarded.
        """
        return self._cached(("sat_hb", budget), lambda: self._sat_hb(budget))

    def _sat_hb(self, budget):
        limit = budget if budget is not None else self.budget
        w = len(self._compl)
        if w == 0:
            return []
        T = self._T
        cands = {self._ray_split(j) for j in range(len(self.cone.rays))}
        total = 0
        for simplex in self._triangulation():
            R = [self._ray_split(j) for j in simplex]
            S, _, V = xl.smith_normal_form(R)
            diag = [S[i][i] for i in range(w)]
            vol = 1
            for dd in diag:
                vol *= dd
            total += vol
            if total > limit:
                raise BudgetExhausted("parallelepiped enumeration exceeded budget",
                                      level=total, partial=sorted(cands))
            Vinv = xl.inverse_rational(V)
            Rinv = xl.inverse_rational(R)
            for y in itertools.product(*[range(dd) for dd in diag]):
                x = xl.vecmat(y, Vinv)
                lam = xl.vecmat(x, Rinv)
                frac = [Fraction(v) - (Fraction(v).numerator // Fraction(v).denominator) for v in lam]
                p = xl.vecmat(frac, R)
                p = tuple(int(v) for v in p)
                if any(p):
                    cands.add(p)

        def tz(z):
            return tuple(xl.dot(row, z) for row in T)

        cl = sorted(cands)
        basis = []
        for c in cl:
            red = False
            for h in cl:
                if h == c:
                    continue
                diff = tuple(a - b for a, b in zip(c, h))
                if all(v >= 0 for v in tz(diff)):
                    red = True
                    break
            if not red:
                basis.append(c)
        return sorted(self.ambient(xl.vecmat(z, self._compl)) for z in basis)

    def hilbert_basis_tau(self) -> list:
        """Minimal generators of ``tau(Q)`` as functional-value vectors."""
        return [h for h, _ in self.hilbert_basis_tau_with_generators()]

    def hilbert_basis_tau_with_generators(self) -> list:
        """Pairs ``(h, g)`` with ``h`` minimal in ``tau(Q)`` and ``g`` a generator with ``tau(g) = h``."""
        def compute():
            reps: dict = {}
            for k in self._nonunit_ids:
                reps.setdefault(self._gen_tau[k], self.generators[k])
            out = []
            for h, g in reps.items():
                red = False
                for h2 in reps:
                    if h2 == h:
                        continue
                    diff = tuple(a - b for a, b in zip(h, h2))
                    if all(v >= 0 for v in diff) and self.in_tau_image(diff):
                        red = True
                        break
                if not red:
                    out.append((h, g))
            return sorted(out)
        return self._cached("hb_tau", compute)

    def is_saturated(self) -> bool:
        def compute():
            for h in self.saturation_hilbert_basis():
                if not self.membership(h):
                    return False
            for l in self.cone.lineality_basis:
                if not (self.membership(l) and self.membership(xl.vec_neg(l))):
                    return False
            return True
        return self._cached("saturated", compute)

    def saturation(self) -> "AffineSemigroup":
        """The normalization ``Q^sat`` as a semigroup in the same ambient lattice."""
        def compute():
            if self.is_saturated():
                return self
            gens = list(self.saturation_hilbert_basis())
            for l in self.cone.lineality_basis:
                gens += [l, xl.vec_neg(l)]
            return AffineSemigroup(gens, self.d, budget=self.budget)
        return self._cached("saturation", compute)

    # ------------------------------------------------------------------
    # faces of Q

    def face_of(self, a: Sequence[int]) -> Face:
        """Smallest face of the cone containing ``a``."""
        t = self.tau(a)
        return self.cone.face_from_van([i for i, v in enumerate(t) if v == 0])

    def face_generator_ids(self, F: Face) -> list:
        return [k for k, t in enumerate(self._gen_tau) if all(t[i] == 0 for i in F.van)]

    def localization(self, F: Face) -> "AffineSemigroup":
        """``Q + F^gp``: Q with the generators lying on F inverted."""
        def compute():
            ids = self.face_generator_ids(F)
            gens = list(self.generators) + [xl.vec_neg(self.generators[k]) for k in ids]
            return AffineSemigroup(gens, self.d, budget=self.budget)
        return self._cached(("loc", F.rays), compute)

    def in_saturation(self, gamma) -> bool:
        try:
            return all(v >= 0 for v in self.tau(gamma))
        except NotInGroup:
            return False

    def in_partial_saturation(self, F: Face, gamma) -> bool:
        return self.in_saturation(gamma) and self.localization(F).membership(gamma)

    # ------------------------------------------------------------------
    # conductors

    def _ray_generators(self):
        """For each ray, the generator of smallest sigma lying on it."""
        out = []
        for j in range(len(self.cone.rays)):
            best = None
            for k in self._nonunit_ids:
                t = self._gen_tau[k]
                if all((t[i] == 0) == self.cone.incidence[j][i] for i in range(self.r)):
                    if best is None or sum(t) < sum(self._gen_tau[best]):
                        best = k
            out.append(best)
        return out

    def _parallelepiped_bound(self) -> int:
        rg = self._ray_generators()
        best = 0
        for simplex in self._triangulation():
            best = max(best, sum(sum(self._gen_tau[rg[j]]) for j in simplex))
        return best

    def _needed(self, member, lo_level, hi_level, budget):
        """Elements of the overmodule at levels [lo, hi] not reachable by
        subtracting a nonunit generator inside the overmodule."""
        gens = self.nonunit_generators
        out = []
        box = self.points_in_tau_box([0] * self.r, [hi_level] * self.r, budget=budget)
        for s in box:
            lev = self.sigma(s)
            if lev < lo_level or lev > hi_level or not member(s):
                continue
            if any(member(xl.vec_sub(s, q)) for q in gens):
                continue
            out.append(s)
        return out

    def saturation_module_generators(self, budget: Optional[int] = None) -> ModuleGenerators:
        """Generators of ``Q^sat`` as a Q-module.

        A needed generator lies in a half-open parallelepiped spanned by ray
        generators of some simplex, so its level is below the largest
        simplex sum of ray-generator levels; the search covers that bound.
        """
        def compute():
            if self.is_saturated():
                return ModuleGenerators((tuple(0 for _ in range(self.d)),), 0, "parallelepiped")
            B = self._parallelepiped_bound()
            els = self._needed(self.in_saturation, 0, B, budget or self.budget * 50)
            return ModuleGenerators(tuple(sorted(els, key=lambda s: (self.sigma(s), s))), B,
                                    "parallelepiped")
        return self._cached(("satgen", budget), compute)

    def _search_conductor(self, targets, gen_ids, budget):
        for c in self.iter_elements(gen_ids=gen_ids, budget=budget):
            if all(self.membership(xl.vec_add(c, g)) for g in targets):
                return c
        raise BudgetExhausted("no conductor found", level=None)

    def conductor_to_saturation(self, budget: Optional[int] = None) -> tuple:
        """An element ``c`` of Q with ``c + Q^sat`` contained in Q, smallest by level."""
        def compute():
            mg = self.saturation_module_generators(budget)
            return self._search_conductor(mg.elements, None, budget)
        return self._cached(("conductor", budget), compute)

    def partial_saturation(self, F: Face, budget: Optional[int] = None) -> ModuleGenerators:
        """Generators of the partial saturation ``(Q + F^gp) & Q^sat`` over Q.

        The search runs to the parallelepiped bound of ``Q^sat`` and then
        checks one band of width ``max sigma(generator)`` above it; if the band
        contains a needed element the band top is raised until the budget runs
        out.
        """
        def compute():
            zero = tuple(0 for _ in range(self.d))
            if self.is_saturated() or not F.van or set(F.van) == set(range(self.r)):
                if self.is_saturated() or set(F.van) == set(range(self.r)):
                    return ModuleGenerators((zero,), 0, "parallelepiped")
                mg = self.saturation_module_generators(budget)
                return mg
            member = lambda s: self.in_partial_saturation(F, s)  # noqa: E731
            D = max(self.sigma(g) for g in self.nonunit_generators)
            B = self._parallelepiped_bound()
            limit = budget or self.budget * 50
            found = self._needed(member, 0, B, limit)
            for _ in range(64):
                extra = self._needed(member, B + 1, B + D, limit)
                if not extra:
                    return ModuleGenerators(tuple(sorted(found, key=lambda s: (self.sigma(s), s))),
                                            B, "band")
                found += extra
                B += D
            raise BudgetExhausted("partial saturation band check never closed", level=B,
                                  partial=found)
        return self._cached(("partial", F.rays, budget), compute)

    def face_conductor(self, F: Face, budget: Optional[int] = None) -> tuple:
        """An element ``a_F`` of the face F with ``a_F + Q^F`` contained in Q."""
        def compute():
            mg = self.partial_saturation(F, budget)
            return self._search_conductor(mg.elements, self.face_generator_ids(F), budget)
        return self._cached(("face_conductor", F.rays, budget), compute)

    def global_face_bound(self, budget: Optional[int] = None) -> tuple:
        """An element ``a_Q`` of Q with ``tau_i(a_Q) >= tau_i(a_F)`` for every face F and i."""
        def compute():
            zero = tuple(0 for _ in range(self.d))
            if self.is_saturated():
                return zero
            need = [0] * self.r
            for F in self.cone.face_lattice():
                t = self.tau(self.face_conductor(F, budget))
                need = [max(a, b) for a, b in zip(need, t)]
            for c in self.iter_elements(budget=budget):
                if all(v >= n for v, n in zip(self.tau(c), need)):
                    return c
            raise BudgetExhausted("no dominating element found")
        return self._cached(("a_Q", budget), compute)

    # ------------------------------------------------------------------
    # intersection sets (alpha + Q) & Q

    def in_shifted(self, alpha, gamma) -> bool:
        """Whether ``gamma`` lies in ``(alpha + Q) & Q``."""
        return self.membership(gamma) and self.membership(xl.vec_sub(gamma, alpha))

    def sufficient_equality(self, a, beta, budget: Optional[int] = None) -> bool:
        """Sound test for ``(beta+Q) & Q == (a+beta+Q) & Q`` with ``a`` in Q.

        True when ``tau_i(a + a_F + beta) <= 0`` for every functional not
        vanishing on the smallest face F containing ``a``.
        """
        F = self.face_of(a)
        aF = self.face_conductor(F, budget)
        t = self.tau(xl.vec_add(xl.vec_add(a, aF), beta))
        return all(t[i] <= 0 for i in range(self.r) if i not in F.van)

    def intersection_eq(self, alpha, beta, box: int = DEFAULT_BOX,
                        budget: Optional[int] = None) -> IntersectionVerdict:
        """Compare the intersection sets of two degrees.

        Exact in the saturated case.  Otherwise a witness search over a box of
        Q-elements decides inequality, and equality is certified by either
        both sets being all of Q or by the face-conductor sufficient condition;
        anything else is ``unknown``.
        """
        alpha = tuple(alpha)
        beta = tuple(beta)
        ta, tb = self.tau(alpha), self.tau(beta)
        if self.is_saturated():
            if tau_plus(ta) == tau_plus(tb):
                return IntersectionVerdict("equal", "tau_plus")
            i = next(i for i in range(self.r) if tau_plus(ta)[i] != tau_plus(tb)[i])
            return IntersectionVerdict("not_equal", "tau_plus",
                                       self._tau_plus_witness(ta, tb, i))
        ma = self.membership(xl.vec_neg(alpha))
        mb = self.membership(xl.vec_neg(beta))
        if ma and mb:
            return IntersectionVerdict("equal", "both_whole")
        if ma != mb:
            return IntersectionVerdict("not_equal", "witness",
                                       tuple(0 for _ in range(self.d)))
        diff = xl.vec_sub(beta, alpha)
        if self.membership(diff) and self.sufficient_equality(diff, alpha, budget):
            return IntersectionVerdict("equal", "face_conductor")
        if self.membership(xl.vec_neg(diff)) and self.sufficient_equality(xl.vec_neg(diff), beta, budget):
            return IntersectionVerdict("equal", "face_conductor")
        w = self.find_intersection_witness(alpha, beta, box)
        if w is not None:
            return IntersectionVerdict("not_equal", "witness", w)
        return IntersectionVerdict("unknown", "undecided")

    def find_intersection_witness(self, alpha, beta, box: int = DEFAULT_BOX):
        ta, tb = self.tau(alpha), self.tau(beta)
        hi = [max(0, a, b) + box for a, b in zip(ta, tb)]
        for g in self.points_in_tau_box([0] * self.r, hi):
            if not self.membership(g):
                continue
            if self.membership(xl.vec_sub(g, alpha)) != self.membership(xl.vec_sub(g, beta)):
                return g
        return None

    def _tau_plus_witness(self, ta, tb, i):
        """A lattice point in exactly one of the two saturated intersection sets."""
        pa, pb = tau_plus(ta), tau_plus(tb)
        lo_a, lo_b = (pa, pb) if pa[i] < pb[i] else (pb, pa)
        # a point with tau >= lo_a and tau_i < lo_b[i]
        hi = [max(x, y) + 2 * self._max_gen_entry() for x, y in zip(pa, pb)]
        hi[i] = lo_b[i] - 1
        for g in self.points_in_tau_box(list(lo_a), hi):
            return g
        return None

    def _max_gen_entry(self):
        return max((max(t) for t in self._gen_tau if t), default=1)


# module-level aliases matching the operation names


def tau(Q: AffineSemigroup, alpha) -> tuple:
    return Q.tau(alpha)


def membership(Q: AffineSemigroup, gamma) -> bool:
    return Q.membership(gamma)


def saturation_hilbert_basis(Q: AffineSemigroup, budget=None) -> list:
    return Q.saturation_hilbert_basis(budget)


def hilbert_basis_tau(Q: AffineSemigroup) -> list:
    return Q.hilbert_basis_tau()


def conductor_to_saturation(Q: AffineSemigroup, budget=None) -> tuple:
    return Q.conductor_to_saturation(budget)


def partial_saturation(Q: AffineSemigroup, F: Face, budget=None) -> list:
    return list(Q.partial_saturation(F, budget).elements)


def face_conductor(Q: AffineSemigroup, F: Face, budget=None) -> tuple:
    return Q.face_conductor(F, budget)


def intersection_eq(Q: AffineSemigroup, alpha, beta, box: int = DEFAULT_BOX) -> IntersectionVerdict:
    return Q.intersection_eq(alpha, beta, box)


def sufficient_equality(Q: AffineSemigroup, a, beta) -> bool:
    return Q.sufficient_equality(a, beta)
