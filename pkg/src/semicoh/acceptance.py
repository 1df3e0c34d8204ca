"""The acceptance criteria, runnable from tests and from ``semicoh acceptance``.

Each criterion returns a :class:`CriterionResult`; a criterion passes only
when its check succeeds within its time limit.  Brute-force oracles used
here are deliberately independent of the dynamic-programming membership.
"""

from __future__ import annotations

import io
import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import exactlin as xl
from .cone import disjoint_edge_facet_pairs, is_simplicial_mod_units
from .semigroup import AffineSemigroup, tau_plus

TWO_ZERO = [(2, 0), (1, 1), (0, 2)]
SQUARE = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
SQUARE_LABELS = {"x": (0, 0, 1), "y": (1, 0, 1), "v": (0, 1, 1), "u": (1, 1, 1)}
NUMERICAL = [(2,), (3,)]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: Optional[float]
    detail: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        lim = f" / limit {self.limit:g}s" if self.limit else ""
        return f"[{tag}] {self.number:>2} {self.title}: {self.detail} ({self.seconds:.2f}s{lim})"

    def as_dict(self) -> dict:
        return {"number": self.number, "title": self.title, "passed": self.passed,
                "limit_seconds": self.limit, "detail": self.detail}


def raw_elements(gens, lo, hi) -> set:
    """All sums of generators with every coordinate in ``[lo, hi]`` (nonnegative generators)."""
    seen = {tuple(0 for _ in gens[0])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = xl.vec_add(x, g)
                if all(lo <= c <= hi for c in y) and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _timed(number, title, limit, fn: Callable) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as e:  # a crash is a failure, reported with its message
        ok, detail = False, f"raised {type(e).__name__}: {e}"
    dt = time.perf_counter() - t0
    if limit is not None and dt > limit:
        ok = False
        detail += f"; exceeded time limit"
    return CriterionResult(number, title, ok, dt, limit, detail)


# ----------------------------------------------------------------------


def _families(u, v):
    return ((u == -1 and v > 0 and v % 2) or (v == -1 and u > 0 and u % 2)
            or (u >= 0 and v >= 0 and (u - v) % 2 == 0))


def criterion_1():
    from .essential import ESSENTIAL, essential_test
    Q = AffineSemigroup(TWO_ZERO)
    bad = n = 0
    for a in Q.points_in_tau_box([-9, -9], [9, 9]):
        n += 1
        u, v = Q.tau(a)
        if (essential_test(Q, a).status == ESSENTIAL) != bool(_families(u, v)):
            bad += 1
    return bad == 0, f"{bad} discrepancies over {n} lattice points"


def criterion_2():
    from .essential import ESSENTIAL, essential_test
    Q = AffineSemigroup(SQUARE)
    bad = n = 0
    for a in Q.points_in_tau_box([-6] * 4, [6] * 4):
        n += 1
        neg = sum(1 for t in Q.tau(a) if t < 0)
        if (essential_test(Q, a).status == ESSENTIAL) != (neg <= 1):
            bad += 1
    return bad == 0, f"{bad} discrepancies over {n} lattice points"


def criterion_3():
    from .localcoh import GradedPrime, canonical_lc_piece, edge_lc_piece_closed
    Q = AffineSemigroup(SQUARE)
    edges = Q.cone.face_lattice().of_dim(1)
    pts = list(Q.points_in_tau_box([-5] * 4, [5] * 4))
    bad = n = 0
    for e in edges:
        P = GradedPrime(e)
        for a in pts:
            n += 1
            if edge_lc_piece_closed(Q, P, a) != canonical_lc_piece(Q, P, 2, a):
                bad += 1
    return bad == 0 and len(edges) == 4, f"{n - bad}/{n} agree on {len(edges)} edges"


def criterion_4():
    from .localcoh import GradedPrime, socle_scan
    Q = AffineSemigroup(SQUARE)
    P = GradedPrime(Q.cone.face_from_rays([Q.cone.rays.index(SQUARE_LABELS["x"]),
                                           Q.cone.rays.index(SQUARE_LABELS["y"])]))
    six = {c.degree for c in socle_scan(Q, P, 6)}
    twelve = {c.degree for c in socle_scan(Q, P, 12)}
    want = {(0, -n, 0) for n in range(1, 7)}
    ok = six == want and len(twelve) == 2 * len(six)
    return ok, f"box 6: {len(six)} certificates, exact={six == want}; box 12: {len(twelve)}"


def random_cones(count=50, seed=20240601):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.choice([3, 4])
        k = rng.randint(d, 8)
        gens = list({tuple(rng.randint(0, 3) for _ in range(d - 1)) + (1,) for _ in range(k)})
        if xl.rank(gens) < d:
            continue
        out.append(gens)
    return out


def criterion_5():
    from .localcoh import GradedPrime, socle_infinite_edge
    from .cli import corpus_names, load_spec
    cases = [load_spec(n).generators for n in corpus_names()] + random_cones()
    bad = 0
    for gens in cases:
        Q = AffineSemigroup(gens)
        S = Q.saturation()
        C = S.cone
        simp = is_simplicial_mod_units(C)
        no_pairs = not disjoint_edge_facet_pairs(C)
        no_inf = not any(socle_infinite_edge(S, GradedPrime(e)) for e in C.face_lattice().of_dim(1))
        if not (simp == no_pairs == no_inf):
            bad += 1
    return bad == 0, f"{bad} violations over {len(cases)} semigroups"


def criterion_6():
    from .coxcech import irrelevant_ideal, prop_irrelevant_check
    Q = AffineSemigroup(SQUARE)
    rep = prop_irrelevant_check(Q, 3)
    gens = set(irrelevant_ideal(Q).generators)
    listed = {(1, 0, 0, 1), (0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 1, 0)}
    perm_ok = any({tuple(g[i] for i in p) for g in gens} == listed
                  for p in itertools.permutations(range(4)))
    ok = rep.ok and rep.total == 2401 and perm_ok
    return ok, f"{rep.agree}/{rep.total} agree; generators match up to permutation: {perm_ok}"


def criterion_7():
    Q = AffineSemigroup(TWO_ZERO)
    W = 16
    inner = raw_elements(TWO_ZERO, 0, W)
    outer = raw_elements(TWO_ZERO, 0, W + 8)
    pts = list(Q.points_in_tau_box([-4, -4], [4, 4]))
    sets = {a: frozenset(g for g in inner if xl.vec_sub(g, a) in outer) for a in pts}
    bad = n = 0
    for a, b in itertools.product(pts, repeat=2):
        n += 1
        if (sets[a] == sets[b]) != (tau_plus(Q.tau(a)) == tau_plus(Q.tau(b))):
            bad += 1
    return bad == 0, f"{n - bad}/{n} pairs agree"


def criterion_8():
    from .essential import ESSENTIAL, IN_E, essential_membership, essential_shift_simplicial, essential_test
    Q = AffineSemigroup(NUMERICAL)
    raw = {x[0] for x in raw_elements(NUMERICAL, 0, 200)}

    def inter(e, window=120):
        return frozenset(g for g in range(window) if g in raw and g - e in raw)

    def raw_essential(e):
        return all(inter(e) != inter(e + a) for a in sorted(raw) if 0 < a <= 30)

    c = Q.conductor_to_saturation()
    tool = {n for n in range(-20, 21) if essential_test(Q, (n,)).status == ESSENTIAL}
    brute = {n for n in range(-20, 21) if raw_essential(n)}
    want = set(range(-1, 21))
    a = essential_shift_simplicial(Q)
    members = [n for n in range(-20, 21) if essential_membership(Q, (n,)).status == IN_E]
    shift_ok = all(n + a[0] in raw for n in members)
    ok = c == (2,) and tool == brute == want and a == (4,) and shift_ok
    return ok, (f"conductor {c[0]}, essential points match brute force: {tool == brute == want}, "
                f"shift {a[0]}, shift verified on {len(members)} members: {shift_ok}")


def criterion_9():
    from .homology import face_pair, face_subcomplex, relative_reduced_homology
    from .localcoh import GradedPrime, canonical_lc_piece
    Q = AffineSemigroup(SQUARE)
    L = Q.cone.face_lattice()
    edge = Q.cone.face_from_rays([Q.cone.rays.index(SQUARE_LABELS["x"]),
                                  Q.cone.rays.index(SQUARE_LABELS["y"])])
    # case 1: a positive functional on a facet meeting the edge; case 2: tau <= 0; case 3
    cases = [relative_reduced_homology(face_subcomplex(Q, edge, a), 0)
             for a in [(1, -1, 0), (0, 0, 0), (0, -1, 0)]]
    empty_void = relative_reduced_homology(face_pair(L, L.empty, []), -1)
    bad = n = 0
    for gens in (SQUARE, TWO_ZERO, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]):
        S = AffineSemigroup(gens)
        m = GradedPrime(S.cone.face_lattice().empty)
        d = S.rank
        for a in S.points_in_tau_box([-4] * S.r, [4] * S.r):
            n += 1
            if (canonical_lc_piece(S, m, d, a) == 1) != S.membership(xl.vec_neg(a)):
                bad += 1
    ok = cases == [0, 0, 1] and empty_void == 1 and bad == 0
    return ok, f"edge cases {cases}, (empty, void) in degree -1: {empty_void}, duality {n - bad}/{n}"


ACCEPTANCE_COMMANDS = [
    ["essential", "two-zero-one-one", "--grid", "[-9,9]x[-9,9]"],
    ["essential", "two-zero-one-one", "--test", "(-1,3)"],
    ["essential", "square-cone", "--test", "(0,-1,0)"],
    ["localcoh", "square-cone", "--prime", "edge:x,y", "--cohdeg", "2", "--degree", "(0,-3,0)"],
    ["localcoh", "square-cone", "--prime", "edge:x,y", "--socle", "--box", "6"],
    ["localcoh", "square-cone", "--converse"],
    ["localcoh", "square-cone", "--prime", "max", "--cohdeg", "3", "--degree", "(0,0,-1)"],
    ["cox", "square-cone", "--irrelevant", "--check-box", "3"],
    ["hilbert", "numerical-2-3"],
    ["essential", "numerical-2-3", "--shift"],
]


def criterion_10():
    from .cli import run
    diffs = []
    for argv in ACCEPTANCE_COMMANDS:
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            run(list(argv), out=buf)
            outs.append(buf.getvalue().encode())
        if outs[0] != outs[1]:
            diffs.append(" ".join(argv))
    return not diffs, f"{len(ACCEPTANCE_COMMANDS) - len(diffs)}/{len(ACCEPTANCE_COMMANDS)} commands byte-identical"


CRITERIA = [
    (1, "essential set of <(2,0),(1,1),(0,2)> is the three families", 10, criterion_1),
    (2, "square cone: essential iff at most one negative tau entry", 60, criterion_2),
    (3, "edge closed form equals homology engine", 60, criterion_3),
    (4, "socle degrees on edge {x,y}", 10, criterion_4),
    (5, "simplicial iff no missed edge/facet pair iff no infinite socle", 300, criterion_5),
    (6, "irrelevant ideal biconditional on the square cone", 5, criterion_6),
    (7, "intersection sets agree with the tau-plus criterion", 60, criterion_7),
    (8, "unsaturated pipeline on <2,3>", 5, criterion_8),
    (9, "homology conventions and the duality oracle", 10, criterion_9),
    (10, "byte-identical JSON on re-run", None, criterion_10),
]


def run_one(number: int) -> CriterionResult:
    for num, title, limit, fn in CRITERIA:
        if num == number:
            return _timed(num, title, limit, fn)
    raise KeyError(number)


def run_all(only=None) -> list:
    return [run_one(n) for n, *_ in CRITERIA if not only or n in only]
