"""Augmented relative homology of face pairs of the cross-section polytope.

Cells are handled through the order complex: a k-simplex is a chain
``G0 < ... < Gk`` of nonempty faces, and the empty chain is a single cell of
dimension -1 standing for the empty face.  A subcomplex that contains no face
at all (void) keeps the empty chain in the quotient, so the homology is
reduced; a subcomplex equal to ``{empty}`` removes it and gives unreduced
homology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import exactlin as xl
from .cone import Face, FaceLattice
from .errors import FaceNotInLattice

Field = Union[str, int]  # "rational" or a prime


@dataclass(frozen=True)
class FacePair:
    """A face with the order ideal of its subfaces and a subcomplex of it.

    ``cells`` always contains the empty face; ``sub`` may be empty (void).
    """

    top_face: Face
    cells: frozenset
    sub: frozenset

    def __post_init__(self):
        if not self.sub <= self.cells:
            raise ValueError("subcomplex is not contained in the cell set")

    @property
    def is_void_sub(self) -> bool:
        return not self.sub


def face_pair(lattice: FaceLattice, F: Face, sub: Sequence[Face]) -> FacePair:
    if F not in lattice:
        raise FaceNotInLattice(f"{F} is not a face of this cone")
    cells = frozenset(lattice.subfaces(F))
    return FacePair(F, cells, frozenset(sub))


def _chains(faces):
    """All strictly increasing chains of the given nonempty faces, by length."""
    faces = sorted(faces, key=lambda f: (f.dim, f.rays))
    out = [[()]]
    up = {f: [g for g in faces if g.dim > f.dim and set(f.rays) < set(g.rays)] for f in faces}
    layer = [(f,) for f in faces]
    while layer:
        out.append(layer)
        nxt = []
        for ch in layer:
            for g in up[ch[-1]]:
                nxt.append(ch + (g,))
        layer = nxt
    return out


@dataclass(frozen=True)
class ChainComplex:
    """Relative augmented chain complex; ``basis[k+1]`` lists the k-cells."""

    basis: tuple
    boundaries: tuple  # boundaries[k+1] maps k-cells to (k-1)-cells, rows = k-cells

    def dim_chains(self, k: int) -> int:
        if k + 1 < 0 or k + 1 >= len(self.basis):
            return 0
        return len(self.basis[k + 1])

    @property
    def top(self) -> int:
        return len(self.basis) - 2

    def check_dd(self) -> bool:
        for k in range(1, len(self.boundaries)):
            A, B = self.boundaries[k], self.boundaries[k - 1] if k >= 1 else None
            if not A or not B or not B[0]:
                continue
            if any(any(v for v in row) for row in xl.matmul(A, B)):
                return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** (k % 2) * self.dim_chains(k) for k in range(-1, self.top + 1))


def chain_complex(pair: FacePair) -> ChainComplex:
    nonempty_cells = [f for f in pair.cells if not f.is_empty]
    nonempty_sub = {f for f in pair.sub if not f.is_empty}
    empty_in_sub = any(f.is_empty for f in pair.sub)
    all_chains = _chains(nonempty_cells)
    basis = []
    for level, chains in enumerate(all_chains):
        if level == 0:
            basis.append(() if empty_in_sub else ((),))
        else:
            basis.append(tuple(c for c in chains if not set(c) <= nonempty_sub))
    while len(basis) > 1 and not basis[-1]:
        basis.pop()
    index = [{c: n for n, c in enumerate(b)} for b in basis]
    boundaries = [()]
    for level in range(1, len(basis)):
        rows = []
        for c in basis[level]:
            row = [0] * len(basis[level - 1])
            for j in range(len(c)):
                face = c[:j] + c[j + 1:]
                n = index[level - 1].get(face)
                if n is not None:
                    row[n] += -1 if j % 2 else 1
            rows.append(tuple(row))
        boundaries.append(tuple(rows))
    return ChainComplex(tuple(basis), tuple(boundaries))


def _ranks(M, field: Field) -> int:
    if not M or not M[0]:
        return 0
    S, _, _ = xl.smith_normal_form(list(M))
    diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    if field == "rational":
        return sum(1 for v in diag if v != 0)
    return sum(1 for v in diag if v % int(field) != 0)


def homology_dims(pair: FacePair, field: Field = "rational") -> dict:
    """All nonzero-range homology dimensions ``{k: dim}`` for k from -1 up."""
    C = chain_complex(pair)
    ranks = [_ranks(B, field) for B in C.boundaries] + [0]
    out = {}
    for k in range(-1, C.top + 1):
        out[k] = C.dim_chains(k) - ranks[k + 1] - ranks[k + 2]
    return out


def relative_reduced_homology(pair: FacePair, k: int, field: Field = "rational") -> int:
    return homology_dims(pair, field).get(k, 0)


@dataclass(frozen=True)
class FieldComparison:
    rational: dict
    prime: int
    modp: dict

    @property
    def disagree(self) -> bool:
        return self.rational != self.modp


def compare_fields(pair: FacePair, p: int) -> FieldComparison:
    return FieldComparison(homology_dims(pair), p, homology_dims(pair, p))


# ----------------------------------------------------------------------
# the subcomplex of faces missed by alpha + cone


def face_subcomplex(Q, F: Face, alpha, verify: bool = False) -> FacePair:
    """Faces ``F' <= F`` that the shifted cone ``alpha + R_+ Q`` does not meet.

    Such a face is one carrying a vanishing functional positive on alpha.
    With ``verify`` every face is also checked with the exact feasibility
    oracle.
    """
    lattice = Q.cone.face_lattice()
    if F not in lattice:
        raise FaceNotInLattice(f"{F} is not a face of this cone")
    t = Q.tau(alpha)
    sub = [G for G in lattice.subfaces(F) if any(t[i] > 0 for i in G.van)]
    if verify:
        for G in lattice.subfaces(F):
            if lp_face_meets(Q, G, alpha) == (G in sub):
                raise AssertionError(f"subcomplex criterion disagrees with the oracle at {G}")
    return face_pair(lattice, F, sub)


def fourier_motzkin_feasible(rows: Sequence[Sequence], rhs: Sequence) -> bool:
    """Exact test for a rational ``x`` with ``row . x >= rhs`` for every row."""
    system = [([Fraction(v) for v in a], Fraction(b)) for a, b in zip(rows, rhs)]
    n = len(system[0][0]) if system else 0
    for k in range(n):
        pos = [(a, b) for a, b in system if a[k] > 0]
        neg = [(a, b) for a, b in system if a[k] < 0]
        keep = [(a, b) for a, b in system if a[k] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                lp, ln = -an[k], ap[k]
                a = [lp * x + ln * y for x, y in zip(ap, an)]
                keep.append((a, lp * bp + ln * bn))
        # drop exact duplicates to keep the system small
        seen = {}
        for a, b in keep:
            key = tuple(a)
            if key not in seen or seen[key] < b:
                seen[key] = b
        system = [(list(a), b) for a, b in seen.items()]
    return all(b <= 0 for _, b in system)


def lp_face_meets(Q, G: Face, alpha) -> bool:
    """Whether ``alpha + R_+ Q`` meets the real face ``G`` (the apex when G is empty)."""
    Fl = Q.cone.functionals_lattice
    x_alpha = Q.coords(alpha)
    t = Q.cone.tau_lattice(x_alpha)
    rows, rhs = [], []
    for i, f in enumerate(Fl):
        rows.append(f)
        rhs.append(max(0, t[i]))
        if i in G.van:
            rows.append(tuple(-v for v in f))
            rhs.append(0)
    if not rows:
        return True
    return fourier_motzkin_feasible(rows, rhs)
