"""Graded pieces of local cohomology of the canonical module.

For saturated Q and a graded prime P corresponding to a face ``F`` of the
cross-section polytope, the degree ``alpha`` piece of ``H^{d-i}_P(omega)`` is
the relative reduced homology ``H~_{i-1}(F, F(alpha))``.  Edges get a
closed form, which drives the infinite-socle detection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import exactlin as xl
from .cone import Face, disjoint_edge_facet_pairs, face_meets, is_simplicial_mod_units
from .errors import NotAnEdge, NotSaturated
from .homology import compare_fields, face_subcomplex, relative_reduced_homology

CLOSED_FORM_EDGE, HOMOLOGY_ENGINE = "closed_form_edge", "homology_engine"


@dataclass(frozen=True)
class GradedPrime:
    """A graded prime, recorded by its face; ``dim`` is the Krull dimension of the quotient."""

    face: Face

    @property
    def dim(self) -> int:
        return self.face.dim + 1

    @property
    def is_maximal(self) -> bool:
        return self.face.is_empty


@dataclass(frozen=True)
class GradedPieceReport:
    prime: GradedPrime
    cohom_degree: int
    degree: tuple
    dim: int
    method: str
    field_note: Optional[str] = None


@dataclass(frozen=True)
class SocleCertificate:
    """A degree with a one-dimensional piece whose translates by every
    nonunit generator vanish."""

    degree: tuple
    piece_dim: int
    annihilators: tuple


def _require_saturated(Q):
    if not Q.is_saturated():
        raise NotSaturated("local cohomology pieces need a saturated semigroup; use its saturation")


def krull_dim(Q) -> int:
    """Dimension of the pointed quotient, the ``d`` of the cohomological index."""
    return Q.rank - Q.cone.lineality_dim


def canonical_lc_piece(Q, prime: GradedPrime, j: int, alpha, field="rational") -> int:
    """``dim H^j_P(omega)_alpha`` computed as ``H~_{i-1}(F, F(alpha))`` with ``i = d - j``."""
    _require_saturated(Q)
    alpha = tuple(alpha)
    t = Q.tau(alpha)
    i = krull_dim(Q) - j
    if i < 0 or j < 0:
        return 0
    pos = tuple(k for k, v in enumerate(t) if v > 0)

    def compute():
        pair = face_subcomplex(Q, prime.face, alpha)
        return relative_reduced_homology(pair, i - 1, field)

    return Q._cached(("lc", prime.face.rays, pos, i, field), compute)


def _components(Q, F: Face) -> int:
    lattice = Q.cone.face_lattice()
    parent = {j: j for j in F.rays}

    def find(j):
        while parent[j] != j:
            parent[j] = parent[parent[j]]
            j = parent[j]
        return j

    for G in lattice.subfaces(F):
        if G.dim == 1:
            a, b = (find(j) for j in G.rays[:2])
            parent[a] = b
    return len({find(j) for j in F.rays})


def edge_lc_piece_closed(Q, prime: GradedPrime, alpha) -> int:
    """The three-case evaluation of ``H^{d-1}_P(omega)_alpha`` at an edge prime."""
    _require_saturated(Q)
    F = prime.face
    if F.dim != 1:
        raise NotAnEdge(f"{F.label()} has dimension {F.dim}, not 1")
    t = Q.tau(alpha)
    meets = [face_meets(Q.cone, F, Q.cone.facet(i)) for i in range(Q.r)]
    if any(t[i] > 0 and meets[i] for i in range(Q.r)):
        return 0
    if all(t[i] <= 0 for i in range(Q.r) if not meets[i]):
        return 0
    return _components(Q, F)


def graded_piece(Q, prime: GradedPrime, j: int, alpha, verify: bool = False,
                 field="rational") -> GradedPieceReport:
    """Piece dimension with its provenance; ``verify`` cross-checks both methods."""
    alpha = tuple(alpha)
    d = krull_dim(Q)
    note = None
    if prime.face.dim == 1 and j == d - 1 and not verify and field == "rational":
        return GradedPieceReport(prime, j, alpha, edge_lc_piece_closed(Q, prime, alpha),
                                 CLOSED_FORM_EDGE)
    if verify:
        face_subcomplex(Q, prime.face, alpha, verify=True)
    v = canonical_lc_piece(Q, prime, j, alpha)
    if field != "rational":
        cmp = compare_fields(face_subcomplex(Q, prime.face, alpha), int(field))
        vp = cmp.modp.get(d - j - 1, 0) if d - j >= 0 and j >= 0 else 0
        note = f"F_{field}: {vp}" + (" (differs from the rational value)" if vp != v else "")
    if verify and prime.face.dim == 1 and j == d - 1:
        c = edge_lc_piece_closed(Q, prime, alpha)
        if c != v:
            raise AssertionError(f"closed form {c} disagrees with homology engine {v} at {alpha}")
    return GradedPieceReport(prime, j, alpha, v, HOMOLOGY_ENGINE, note)


def socle_infinite_edge(Q, prime: GradedPrime) -> bool:
    """True when some facet misses the edge, which forces an infinite socle."""
    _require_saturated(Q)
    F = prime.face
    if F.dim != 1:
        raise NotAnEdge(f"{F.label()} has dimension {F.dim}, not 1")
    return any(not face_meets(Q.cone, F, Q.cone.facet(i)) for i in range(Q.r))


def socle_scan(Q, prime: GradedPrime, box: int = 6) -> list:
    """Socle certificates in the tau-box ``[-box, box]^r``, sorted by degree."""
    _require_saturated(Q)
    if prime.face.dim != 1:
        raise NotAnEdge(f"{prime.face.label()} has dimension {prime.face.dim}, not 1")
    gens = Q.nonunit_generators
    out = []
    for a in Q.points_in_tau_box([-box] * Q.r, [box] * Q.r):
        if edge_lc_piece_closed(Q, prime, a) != 1:
            continue
        if all(edge_lc_piece_closed(Q, prime, xl.vec_add(a, g)) == 0 for g in gens):
            out.append(SocleCertificate(a, 1, tuple(gens)))
    return sorted(out, key=lambda c: (max(map(abs, Q.tau(c.degree))), c.degree))


@dataclass
class ConverseReport:
    simplicial: bool
    disjoint_pairs: list
    infinite_socle_edges: list
    edges: list
    samples: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.simplicial == (not self.disjoint_pairs) == (not self.infinite_socle_edges)


def converse_report(Q, sample_box: int = 3) -> ConverseReport:
    """Simpliciality, missed edge/facet pairs and infinite socles, all on the saturation."""
    S = Q.saturation()
    C = S.cone
    edges = C.face_lattice().of_dim(1)
    pairs = [(e, i) for e, i in disjoint_edge_facet_pairs(C)]
    infinite = [e for e in edges if socle_infinite_edge(S, GradedPrime(e))]
    samples = {e.rays: [c.degree for c in socle_scan(S, GradedPrime(e), sample_box)]
               for e in infinite}
    return ConverseReport(is_simplicial_mod_units(C), pairs, infinite, edges, samples)
