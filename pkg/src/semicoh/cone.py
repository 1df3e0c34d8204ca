"""Rational polyhedral cones spanned by semigroup generators.

The cone is computed in coordinates of the lattice spanned by the generators,
so the facet functionals come out primitive on that lattice.  Lineality is
split off with a Smith normal form; rays and faces live on the pointed
quotient.  Faces are identified by the set of ray indices they contain, the
empty face (no rays, every functional vanishing) is an explicit member of the
lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import exactlin as xl
from .errors import DimMismatch


def double_description(A: Sequence[Sequence[int]]) -> list:
    """Extreme rays of the pointed cone ``{y : a . y >= 0 for every row a}``.

    The rows of ``A`` must have full column rank.  Constraints enter in row
    order, starting from the first linearly independent subset; the result is
    sorted lexicographically so that it does not depend on that order.
    """
    A = [tuple(int(x) for x in a) for a in A]
    if not A:
        raise ValueError("double description needs at least one constraint")
    n = len(A[0])
    if n == 0:
        return []
    init: list = []
    for k, a in enumerate(A):
        if xl.rank_bareiss([A[i] for i in init] + [a]) > len(init):
            init.append(k)
            if len(init) == n:
                break
    if len(init) < n:
        raise ValueError("constraint matrix is not of full column rank (cone not pointed)")
    inv = xl.inverse_rational([A[k] for k in init])
    rays = [xl.clear_denominators([inv[i][j] for i in range(n)]) for j in range(n)]
    processed = list(init)

    def zero_sets(rs, cons):
        return [frozenset(k for k in cons if xl.dot(A[k], r) == 0) for r in rs]

    Z = zero_sets(rays, processed)
    for k in range(len(A)):
        if k in init:
            continue
        a = A[k]
        vals = [xl.dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new = [rays[i] for i in pos + zer]
        if neg:
            for p in pos:
                for q in neg:
                    common = Z[p] & Z[q]
                    if len(common) < n - 2:
                        continue
                    if any(
                        t != p and t != q and Z[t] >= common for t in range(len(rays))
                    ):
                        continue
                    combo = tuple(vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q]))
                    new.append(xl.primitive(combo))
        processed.append(k)
        rays = list(dict.fromkeys(new))
        Z = zero_sets(rays, processed)
    return sorted(rays)


@dataclass(frozen=True)
class Face:
    """A face of the cone, i.e. a face of the cross-section polytope or the empty face.

    ``dim`` is the polytope dimension: -1 for the empty face, 0 for a vertex.
    """

    dim: int
    rays: tuple
    van: tuple

    @property
    def is_empty(self) -> bool:
        return not self.rays

    def is_subface_of(self, other: "Face") -> bool:
        return set(self.rays) <= set(other.rays)

    def label(self, names=None) -> str:
        if self.is_empty:
            return "empty"
        if names is None:
            return "face:" + ",".join(str(r) for r in self.rays)
        return "face:" + ",".join(names[r] for r in self.rays)


@dataclass(frozen=True)
class FaceLattice:
    faces: tuple
    top: Face

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def __contains__(self, f) -> bool:
        return f in self.faces

    @property
    def empty(self) -> Face:
        return self.faces[0]

    def of_dim(self, k: int) -> list:
        return [f for f in self.faces if f.dim == k]

    def subfaces(self, F: Face) -> list:
        return [G for G in self.faces if set(G.rays) <= set(F.rays)]

    def facets_of(self, F: Face) -> list:
        return [G for G in self.faces if G.dim == F.dim - 1 and set(G.rays) <= set(F.rays)]


@dataclass(frozen=True)
class PointedCone:
    """The real cone over a set of integer generators, described in both directions.

    Attributes:
        ambient_dim: dimension ``d`` of the ambient lattice.
        basis: Hermite basis (rows) of the lattice spanned by the generators.
        functionals_lattice: primitive facet functionals as integer vectors in
            the coordinates of ``basis``.
        functionals: the same functionals as ambient row vectors lying in the
            span of the generators (integers when possible, else Fractions).
        rays: primitive ambient integer vectors of the extreme rays of the
            pointed quotient (representatives in a complement of lineality).
        rays_lattice: the rays in coordinates of ``basis``.
        lineality_basis: ambient basis of the lineality lattice.
        lineality_lattice / complement_lattice: unimodular split of
            ``Z^rank`` into lineality and a complement.
        incidence: ``incidence[j][i]`` is True when functional ``i`` vanishes
            on ray ``j``.
    """

    ambient_dim: int
    basis: tuple
    functionals_lattice: tuple
    functionals: tuple
    rays: tuple
    rays_lattice: tuple
    lineality_basis: tuple
    lineality_lattice: tuple
    complement_lattice: tuple
    incidence: tuple
    _faces: list = field(default_factory=list, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def num_facets(self) -> int:
        return len(self.functionals_lattice)

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality_lattice)

    def tau_lattice(self, coords: Sequence[int]) -> tuple:
        return tuple(xl.dot(f, coords) for f in self.functionals_lattice)

    def face_lattice(self) -> FaceLattice:
        if not self._faces:
            self._faces.append(enumerate_faces(self))
        return self._faces[0]

    def face_from_rays(self, ray_ids) -> Face:
        """Smallest face containing the given rays."""
        ray_ids = set(ray_ids)
        van = tuple(
            i for i in range(self.num_facets) if all(self.incidence[j][i] for j in ray_ids)
        )
        return self.face_from_van(van)

    def face_from_van(self, van) -> Face:
        """The face cut out by the functionals in ``van`` (closed in both directions)."""
        van = set(van)
        rays = tuple(
            j for j in range(len(self.rays)) if all(self.incidence[j][i] for i in van)
        )
        closed = tuple(
            i for i in range(self.num_facets) if all(self.incidence[j][i] for j in rays)
        )
        dim = xl.rank([self.rays_lattice[j] for j in rays]) - 1 if rays else -1
        return Face(dim=dim, rays=rays, van=closed)

    def facet(self, i: int) -> Face:
        return self.face_from_van([i])


def _ambient_functional(f_lat, basis):
    gram = [tuple(xl.dot(b1, b2) for b2 in basis) for b1 in basis]
    c = xl.solve_rational(gram, f_lat)
    amb = [sum(ci * b[k] for ci, b in zip(c, basis)) for k in range(len(basis[0]))]
    return xl.as_int_if_integral(amb)


def cone_from_generators(gens: Sequence[Sequence[int]], d: int) -> PointedCone:
    """Build the cone over ``gens`` with its facets, rays, and lineality."""
    gens = [tuple(int(x) for x in g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if len(g) != d:
            raise DimMismatch(f"generator {g} is not of dimension {d}")
    basis = xl.lattice_basis(gens, d)
    n = len(basis)
    coords = [xl.lattice_solve(basis, g) for g in gens]
    nonzero = [c for c in coords if any(c)]
    if n == 0:
        flat: list = []
    else:
        flat = double_description(nonzero)

    # the dual cone's extreme rays are the facet normals; order by ambient
    # vector, descending, so coordinate cones get coordinate order
    pairs = sorted(((_ambient_functional(f, basis), f) for f in flat), key=lambda p: p[0],
                   reverse=True)
    functionals = tuple(p[0] for p in pairs)
    f_lat = tuple(p[1] for p in pairs)

    if n == 0:
        compl, lin = [], []
    elif f_lat:
        compl, lin = xl.kernel_and_complement(list(f_lat), n)
    else:
        compl, lin = [], xl.identity(n)

    rays_lat: list = []
    if compl:
        restricted = [tuple(xl.dot(f, w) for w in compl) for f in f_lat]
        for z in double_description(restricted):
            x = xl.primitive(xl.vecmat(z, compl))
            rays_lat.append(x)
    rays_amb = [xl.primitive(xl.vecmat(x, basis)) for x in rays_lat]
    order = sorted(range(len(rays_amb)), key=lambda j: rays_amb[j])
    rays_amb = [rays_amb[j] for j in order]
    rays_lat = [rays_lat[j] for j in order]
    incidence = tuple(
        tuple(xl.dot(f, x) == 0 for f in f_lat) for x in rays_lat
    )
    lin_amb = tuple(xl.vecmat(x, basis) for x in lin)
    return PointedCone(
        ambient_dim=d,
        basis=tuple(basis),
        functionals_lattice=f_lat,
        functionals=functionals,
        rays=tuple(rays_amb),
        rays_lattice=tuple(rays_lat),
        lineality_basis=lin_amb,
        lineality_lattice=tuple(lin),
        complement_lattice=tuple(compl),
        incidence=incidence,
    )


def enumerate_faces(C: PointedCone) -> FaceLattice:
    """All faces as closures of intersections of facets, ordered by dimension."""
    top = C.face_from_van(())
    found = {top.rays: top}
    frontier = [top]
    facet_rays = [set(C.facet(i).rays) for i in range(C.num_facets)]
    while frontier:
        nxt = []
        for F in frontier:
            for fr in facet_rays:
                common = set(F.rays) & fr
                G = C.face_from_rays(common) if common else C.face_from_van(range(C.num_facets))
                if G.rays not in found:
                    found[G.rays] = G
                    nxt.append(G)
        frontier = nxt
    empty = C.face_from_van(range(C.num_facets))
    found.setdefault(empty.rays, empty)
    faces = tuple(sorted(found.values(), key=lambda f: (f.dim, f.rays)))
    return FaceLattice(faces=faces, top=top)


def is_simplicial_mod_units(C: PointedCone) -> bool:
    return len(C.rays) == C.rank - C.lineality_dim


def face_meets(C: PointedCone, F: Face, G: Face) -> bool:
    """True when the polytope faces F and G intersect (share a ray)."""
    return bool(set(F.rays) & set(G.rays))


def edges(C: PointedCone) -> list:
    return C.face_lattice().of_dim(1)


def polytope_facets(C: PointedCone) -> list:
    """Facets of the cross-section polytope, one per functional."""
    return [C.facet(i) for i in range(C.num_facets)]


def disjoint_edge_facet_pairs(C: PointedCone) -> list:
    """Pairs (edge, functional index) whose polytope faces do not meet."""
    out = []
    for e in edges(C):
        for i in range(C.num_facets):
            if not face_meets(C, e, C.facet(i)):
                out.append((e, i))
    return out
