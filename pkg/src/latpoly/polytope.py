"""Lattice polytopes with exact vertex and facet descriptions."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from itertools import combinations, permutations, product
from math import gcd

from .errors import DimensionError, NonLatticeError
from .hull import facets_of_points, vertices_of_halfspaces
from .linalg import (
    determinant,
    dot,
    hermite_normal_form,
    primitive,
    rank,
    transpose,
    unimodular_completion,
)

__all__ = ["Face", "LatticePolytope", "affine_rank", "hypercube", "simplex"]


def affine_rank(points):
    """Dimension of the affine hull of a nonempty point list."""
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


@dataclass(frozen=True)
class Face:
    """A face of a polytope, by vertex indices into ``LatticePolytope.vertices``."""

    vertex_indices: tuple
    dim: int
    tight_facets: tuple


class LatticePolytope:
    """A convex lattice polytope stored by its vertices and facets.

    Vertices are lexicographically sorted integer tuples. Facets are pairs
    ``(u, c)`` for the inequality ``u . x <= c`` with ``u`` primitive. When the
    polytope is not full-dimensional, ``equations`` lists pairs ``(e, d)`` with
    ``e . x == d`` cutting out its affine hull, and the facets describe the
    polytope inside that hull.

    Instances are immutable; build them with :meth:`from_vertices` or
    :meth:`from_inequalities`.
    """

    def __init__(self, ambient_dim, vertices, facets, equations, dim, frame):
        self.ambient_dim = ambient_dim
        self.vertices = vertices
        self.facets = facets
        self.equations = equations
        self.dim = dim
        # (origin, W, Winv): x = origin + y W with y in Z^n; the first dim
        # coordinates of y span the affine hull.
        self._frame = frame

    # -- construction -----------------------------------------------------

    @classmethod
    def from_vertices(cls, points):
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise DimensionError("empty point list")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionError("ragged point list")
        pts = sorted(set(pts))
        origin = pts[0]
        diffs = [[a - b for a, b in zip(p, origin)] for p in pts[1:]]
        r, w, winv = unimodular_completion(diffs, n)
        frame = (origin, w, winv)

        if r == 0:
            equations = tuple((tuple(int(i == j) for j in range(n)), origin[i]) for i in range(n))
            return cls(n, (origin,), (), equations, 0, frame)

        if r == n:
            facets = facets_of_points(pts)
        else:
            local = [tuple(sum(d[j] * winv[j][i] for j in range(n)) for i in range(r))
                     for d in [[0] * n] + diffs]
            facets = []
            for u_loc, c_loc in facets_of_points(local):
                u = tuple(sum(winv[j][i] * u_loc[i] for i in range(r)) for j in range(n))
                facets.append((u, c_loc + dot(u, origin)))
        facets = tuple(sorted(set(facets)))

        normals = [u for u, _ in facets]
        verts = []
        for p in pts:
            tight = [normals[j] for j, (u, c) in enumerate(facets) if dot(u, p) == c]
            if _restricted_rank(tight, w, r) == r:
                verts.append(p)

        equations = []
        for i in range(r, n):
            e = tuple(winv[j][i] for j in range(n))
            equations.append((e, dot(e, origin)))
        return cls(n, tuple(verts), facets, tuple(equations), r, frame)

    @classmethod
    def from_inequalities(cls, halfspaces, equations=()):
        """Build the polytope ``{x : u . x <= c}`` (plus optional equations).

        Raises:
            UnboundedError, EmptyPolytopeError: see
                :func:`latpoly.hull.vertices_of_halfspaces`.
            NonLatticeError: some vertex is not integral.
        """
        halfspaces = [(tuple(u), c) for u, c in halfspaces]
        n = len(halfspaces[0][0]) if halfspaces else len(equations[0][0])
        verts = vertices_of_halfspaces(halfspaces, equations, n)
        ints = []
        for v in verts:
            if any(x.denominator != 1 for x in v):
                raise NonLatticeError(f"vertex {tuple(str(x) for x in v)} is not a lattice point")
            ints.append(tuple(int(x) for x in v))
        return cls.from_vertices(ints)

    # -- basic data -------------------------------------------------------

    def __repr__(self):
        return f"LatticePolytope({list(map(list, self.vertices))})"

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def is_full_dimensional(self):
        return self.dim == self.ambient_dim

    def contains(self, x):
        return (all(dot(u, x) <= c for u, c in self.facets)
                and all(dot(e, x) == d for e, d in self.equations))

    @cached_property
    def _vertex_tight(self):
        return tuple(frozenset(j for j, (u, c) in enumerate(self.facets) if dot(u, v) == c)
                     for v in self.vertices)

    def vertex_index(self, v):
        v = tuple(v)
        try:
            return self.vertices.index(v)
        except ValueError:
            raise DimensionError(f"{v} is not a vertex") from None

    def lattice_points(self):
        """All integer points of the polytope in lexicographic order."""
        lo = [min(v[i] for v in self.vertices) for i in range(self.ambient_dim)]
        hi = [max(v[i] for v in self.vertices) for i in range(self.ambient_dim)]
        ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
        return [p for p in product(*ranges) if self.contains(p)]

    def to_local(self, x):
        """Integer coordinates of ``x`` in the affine hull frame (first ``dim`` only)."""
        origin, _, winv = self._frame
        d = [a - b for a, b in zip(x, origin)]
        n = self.ambient_dim
        return tuple(sum(d[j] * winv[j][i] for j in range(n)) for i in range(self.dim))

    def in_hull_coordinates(self):
        """A full-dimensional copy in Z^dim, lattice-equivalent to this one."""
        if self.is_full_dimensional:
            return self
        if self.dim == 0:
            raise DimensionError("point has no full-dimensional model")
        return LatticePolytope.from_vertices([self.to_local(v) for v in self.vertices])

    # -- faces ------------------------------------------------------------

    def _closure(self, tight):
        return tuple(i for i, t in enumerate(self._vertex_tight) if tight <= t)

    @cached_property
    def _all_faces(self):
        full = tuple(range(len(self.vertices)))
        frontier = set()
        for j in range(len(self.facets)):
            frontier.add(self._closure(frozenset([j])))
        faces = set(frontier)
        while frontier:
            nxt = set()
            for f in frontier:
                for j in range(len(self.facets)):
                    g = tuple(i for i in f if j in self._vertex_tight[i])
                    if g and g not in faces:
                        nxt.add(g)
            faces |= nxt
            frontier = nxt
        faces.add(full)
        out = []
        for f in faces:
            tight = frozenset.intersection(*[self._vertex_tight[i] for i in f])
            dim = affine_rank([self.vertices[i] for i in f])
            out.append(Face(f, dim, tuple(sorted(tight))))
        out.sort(key=lambda fc: (fc.dim, fc.vertex_indices))
        return tuple(out)

    def faces_of_dim(self, d):
        if not 0 <= d <= self.dim:
            raise DimensionError(f"face dimension {d} outside 0..{self.dim}")
        return [f for f in self._all_faces if f.dim == d]

    def face_of(self, points):
        """The face whose vertex set is exactly ``points``.

        Raises:
            InvalidFaceError: no face has exactly these vertices.
        """
        from .errors import InvalidFaceError

        try:
            idx = tuple(sorted({self.vertices.index(tuple(p)) for p in points}))
        except ValueError:
            raise InvalidFaceError("face vertices must be vertices of the polytope") from None
        if not idx:
            raise InvalidFaceError("empty face")
        tight = frozenset.intersection(*[self._vertex_tight[i] for i in idx])
        if self._closure(tight) != idx:
            raise InvalidFaceError(f"vertices {idx} do not span a face")
        for f in self._all_faces:
            if f.vertex_indices == idx:
                return f
        raise InvalidFaceError(f"vertices {idx} do not span a face")

    @cached_property
    def _edges(self):
        edges = {i: [] for i in range(len(self.vertices))}
        for i, j in combinations(range(len(self.vertices)), 2):
            common = self._vertex_tight[i] & self._vertex_tight[j]
            if self._closure(common) == (i, j):
                edges[i].append(j)
                edges[j].append(i)
        return edges

    def edge_neighbours(self, v):
        return [self.vertices[j] for j in self._edges[self.vertex_index(v)]]

    def primitive_edge_directions(self, v):
        """Primitive generators of the edges leaving vertex ``v``."""
        v = tuple(v)
        return [primitive([a - b for a, b in zip(w, v)]) for w in self.edge_neighbours(v)]

    # -- invariants -------------------------------------------------------

    def is_smooth_at(self, v):
        n = self.ambient_dim
        dirs = self.primitive_edge_directions(v)
        return len(dirs) == n and abs(determinant([list(d) for d in dirs])) == 1

    def is_smooth(self):
        """Primitive edge directions at every vertex form a lattice basis.

        Lower-dimensional polytopes are tested inside their affine hull.
        """
        if not self.is_full_dimensional:
            if self.dim == 0:
                return True
            return self.in_hull_coordinates().is_smooth()
        return all(self.is_smooth_at(v) for v in self.vertices)

    def lattice_width(self, bound):
        """Smallest width over primitive directions with max-norm <= ``bound``.

        Directions are taken with their first nonzero entry positive; ties go
        to the lexicographically smallest direction.

        Returns:
            ``(width, direction)``.
        """
        if bound < 1:
            raise ValueError("search bound must be >= 1")
        n = self.ambient_dim
        best = None
        for u in product(range(-bound, bound + 1), repeat=n):
            first = next((x for x in u if x), 0)
            if first <= 0:
                continue
            if gcd(*u) != 1:
                continue
            vals = [dot(u, v) for v in self.vertices]
            w = max(vals) - min(vals)
            if best is None or w < best[0]:
                best = (w, u)
        return best

    def normal_form(self):
        """Canonical representative of the affine unimodular class.

        For every vertex and every ordered basis-like tuple of its edge
        vectors, the unique unimodular map putting that tuple into column
        Hermite form is applied; the lexicographically smallest resulting
        (translated, sorted) vertex list wins.
        """
        if not self.is_full_dimensional:
            raise DimensionError("normal form needs a full-dimensional polytope")
        n = self.ambient_dim
        best = None
        for v in self.vertices:
            edges = [tuple(a - b for a, b in zip(w, v)) for w in self.edge_neighbours(v)]
            for tup in permutations(edges, n):
                if determinant([list(e) for e in tup]) == 0:
                    continue
                # U E^T = H  =>  E U^T = H^T, so x -> x U^T is the map.
                _, u = hermite_normal_form(transpose([list(e) for e in tup]))
                t = transpose(u)
                img = [tuple(sum((p[j] - v[j]) * t[j][i] for j in range(n)) for i in range(n))
                       for p in self.vertices]
                lo = [min(q[i] for q in img) for i in range(n)]
                key = tuple(sorted(tuple(q[i] - lo[i] for i in range(n)) for q in img))
                if best is None or key < best:
                    best = key
        return LatticePolytope.from_vertices(best)

    def normalized_volume_2d(self):
        """Twice the Euclidean area of a polygon (the degree of the surface)."""
        if self.dim != 2:
            raise DimensionError("normalized 2D volume needs a polygon")
        verts = ccw_order(self.in_hull_coordinates().vertices)
        twice = 0
        for (x0, y0), (x1, y1) in zip(verts, verts[1:] + verts[:1]):
            twice += x0 * y1 - x1 * y0
        return Fraction(abs(twice))

    def dilate(self, d):
        if d < 1:
            raise ValueError("dilation factor must be >= 1")
        return LatticePolytope.from_vertices([tuple(d * x for x in v) for v in self.vertices])

    def translate(self, t):
        return LatticePolytope.from_vertices([tuple(a + b for a, b in zip(v, t)) for v in self.vertices])

    def transform(self, m, t=None):
        """Image under ``x -> x m + t`` for an integer matrix ``m``."""
        n = self.ambient_dim
        t = t or (0,) * len(m[0])
        return LatticePolytope.from_vertices(
            [tuple(sum(v[j] * m[j][i] for j in range(n)) + t[i] for i in range(len(m[0])))
             for v in self.vertices])


def _restricted_rank(normals, w, r):
    """Rank of the normals as functionals on the first r rows of the frame."""
    if not normals:
        return 0
    rows = [[dot(u, w[i]) for i in range(r)] for u in normals]
    return rank(rows)


def ccw_order(points):
    """Sort the vertices of a convex polygon counter-clockwise, exactly."""
    pts = list(points)
    k = len(pts)
    cx = sum(p[0] for p in pts)
    cy = sum(p[1] for p in pts)
    rel = {p: (k * p[0] - cx, k * p[1] - cy) for p in pts}

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cmp(p, q):
        a, b = rel[p], rel[q]
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(pts, key=cmp_to_key(cmp))


def hypercube(n):
    """The cube [-1, 1]^n."""
    return LatticePolytope.from_vertices(list(product((-1, 1), repeat=n)))


def simplex(n, d=1):
    """The dilated standard simplex conv{0, d e_1, ..., d e_n}."""
    pts = [(0,) * n] + [tuple(d * int(i == j) for j in range(n)) for i in range(n)]
    return LatticePolytope.from_vertices(pts)
