"""Jet matrices of monomial embeddings and jet separation."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DimensionError, DomainError, NotSmoothError
from .linalg import inverse, rank

__all__ = [
    "GENERIC",
    "PointConfiguration",
    "JetMatrix",
    "multi_indices",
    "falling_factorial",
    "jet_matrix",
    "is_jet_spanned",
    "degree_of_jet_separation",
    "jet_separation_at_vertex",
]


class _Generic:
    def __repr__(self):
        return "GENERIC"


GENERIC = _Generic()
"""Marker for evaluation at a general point of the torus."""


@dataclass(frozen=True)
class PointConfiguration:
    """Distinct exponent vectors ``A`` in Z^n, in first-seen order."""

    exponents: tuple
    ambient_dim: int

    @classmethod
    def from_points(cls, points):
        pts = list(dict.fromkeys(tuple(int(x) for x in p) for p in points))
        if not pts:
            raise DimensionError("empty point configuration")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionError("ragged point configuration")
        return cls(tuple(pts), n)

    @classmethod
    def from_polytope(cls, polytope):
        return cls.from_points(polytope.lattice_points())

    def __len__(self):
        return len(self.exponents)


def _as_config(a):
    if isinstance(a, PointConfiguration):
        return a
    if hasattr(a, "lattice_points"):
        return PointConfiguration.from_polytope(a)
    return PointConfiguration.from_points(a)


def multi_indices(n, k):
    """Exponents ``u`` with ``|u| <= k``: by degree, then descending lex."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for first in range(left, -1, -1):
            rec(prefix + (first,), left - first, slots - 1)

    for deg in range(k + 1):
        if n == 0:
            if deg == 0:
                out.append(())
            continue
        rec((), deg, n)
    return out


def falling_factorial(a, m):
    out = 1
    for i in range(m):
        out *= a - i
    return out


@dataclass(frozen=True)
class JetMatrix:
    """Matrix of the k-jet map: rows are multi-indices, columns exponents."""

    order: int
    config: PointConfiguration
    point: object
    rows: tuple
    entries: tuple

    @property
    def target_rank(self):
        return comb(self.config.ambient_dim + self.order, self.order)

    def rank(self):
        return rank([list(r) for r in self.entries])

    def is_full_rank(self):
        if len(self.config) < self.target_rank:
            return False
        return self.rank() == self.target_rank


def _entry(a, u, p):
    coeff = 1
    for aj, uj in zip(a, u):
        coeff *= falling_factorial(aj, uj)
        if coeff == 0:
            return 0 if p is GENERIC else Fraction(0)
    if p is GENERIC:
        return coeff
    val = Fraction(coeff)
    for aj, uj, pj in zip(a, u, p):
        e = aj - uj
        if pj == 0:
            if e < 0:
                raise DomainError(f"monomial with exponent {a} has a pole at the point")
            if e > 0:
                return Fraction(0)
        else:
            val *= Fraction(pj) ** e
    return val


def jet_matrix(a, k, p=GENERIC):
    """Taylor coefficients up to order ``k`` of each monomial ``x^a`` at ``p``.

    The entry at row ``u`` and column ``a`` is the ``u``-th partial derivative
    of ``x^a`` at ``p``, that is ``prod_j (a_j)_{u_j} p_j^(a_j - u_j)``. At
    :data:`GENERIC` the torus factors are dropped, leaving the integer matrix
    of falling factorials, which has the rank of the jet map at a general
    point.
    """
    a = _as_config(a)
    if k < 0:
        raise ValueError("jet order must be >= 0")
    if p is not GENERIC:
        p = tuple(Fraction(x) for x in p)
        if len(p) != a.ambient_dim:
            raise DimensionError(f"point has {len(p)} coordinates, expected {a.ambient_dim}")
    rows = tuple(multi_indices(a.ambient_dim, k))
    entries = tuple(tuple(_entry(col, u, p) for col in a.exponents) for u in rows)
    return JetMatrix(k, a, p, rows, entries)


def is_jet_spanned(a, k, p=GENERIC):
    return jet_matrix(a, k, p).is_full_rank()


def degree_of_jet_separation(a, p=GENERIC):
    """Largest ``k`` such that the embedding is ``k``-jet spanned at ``p``.

    Raises:
        DomainError: every monomial vanishes at ``p``.
    """
    a = _as_config(a)
    if not is_jet_spanned(a, 0, p):
        raise DomainError("point not in domain: every monomial vanishes there")
    k = 0
    n = a.ambient_dim
    while comb(n + k + 1, k + 1) <= len(a) and is_jet_spanned(a, k + 1, p):
        k += 1
    return k


def jet_separation_at_vertex(polytope, v):
    """Degree of jet separation at the torus fixed point of vertex ``v``.

    The polytope is moved so that ``v`` sits at the origin with its primitive
    edge directions along the coordinate axes; the jets are then taken at 0.
    """
    v = tuple(v)
    polytope.vertex_index(v)
    if not polytope.is_full_dimensional or not polytope.is_smooth_at(v):
        raise NotSmoothError(f"polytope is not smooth at vertex {v}")
    edges = [list(d) for d in polytope.primitive_edge_directions(v)]
    to_std = inverse(edges)
    n = polytope.ambient_dim
    pts = []
    for q in polytope.lattice_points():
        d = [a - b for a, b in zip(q, v)]
        pts.append(tuple(int(sum(d[j] * to_std[j][i] for j in range(n))) for i in range(n)))
    return degree_of_jet_separation(PointConfiguration.from_points(pts), (0,) * n)
