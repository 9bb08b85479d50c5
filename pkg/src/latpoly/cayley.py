"""Cayley structures, Cayley sums and polytopal toric blow-ups."""

from dataclasses import dataclass
from itertools import product

from .errors import DimensionError, InvalidBlowUpError, InvalidFaceError, NotSmoothError
from .linalg import dot, rank, solve_exact
from .polytope import Face, LatticePolytope

__all__ = ["CayleyStructure", "is_cayley", "cayley_sum", "toric_blow_up"]


@dataclass(frozen=True)
class CayleyStructure:
    """Witness that every lattice point has ``u . x`` in ``{offset, offset + 1}``."""

    functional: tuple
    offset: int
    slice0: tuple
    slice1: tuple


def _affinely_independent(points, n):
    chosen = [points[0]]
    diffs = []
    for p in points[1:]:
        d = [a - b for a, b in zip(p, points[0])]
        if rank(diffs + [d]) > len(diffs):
            diffs.append(d)
            chosen.append(p)
            if len(chosen) == n + 1:
                break
    return chosen


def is_cayley(p):
    """Return a :class:`CayleyStructure` for ``p`` or None.

    A full-dimensional lattice polytope is Cayley exactly when some integral
    functional takes only two consecutive values on it (lattice width one).
    Any such functional takes values in ``{c, c + 1}`` on a fixed set of
    ``n + 1`` affinely independent vertices, so trying all ``2^(n+1)`` value
    patterns on them and solving for ``(u, c)`` is a complete search.
    """
    if not p.is_full_dimensional:
        raise DimensionError("is_cayley needs a full-dimensional polytope")
    n = p.ambient_dim
    base = _affinely_independent(list(p.vertices), n)
    mat = [list(q) + [-1] for q in base]
    for pattern in product((0, 1), repeat=n + 1):
        sol, status = solve_exact(mat, list(pattern))
        if status != "unique":
            continue
        if any(x.denominator != 1 for x in sol):
            continue
        u = tuple(int(x) for x in sol[:n])
        c = int(sol[n])
        vals = {dot(u, v) for v in p.vertices}
        if vals != {c, c + 1}:
            continue
        pts = p.lattice_points()
        s0 = tuple(q for q in pts if dot(u, q) == c)
        s1 = tuple(q for q in pts if dot(u, q) == c + 1)
        return CayleyStructure(u, c, s0, s1)
    return None


def cayley_sum(polytopes, s=1):
    """Hull of ``P_i x {s e_i}`` with ``e_0 = 0`` in ``R^(d + m - 1)``."""
    m = len(polytopes)
    if m < 2:
        raise DimensionError("a Cayley sum needs at least two polytopes")
    if s < 1:
        raise ValueError("scale must be >= 1")
    d = polytopes[0].ambient_dim
    if any(q.ambient_dim != d for q in polytopes):
        raise DimensionError("polytopes live in different ambient dimensions")
    pts = []
    for i, q in enumerate(polytopes):
        tail = tuple(s if j == i - 1 else 0 for j in range(m - 1))
        pts.extend(tuple(v) + tail for v in q.vertices)
    return LatticePolytope.from_vertices(pts)


def toric_blow_up(p, q, k=1):
    """Cut the face ``q`` off ``p`` at depth ``k``.

    The new inequality has normal the sum of the primitive facet normals
    through ``q`` and right-hand side the sum of their offsets minus ``k``.
    The resulting polytope corresponds to the blow-up along the subvariety of
    ``q``, polarized by ``pi^* L - k E``.

    Args:
        p: full-dimensional lattice polytope.
        q: a :class:`Face` of ``p`` or an iterable of its vertices.
        k: positive depth.

    Raises:
        InvalidFaceError: ``q`` is not a proper face.
        NotSmoothError: ``p`` is not smooth at some vertex of ``q``.
        InvalidBlowUpError: the cut removes vertices outside ``q``.
    """
    if k < 1:
        raise InvalidBlowUpError("blow-up depth must be >= 1")
    if not p.is_full_dimensional:
        raise DimensionError("blow-ups need a full-dimensional polytope")
    face = q if isinstance(q, Face) else p.face_of(q)
    if face.dim >= p.dim:
        raise InvalidFaceError("cannot blow up along the whole polytope")
    on_face = [p.vertices[i] for i in face.vertex_indices]
    for v in on_face:
        if not p.is_smooth_at(v):
            raise NotSmoothError(f"polytope is not smooth at vertex {v}")

    n = p.ambient_dim
    through = [p.facets[j] for j in face.tight_facets]
    u_new = tuple(sum(u[i] for u, _ in through) for i in range(n))
    c_new = sum(c for _, c in through) - k
    for i, v in enumerate(p.vertices):
        if i not in face.vertex_indices and dot(u_new, v) > c_new:
            raise InvalidBlowUpError(
                f"depth {k} also cuts off vertex {v}, which is not on the face")
    return LatticePolytope.from_inequalities(list(p.facets) + [(u_new, c_new)])
