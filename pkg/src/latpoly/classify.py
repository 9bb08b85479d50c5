"""Enumeration of smooth lattice polygons and loading of 3D classification data.

Every smooth complete fan in the plane is an iterated star subdivision of the
fan of P^2 or of a Hirzebruch surface F_a. Smooth polygons are exactly the
polygons whose normal fan is such a fan, so they are enumerated fan by fan,
with edge lengths bounded by the lattice point budget.
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cayley import is_cayley
from .errors import LatPolyError, ValidationError
from .polytope import LatticePolytope

__all__ = [
    "SmoothFan2D",
    "ClassificationRecord",
    "enumerate_smooth_fans_2d",
    "polygons_from_fan",
    "list_smooth_2d",
    "load_classification_3d",
    "DEFAULT_A_CAP",
]

DEFAULT_A_CAP = 12


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class SmoothFan2D:
    """Counter-clockwise primitive rays, consecutive pairs of determinant 1."""

    rays: tuple

    def __post_init__(self):
        d = len(self.rays)
        for i in range(d):
            if _det(self.rays[i], self.rays[(i + 1) % d]) != 1:
                raise ValueError(f"rays {self.rays[i]}, {self.rays[(i + 1) % d]} are not a positive basis")

    def subdivisions(self):
        d = len(self.rays)
        for i in range(d):
            u, v = self.rays[i], self.rays[(i + 1) % d]
            new = (u[0] + v[0], u[1] + v[1])
            yield SmoothFan2D(self.rays[:i + 1] + (new,) + self.rays[i + 1:])

    def canonical_key(self):
        """Lexicographic minimum over the lattice maps taking a consecutive
        ray pair to the standard basis, in both orientations."""
        best = None
        for seq in (list(self.rays), list(reversed(self.rays))):
            d = len(seq)
            for i in range(d):
                (a, b), (c, e) = seq[i], seq[(i + 1) % d]
                det = a * e - b * c  # +-1
                # inverse of the matrix with columns u, v
                inv = ((e * det, -c * det), (-b * det, a * det))
                rot = seq[i:] + seq[:i]
                key = tuple((inv[0][0] * x + inv[0][1] * y, inv[1][0] * x + inv[1][1] * y)
                            for x, y in rot)
                if best is None or key < best:
                    best = key
        return best


@dataclass(frozen=True)
class ClassificationRecord:
    polytope: LatticePolytope
    lattice_point_count: int
    is_smooth: bool
    is_cayley: bool


def _base_fans(a_cap):
    yield SmoothFan2D(((1, 0), (0, 1), (-1, -1)))
    for a in range(a_cap + 1):
        yield SmoothFan2D(((1, 0), (0, 1), (-1, a), (0, -1)))


def enumerate_smooth_fans_2d(max_rays, a_cap=DEFAULT_A_CAP):
    """Smooth complete fans with at most ``max_rays`` rays, up to lattice maps.

    Generated from P^2 and F_0..F_{a_cap} by repeated star subdivision.
    """
    if max_rays < 3:
        raise ValueError("a complete fan has at least 3 rays")
    seen = {}
    frontier = []
    for f in _base_fans(a_cap):
        if len(f.rays) <= max_rays:
            key = f.canonical_key()
            if key not in seen:
                seen[key] = f
                frontier.append(f)
    while frontier:
        nxt = []
        for f in frontier:
            if len(f.rays) >= max_rays:
                continue
            for g in f.subdivisions():
                key = g.canonical_key()
                if key not in seen:
                    seen[key] = g
                    nxt.append(g)
        frontier = nxt
    return [seen[k] for k in sorted(seen, key=lambda k: (len(k), k))]


def _pick_count(vertices, boundary):
    twice_area = 0
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:] + vertices[:1]):
        twice_area += x0 * y1 - x1 * y0
    interior = (twice_area - boundary + 2) // 2
    return interior + boundary


def _polygon_vertex_lists(fan, max_points):
    rays = fan.rays
    d = len(rays)
    # outer normal u -> counter-clockwise edge direction
    w = [(-u[1], u[0]) for u in rays]
    p, q = w[d - 2], w[d - 1]
    det = _det(p, q)
    for lengths in _length_prefixes(d - 2, max_points - 2):
        sx = sum(l * wi[0] for l, wi in zip(lengths, w))
        sy = sum(l * wi[1] for l, wi in zip(lengths, w))
        # solve lp * p + lq * q = -(sx, sy)
        lp_num = _det((-sx, -sy), q)
        lq_num = _det(p, (-sx, -sy))
        if lp_num % det or lq_num % det:
            continue
        lp, lq = lp_num // det, lq_num // det
        if lp < 1 or lq < 1:
            continue
        all_l = list(lengths) + [lp, lq]
        boundary = sum(all_l)
        if boundary > max_points:
            continue
        verts = [(0, 0)]
        for l, wi in zip(all_l[:-1], w[:-1]):
            x, y = verts[-1]
            verts.append((x + l * wi[0], y + l * wi[1]))
        if _pick_count(verts, boundary) <= max_points:
            yield verts


def _length_prefixes(count, budget):
    def rec(prefix, left):
        if len(prefix) == count:
            yield tuple(prefix)
            return
        for l in range(1, left - (count - len(prefix) - 1) + 1):
            yield from rec(prefix + [l], left - l)

    yield from rec([], budget)


def polygons_from_fan(fan, max_points):
    """Lattice polygons with normal fan ``fan`` and at most ``max_points``
    lattice points, one per translation class."""
    return [LatticePolytope.from_vertices(v) for v in _polygon_vertex_lists(fan, max_points)]


def _normal_forms_for_fan(args):
    fan, max_points = args
    return [p.normal_form().vertices for p in polygons_from_fan(fan, max_points)]


def _threads():
    try:
        return max(1, int(os.environ.get("LATPOLY_THREADS", "1")))
    except ValueError:
        return 1


def _record(polytope, count=None):
    return ClassificationRecord(
        polytope,
        count if count is not None else len(polytope.lattice_points()),
        polytope.is_smooth(),
        is_cayley(polytope) is not None,
    )


def list_smooth_2d(max_points=12, a_cap=DEFAULT_A_CAP, max_rays=None):
    """All smooth lattice polygons with at most ``max_points`` lattice points.

    Returns records sorted by lattice point count, then normal form.
    """
    if max_points < 3:
        raise ValueError("max_points must be >= 3")
    fans = enumerate_smooth_fans_2d(max_rays or max_points, a_cap)
    jobs = [(f, max_points) for f in fans]
    threads = _threads()
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            results = list(ex.map(_normal_forms_for_fan, jobs, chunksize=16))
    else:
        results = [_normal_forms_for_fan(j) for j in jobs]
    forms = {v for batch in results for v in batch}
    records = []
    for v in forms:
        p = LatticePolytope.from_vertices(v)
        records.append(_record(p))
    records.sort(key=lambda r: (r.lattice_point_count, r.polytope.vertices))
    return records


def load_classification_3d(path, max_points=16):
    """Load and validate a JSON list of smooth 3-polytopes.

    Accepts either ``[{"vertices": [[x, y, z], ...]}, ...]`` or a bare list of
    vertex lists.

    Raises:
        ValidationError: malformed file or an entry that is not a smooth
            3-polytope with at most ``max_points`` lattice points.
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read classification file: {exc}") from exc
    if not isinstance(data, list):
        raise ValidationError("classification file must hold a JSON array")
    records = []
    for i, entry in enumerate(data):
        verts = entry.get("vertices") if isinstance(entry, dict) else entry
        try:
            p = LatticePolytope.from_vertices(verts)
        except (LatPolyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad vertex list ({exc})", i) from exc
        if p.ambient_dim != 3 or p.dim != 3:
            raise ValidationError("not a full-dimensional 3-polytope", i)
        if not p.is_smooth():
            raise ValidationError("polytope is not smooth", i)
        count = len(p.lattice_points())
        if count > max_points:
            raise ValidationError(f"{count} lattice points exceed {max_points}", i)
        records.append(_record(p.normal_form(), count))
    return records
