"""JSON interchange and text formatting for the command line."""

import json
from fractions import Fraction

from .errors import LatPolyError
from .jets import PointConfiguration
from .polytope import LatticePolytope

__all__ = [
    "read_json",
    "read_polytope",
    "read_configuration",
    "polytope_to_dict",
    "dump_polytope",
    "format_rational",
    "format_monomial",
    "parse_point",
]


class FormatError(LatPolyError):
    """An input file does not follow the polytope JSON format."""


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _vertex_list(obj, path):
    if not isinstance(obj, dict) or not isinstance(obj.get("vertices"), list):
        raise FormatError(f"{path}: expected an object with a 'vertices' array")
    verts = obj["vertices"]
    if not verts or not all(isinstance(v, list) and all(isinstance(x, int) for x in v) for v in verts):
        raise FormatError(f"{path}: 'vertices' must be a nonempty array of integer arrays")
    return verts


def read_polytope(path):
    """Read ``{"vertices": [[...], ...], "name": ...}`` into a polytope."""
    return LatticePolytope.from_vertices(_vertex_list(read_json(path), path))


def read_configuration(path):
    """Exponent configuration from a file.

    A polytope file contributes its lattice points; an object with a
    ``"points"`` array is taken verbatim.
    """
    obj = read_json(path)
    if isinstance(obj, dict) and "points" in obj:
        pts = obj["points"]
        if not isinstance(pts, list) or not all(
                isinstance(v, list) and all(isinstance(x, int) for x in v) for v in pts):
            raise FormatError(f"{path}: 'points' must be an array of integer arrays")
        return PointConfiguration.from_points(pts)
    return PointConfiguration.from_polytope(LatticePolytope.from_vertices(_vertex_list(obj, path)))


def polytope_to_dict(p, name=None):
    out = {"vertices": [list(v) for v in p.vertices]}
    if name is not None:
        out["name"] = name
    return out


def dump_polytope(p, name=None):
    return json.dumps(polytope_to_dict(p, name))


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_monomial(exponents, var="x"):
    """``(4, 5) -> 'x0^4*x1^5'``; zero exponents dropped, ``1`` for the constant."""
    parts = []
    for i, e in enumerate(exponents):
        if e == 0:
            continue
        parts.append(f"{var}{i}" if e == 1 else f"{var}{i}^{e}")
    return "*".join(parts) or "1"


def parse_point(text):
    """Parse ``"1,1"`` or ``"1/2,3"`` into a tuple of Fractions."""
    try:
        return tuple(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad point {text!r}: {exc}") from exc
