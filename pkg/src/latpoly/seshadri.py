"""Bounds for Seshadri constants of polarized toric surfaces at a general point.

Lower bound: for every multiple ``d``, jets of order ``s(dL)`` are separated
at the general point, hence ``eps >= s(dL) / d``.

Upper bound: the fibers of the lattice projection along a direction ``u``
are curves through the general point, smooth there, of degree equal to the
width of the polygon along ``u``; so ``eps`` is at most the lattice width.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, InconsistentBoundsError
from .jets import GENERIC, PointConfiguration, degree_of_jet_separation

__all__ = ["EpsilonBounds", "epsilon_bounds", "sqrt_degree_diagnostic", "DEFAULT_DCAP"]

DEFAULT_DCAP = 3


@dataclass(frozen=True)
class EpsilonBounds:
    lower: Fraction
    upper: Fraction
    lower_witness: tuple  # (dilation d, jet degree s of d*P)
    upper_witness: tuple  # (direction u, width along u)


def _surface(p):
    if p.dim != 2:
        raise DimensionError("Seshadri bounds are implemented for polygons only")
    return p.in_hull_coordinates()


def epsilon_bounds(p, n, dcap=DEFAULT_DCAP):
    """Exact lower and upper bounds for eps(X, L; x) at a general point x.

    ``n`` bounds the max-norm of the width directions searched and, capped by
    ``dcap``, the number of dilations tried for the lower bound.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    q = _surface(p)
    lower, lower_witness = Fraction(-1), None
    for d in range(1, min(n, dcap) + 1):
        pts = q.dilate(d).lattice_points()
        s = degree_of_jet_separation(PointConfiguration.from_points(pts), GENERIC)
        if Fraction(s, d) > lower:
            lower, lower_witness = Fraction(s, d), (d, s)
    width, direction = q.lattice_width(n)
    if q is not p:
        direction = None  # the width direction lives in hull coordinates
    upper = Fraction(width)
    if lower > upper:
        raise InconsistentBoundsError(f"lower bound {lower} exceeds upper bound {upper}")
    return EpsilonBounds(lower, upper, lower_witness, (direction, width))


def sqrt_degree_diagnostic(p):
    """Floating-point sqrt(L^2). Non-exact and never used by :func:`epsilon_bounds`."""
    return math.sqrt(_surface(p).normalized_volume_2d())
