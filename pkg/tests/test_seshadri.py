import math
from fractions import Fraction

import pytest

from latpoly.errors import DimensionError
from latpoly.jets import GENERIC, degree_of_jet_separation
from latpoly.polytope import LatticePolytope, hypercube, simplex
from latpoly.seshadri import epsilon_bounds, sqrt_degree_diagnostic

RECT = LatticePolytope.from_vertices([(0, 0), (1, 0), (0, 3), (1, 3)])


def test_reference_example():
    b = epsilon_bounds(hypercube(2), 17)
    assert (b.lower, b.upper) == (Fraction(2), Fraction(2))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_projective_plane(d):
    b = epsilon_bounds(simplex(2, d), 5)
    assert (b.lower, b.upper) == (d, d)


def test_thin_rectangle():
    b = epsilon_bounds(RECT, 5)
    assert b.upper == 1 and b.lower <= b.upper
    assert b.upper_witness == ((1, 0), 1)


def test_witnesses_are_consistent():
    b = epsilon_bounds(LatticePolytope.from_vertices([(0, 0), (3, 0), (0, 2), (3, 2)]), 4)
    d, s = b.lower_witness
    assert Fraction(s, d) == b.lower
    u, w = b.upper_witness
    assert w == b.upper


def test_lower_at_least_generic_jet_degree():
    for p in (hypercube(2), RECT, simplex(2, 2)):
        assert epsilon_bounds(p, 3).lower >= degree_of_jet_separation(p.lattice_points(), GENERIC)


def test_monotone_in_n():
    p = LatticePolytope.from_vertices([(0, 0), (4, 0), (0, 1), (2, 1)]).dilate(2)
    prev = None
    for n in (1, 2, 3, 4):
        b = epsilon_bounds(p, n)
        if prev:
            assert b.lower >= prev.lower and b.upper <= prev.upper
        prev = b


def test_dcap():
    b = epsilon_bounds(hypercube(2), 17, dcap=1)
    assert b.lower_witness == (1, 2)


def test_not_a_surface():
    with pytest.raises(DimensionError):
        epsilon_bounds(simplex(3), 3)


@pytest.mark.parametrize("p, expected", [
    (hypercube(2), math.sqrt(8)),
    (simplex(2), 1.0),
    (simplex(2, 2), 2.0),
])
def test_sqrt_diagnostic(p, expected):
    assert sqrt_degree_diagnostic(p) == pytest.approx(expected)
