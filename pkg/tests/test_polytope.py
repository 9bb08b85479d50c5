from fractions import Fraction
from itertools import product
from math import gcd

import pytest

from latpoly.errors import DimensionError, EmptyPolytopeError, NonLatticeError, UnboundedError
from latpoly.linalg import determinant, dot
from latpoly.polytope import LatticePolytope, affine_rank, hypercube, simplex

from conftest import in_hull_bruteforce, random_unimodular

GAUSS_P = [(0, 0), (1, 0), (3, 1), (0, 2)]


def random_polytope(rng, n, npts=None, box=3, full=True):
    while True:
        pts = [tuple(rng.randint(0, box) for _ in range(n)) for _ in range(npts or rng.randint(n + 1, n + 5))]
        if not full or affine_rank(pts) == n:
            return LatticePolytope.from_vertices(pts)


class TestConstruction:
    def test_gauss_polytope(self):
        p = LatticePolytope.from_vertices(GAUSS_P)
        assert set(p.vertices) == set(GAUSS_P)
        assert p.dim == 2

    def test_duplicates_segment(self):
        p = LatticePolytope.from_vertices([(0, 0), (1, 0), (1, 0)])
        assert p.vertices == ((0, 0), (1, 0))
        assert p.dim == 1
        assert all(dot(e, v) == d for e, d in p.equations for v in p.vertices)

    def test_hypercube(self):
        p = hypercube(2)
        assert set(p.vertices) == set(product((-1, 1), repeat=2))
        assert set(p.facets) == {((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)}

    def test_redundant_points_dropped(self):
        p = LatticePolytope.from_vertices([(0, 0), (2, 0), (0, 2), (1, 1), (1, 0)])
        assert p.vertices == ((0, 0), (0, 2), (2, 0))

    @pytest.mark.parametrize("bad", [[], [(0, 0), (1,)]])
    def test_bad_input(self, bad):
        with pytest.raises(DimensionError):
            LatticePolytope.from_vertices(bad)

    def test_point(self):
        p = LatticePolytope.from_vertices([(2, 3)])
        assert p.dim == 0 and p.lattice_points() == [(2, 3)]

    def test_lower_dimensional_in_3d(self):
        p = LatticePolytope.from_vertices([(0, 0, 0), (1, 2, 3), (2, 1, 0)])
        assert p.dim == 2 and len(p.equations) == 1
        for u, c in p.facets:
            assert gcd(*u) == 1
            assert sum(dot(u, v) == c for v in p.vertices) == 2


class TestInequalities:
    def test_square(self):
        p = LatticePolytope.from_inequalities([((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])
        assert p == hypercube(2)

    def test_blowup_pentagon(self):
        p = LatticePolytope.from_inequalities(list(hypercube(2).facets) + [((-1, -1), 1)])
        assert set(p.vertices) == {(-1, 0), (0, -1), (1, -1), (-1, 1), (1, 1)}

    def test_unbounded(self):
        with pytest.raises(UnboundedError):
            LatticePolytope.from_inequalities([((-1, 0), 0)])

    def test_unbounded_strip(self):
        with pytest.raises(UnboundedError):
            LatticePolytope.from_inequalities([((1, 0), 1), ((-1, 0), 1)])

    def test_empty(self):
        with pytest.raises(EmptyPolytopeError):
            LatticePolytope.from_inequalities([((1, 0), -1), ((-1, 0), -1), ((0, 1), 1), ((0, -1), 1)])

    def test_non_lattice(self):
        with pytest.raises(NonLatticeError):
            LatticePolytope.from_inequalities([((-1, 0), 0), ((0, -1), 0), ((2, 2), 1)])

    def test_with_equations(self):
        p = LatticePolytope.from_inequalities(
            [((-1, 0, 0), 0), ((0, -1, 0), 0), ((1, 1, 0), 2)], equations=[((0, 0, 1), 5)])
        assert set(p.vertices) == {(0, 0, 5), (2, 0, 5), (0, 2, 5)}

    def test_roundtrip_random(self, rng):
        for n in (2, 3, 4):
            for _ in range(15):
                p = random_polytope(rng, n)
                q = LatticePolytope.from_inequalities(p.facets)
                assert q.vertices == p.vertices


class TestLatticePoints:
    def test_counts(self):
        assert len(hypercube(2).lattice_points()) == 9
        assert len(simplex(2).lattice_points()) == 3
        assert len(hypercube(2).dilate(2).lattice_points()) == 25

    def test_gauss_polytope(self):
        pts = LatticePolytope.from_vertices(GAUSS_P).lattice_points()
        assert set(pts) == {(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (0, 2)}
        assert pts == sorted(pts)

    def test_bruteforce_oracle(self, rng):
        for n in (2, 3):
            for _ in range(8):
                p = random_polytope(rng, n, box=3)
                box = product(range(4), repeat=n)
                expected = [x for x in box if in_hull_bruteforce(x, p.vertices)]
                assert p.lattice_points() == expected

    def test_lower_dimensional(self):
        p = LatticePolytope.from_vertices([(0, 0, 0), (2, 2, 2)])
        assert p.lattice_points() == [(0, 0, 0), (1, 1, 1), (2, 2, 2)]


class TestFaces:
    def test_square(self):
        sq = LatticePolytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert len(sq.faces_of_dim(0)) == 4
        assert len(sq.faces_of_dim(1)) == 4
        assert len(sq.faces_of_dim(2)) == 1

    def test_cube(self):
        cube = LatticePolytope.from_vertices(list(product((0, 1), repeat=3)))
        assert [len(cube.faces_of_dim(d)) for d in range(4)] == [8, 12, 6, 1]

    def test_out_of_range(self):
        with pytest.raises(DimensionError):
            simplex(2).faces_of_dim(3)

    def test_face_vertices_exact(self, rng):
        for _ in range(10):
            p = random_polytope(rng, 3)
            for d in range(p.dim):
                for f in p.faces_of_dim(d):
                    verts = [p.vertices[i] for i in f.vertex_indices]
                    assert affine_rank(verts) == d
                    on = [i for i, v in enumerate(p.vertices)
                          if all(dot(p.facets[j][0], v) == p.facets[j][1] for j in f.tight_facets)]
                    assert tuple(on) == f.vertex_indices


class TestEdgesAndSmoothness:
    def test_square_edges(self):
        sq = LatticePolytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert sorted(sq.primitive_edge_directions((0, 0))) == [(0, 1), (1, 0)]

    def test_primitivized(self):
        t = simplex(2, 2)
        assert sorted(t.primitive_edge_directions((0, 0))) == [(0, 1), (1, 0)]

    def test_gauss_vertex(self):
        # hull edges at (3,1) go to (1,0) and (0,2); checked against the facet list
        p = LatticePolytope.from_vertices(GAUSS_P)
        assert sorted(p.primitive_edge_directions((3, 1))) == [(-3, 1), (-2, -1)]

    def test_not_a_vertex(self):
        with pytest.raises(DimensionError):
            simplex(2).primitive_edge_directions((5, 5))

    @pytest.mark.parametrize("p, expected", [
        (hypercube(2), True),
        (simplex(2, 2), True),
        (LatticePolytope.from_vertices(GAUSS_P), False),
        (simplex(3, 2), True),
        (LatticePolytope.from_vertices([(0, 0), (2, 0), (0, 1)]), False),
    ])
    def test_is_smooth(self, p, expected):
        assert p.is_smooth() is expected

    def test_smooth_via_determinant_oracle(self):
        # 2*Delta_2: edge vectors at every vertex divided by 2 are unimodular
        t = simplex(2, 2)
        for v in t.vertices:
            others = [w for w in t.vertices if w != v]
            dirs = [[(a - b) // 2 for a, b in zip(w, v)] for w in others]
            assert abs(determinant(dirs)) == 1

    def test_lower_dimensional_smooth(self):
        tri = LatticePolytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
        assert tri.is_smooth()


def width_oracle(vertices, bound):
    best = None
    n = len(vertices[0])
    for u in product(range(-bound, bound + 1), repeat=n):
        if not any(u):
            continue
        vals = [dot(u, v) for v in vertices]
        w = max(vals) - min(vals)
        best = w if best is None else min(best, w)
    return best


class TestWidth:
    def test_hypercube(self):
        assert hypercube(2).lattice_width(1) == (2, (0, 1))

    def test_simplex(self):
        assert simplex(2).lattice_width(1)[0] == 1

    def test_gauss_polytope(self):
        p = LatticePolytope.from_vertices(GAUSS_P)
        assert p.lattice_width(3) == (2, (0, 1))
        assert width_oracle(p.vertices, 5) == 2

    def test_matches_oracle(self, rng):
        for _ in range(20):
            p = random_polytope(rng, 2, box=4)
            assert p.lattice_width(4)[0] == width_oracle(p.vertices, 6)


class TestNormalForm:
    def test_translation(self):
        assert hypercube(2).normal_form() == LatticePolytope.from_vertices(
            [(0, 0), (2, 0), (0, 2), (2, 2)]).normal_form()

    def test_idempotent_and_invariant(self, rng):
        for _ in range(25):
            n = rng.choice((2, 3))
            p = random_polytope(rng, n)
            nf = p.normal_form()
            assert nf.normal_form() == nf
            m = random_unimodular(n, rng)
            t = tuple(rng.randint(-5, 5) for _ in range(n))
            assert p.transform(m, t).normal_form() == nf

    def test_distinguishes(self):
        assert simplex(2).normal_form() != simplex(2, 2).normal_form()

    def test_lower_dimensional(self):
        with pytest.raises(DimensionError):
            LatticePolytope.from_vertices([(0, 0), (1, 1)]).normal_form()


class TestVolumeAndDilation:
    @pytest.mark.parametrize("p, vol", [
        (simplex(2), 1),
        (hypercube(2), 8),
        (LatticePolytope.from_vertices([(0, 0), (3, 0), (0, 3), (3, 3)]), 18),
    ])
    def test_volume(self, p, vol):
        assert p.normalized_volume_2d() == Fraction(vol)

    def test_volume_wrong_dim(self):
        with pytest.raises(DimensionError):
            simplex(3).normalized_volume_2d()

    def test_dilate(self):
        assert simplex(2).dilate(2) == simplex(2, 2)
        assert hypercube(2).dilate(1) == hypercube(2)
        with pytest.raises(ValueError):
            simplex(2).dilate(0)


class TestInvariance:
    def test_unimodular_invariants(self, rng):
        for _ in range(20):
            n = rng.choice((2, 3))
            p = random_polytope(rng, n)
            m = random_unimodular(n, rng, steps=3, max_mult=1)
            q = p.transform(m, tuple(rng.randint(-3, 3) for _ in range(n)))
            assert q.is_smooth() == p.is_smooth()
            assert len(q.lattice_points()) == len(p.lattice_points())
            if n == 2:
                assert q.normalized_volume_2d() == p.normalized_volume_2d()
