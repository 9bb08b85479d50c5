import functools
import random
from fractions import Fraction
from itertools import combinations

import pytest

from latpoly.classify import list_smooth_2d
from latpoly.linalg import determinant, matmul

ACCEPTANCE_LINES = []


def random_unimodular(n, rng, steps=4, max_mult=2):
    """Product of random elementary integer matrices, signs and swaps."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        e = [[int(a == b) for b in range(n)] for a in range(n)]
        kind = rng.random()
        if kind < 0.6 and n > 1:
            e[i][j] = rng.choice([x for x in range(-max_mult, max_mult + 1) if x])
        elif kind < 0.8:
            e[i][i] = -1
        elif n > 1:
            e[i], e[j] = e[j], e[i]
        m = matmul(m, e)
    assert abs(determinant(m)) == 1
    return m


def frac_det(m):
    """Plain Gaussian elimination over Fractions, kept separate from the library."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def in_hull_bruteforce(x, vertices):
    """Carathéodory: x lies in some simplex spanned by affinely independent vertices."""
    n = len(x)
    vs = list(vertices)
    for k in range(1, min(n + 1, len(vs)) + 1):
        for simplex in combinations(vs, k):
            # solve sum l_i v_i = x, sum l_i = 1, l >= 0 (least squares free: use exact normal system)
            rows = [[Fraction(v[j]) for v in simplex] + [Fraction(x[j])] for j in range(n)]
            rows.append([Fraction(1)] * k + [Fraction(1)])
            sol = _solve_unique(rows, k)
            if sol is not None and all(l >= 0 for l in sol):
                return True
    return False


def _solve_unique(aug, k):
    a = [row[:] for row in aug]
    r = 0
    piv_cols = []
    for c in range(k):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            return None
        a[r], a[p] = a[p], a[r]
        a[r] = [v / a[r][c] for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] != 0 for row in a[r:]):
        return None
    return [a[i][-1] for i in range(k)]


@pytest.fixture
def rng():
    return random.Random(20261019)


@functools.lru_cache(maxsize=None)
def smooth_polygons(max_points=12):
    return tuple(list_smooth_2d(max_points))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
