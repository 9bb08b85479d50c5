"""Exact double description method.

Everything is homogenized so the one primitive needed is the extreme-ray
enumeration of a pointed cone ``{y : a . y >= 0 for every row a}`` over the
integers. Facet enumeration (V to H) and vertex enumeration (H to V) are thin
wrappers around it.
"""

from fractions import Fraction

from .errors import EmptyPolytopeError, UnboundedError
from .linalg import dot, inverse, primitive, rank


def _independent_rows(rows, dim):
    """Indices of a maximal set of linearly independent rows (greedy)."""
    chosen = []
    basis = []
    for i, row in enumerate(rows):
        if rank(basis + [row]) > len(basis):
            basis.append(row)
            chosen.append(i)
            if len(chosen) == dim:
                break
    return chosen


def _int_ray(vec):
    den = 1
    for x in vec:
        den = den * x.denominator // _gcd(den, x.denominator)
    return primitive([int(x * den) for x in vec])


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def extreme_rays(rows, dim):
    """Extreme rays of the pointed cone ``{y in Q^dim : row . y >= 0}``.

    Args:
        rows: integer constraint vectors of length ``dim``.
        dim: ambient dimension of the cone.

    Returns:
        A list of ``(ray, tight)`` pairs: ``ray`` a primitive integer tuple,
        ``tight`` a frozenset of the row indices vanishing on it.

    Raises:
        ValueError: the cone is not pointed (constraint rank < dim).
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    basis_idx = _independent_rows(rows, dim)
    if len(basis_idx) < dim:
        raise ValueError("cone is not pointed")
    binv = inverse([rows[i] for i in basis_idx])
    # columns of the inverse satisfy B r_j = e_j
    rays = []
    for j in range(dim):
        col = [binv[i][j] for i in range(dim)]
        tight = 0
        for jj, idx in enumerate(basis_idx):
            if jj != j:
                tight |= 1 << idx
        rays.append((_int_ray(col), tight))

    in_basis = set(basis_idx)
    for idx, a in enumerate(rows):
        if idx in in_basis:
            continue
        pos, neg, zero = [], [], []
        for ray, tight in rays:
            val = dot(a, ray)
            if val > 0:
                pos.append((ray, tight, val))
            elif val < 0:
                neg.append((ray, tight, val))
            else:
                zero.append((ray, tight | (1 << idx)))
        if not neg:
            rays = [(r, t) for r, t, _ in pos] + zero
            continue
        new = []
        all_tights = [t for _, t in rays]
        for p, tp, vp in pos:
            for q, tq, vq in neg:
                common = tp & tq
                if bin(common).count("1") < dim - 2:
                    continue
                adjacent = True
                for t in all_tights:
                    if t == tp or t == tq:
                        continue
                    if t & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                comb = [vp * y - vq * x for x, y in zip(p, q)]
                new.append((primitive(comb), common | (1 << idx)))
        rays = [(r, t) for r, t, _ in pos] + zero + new
    seen = {}
    for r, t in rays:
        seen.setdefault(r, t)
    return [(r, frozenset(i for i in range(len(rows)) if t >> i & 1)) for r, t in seen.items()]


def facets_of_points(points):
    """Facet inequalities ``u . x <= c`` of the hull of full-dimensional points.

    Returns a list of ``(u, c)`` with ``u`` a primitive integer tuple.
    """
    n = len(points[0])
    rows = [tuple(-x for x in p) + (1,) for p in points]
    out = []
    for ray, _ in extreme_rays(rows, n + 1):
        u, c = ray[:n], ray[n]
        if not any(u):
            continue
        g = 0
        for x in u:
            g = _gcd(g, abs(x))
        out.append((tuple(x // g for x in u), c // g))
    return out


def _nullspace(m, n):
    """Rational basis of ``{x : m x = 0}``."""
    from .linalg import _rref

    aug = [[Fraction(x) for x in row] for row in m]
    pivots = _rref(aug, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -aug[i][f]
        basis.append(_int_ray(v))
    return basis


def vertices_of_halfspaces(halfspaces, equations=(), n=None):
    """Vertices of ``{x : u . x <= c, e . x == d}`` as Fraction tuples.

    Raises:
        EmptyPolytopeError: the intersection is empty.
        UnboundedError: the intersection is nonempty and unbounded.
    """
    ineqs = [(tuple(u), c) for u, c in halfspaces]
    for e, d in equations:
        ineqs.append((tuple(e), d))
        ineqs.append((tuple(-x for x in e), -d))
    if n is None:
        if not ineqs:
            raise ValueError("ambient dimension unknown")
        n = len(ineqs[0][0])
    normals = [u for u, _ in ineqs]
    lineality = _nullspace(normals, n) if normals else [tuple(int(i == j) for j in range(n)) for i in range(n)]
    extra = []
    for l in lineality:
        extra.append((tuple(l), 0))
        extra.append((tuple(-x for x in l), 0))
    rows = [tuple(-x for x in u) + (c,) for u, c in ineqs + extra]
    rows.append((0,) * n + (1,))
    rays = extreme_rays(rows, n + 1)
    verts = [r for r, _ in rays if r[n] > 0]
    if not verts:
        raise EmptyPolytopeError("halfspace intersection is empty")
    if lineality or any(r[n] == 0 for r, _ in rays):
        raise UnboundedError("halfspace intersection is unbounded")
    return sorted({tuple(Fraction(x, r[n]) for x in r[:n]) for r in verts})
