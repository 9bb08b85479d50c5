"""Exact integer and rational linear algebra.

Matrices are plain lists of rows. Entries are Python ``int`` or
``fractions.Fraction``; nothing here ever touches floating point.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionError

__all__ = [
    "identity",
    "transpose",
    "matmul",
    "matvec",
    "dot",
    "rank",
    "determinant",
    "solve_exact",
    "inverse",
    "hermite_normal_form",
    "smith_normal_form",
    "saturate",
    "unimodular_completion",
    "primitive",
    "content",
]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m, ncols=None):
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def content(v):
    """gcd of the entries of an integer vector (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v):
    """Divide an integer vector by its content. The zero vector is returned as is."""
    g = content(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _integral_rows(m):
    """Scale each row by the lcm of its denominators so every entry is an int."""
    out = []
    for row in m:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _check_rect(m):
    if m and len({len(r) for r in m}) != 1:
        raise DimensionError("ragged matrix")


def rank(m):
    """Exact rank over the rationals.

    Rows are cleared of denominators and eliminated fraction-free, dividing
    each updated row by its content to keep the integers small.
    """
    _check_rect(m)
    rows = [r for r in _integral_rows(m) if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        pc = p[c]
        for i in range(r + 1, len(rows)):
            row = rows[i]
            x = row[c]
            if x:
                new = [pc * a - x * b for a, b in zip(row, p)]
                g = content(new)
                if g > 1:
                    new = [a // g for a in new]
                rows[i] = new
        r += 1
        if r == len(rows):
            break
    return r


def determinant(m):
    """Exact determinant by Bareiss elimination."""
    _check_rect(m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    integral = all(isinstance(x, int) for row in m for x in row)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * akk - aik * a[k][j]
                a[i][j] = num // prev if integral else Fraction(num) / prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _rref(aug, ncols):
    """Reduced row echelon form over Fractions; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / Fraction(aug[r][c])
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    return pivots


def solve_exact(a, b):
    """Solve ``a x = b`` over the rationals.

    Returns:
        A pair ``(x, status)``. ``status`` is ``"unique"``,
        ``"underdetermined"`` (``x`` is one solution, free variables set to
        zero) or ``"inconsistent"`` (``x`` is None).
    """
    _check_rect(a)
    if len(a) != len(b):
        raise DimensionError(f"{len(a)} equations but {len(b)} right-hand sides")
    ncols = len(a[0]) if a else 0
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    pivots = _rref(aug, ncols)
    for row in aug[len(pivots):]:
        if row[-1] != 0:
            return None, "inconsistent"
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    return x, ("unique" if len(pivots) == ncols else "underdetermined")


def inverse(m):
    """Exact inverse of a nonsingular square matrix, as Fractions."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("inverse of a non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    if len(_rref(aug, n)) != n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in aug]


def hermite_normal_form(m):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U @ m == H``, ``U`` unimodular, pivots of ``H``
    positive, entries above each pivot reduced into ``[0, pivot)``, entries
    below pivots zero, and zero rows at the bottom.
    """
    _check_rect(m)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    a = [list(map(int, row)) for row in m]
    u = identity(nrows)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if a[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[best] = a[best], a[r]
            u[r], u[best] = u[best], u[r]
            done = True
            for i in range(r + 1, nrows):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return a, u


def _smith(m):
    """Smith form with transforms: returns (U, S, V, Vinv), U m V = S."""
    _check_rect(m)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    a = [list(map(int, row)) for row in m]
    u = identity(nrows)
    v = identity(ncols)
    vinv = identity(ncols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def add_row(dst, src, q):  # row_dst += q row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst += q col_src
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]
        vinv[src] = [x - q * y for x, y in zip(vinv[src], vinv[dst])]

    for t in range(min(nrows, ncols)):
        nz = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        dirty = True
            if dirty:
                nz = [(abs(a[i][t]), i, 0) for i in range(t, nrows) if a[i][t]]
                nz += [(abs(a[t][j]), t, j) for j in range(t + 1, ncols) if a[t][j]]
                _, i0, j0 = min(nz)
                if j0:
                    swap_cols(t, j0)
                else:
                    swap_rows(t, i0)
                continue
            p = a[t][t]
            bad = next((i for i in range(t + 1, nrows)
                        if any(a[i][j] % p for j in range(t + 1, ncols))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, v, vinv


def smith_normal_form(m):
    """Smith normal form ``(U, S, V)`` with ``U @ m @ V == S``.

    ``U`` and ``V`` are unimodular and the diagonal of ``S`` is a nonnegative
    divisibility chain ``d1 | d2 | ...``.
    """
    u, s, v, _ = _smith(m)
    return u, s, v


def unimodular_completion(generators, n):
    """Extend a basis of the saturation of ``generators`` to a basis of Z^n.

    Returns:
        ``(r, W, Winv)`` where ``W`` is an ``n x n`` unimodular matrix whose
        first ``r`` rows form a basis of ``span_Q(generators) ∩ Z^n`` and
        ``Winv`` is its integer inverse. Coordinates of a row vector ``x``
        with respect to the rows of ``W`` are ``x @ Winv``.
    """
    gens = [list(g) for g in generators]
    if any(len(g) != n for g in gens):
        raise DimensionError("generator of wrong length")
    if not gens:
        return 0, identity(n), identity(n)
    _, s, v, vinv = _smith(gens)
    r = sum(1 for i in range(min(len(s), n)) if s[i][i] != 0)
    return r, vinv, v


def saturate(generators, n):
    """A Z-basis of ``span_Q(generators) ∩ Z^n``."""
    r, w, _ = unimodular_completion(generators, n)
    return [tuple(row) for row in w[:r]]
