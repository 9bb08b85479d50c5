"""Image and general fiber of higher order Gauss maps of toric embeddings.

At a torus point ``t`` the jet matrix factors as
``diag(t^-u) @ C @ diag(t^a)`` with ``C`` the integer matrix of falling
factorials, so the Plücker coordinate on a column set ``S`` is
``det(C_S) * t^(sum S)`` up to a factor shared by all coordinates. The
image is therefore the toric variety of the exponent sums over the column
bases of ``C``.
"""

from dataclasses import dataclass
from math import comb

from .errors import GaussMapUndefinedError
from .jets import GENERIC, _as_config, jet_matrix
from .linalg import content, unimodular_completion

__all__ = [
    "GaussMapResult",
    "column_bases",
    "gauss_k_map",
    "gauss_k_image",
    "gauss_k_fiber",
    "gauss_image",
    "gauss_fiber",
]


@dataclass(frozen=True)
class GaussMapResult:
    order: int
    image_exponents: tuple
    fiber_exponents: tuple
    image_dim: int
    fiber_dim: int


def _reduce(vec, basis):
    """Reduce an integer vector against an echelon basis {pivot: row}."""
    v = list(vec)
    for piv, b in basis:
        x = v[piv]
        if x:
            bp = b[piv]
            v = [bp * y - x * z for y, z in zip(v, b)]
            g = content(v)
            if g > 1:
                v = [y // g for y in v]
    return v


def column_bases(columns, r):
    """Yield every r-subset (as an index tuple, lexicographically) of
    linearly independent columns, pruning dependent prefixes."""
    m = len(columns)

    def rec(start, chosen, basis):
        if len(chosen) == r:
            yield tuple(chosen)
            return
        for i in range(start, m - (r - len(chosen)) + 1):
            red = _reduce(columns[i], basis)
            piv = next((j for j, x in enumerate(red) if x), None)
            if piv is None:
                continue
            yield from rec(i + 1, chosen + [i], basis + [(piv, red)])

    yield from rec(0, [], [])


def gauss_k_map(a, k):
    """Image exponents and general fiber exponents of the order-k Gauss map.

    Raises:
        GaussMapUndefinedError: ``a`` is not ``k``-jet spanned at the
            general point.
    """
    a = _as_config(a)
    n = a.ambient_dim
    r = comb(n + k, k)
    jm = jet_matrix(a, k, GENERIC)
    if not jm.is_full_rank():
        raise GaussMapUndefinedError(
            f"configuration is not {k}-jet spanned at the general point")
    columns = [[row[j] for row in jm.entries] for j in range(len(a))]
    exps = a.exponents
    sigmas = {}
    for s in column_bases(columns, r):
        sig = tuple(sum(exps[i][j] for i in s) for j in range(n))
        sigmas.setdefault(sig, s)
    first = min(sigmas, key=sigmas.get)
    diffs = [[x - y for x, y in zip(sig, first)] for sig in sigmas]
    rk, _, winv = unimodular_completion(diffs, n)
    # x -> (x Winv)[rk:] kills exactly the saturated difference lattice
    proj = [tuple(sum(x[j] * winv[j][i] for j in range(n)) for i in range(rk, n)) for x in exps]
    lo = [min(q[i] for q in proj) for i in range(n - rk)]
    fiber = sorted({tuple(q[i] - lo[i] for i in range(n - rk)) for q in proj})
    return GaussMapResult(k, tuple(sorted(sigmas)), tuple(fiber), rk, n - rk)


def gauss_k_image(a, k):
    return list(gauss_k_map(a, k).image_exponents)


def gauss_k_fiber(a, k):
    return list(gauss_k_map(a, k).fiber_exponents)


def gauss_image(a):
    return gauss_k_image(a, 1)


def gauss_fiber(a):
    return gauss_k_fiber(a, 1)
