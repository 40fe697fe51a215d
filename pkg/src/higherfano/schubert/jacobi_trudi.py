"""Independent oracle for Schubert products on Gr(k, n).

No tableaux are involved. Schur polynomials in N variables come from the
Jacobi-Trudi determinant det(h_{mu_i - i + j}), and the structure constants
are read off the bialternant identity

    s_mu * a_{lam + delta} = sum_nu c^nu_{lam, mu} a_{nu + delta}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from . import GrClass, conjugate, fits, partition, partitions_in_box


def _sign(perm: tuple) -> int:
    s, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


@lru_cache(maxsize=None)
def _h(r: int, nvars: int) -> dict:
    """Complete homogeneous polynomial h_r as {exponent: 1}."""
    if r < 0:
        return {}
    out = {}

    def rec(i: int, left: int, acc: list) -> None:
        if i == nvars - 1:
            out[tuple(acc + [left])] = 1
            return
        for x in range(left, -1, -1):
            rec(i + 1, left - x, acc + [x])

    rec(0, r, [])
    return out


def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, ca in p.items():
        for b, cb in q.items():
            e = tuple(x + y for x, y in zip(a, b))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def schur_polynomial(mu: tuple, nvars: int) -> dict:
    mu = partition(mu)
    ell = len(mu)
    if ell > nvars:
        return {}
    if ell == 0:
        return {(0,) * nvars: 1}
    total: dict = {}
    for perm in permutations(range(ell)):
        term = {(0,) * nvars: 1}
        for i in range(ell):
            h = _h(mu[i] - i + perm[i], nvars)
            if not h:
                term = {}
                break
            term = _mul(term, h)
        sgn = _sign(perm)
        for e, c in term.items():
            total[e] = total.get(e, 0) + sgn * c
    return {e: c for e, c in total.items() if c}


def oracle_coefficient(nu: tuple, lam: tuple, mu: tuple, nvars: int) -> int:
    """c^nu_{lam, mu} from the bialternant identity in ``nvars`` variables."""
    nu, lam = partition(nu), partition(lam)
    if len(nu) > nvars or len(lam) > nvars:
        return 0
    delta = tuple(range(nvars - 1, -1, -1))
    lam_d = [x + d for x, d in zip(lam + (0,) * nvars, delta)]
    nu_d = [x + d for x, d in zip(nu + (0,) * nvars, delta)]
    s_mu = schur_polynomial(partition(mu), nvars)
    total = 0
    for perm in permutations(range(nvars)):
        e = tuple(nu_d[i] - lam_d[perm[i]] for i in range(nvars))
        if min(e) < 0:
            continue
        c = s_mu.get(e, 0)
        if c:
            total += _sign(perm) * c
    return total


def oracle_multiply(a: GrClass, b: GrClass) -> GrClass:
    """Product on Gr(k, n) computed by the oracle.

    Uses the duality Gr(k, n) = Gr(n-k, n) (conjugate partitions) so the
    number of variables is min(k, n - k).
    """
    k, n = a.ambient
    flip = k > n - k
    rows, cols = (n - k, k) if flip else (k, n - k)
    size = None if a.codim is None or b.codim is None else a.codim + b.codim
    out: dict = {}
    if size is None or size > rows * cols:
        return GrClass(k, n, {}, size)
    targets = partitions_in_box(rows, cols, size)
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            l2, m2 = (conjugate(lam), conjugate(mu)) if flip else (lam, mu)
            for nu in targets:
                c = oracle_coefficient(nu, l2, m2, rows)
                if c:
                    key = conjugate(nu) if flip else nu
                    out[key] = out.get(key, 0) + ca * cb * c
    assert all(fits(lam, k, n) for lam in out)
    return GrClass(k, n, out, size)
