"""Rank-3 parameter calculus and the orbit containment checks.

Everything is exact integer arithmetic; equation (1) is evaluated with
cleared denominators, so no rationals appear anywhere.
"""

import math
from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class RankThreeParams:
    total: int      # |E| = k + l + 1
    k: int
    l: int
    lam: int
    mu: int
    lam1: int
    mu1: int
    sqrtD: int
    s: int
    t: int
    f_s: int
    f_t: int

    def to_json(self):
        return asdict(self)


@dataclass(frozen=True)
class CdPair:
    c: int
    d: int
    xi: str | None = None

    @property
    def size(self):
        return 1 + self.c + self.d


class NotRankThree(ValueError):
    pass


def generic_params(k, l, lam, mu):
    """Parameters derived from (k, l, lambda, mu), with feasibility checks."""
    if min(k, l, lam, mu) < 0:
        raise NotRankThree("negative input")
    if mu * l != k * (k - 1 - lam):
        raise NotRankThree("mu*l != k(k-1-lambda)")
    D = (lam - mu) ** 2 + 4 * (k - mu)
    sqrtD = math.isqrt(D)
    if sqrtD * sqrtD != D:
        raise NotRankThree("D = %d is not a perfect square" % D)
    s = (lam - mu + sqrtD) // 2
    t = (lam - mu - sqrtD) // 2
    if (lam - mu + sqrtD) % 2 != 0:
        raise NotRankThree("eigenvalues are not integers")
    if s == t:
        raise NotRankThree("repeated eigenvalue")
    num_s = k + t * (k + l)
    num_t = k + s * (k + l)
    if num_s % (t - s) or num_t % (s - t):
        raise NotRankThree("non-integral multiplicities")
    f_s = num_s // (t - s)
    f_t = num_t // (s - t)
    if f_s <= 0 or f_t <= 0:
        raise NotRankThree("non-positive multiplicities")
    total = k + l + 1
    if 1 + f_s + f_t != total:
        raise NotRankThree("multiplicities do not sum to |E|-1")
    return RankThreeParams(total, k, l, lam, mu,
                           l - k + mu - 1, l - k + lam + 1,
                           sqrtD, s, t, f_s, f_t)


def _xi_sign(xi):
    if xi in ("+", "plus", 1):
        return 1
    if xi in ("-", "minus", -1):
        return -1
    raise ValueError("bad type %r" % (xi,))


def odd_orthogonal_params(m, xi):
    """Closed-form parameters for the non-singular point action, dim 2m+1, q=3."""
    if m < 2:
        raise ValueError("m >= 2 required")
    e = _xi_sign(xi)
    q = 3
    total = q ** m * (q ** m + e) // 2
    k = q ** (m - 1) * (q ** m - e) // 2
    l = (q ** m - e) * (q ** (m - 1) + e)
    lam = mu = q ** (m - 1) * (q ** (m - 1) - e) // 2
    params = generic_params(k, l, lam, mu)
    assert params.total == total
    assert params.sqrtD == 2 * q ** (m - 1)
    assert params.s == q ** (m - 1) and params.t == -q ** (m - 1)
    return params


def check_eq1(params, r, cd):
    """1 + d*r/k = (r+1)*c/l with cleared denominators."""
    if r not in (params.s, params.t):
        raise ValueError("r must be an eigenvalue of the Delta graph")
    return params.l * params.k + cd.d * r * params.l == (r + 1) * cd.c * params.k


def eq2_holds(m, xi, cd):
    """c - 2d = xi*3^m - 1."""
    return cd.c - 2 * cd.d == _xi_sign(xi) * 3 ** m - 1


def eq3_holds(m, xi, cd):
    """(xi*3^(m-1) + 1)(xi*3^m - 1 + c - 2d) = 2c."""
    e = _xi_sign(xi)
    return (e * 3 ** (m - 1) + 1) * (e * 3 ** m - 1 + cd.c - 2 * cd.d) == 2 * cd.c


def eq4_holds(m, cd):
    """Lower bound 1 + c + d >= (3^m + 1)/2."""
    return 2 * cd.size >= 3 ** m + 1


def check_specialized(m, xi, r_case, cd):
    """Equation (1) specialized at (xi, r): eq (2) on {(+,s),(-,t)},
    eq (3) on {(+,t),(-,s)}."""
    if r_case not in ("s", "t"):
        raise ValueError("r_case must be 's' or 't'")
    e = _xi_sign(xi)
    if (e, r_case) in ((1, "s"), (-1, "t")):
        return eq2_holds(m, xi, cd)
    return eq3_holds(m, xi, cd)


# ---------------------------------------------------------------------------
# strongly-regular-graph oracle

@dataclass
class SrgReport:
    size: int
    k: int
    l: int
    lam: int
    mu: int
    s: int
    t: int
    f_s: int
    f_t: int
    ok: bool
    failure: str | None = None


def srg_verify(space, xi):
    """Materialize E_xi, build the perpendicularity graph, verify the
    quadratic identity and recover integral multiplicities from traces."""
    import numpy as np
    from . import geometry

    pts = geometry.nonsingular_points(space, xi)
    N = len(pts)
    P = np.array(pts, dtype=np.int64)
    p = space.field.p
    M = (P @ space._gram_np @ P.T) % p
    A = (M == 0).astype(np.int64)
    np.fill_diagonal(A, 0)
    ks = A.sum(axis=1)
    if ks.min() != ks.max():
        return SrgReport(N, -1, -1, -1, -1, 0, 0, 0, 0, False, "not regular")
    k = int(ks[0])
    l = N - 1 - k
    A2 = A @ A
    lam = int(A2[A == 1][0]) if k else 0
    off = (1 - A).astype(bool)
    np.fill_diagonal(off, False)
    mu = int(A2[off][0])
    J = np.ones((N, N), dtype=np.int64)
    I = np.eye(N, dtype=np.int64)
    lhs = A2
    rhs = k * I + lam * A + mu * (J - I - A)
    if not np.array_equal(lhs, rhs):
        i, j = np.argwhere(lhs != rhs)[0]
        return SrgReport(N, k, l, lam, mu, 0, 0, 0, 0, False,
                         "A^2 identity fails at entry (%d,%d)" % (i, j))
    if not np.array_equal(A @ J, k * J):
        return SrgReport(N, k, l, lam, mu, 0, 0, 0, 0, False, "AJ != kJ")
    D = (lam - mu) ** 2 + 4 * (k - mu)
    sqrtD = math.isqrt(D)
    if sqrtD * sqrtD != D:
        return SrgReport(N, k, l, lam, mu, 0, 0, 0, 0, False, "D not square")
    s = (lam - mu + sqrtD) // 2
    t = (lam - mu - sqrtD) // 2
    # trace(A) = 0 = k + f_s*s + f_t*t together with f_s + f_t = N - 1
    num = -(k + t * (N - 1))
    if num % (s - t):
        return SrgReport(N, k, l, lam, mu, s, t, 0, 0, False, "f_s not integral")
    f_s = num // (s - t)
    f_t = N - 1 - f_s
    ok = f_s > 0 and f_t > 0
    return SrgReport(N, k, l, lam, mu, s, t, f_s, f_t, ok,
                     None if ok else "non-positive multiplicity")
