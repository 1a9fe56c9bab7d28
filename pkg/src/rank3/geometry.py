"""Quadratic spaces over odd-characteristic finite fields.

A space carries a symmetric invertible Gram matrix for the bilinear form f;
the quadratic form is Q(v) = 2^-1 * f(v,v).  Vector values are encoded field
integers; vectors are tuples.  Exhaustive counting has a chunked numpy fast
path for prime fields.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .fields import SQUARE, NONSQUARE

PLUS = "plus"
MINUS = "minus"
ZERO = "zero"

# exhaustive engines turn off above this many vectors
_EXHAUSTIVE_LIMIT = 3 ** 14


class QuadraticSpace:
    def __init__(self, field, gram):
        if field.p == 2:
            raise ValueError("odd characteristic required")
        gram = linalg.mat_from_rows(gram)
        n = len(gram)
        if any(len(r) != n for r in gram):
            raise ValueError("gram matrix not square")
        if gram != linalg.transpose(gram):
            raise ValueError("gram matrix not symmetric")
        self.field = field
        self.n = n
        self.gram = gram
        self._det = linalg.det(field, gram)
        if self._det == 0:
            raise ValueError("gram matrix is degenerate")
        self._half = field.inv(field.from_int(2))
        if field.a == 1:
            self._gram_np = np.array(gram, dtype=np.int64)
        else:
            self._gram_np = None
        self._qcounts = None

    def form(self, u, v):
        F = self.field
        gv = linalg.vec_mat(F, v, self.gram)
        return linalg.vec_dot(F, u, gv)

    def q_value(self, v):
        return self.field.mul(self._half, self.form(v, v))

    def disc_class(self):
        return self.field.square_class(self._det)

    def perp_basis(self, vectors):
        """Basis (rows) of the common perp of the given vectors."""
        F = self.field
        cols = linalg.transpose(tuple(linalg.vec_mat(F, v, self.gram) for v in vectors))
        return linalg.nullspace_rows(F, cols)

    def restrict(self, basis_rows):
        """Gram matrix of the form restricted to the span of basis_rows."""
        F = self.field
        B = linalg.mat_from_rows(basis_rows)
        G = linalg.mat_mul(F, B, linalg.mat_mul(F, self.gram, linalg.transpose(B)))
        return G

    def subspace(self, basis_rows):
        return QuadraticSpace(self.field, self.restrict(basis_rows))

    def __repr__(self):
        return "QuadraticSpace(%r, dim=%d)" % (self.field, self.n)


def standard_space(n, field, disc=SQUARE):
    """Diagonal space with prescribed discriminant square class."""
    diag = [1] * n
    if disc == NONSQUARE:
        nu = next(x for x in field.nonzero() if field.square_class(x) == NONSQUARE)
        if n % 2 == 1:
            diag = [nu] * n  # det = nu^n ~ nu
        else:
            diag[-1] = nu
    gram = tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n))
    space = QuadraticSpace(field, gram)
    assert space.disc_class() == disc
    return space


def canonical_point(field, v):
    """Scale so the first nonzero coordinate is 1."""
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            c = field.inv(x)
            return tuple(field.mul(c, y) for y in v)
    raise ValueError("zero vector has no projective point")


# ---------------------------------------------------------------------------
# signs and types

def _sign_by_disc(space):
    """+ iff disc ~ (-1)^k for dim = 2k (valid for every odd q)."""
    F = space.field
    k = space.n // 2
    target = F.square_class(F.pow(F.neg(1), k))
    return "+" if space.disc_class() == target else "-"


def q_value_counts(space):
    """dict gamma -> #{v : Q(v) = gamma} over all q^n vectors (cached)."""
    if space._qcounts is not None:
        return space._qcounts
    F = space.field
    total = F.q ** space.n
    if total > _EXHAUSTIVE_LIMIT:
        raise ValueError("space too large for exhaustive counting")
    counts = {}
    if F.a == 1:
        p, n = F.p, space.n
        G = space._gram_np
        half = space._half
        chunk = 1 << 19
        acc = np.zeros(p, dtype=np.int64)
        powers = p ** np.arange(n, dtype=np.int64)
        for lo in range(0, total, chunk):
            idx = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
            V = (idx[:, None] // powers[None, :]) % p
            qv = (((V @ G) * V).sum(axis=1) * half) % p
            acc += np.bincount(qv, minlength=p)
        counts = {g: int(acc[g]) for g in range(p)}
    else:
        for v in itertools.product(F.elements(), repeat=space.n):
            g = space.q_value(v)
            counts[g] = counts.get(g, 0) + 1
        for g in F.elements():
            counts.setdefault(g, 0)
    space._qcounts = counts
    return counts


def sign_of_space(space):
    """Sign of an even-dimensional space, with exhaustive cross-check."""
    if space.n % 2 != 0:
        raise ValueError("sign is defined for even dimensions")
    sign = _sign_by_disc(space)
    q, k = space.field.q, space.n // 2
    if q ** space.n <= _EXHAUSTIVE_LIMIT:
        singular = q_value_counts(space)[0]  # includes the zero vector
        eps = 1 if sign == "+" else -1
        expected = q ** (2 * k - 1) + eps * (q ** k - q ** (k - 1))
        if singular != expected:
            raise AssertionError(
                "sign mismatch: disc rule %s but singular count %d" % (sign, singular))
    return sign


def point_type(space, v):
    """rho: ZERO if singular; else the sign of v-perp (odd dim) or Q (even)."""
    if not any(v):
        raise ValueError("type of the zero vector is undefined")
    gamma = space.q_value(v)
    if gamma == 0:
        return ZERO
    if space.n % 2 == 0:
        return gamma
    # sign of the even-dimensional perp via discriminants:
    # disc(V) = class(2*gamma) * disc(v-perp)
    F = space.field
    k = (space.n - 1) // 2
    disc_perp_sq = (space.disc_class() == F.square_class(F.mul(F.from_int(2), gamma)))
    target_sq = (F.square_class(F.pow(F.neg(1), k)) == SQUARE)
    return PLUS if disc_perp_sq == target_sq else MINUS


def type_of_qvalue(space, gamma):
    """Type of any nonsingular vector with Q = gamma (odd dim)."""
    if gamma == 0:
        return ZERO
    F = space.field
    k = (space.n - 1) // 2
    disc_perp_sq = (space.disc_class() == F.square_class(F.mul(F.from_int(2), gamma)))
    target_sq = (F.square_class(F.pow(F.neg(1), k)) == SQUARE)
    return PLUS if disc_perp_sq == target_sq else MINUS


# ---------------------------------------------------------------------------
# counting

@dataclass
class CountResult:
    closed_form: int
    exhaustive: int | None
    mode: str  # "both" or "closed-form-only"

    def __post_init__(self):
        if self.exhaustive is not None and self.exhaustive != self.closed_form:
            raise AssertionError(
                "count mismatch: closed form %d, exhaustive %d"
                % (self.closed_form, self.exhaustive))


def _closed_count(space, gamma, include_zero):
    q = space.field.q
    n = space.n
    if n % 2 == 0:
        k = n // 2
        eps = 1 if sign_of_space(space) == "+" else -1
        if gamma == 0:
            c = q ** (2 * k - 1) + eps * (q ** k - q ** (k - 1))
            return c if include_zero else c - 1
        return q ** (2 * k - 1) - eps * q ** (k - 1)
    k = (n - 1) // 2
    if gamma != 0:
        rho = 1 if type_of_qvalue(space, gamma) == PLUS else -1
        return q ** (2 * k) + rho * q ** k
    total = q ** n
    for g in space.field.nonzero():
        total -= _closed_count(space, g, True)
    return total if include_zero else total - 1


def count_norm_vectors(space, gamma, include_zero=True):
    """#{v : Q(v) = gamma}; closed form plus exhaustive oracle when feasible.

    For gamma = 0 the closed-form convention includes the zero vector;
    pass include_zero=False to count singular *nonzero* vectors.
    """
    closed = _closed_count(space, gamma, include_zero)
    q = space.field.q
    if q ** space.n <= _EXHAUSTIVE_LIMIT:
        ex = q_value_counts(space)[gamma]
        if gamma == 0 and not include_zero:
            ex -= 1
        return CountResult(closed, ex, "both")
    return CountResult(closed, None, "closed-form-only")


# ---------------------------------------------------------------------------
# point sets

def nonsingular_points(space, xi):
    """All non-singular projective points of type xi (odd dim)."""
    if space.n % 2 == 0:
        raise ValueError("point types need odd dimension")
    F = space.field
    if F.q ** space.n > _EXHAUSTIVE_LIMIT:
        raise ValueError("space too large to materialize")
    want = PLUS if xi in ("+", PLUS, 1) else MINUS
    gammas = [g for g in F.nonzero() if type_of_qvalue(space, g) == want]
    pts = []
    if F.a == 1:
        p, n = F.p, space.n
        G = space._gram_np
        half = space._half
        powers = p ** np.arange(n, dtype=np.int64)
        gset = np.array(gammas)
        # canonical reps: first nonzero coordinate is 1, generated per position
        for lead in range(n):
            tail = n - lead - 1
            count = p ** tail
            idx = np.arange(count, dtype=np.int64)
            V = np.zeros((count, n), dtype=np.int64)
            V[:, lead] = 1
            if tail:
                V[:, lead + 1:] = (idx[:, None] // powers[None, :tail]) % p
            qv = (((V @ G) * V).sum(axis=1) * half) % p
            keep = np.isin(qv, gset)
            pts.extend(tuple(int(x) for x in row) for row in V[keep])
    else:
        for lead in range(space.n):
            for tail in itertools.product(F.elements(), repeat=space.n - lead - 1):
                v = (0,) * lead + (1,) + tail
                if space.q_value(v) in gammas:
                    pts.append(v)
    m = (space.n - 1) // 2
    q = F.q
    sgn = 1 if want == PLUS else -1
    expected = (q ** m * (q ** m + sgn)) // 2
    assert len(pts) == expected, (len(pts), expected)
    return pts


def measured_rank3_parameters(space, xi):
    """(|E|, k, l, lambda, mu) measured on the explicit point set."""
    pts = nonsingular_points(space, xi)
    N = len(pts)
    P = np.array(pts, dtype=np.int64)
    G = space._gram_np
    if G is None:
        raise ValueError("measurement implemented for prime fields only")
    p = space.field.p
    M = (P @ G @ P.T) % p
    A = (M == 0).astype(np.int64)
    np.fill_diagonal(A, 0)
    ks = A.sum(axis=1)
    if ks.min() != ks.max():
        raise AssertionError("Delta-graph is not regular")
    k = int(ks[0])
    l = N - 1 - k
    A2 = A @ A
    lam_vals = set(A2[A == 1].tolist())
    off = (1 - A).astype(bool)
    np.fill_diagonal(off, False)
    mu_vals = set(A2[off].tolist())
    if len(lam_vals) != 1 or len(mu_vals) != 1:
        raise AssertionError("intersection numbers are not constant")
    return N, k, l, lam_vals.pop(), mu_vals.pop()
