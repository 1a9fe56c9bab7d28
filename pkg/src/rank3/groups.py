"""Matrix groups over finite fields: reflections, Eichler transformations,
spinor norm, verified Omega generator sets, and the orbit engine.

Matrices act on row vectors on the right (v -> v @ g).  The orbit engine has
a packed numpy fast path for GF(3) and a generic pure-Python path for
extension fields (only ever needed at tiny sizes).
"""

import itertools
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import geometry, higman, linalg
from .fields import SQUARE, NONSQUARE
from .geometry import PLUS, MINUS, ZERO

ORBIT_CAP = 30_000_000


class OrbitCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MatrixGroup:
    field: object
    dim: int
    gens: tuple
    label: str = ""
    gram: tuple | None = None  # set when tagged form-preserving

    def __post_init__(self):
        for g in self.gens:
            if linalg.det(self.field, g) == 0:
                raise ValueError("generator is singular")
        if self.gram is not None:
            for g in self.gens:
                if not preserves_form(self.field, g, self.gram):
                    raise ValueError("generator does not preserve the form")

    def __len__(self):
        return len(self.gens)


def preserves_form(F, g, gram):
    lhs = linalg.mat_mul(F, g, linalg.mat_mul(F, gram, linalg.transpose(g)))
    return lhs == linalg.mat_from_rows(gram)


# ---------------------------------------------------------------------------
# reflections and Eichler transformations

def reflection(space, u):
    """v -> v - (f(v,u)/Q(u)) u."""
    F = space.field
    qu = space.q_value(u)
    if qu == 0:
        raise ValueError("reflection needs a non-singular vector")
    qinv = F.inv(qu)
    rows = []
    for i in range(space.n):
        e = tuple(1 if j == i else 0 for j in range(space.n))
        c = F.mul(space.form(e, u), qinv)
        rows.append(linalg.vec_sub(F, e, linalg.vec_scale(F, c, u)))
    return linalg.mat_from_rows(rows)


def eichler(space, u, v):
    """x -> x + f(x,v)u - f(x,u)v - Q(v)f(x,u)u  (u singular, f(u,v)=0)."""
    F = space.field
    if space.q_value(u) != 0 or not any(u):
        raise ValueError("u must be singular and nonzero")
    if space.form(u, v) != 0:
        raise ValueError("u and v must be perpendicular")
    if linalg.coords_in_basis(F, (u,), v) is not None:
        raise ValueError("v must not be a multiple of u")
    qv = space.q_value(v)
    rows = []
    for i in range(space.n):
        e = tuple(1 if j == i else 0 for j in range(space.n))
        fxv = space.form(e, v)
        fxu = space.form(e, u)
        x = linalg.vec_add(F, e, linalg.vec_scale(F, fxv, u))
        x = linalg.vec_sub(F, x, linalg.vec_scale(F, fxu, v))
        x = linalg.vec_sub(F, x, linalg.vec_scale(F, F.mul(qv, fxu), u))
        rows.append(x)
    return linalg.mat_from_rows(rows)


# ---------------------------------------------------------------------------
# spinor norm via greedy reflection decomposition

def _span_candidates(F, rows):
    """Vectors in the span of rows, small support first."""
    k = len(rows)
    for r in rows:
        yield r
    units = list(F.nonzero())
    for i, j in itertools.combinations(range(k), 2):
        for c in units:
            yield linalg.vec_add(F, rows[i], linalg.vec_scale(F, c, rows[j]))
    if F.q ** k <= 200_000:
        for coeffs in itertools.product(F.elements(), repeat=k):
            if not any(coeffs):
                continue
            v = [0] * len(rows[0])
            for c, r in zip(coeffs, rows):
                if c:
                    v = linalg.vec_add(F, tuple(v), linalg.vec_scale(F, c, r))
            yield tuple(v)


def reflection_decompose(space, g):
    """Vectors u_1..u_k with g equal to the product of the r_{u_i}."""
    F = space.field
    n = space.n
    if not preserves_form(F, g, space.gram):
        raise ValueError("not an isometry")
    ident = linalg.identity(n)
    h = linalg.mat_from_rows(g)
    pinned = []
    us = []
    while h != ident:
        perp = space.perp_basis(pinned) if pinned else ident
        x = None
        for cand in _span_candidates(F, perp):
            if space.q_value(cand) != 0 and linalg.vec_mat(F, cand, h) != cand:
                x = cand
                break
        if x is None:
            raise AssertionError("no moved non-singular vector found")
        y = linalg.vec_mat(F, x, h)
        u = linalg.vec_sub(F, y, x)
        if space.q_value(u) != 0:
            h = linalg.mat_mul(F, h, reflection(space, u))
            us.append(u)
        else:
            w = linalg.vec_add(F, y, x)  # Q(w) = 4Q(x) != 0
            h = linalg.mat_mul(F, h, reflection(space, w))
            h = linalg.mat_mul(F, h, reflection(space, x))
            us.extend([w, x])
        assert linalg.vec_mat(F, x, h) == x
        pinned.append(x)
    return us


def spinor_norm(space, g):
    """Square class of the product of Q(u_i) over a reflection decomposition.
    Omega is exactly the kernel (SQUARE) inside SO."""
    F = space.field
    if linalg.det(F, g) != 1:
        raise ValueError("spinor norm defined here for det-1 isometries")
    prod = 1
    for u in reflection_decompose(space, g):
        prod = F.mul(prod, space.q_value(u))
    return F.square_class(prod) if prod else SQUARE


# ---------------------------------------------------------------------------
# Omega generator sets

def _small_support_vectors(F, n):
    units = list(F.nonzero())
    for i in range(n):
        for a in units:
            v = [0] * n
            v[i] = a
            yield tuple(v)
    for i, j in itertools.combinations(range(n), 2):
        for a in units:
            for b in units:
                v = [0] * n
                v[i], v[j] = a, b
                yield tuple(v)
    for i, j, k in itertools.combinations(range(n), 3):
        for a in units:
            for b in units:
                for c in units:
                    v = [0] * n
                    v[i], v[j], v[k] = a, b, c
                    yield tuple(v)


def find_vector_with_q(space, gamma):
    """Deterministic search for v with Q(v) = gamma."""
    F = space.field
    for v in _small_support_vectors(F, space.n):
        if space.q_value(v) == gamma:
            return v
    if F.q ** space.n <= 3 ** 12:
        for v in itertools.product(F.elements(), repeat=space.n):
            if any(v) and space.q_value(v) == gamma:
                return tuple(v)
    raise ValueError("no vector with Q = %r found" % (gamma,))


def hyperbolic_pair(space):
    """(e, f) with Q(e) = Q(f) = 0 and f(e,f) = 1."""
    F = space.field
    e = find_vector_with_q(space, 0)
    w = None
    for i in range(space.n):
        b = tuple(1 if j == i else 0 for j in range(space.n))
        if space.form(e, b) != 0:
            w = b
            break
    assert w is not None, "degenerate form"
    w = linalg.vec_scale(F, F.inv(space.form(e, w)), w)
    f = linalg.vec_sub(F, w, linalg.vec_scale(F, space.q_value(w), e))
    assert space.q_value(f) == 0 and space.form(e, f) == 1
    return e, f


def group_closure(F, gens, cap=200_000):
    """Full enumeration of the generated matrix group (small groups only)."""
    n = len(gens[0])
    ident = linalg.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                m = linalg.mat_mul(F, h, g)
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
                    if len(seen) > cap:
                        raise RuntimeError("group closure cap exceeded")
        frontier = nxt
    return seen


def omega_order(n, q):
    """|Omega_n(q)|, n odd (and the dim-3 special case q(q^2-1)/2)."""
    if n % 2 == 0:
        raise ValueError("odd dimension only")
    m = (n - 1) // 2
    if m == 0:
        return 1
    order = q ** (m * m)
    for i in range(1, m + 1):
        order *= q ** (2 * i) - 1
    return order // 2


_OMEGA_CACHE = {}


def omega_generators(space):
    """Verified generator set for Omega(V).

    dim 3: products of two reflections with square spinor norm, full
    enumeration against |Omega_3(q)|.  dim >= 4: Eichler transformations over
    a hyperbolic-pair seed; self-check by orbit sizes (q=3, odd dim) plus
    det/spinor/form checks on every generator.
    """
    key = (space.field, space.gram)
    if key in _OMEGA_CACHE:
        return _OMEGA_CACHE[key]
    F = space.field
    n = space.n
    if n < 3:
        raise ValueError("dim >= 3 required")
    if n == 3:
        group = _omega3(space)
    else:
        e, f = hyperbolic_pair(space)
        perp = space.perp_basis([e, f])
        scalars = [1] if F.q == 3 else [1, F.primitive]
        gens = []
        for v in perp:
            for c in scalars:
                cv = linalg.vec_scale(F, c, v)
                gens.append(eichler(space, e, cv))
                gens.append(eichler(space, f, cv))
        for g in gens:
            assert preserves_form(F, g, space.gram)
            assert linalg.det(F, g) == 1
            if n <= 9:
                assert spinor_norm(space, g) == SQUARE
        group = MatrixGroup(F, n, tuple(gens), label="Omega_%d(%d)" % (n, F.q),
                            gram=space.gram)
        if F.q == 3 and n % 2 == 1:
            m = (n - 1) // 2
            if m >= 2:
                for xi, sgn in (("+", 1), ("-", -1)):
                    gam = next(g for g in F.nonzero()
                               if geometry.type_of_qvalue(space, g) ==
                               (PLUS if xi == "+" else MINUS))
                    x = find_vector_with_q(space, gam)
                    size = orbit_report(space, group, x).size
                    expected = 3 ** m * (3 ** m + sgn) // 2
                    if size != expected:
                        raise RuntimeError(
                            "Omega self-check failed: orbit %d, expected %d"
                            % (size, expected))
    _OMEGA_CACHE[key] = group
    return group


def _omega3(space):
    F = space.field
    target = omega_order(3, F.q)
    nonsing = []
    seen_dirs = set()
    for v in _small_support_vectors(F, 3):
        if space.q_value(v) == 0:
            continue
        d = geometry.canonical_point(F, v)
        if d in seen_dirs:
            continue
        seen_dirs.add(d)
        nonsing.append(v)
        if len(nonsing) >= 40:
            break
    gens = []
    ident = linalg.identity(3)
    elems = set()
    for u, v in itertools.combinations(nonsing, 2):
        if F.square_class(space.q_value(u)) != F.square_class(space.q_value(v)):
            continue
        g = linalg.mat_mul(F, reflection(space, u), reflection(space, v))
        if g == ident or g in gens:
            continue
        gens.append(g)
        if len(gens) % 4 == 0 or len(gens) >= 12:
            elems = group_closure(F, gens)
            if len(elems) == target:
                break
    else:
        elems = group_closure(F, gens)
    if len(elems) != target:
        raise RuntimeError("Omega_3 enumeration: got %d, want %d"
                           % (len(elems), target))
    for g in gens:
        assert linalg.det(F, g) == 1
        assert spinor_norm(space, g) == SQUARE
    return MatrixGroup(F, 3, tuple(gens), label="Omega_3(%d)" % F.q,
                       gram=space.gram)


# ---------------------------------------------------------------------------
# orbit engine

@dataclass
class OrbitReport:
    base_point: tuple
    xi: str
    size: int
    c: int
    d: int
    eq1: dict = dc_field(default_factory=dict)
    eq2: bool | None = None
    eq3: bool | None = None
    eq4: bool | None = None
    m: int | None = None
    seconds: float = 0.0
    visited: int = 0

    def to_json(self):
        return {
            "base_point": list(self.base_point), "xi": self.xi,
            "size": self.size, "c": self.c, "d": self.d,
            "eq1": self.eq1, "eq2": self.eq2, "eq3": self.eq3,
            "eq4": self.eq4, "m": self.m, "seconds": round(self.seconds, 3),
            "visited": self.visited,
        }


def _in_sorted(sorted_arr, values):
    if len(sorted_arr) == 0:
        return np.zeros(len(values), dtype=bool)
    pos = np.searchsorted(sorted_arr, values)
    out = np.zeros(len(values), dtype=bool)
    valid = pos < len(sorted_arr)
    out[valid] = sorted_arr[pos[valid]] == values[valid]
    return out


def _canon3(V, powers):
    """Min-code representative among {v, -v}; returns (vecs, codes)."""
    codes = V.astype(np.int64) @ powers
    negV = (3 - V) % 3
    neg_codes = negV.astype(np.int64) @ powers
    mask = neg_codes < codes
    V = V.copy()
    V[mask] = negV[mask]
    return V, np.minimum(codes, neg_codes)


def _orbit_gf3(gens, start, gram, cap, want_codes):
    """BFS orbit of a projective point over GF(3); returns (size, d, codes)."""
    n = len(start)
    powers = (3 ** np.arange(n - 1, -1, -1)).astype(np.int64)
    gens_f = [np.array(g, dtype=np.float32) for g in gens]
    V0 = np.array([start], dtype=np.int8) % 3
    V0, codes0 = _canon3(V0, powers)
    gx = (np.array(gram, dtype=np.int64) @ (np.array(start, dtype=np.int64) % 3)) % 3
    seen = codes0.copy()
    frontier = V0
    d = 0
    chunk = 1 << 20
    while len(frontier):
        level_codes = np.empty(0, dtype=np.int64)
        level_vecs = []
        for gf in gens_f:
            parts_v, parts_c = [], []
            for lo in range(0, len(frontier), chunk):
                img = frontier[lo:lo + chunk].astype(np.float32) @ gf
                img %= 3
                V, codes = _canon3(img.astype(np.int8), powers)
                parts_v.append(V)
                parts_c.append(codes)
            codes = np.concatenate(parts_c)
            V = np.concatenate(parts_v)
            ucodes, uidx = np.unique(codes, return_index=True)
            keep = ~_in_sorted(seen, ucodes)
            if len(level_codes):
                keep &= ~_in_sorted(level_codes, ucodes)
            if not keep.any():
                continue
            new_codes = ucodes[keep]
            new_vecs = V[uidx[keep]]
            level_codes = np.union1d(level_codes, new_codes) if len(level_codes) else new_codes
            level_vecs.append(new_vecs)
        if not len(level_codes):
            break
        new_all = np.concatenate(level_vecs)
        d += int(((new_all.astype(np.int64) @ gx) % 3 == 0).sum())
        seen = np.union1d(seen, level_codes)
        if len(seen) > cap:
            raise OrbitCapExceeded("orbit exceeds the cap of %d points" % cap)
        frontier = new_all  # already unique within and across generators
    return len(seen), d, (seen if want_codes else None)


def _orbit_generic(space, gens, start, cap):
    F = space.field
    start = geometry.canonical_point(F, start)
    gxcol = linalg.vec_mat(F, start, space.gram)
    seen = {start}
    frontier = [start]
    d = 0
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = geometry.canonical_point(F, linalg.vec_mat(F, v, g))
                if w not in seen:
                    seen.add(w)
                    if len(seen) > cap:
                        raise OrbitCapExceeded(
                            "orbit exceeds the cap of %d points" % cap)
                    if linalg.vec_dot(F, w, gxcol) == 0:
                        d += 1
                    nxt.append(w)
        frontier = nxt
    return seen, d


def decode_codes(codes, n):
    powers = (3 ** np.arange(n - 1, -1, -1)).astype(np.int64)
    V = (codes[:, None] // powers[None, :]) % 3
    return V


def orbit(group, start, cap=ORBIT_CAP, space=None):
    """The orbit of a projective point, as a sorted list of canonical tuples."""
    F = group.field
    gram = group.gram if group.gram is not None else (space.gram if space else None)
    if gram is None:
        gram = linalg.identity(group.dim)  # d-count unused here
    if F.p == 3 and F.a == 1:
        size, _d, codes = _orbit_gf3(group.gens, start, gram, cap, True)
        if size > 2_000_000:
            raise OrbitCapExceeded("orbit too large to materialize as tuples")
        return [tuple(int(x) for x in row) for row in decode_codes(codes, group.dim)]
    sp = space or geometry.QuadraticSpace(F, gram)
    seen, _d = _orbit_generic(sp, group.gens, start, cap)
    return sorted(seen)


def _xi_token(t):
    return {"plus": "+", "minus": "-"}.get(t, t)


def cd_parameters(space, group, start, cap=ORBIT_CAP):
    """OrbitReport with (c, d) and the equation verdicts."""
    F = space.field
    if space.q_value(start) == 0:
        raise ValueError("base point must be non-singular")
    if group.gram is None:
        for g in group.gens:
            if not preserves_form(F, g, space.gram):
                raise ValueError("group does not preserve the form")
    t0 = time.time()
    if F.p == 3 and F.a == 1:
        size, d, _ = _orbit_gf3(group.gens, start, space.gram, cap, False)
    else:
        seen, d = _orbit_generic(space, group.gens, start, cap)
        size = len(seen)
    c = size - 1 - d
    ptype = geometry.point_type(space, start)
    rep = OrbitReport(tuple(start), ptype, size, c, d,
                      seconds=time.time() - t0, visited=size)
    if space.n % 2 == 1:
        m = (space.n - 1) // 2
        rep.m = m
        if m >= 2 and ptype in (PLUS, MINUS):
            xi = "+" if ptype == PLUS else "-"
            params = higman.odd_orthogonal_params(m, xi)
            cd = higman.CdPair(c, d, xi)
            rep.eq1 = {"s": higman.check_eq1(params, params.s, cd),
                       "t": higman.check_eq1(params, params.t, cd)}
            rep.eq2 = higman.eq2_holds(m, xi, cd)
            rep.eq3 = higman.eq3_holds(m, xi, cd)
            rep.eq4 = higman.eq4_holds(m, cd)
    return rep


def orbit_report(space, group, start, cap=ORBIT_CAP):
    return cd_parameters(space, group, start, cap)


def orbit_codes(space, group, start, cap=ORBIT_CAP):
    """(size, d, sorted packed codes) for GF(3) spaces."""
    return _orbit_gf3(group.gens, start, space.gram, cap, True)


# ---------------------------------------------------------------------------
# toy permutation groups (double-coset oracle)

def perm_compose(p, q):
    """Apply p, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def perm_closure(gens, cap=20_000):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                m = perm_compose(h, g)
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
                    if len(seen) > cap:
                        raise RuntimeError("permutation closure cap exceeded")
        frontier = nxt
    return seen


def toy_double_coset_check(g_gens, p_gens, m_gens, cap=10_000):
    """(|M\\G/P|, number of M-orbits on G/P) — Burnside-free, both by BFS."""
    G = perm_closure(g_gens, cap)
    P = perm_closure(p_gens, cap) if p_gens else {tuple(range(len(next(iter(G)))))}
    M = perm_closure(m_gens, cap) if m_gens else {tuple(range(len(next(iter(G)))))}
    # double cosets MgP
    unassigned = set(G)
    n_dc = 0
    while unassigned:
        g = next(iter(unassigned))
        dc = {perm_compose(perm_compose(mm, g), pp) for mm in M for pp in P}
        unassigned -= dc
        n_dc += 1
    # M-orbits on left cosets gP
    def coset_key(g):
        return min(perm_compose(g, pp) for pp in P)
    cosets = {coset_key(g) for g in G}
    unvisited = set(cosets)
    n_orb = 0
    while unvisited:
        rep = next(iter(unvisited))
        stack = [rep]
        unvisited.discard(rep)
        while stack:
            cur = stack.pop()
            for mm in M:
                nk = coset_key(perm_compose(mm, cur))
                if nk in unvisited:
                    unvisited.discard(nk)
                    stack.append(nk)
        n_orb += 1
    return n_dc, n_orb
