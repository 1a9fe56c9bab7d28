"""Minimal module-splitting engine over prime fields: permutation and
tensor module builders, randomized composition-factor splitting with an
irreducibility certificate (spin the kernel of a singular algebra
element, then the dual), module isomorphism via the standard-basis
method, and invariant bilinear forms.
"""

import random
from dataclasses import dataclass

from . import fields, geometry, linalg

GF3 = fields.GF3


class Undecided(RuntimeError):
    """The randomized search exhausted its iteration budget."""


@dataclass(frozen=True)
class GModule:
    field: object
    dim: int
    gens: tuple

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.dim or any(len(r) != self.dim for r in g):
                raise ValueError("generator has wrong shape")
            if linalg.mat_inv(self.field, g) is None:
                raise ValueError("generator is singular")


def permutation_module(n, perms, field=GF3):
    gens = []
    for perm in perms:
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation of 0..%d: %r" % (n - 1, perm))
        g = [[0] * n for _ in range(n)]
        for i, j in enumerate(perm):
            g[i][j] = 1
        gens.append(tuple(tuple(r) for r in g))
    return GModule(field, n, tuple(gens))


def tensor_module(m1, m2):
    if m1.field is not m2.field:
        raise ValueError("fields differ")
    if len(m1.gens) != len(m2.gens):
        raise ValueError("generator counts differ")
    gens = tuple(linalg.kron(m1.field, a, b)
                 for a, b in zip(m1.gens, m2.gens))
    return GModule(m1.field, m1.dim * m2.dim, gens)


# ---------------------------------------------------------------------------
# algebra elements and spinning

def _random_word(rng, k):
    """A recipe: list of (coefficient choice, generator index list)."""
    terms = []
    for _ in range(rng.randint(1, 3)):
        length = rng.randint(1, 4)
        terms.append((rng.randint(1, 2), [rng.randrange(k) for _ in range(length)]))
    return terms


def _eval_word(F, gens, recipe, dim):
    total = [[0] * dim for _ in range(dim)]
    for coeff, idxs in recipe:
        m = gens[idxs[0]]
        for i in idxs[1:]:
            m = linalg.mat_mul(F, m, gens[i])
        for r in range(dim):
            row = m[r]
            trow = total[r]
            for c in range(dim):
                trow[c] = F.add(trow[c], F.mul(coeff, row[c]))
    return tuple(tuple(r) for r in total)


def spin(F, gens, seeds):
    """Smallest subspace containing the seeds and closed under the
    right action of the generators; returned as reduced basis rows."""
    basis, _ = linalg.rref(F, [s for s in seeds if any(s)])
    frontier = list(basis)
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = linalg.vec_mat(F, v, g)
                cand, _ = linalg.rref(F, list(basis) + [w])
                if len(cand) > len(basis):
                    basis = cand
                    new.append(w)
        frontier = new
    return list(basis)


def _coords_in(F, basis, v):
    return linalg.solve_row(F, linalg.mat_from_rows(basis), v)


def submodule_action(M, basis):
    F = M.field
    gens = []
    for g in M.gens:
        rows = []
        for b in basis:
            c = _coords_in(F, basis, linalg.vec_mat(F, b, g))
            if c is None:
                raise ValueError("basis does not span a submodule")
            rows.append(c)
        gens.append(tuple(rows))
    return GModule(F, len(basis), tuple(gens))


def quotient_action(M, basis):
    F = M.field
    comp = []
    cur = list(basis)
    for i in range(M.dim):
        e = tuple(1 if j == i else 0 for j in range(M.dim))
        cand, _ = linalg.rref(F, list(cur) + [e])
        if len(cand) > len(cur):
            cur = cand
            comp.append(e)
    full = comp + list(basis)
    gens = []
    for g in M.gens:
        rows = []
        for b in comp:
            c = _coords_in(F, full, linalg.vec_mat(F, b, g))
            rows.append(c[:len(comp)])
        gens.append(tuple(rows))
    return GModule(F, len(comp), tuple(gens))


# ---------------------------------------------------------------------------
# splitting

def _kernel_lines(F, ker):
    """All projective representatives in the row span of ker."""
    span = groups_span = []
    k = len(ker)
    seen = set()
    import itertools
    for coeffs in itertools.product(range(F.q), repeat=k):
        if not any(coeffs):
            continue
        v = [0] * len(ker[0])
        for c, row in zip(coeffs, ker):
            if c:
                for j, x in enumerate(row):
                    v[j] = F.add(v[j], F.mul(c, x))
        pt = geometry.canonical_point(F, tuple(v))
        if pt not in seen:
            seen.add(pt)
            groups_span.append(pt)
    return groups_span


def find_submodule(M, rng, max_tries=200):
    """A proper non-zero submodule basis, or None with an irreducibility
    certificate: every kernel line of some singular element spins to the
    whole space and a dual kernel vector spins the dual."""
    F, dim = M.field, M.dim
    gens_t = [linalg.transpose(g) for g in M.gens]
    for _ in range(max_tries):
        theta = _eval_word(F, M.gens, _random_word(rng, len(M.gens)), dim)
        ker = linalg.nullspace_rows(F, theta)
        nullity = len(ker)
        if nullity == 0:
            continue
        vectors = ker if nullity > 3 else _kernel_lines(F, ker)
        certified = nullity <= 3
        found_full = False
        for v in vectors:
            w = spin(F, M.gens, [v])
            if len(w) < dim:
                return w
            found_full = True
        if not (certified and found_full):
            continue
        ker_t = linalg.nullspace_rows(F, linalg.transpose(theta))
        wt = spin(F, gens_t, [ker_t[0]])
        if len(wt) < dim:
            sub = linalg.nullspace_rows(F, linalg.transpose(
                linalg.mat_from_rows(wt)))
            assert 0 < len(sub) < dim
            return spin(F, M.gens, sub)
        return None
    raise Undecided("no singular algebra element found in %d tries" % max_tries)


def composition_factors(M, seed=0, max_tries=200):
    """[(irreducible factor, multiplicity)] in first-seen order."""
    rng = random.Random(seed)
    leaves = []

    def rec(mod):
        sub = find_submodule(mod, rng, max_tries)
        if sub is None:
            leaves.append(mod)
            return
        rec(submodule_action(mod, sub))
        rec(quotient_action(mod, sub))

    rec(M)
    out = []
    for leaf in leaves:
        for i, (rep, mult) in enumerate(out):
            if modules_isomorphic(rep, leaf):
                out[i] = (rep, mult + 1)
                break
        else:
            out.append((leaf, 1))
    return out


def modules_isomorphic(A, B, seed=0, max_tries=60):
    """Isomorphism test for irreducible modules (standard-basis method)."""
    if A.field is not B.field or A.dim != B.dim or len(A.gens) != len(B.gens):
        return False
    F, dim = A.field, A.dim
    if dim == 1:
        return A.gens == B.gens
    rng = random.Random(seed)
    for _ in range(max_tries):
        recipe = _random_word(rng, len(A.gens))
        ta = _eval_word(F, A.gens, recipe, dim)
        tb = _eval_word(F, B.gens, recipe, dim)
        ka = linalg.nullspace_rows(F, ta)
        kb = linalg.nullspace_rows(F, tb)
        if len(ka) != len(kb):
            return False
        if len(ka) != 1:
            continue
        # lockstep standard basis from the two kernel vectors
        basis_a, basis_b = [ka[0]], [kb[0]]
        i = 0
        ok = True
        while i < len(basis_a) and len(basis_a) < dim:
            for gi in range(len(A.gens)):
                wa = linalg.vec_mat(F, basis_a[i], A.gens[gi])
                wb = linalg.vec_mat(F, basis_b[i], B.gens[gi])
                inda = len(linalg.rref(F, basis_a + [wa])[0]) > len(basis_a)
                indb = len(linalg.rref(F, basis_b + [wb])[0]) > len(basis_b)
                if inda != indb:
                    ok = False
                    break
                if inda:
                    basis_a.append(wa)
                    basis_b.append(wb)
            if not ok:
                break
            i += 1
        if not ok:
            return False
        if len(basis_a) < dim:
            continue  # A was not irreducible over this vector; resample
        # candidate intertwiner: basis_a[i] -> basis_b[i]
        s = linalg.mat_mul(F, linalg.mat_inv(F, linalg.mat_from_rows(basis_a)),
                           linalg.mat_from_rows(basis_b))
        for ga, gb in zip(A.gens, B.gens):
            if linalg.mat_mul(F, ga, s) != linalg.mat_mul(F, s, gb):
                return False
        return True
    raise Undecided("no nullity-1 word found in %d tries" % max_tries)


# ---------------------------------------------------------------------------
# invariant bilinear forms

def invariant_bilinear_form(M):
    """(kind, B) with kind in {'symmetric', 'alternating', 'none'}.

    B solves g^t B g = B for all generators (equivalently invariance
    under the generated group); for an irreducible module the solution
    space has dimension at most 1, so the symmetric/alternating split
    is read straight off the solution.
    """
    F, d = M.field, M.dim
    ident = linalg.identity(d * d)
    cols = []
    for g in M.gens:
        gt = linalg.transpose(g)
        kg = linalg.kron(F, gt, gt)  # row convention: g B g^t = B
        block = tuple(tuple(F.sub(kg[i][j], ident[i][j]) for j in range(d * d))
                      for i in range(d * d))
        cols.append(block)
    stacked = tuple(tuple(x for block in cols for x in block[i])
                    for i in range(d * d))
    sols = linalg.nullspace_rows(F, stacked)
    if not sols:
        return ("none", None)
    if len(sols) > 4:
        raise ValueError("solution space too large; module not irreducible?")
    # search the (small) solution space for a symmetric member
    sym_constraints = []
    for i in range(d):
        for j in range(i + 1, d):
            sym_constraints.append(tuple(
                F.sub(1 if (a, b) == (i, j) else 0,
                      1 if (a, b) == (j, i) else 0)
                for a in range(d) for b in range(d)))
    import itertools
    best_alt = None
    for coeffs in itertools.product(range(F.q), repeat=len(sols)):
        if not any(coeffs):
            continue
        v = [0] * (d * d)
        for c, row in zip(coeffs, sols):
            if c:
                for k, x in enumerate(row):
                    v[k] = F.add(v[k], F.mul(c, x))
        B = tuple(tuple(v[a * d + b] for b in range(d)) for a in range(d))
        Bt = linalg.transpose(B)
        if B == Bt:
            return ("symmetric", B)
        if all(F.add(B[a][b], Bt[a][b]) == 0 for a in range(d)
               for b in range(d)) and all(B[a][a] == 0 for a in range(d)):
            best_alt = B
    if best_alt is not None:
        return ("alternating", best_alt)
    return ("none", None)


# ---------------------------------------------------------------------------
# the S_8 pipeline: permutation module, tensor square, dim-13 factor,
# invariant form, and the two 315-point orbits

def s8_pipeline(seed=0):
    from . import constructions, groups

    F = GF3
    n = 8
    perms = [(1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)]
    U = permutation_module(n, perms, F)
    T = tensor_module(U, U)
    factors = composition_factors(T, seed=seed)
    dim13 = next(mod for mod, _ in factors if mod.dim == 13)
    kind, B = invariant_bilinear_form(dim13)
    if kind != "symmetric":
        raise RuntimeError("dim-13 factor carries no symmetric form")
    space = geometry.QuadraticSpace(F, B)
    group = groups.MatrixGroup(F, 13, dim13.gens, label="s8-dim13", gram=B)
    dims = []
    for mod, mult in factors:
        dims.extend([mod.dim] * mult)
    result = {"factor_dims": sorted(dims), "orbits": {}}
    for xi in ("+", "-"):
        parts = constructions.orbit_partition(space, group, xi)
        small = [p for p in parts if p.size == 315]
        result["orbits"][xi] = [(p.size, p.c, p.d) for p in parts]
        result.setdefault("small", {})[xi] = [(p.c, p.d) for p in small]
    return result
