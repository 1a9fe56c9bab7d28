"""Small exact linear algebra over FiniteField values.

Vectors are tuples of encoded field values; matrices are tuples of row
tuples.  Everything here is pure Python and meant for small dimensions;
the hot GF(3) paths live in the numpy-based orbit/meataxe code.
"""


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_from_rows(rows):
    return tuple(tuple(r) for r in rows)


def transpose(A):
    return tuple(zip(*A))


def vec_add(F, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_sub(F, u, v):
    return tuple(F.sub(a, b) for a, b in zip(u, v))


def vec_scale(F, c, v):
    return tuple(F.mul(c, x) for x in v)


def vec_dot(F, u, v):
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


def vec_mat(F, v, A):
    """Row vector times matrix."""
    n = len(A[0])
    out = [0] * n
    for i, vi in enumerate(v):
        if vi:
            row = A[i]
            for j in range(n):
                if row[j]:
                    out[j] = F.add(out[j], F.mul(vi, row[j]))
    return tuple(out)


def mat_mul(F, A, B):
    return tuple(vec_mat(F, row, B) for row in A)


def mat_vec_col(F, A, v):
    """Matrix times column vector (returns tuple)."""
    return tuple(vec_dot(F, row, v) for row in A)


def scalar_mat(F, c, A):
    return tuple(tuple(F.mul(c, x) for x in row) for row in A)


def kron(F, A, B):
    m, n = len(A), len(A[0])
    p, q = len(B), len(B[0])
    out = []
    for i in range(m):
        for k in range(p):
            row = []
            for j in range(n):
                a = A[i][j]
                row.extend(F.mul(a, B[k][l]) for l in range(q))
            out.append(tuple(row))
    return tuple(out)


def rref(F, A):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in A]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for col in range(n):
        sel = None
        for i in range(r, m):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = F.inv(rows[r][col])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in rows[:r]), pivots


def rank(F, A):
    return len(rref(F, A)[0])


def det(F, A):
    rows = [list(r) for r in A]
    n = len(rows)
    d = 1
    for col in range(n):
        sel = None
        for i in range(col, n):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            return 0
        if sel != col:
            rows[col], rows[sel] = rows[sel], rows[col]
            d = F.neg(d)
        d = F.mul(d, rows[col][col])
        inv = F.inv(rows[col][col])
        for i in range(col + 1, n):
            if rows[i][col]:
                c = F.mul(inv, rows[i][col])
                rows[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(rows[i], rows[col])]
    return d


def mat_inv(F, A):
    n = len(A)
    aug = [list(A[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R[:n])


def nullspace_rows(F, A):
    """Basis of {v : v · A = 0} (left nullspace), as rows."""
    At = transpose(A)
    R, pivots = rref(F, At)
    m = len(A)  # number of unknowns
    free = [j for j in range(m) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * m
        v[f] = 1
        for rowi, pc in enumerate(pivots):
            v[pc] = F.neg(R[rowi][f])
        basis.append(tuple(v))
    return tuple(basis)


def solve_row(F, A, b):
    """One solution x of x · A = b, or None."""
    At = transpose(A)
    m = len(A)
    aug = [list(At[i]) + [b[i]] for i in range(len(At))]
    R, pivots = rref(F, aug)
    for row in R:
        if not any(row[:m]) and row[-1]:
            return None  # inconsistent system
    x = [0] * m
    for rowi, pc in enumerate(pivots):
        if pc < m:
            x[pc] = R[rowi][-1]
        elif R[rowi][-1]:
            return None
    return tuple(x)


def coords_in_basis(F, basis_rows, v):
    """Coordinates of v in the span of basis_rows, or None."""
    return solve_row(F, mat_from_rows(basis_rows), v)
