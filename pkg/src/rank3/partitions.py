"""Partition combinatorics for the p-rim symbol machinery (default p = 3):
p-regularity, rim-strip symbols, the induced involution on p-regular
partitions, modular Frobenius symbols, fixed-point and JS predicates.
"""


def check_partition(lam):
    lam = tuple(int(x) for x in lam)
    if not lam:
        raise ValueError("partition must be non-empty")
    if any(x <= 0 for x in lam):
        raise ValueError("parts must be positive")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("parts must be weakly decreasing")
    return lam


def is_p_regular(lam, p=3):
    """No part repeated p or more times."""
    lam = check_partition(lam)
    return all(lam.count(x) < p for x in set(lam))


def partitions_of(n):
    """All partitions of n, lexicographically descending."""
    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return list(gen(n, n))


def p_regular_partitions(n, p=3):
    return [lam for lam in partitions_of(n) if is_p_regular(lam, p)]


# ---------------------------------------------------------------------------
# p-rim stripping

def _strip(lam, p):
    """Remove one p-rim: walk the rim from top right to bottom left,
    taking p consecutive cells, then skipping the rest of that row;
    the last segment may be short.

    Returns (remaining partition, cells removed, per-row removal counts).
    """
    k = len(lam)
    removed = [0] * k
    cnt = 0
    for i in range(k):
        lo = max(lam[i + 1] if i + 1 < k else 0, 1)
        ncells = lam[i] - lo + 1  # rim cells in row i
        take = min(ncells, p - cnt)
        removed[i] = take
        cnt += take
        if cnt == p:
            cnt = 0  # group complete: remaining rim cells of the row are skipped
    new = tuple(lam[i] - removed[i] for i in range(k))
    new = tuple(x for x in new if x > 0)
    if new and any(new[i] < new[i + 1] for i in range(len(new) - 1)):
        raise AssertionError("rim strip left a non-partition: %r" % (new,))
    return new, sum(removed), removed


def mullineux_symbol(lam, p=3):
    """Iterated p-rim stripping: column i records (cells removed, rows
    present) at step i.  Returned as [top row, bottom row]."""
    lam = check_partition(lam)
    if not is_p_regular(lam, p):
        raise ValueError("partition is not %d-regular" % p)
    hs, rs = [], []
    while lam:
        h_before_rows = len(lam)
        lam, h, _ = _strip(lam, p)
        hs.append(h)
        rs.append(h_before_rows)
    return [hs, rs]


def _unstrip(mu, h, r, p):
    """The unique lam with exactly r positive parts whose p-rim strip
    removes h cells and leaves mu."""
    if len(mu) > r:
        raise ValueError("symbol column has fewer rows than the remainder")
    pad = list(mu) + [0] * (r - len(mu))
    found = []

    def dfs(i, remaining, below, acc):
        if i < 0:
            if remaining == 0:
                found.append(tuple(acc))
            return
        lo = max(1, remaining - p * i)
        hi = min(p, remaining - i)
        for s in range(lo, hi + 1):
            part = pad[i] + s
            if part < below or part < 1:
                continue
            dfs(i - 1, remaining - s, part, [part] + acc)

    dfs(r - 1, h, 1, [])
    good = []
    for lam in found:
        rest, got, _ = _strip(lam, p)
        if got == h and rest == tuple(mu):
            good.append(lam)
    if len(good) != 1:
        raise ValueError("symbol column (%d, %d) has %d preimages over %r"
                         % (h, r, len(good), tuple(mu)))
    return good[0]


def partition_from_symbol(symbol, p=3):
    """Inverse of mullineux_symbol, rebuilt from the last column inward."""
    hs, rs = symbol
    if len(hs) != len(rs) or not hs:
        raise ValueError("symbol rows must be non-empty and equal length")
    lam = ()
    for h, r in zip(reversed(hs), reversed(rs)):
        lam = _unstrip(lam, h, r, p)
    if mullineux_symbol(lam, p) != [list(hs), list(rs)]:
        raise AssertionError("symbol reconstruction failed to round-trip")
    return lam


def mullineux_map(lam, p=3):
    """The rim-symbol involution: keep the top row, replace each bottom
    entry r_i by h_i - r_i + eps_i with eps_i = 0 iff p divides h_i."""
    hs, rs = mullineux_symbol(lam, p)
    ss = [h - r + (0 if h % p == 0 else 1) for h, r in zip(hs, rs)]
    if any(s <= 0 for s in ss):
        raise AssertionError("invalid image symbol for %r" % (lam,))
    return partition_from_symbol([hs, ss], p)


# ---------------------------------------------------------------------------
# modular Frobenius symbols

def frobenius_symbol(lam, p=3):
    """Rows (a, b, eps) with a_i = h_i - r_i, b_i = r_i - eps_i."""
    hs, rs = mullineux_symbol(lam, p)
    eps = [0 if h % p == 0 else 1 for h in hs]
    a = [h - r for h, r in zip(hs, rs)]
    b = [r - e for r, e in zip(rs, eps)]
    return [a, b, eps]


def mullineux_map_frobenius(lam, p=3):
    """Same involution via interchanging the first two Frobenius rows."""
    a, b, eps = frobenius_symbol(lam, p)
    hs = [x + y + e for x, y, e in zip(a, b, eps)]
    rs = [x + e for x, e in zip(a, eps)]  # swapped: new b-row is the old a-row
    return partition_from_symbol([hs, rs], p)


def is_mullineux_fixed(lam, p=3):
    a, b, _eps = frobenius_symbol(lam, p)
    return a == b


def is_js_partition(lam, p=3):
    """Consecutive distinct-part blocks (lam_i^{a_i}) must satisfy
    lam_i - lam_{i+1} + a_i + a_{i+1} = 0 mod p."""
    lam = check_partition(lam)
    if not is_p_regular(lam, p):
        raise ValueError("partition is not %d-regular" % p)
    blocks = []
    for x in lam:
        if blocks and blocks[-1][0] == x:
            blocks[-1][1] += 1
        else:
            blocks.append([x, 1])
    return all((blocks[i][0] - blocks[i + 1][0]
                + blocks[i][1] + blocks[i + 1][1]) % p == 0
               for i in range(len(blocks) - 1))


def parse_partition(text):
    """Comma-separated parts, e.g. '8,1'."""
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise ValueError("could not parse partition %r" % text) from None
    return check_partition(parts)
