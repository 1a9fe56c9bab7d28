"""Exact arithmetic in GF(p^a) for small odd p (and p=2 for toy tests).

Elements are integers in [0, p^a) encoding polynomial coefficients base p,
constant term first: value = sum(c_i * p^i).  Multiplication in extension
fields goes through log/antilog tables built once at field creation.
"""

from functools import lru_cache

SQUARE = "square"
NONSQUARE = "nonsquare"

_DEFAULT_MODULI = {
    (3, 2): (1, 0, 1),      # x^2 + 1
    (3, 3): (1, 2, 0, 1),   # x^3 - x + 1
}


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); polys are tuples, constant term first

def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        a = list(_poly_trim(a))
        if len(a) - 1 < dm:
            break
        shift = len(a) - 1 - dm
        factor = (a[-1] * lead_inv) % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
    return _poly_trim(a)


def _poly_divides(d, a, p):
    return not _poly_mod(a, d, p)


def _all_monic(deg, p):
    for low in range(p ** deg):
        coeffs = []
        v = low
        for _ in range(deg):
            coeffs.append(v % p)
            v //= p
        yield tuple(coeffs) + (1,)


def is_irreducible(modulus, p):
    """Trial division by all monic polynomials of degree <= deg/2."""
    m = _poly_trim(modulus)
    deg = len(m) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for cand in _all_monic(d, p):
            if _poly_divides(cand, m, p):
                return False
    return True


def _encode(coeffs, p):
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _decode(value, p, a):
    out = []
    for _ in range(a):
        out.append(value % p)
        value //= p
    return tuple(out)


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """GF(p^a) with integer-encoded elements."""

    def __init__(self, p, a, modulus=None):
        if not _is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        if a < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.a = a
        self.q = p ** a
        if a == 1:
            self.modulus = (0, 1)  # the polynomial x; unused
        else:
            if modulus is None:
                modulus = _DEFAULT_MODULI.get((p, a)) or self._first_irreducible(p, a)
            modulus = _poly_trim(modulus)
            if len(modulus) - 1 != a:
                raise ValueError("modulus degree %d, expected %d" % (len(modulus) - 1, a))
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not is_irreducible(modulus, p):
                raise ValueError("modulus %r is reducible over GF(%d)" % (modulus, p))
            self.modulus = tuple(c % p for c in modulus)
        self._build_tables()
        self.primitive = self._find_primitive()
        if self.a > 1:
            self._build_logs()

    @staticmethod
    def _first_irreducible(p, a):
        for cand in _all_monic(a, p):
            if is_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible polynomial found")

    # -- construction internals ------------------------------------------

    def _build_tables(self):
        # nothing heavy for prime fields
        self._inv_cache = None

    def _mul_slow(self, x, y):
        p, a = self.p, self.a
        prod = _poly_mul(_decode(x, p, a), _decode(y, p, a), p)
        return _encode(_poly_mod(prod, self.modulus, p), p)

    def _find_primitive(self):
        order = self.q - 1
        factors = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._pow_slow(g, order // f) != 1 for f in factors):
                return g
        if self.q == 2:
            return 1
        raise AssertionError("no primitive element found")

    def _pow_slow(self, x, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, x) if self.a > 1 else (r * x) % self.p
            x = self._mul_slow(x, x) if self.a > 1 else (x * x) % self.p
            e >>= 1
        return r

    def _build_logs(self):
        q = self.q
        self._antilog = [1] * (q - 1)
        self._log = [0] * q
        v = 1
        for i in range(q - 1):
            self._antilog[i] = v
            self._log[v] = i
            v = self._mul_slow(v, self.primitive)
        assert v == 1, "primitive element order check failed"

    # -- arithmetic on encoded values ------------------------------------

    def add(self, x, y):
        p = self.p
        if self.a == 1:
            return (x + y) % p
        out, mult = 0, 1
        while x or y:
            out += ((x % p + y % p) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, x):
        p = self.p
        if self.a == 1:
            return (-x) % p
        out, mult = 0, 1
        while x:
            out += ((p - x % p) % p) * mult
            x //= p
            mult *= p
        return out

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if self.a == 1:
            return (x * y) % self.p
        if x == 0 or y == 0:
            return 0
        return self._antilog[(self._log[x] + self._log[y]) % (self.q - 1)]

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        if self.a == 1:
            return pow(x, self.p - 2, self.p)
        return self._antilog[(-self._log[x]) % (self.q - 1)]

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, e):
        if x == 0:
            if e < 0:
                raise ZeroDivisionError
            return 0 if e else 1
        if self.a == 1:
            return pow(x, e % (self.p - 1) if e else 0, self.p) if e else 1
        return self._antilog[(self._log[x] * e) % (self.q - 1)]

    def frobenius(self, x):
        return self.pow(x, self.p)

    def trace(self, x):
        """T(x) = sum of x^(p^i), landing in the prime subfield."""
        t, y = 0, x
        for _ in range(self.a):
            t = self.add(t, y)
            y = self.frobenius(y)
        assert t < self.p, "trace escaped the prime subfield"
        return t

    def norm(self, x):
        """N(x) = x^((q-1)/(p-1)), landing in the prime subfield."""
        n = self.pow(x, (self.q - 1) // (self.p - 1))
        assert n < self.p, "norm escaped the prime subfield"
        return n

    def square_class(self, x):
        if x == 0:
            raise ValueError("square class of zero is undefined")
        if self.p == 2:
            return SQUARE  # every element is a square in char 2
        if self.a == 1:
            return SQUARE if pow(x, (self.p - 1) // 2, self.p) == 1 else NONSQUARE
        return SQUARE if self._log[x] % 2 == 0 else NONSQUARE

    def is_square(self, x):
        return self.square_class(x) == SQUARE

    def class_of_sign(self, parity):
        """Square class of (-1)^parity."""
        return self.square_class(self.pow(self.neg(1), parity % 2)) if parity % 2 else SQUARE

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def from_int(self, n):
        """Embed an ordinary integer via the prime subfield."""
        return n % self.p

    def element(self, value):
        return FieldElement(self, value % self.q if self.a == 1 else value)

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.a, self.modulus) == (other.p, other.a, other.modulus))

    def __hash__(self):
        return hash((self.p, self.a, self.modulus))

    def __repr__(self):
        if self.a == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.a)


class FieldElement:
    """Thin operator wrapper around an encoded field value."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other.value
        return self.field.from_int(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return self.value == self.field.from_int(other)

    def __hash__(self):
        return hash((self.field, self.value))

    def trace(self):
        return FieldElement(self.field, self.field.trace(self.value))

    def norm(self):
        return FieldElement(self.field, self.field.norm(self.value))

    def square_class(self):
        return self.field.square_class(self.value)

    def __repr__(self):
        return "%r(%d)" % (self.field, self.value)


@lru_cache(maxsize=None)
def _cached_field(p, a, modulus):
    return FiniteField(p, a, modulus)


def field_create(p, a, modulus=None):
    """Create (or fetch a cached) GF(p^a) with an optional explicit modulus."""
    key = tuple(modulus) if modulus is not None else None
    if key is None:
        return _cached_field(p, a, None)
    return _cached_field(p, a, key)


GF3 = field_create(3, 1)
