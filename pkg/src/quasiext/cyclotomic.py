"""Exact arithmetic in cyclotomic fields.

An element of Q(z_n) is stored on the power basis 1, z, ..., z^(phi(n)-1)
(z = exp(2 pi i / n)) with integer numerators over one positive common
denominator.  Arithmetic works in the least common conductor of the operands
and does not shrink the field; the minimal conductor is computed lazily and
is what hashing, ordering and serialization see.  Since the power basis of
Z[z_n] is an integral basis, integrality is just ``den == 1``.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "Cyclotomic",
    "E",
    "as_cyclotomic",
    "cyclotomic_polynomial",
    "euler_phi",
    "hermitian_sum",
    "is_algebraic_integer",
    "prime_factors",
]


@lru_cache(maxsize=None)
def prime_factors(n):
    """Sorted tuple of the distinct primes dividing ``n``."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n):
    r = n
    for p in prime_factors(n):
        r = r // p * (p - 1)
    return r


def _lcm(a, b):
    return a // gcd(a, b) * b


def _poly_divexact(num, den):
    # num, den: integer coefficient lists (low -> high), den monic
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        if c:
            out[k - dq] = c
            for i, d in enumerate(den):
                num[k - dq + i] -= c * d
    assert not any(num[:dq]), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n):
    # entry k: sparse coords ((index, coeff), ...) of z_n^k on the power basis
    phi = euler_phi(n)
    cp = cyclotomic_polynomial(n)
    cur = [1] + [0] * (phi - 1)
    table = []
    for _ in range(n):
        table.append(tuple((i, c) for i, c in enumerate(cur) if c))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cp[i]
    return tuple(table)


def _reduce_exponents(n, expo):
    # expo: dict exponent -> integer coefficient; returns dense coords
    table = _power_table(n)
    out = [0] * euler_phi(n)
    for k, c in expo.items():
        if c:
            for i, v in table[k % n]:
                out[i] += c * v
    return out


@lru_cache(maxsize=None)
def _galois_generator(n, p):
    """An automorphism exponent generating Gal(Q(z_n)/Q(z_{n/p}))."""
    m = n // p
    if m % p == 0:
        return 1 + m
    # p odd and prime to m: a = 1 mod m, a = primitive root mod p
    g = next(r for r in range(2, p) if all(pow(r, (p - 1) // q, p) != 1 for q in prime_factors(p - 1)))
    a = 1 + m * (((g - 1) * pow(m, -1, p)) % p)
    return a % n


@lru_cache(maxsize=None)
def _descent_data(n, m):
    """Columns and inverse matrix expressing Q(z_m)-coords from Q(z_n)-coords."""
    s = n // m
    table = _power_table(n)
    pm, pn = euler_phi(m), euler_phi(n)
    rows = []
    for i in range(pm):
        row = [Fraction(0)] * pn
        for j, v in table[i * s]:
            row[j] = Fraction(v)
        rows.append(row)
    # choose pm independent columns greedily, then invert that square block
    cols = []
    work = []
    for j in range(pn):
        col = [rows[i][j] for i in range(pm)]
        v = list(col)
        for (pc, pv) in work:
            f = v[pc]
            if f:
                v = [a - f * b for a, b in zip(v, pv)]
        piv = next((i for i, a in enumerate(v) if a), None)
        if piv is None:
            continue
        v = [a / v[piv] for a in v]
        work = [(pc, [a - pv[piv] * b for a, b in zip(pv, v)]) for pc, pv in work]
        work.append((piv, v))
        cols.append(j)
        if len(cols) == pm:
            break
    block = [[rows[i][j] for j in cols] for i in range(pm)]
    inv = _fraction_inverse(block)
    return tuple(cols), inv


def _fraction_inverse(a):
    n = len(a)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                g = aug[r][c]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[c])]
    return [r[n:] for r in aug]


class Cyclotomic:
    """Element of the cyclotomic field Q(z_n).

    Instances are immutable.  Mixed arithmetic with ``int`` and ``Fraction``
    is supported.
    """

    __slots__ = ("n", "coeffs", "den", "_canon")

    def __init__(self, value=0):
        value = Fraction(value)
        self.n = 1
        self.coeffs = (value.numerator,)
        self.den = value.denominator
        self._canon = None

    @classmethod
    def _make(cls, n, coeffs, den):
        if den < 0:
            den = -den
            coeffs = [-c for c in coeffs]
        g = den
        for c in coeffs:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if g != 1:
            coeffs = [c // g for c in coeffs]
            den //= g
        self = object.__new__(cls)
        if n > 1 and not any(coeffs[1:]):
            n = 1
            coeffs = coeffs[:1]
        if den != 1 and not any(coeffs):
            den = 1
        self.n = n
        self.coeffs = tuple(coeffs)
        self.den = den
        self._canon = None
        return self

    # -- constructors -------------------------------------------------

    @classmethod
    def zeta(cls, n, k=1):
        """The root of unity z_n^k."""
        return cls._make(n, _reduce_exponents(n, {k % n: 1}), 1)

    @classmethod
    def from_exponents(cls, n, coeffs, den=1):
        """sum_k coeffs[k] z_n^k; ``coeffs`` is a sequence or a dict of exponents.

        Coefficients may be rationals; ``den`` divides everything.
        """
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
        fr = {}
        d = 1
        for k, c in items:
            if c:
                c = Fraction(c)
                fr[k % n] = fr.get(k % n, 0) + c
                d = _lcm(d, c.denominator)
        expo = {k: int(c * d) for k, c in fr.items()}
        return cls._make(n, _reduce_exponents(n, expo), d * den)

    @classmethod
    def from_coords(cls, n, coords):
        """Element with power-basis coordinates ``coords`` (rationals)."""
        coords = [Fraction(c) for c in coords]
        if len(coords) != euler_phi(n):
            raise ValueError("expected %d coordinates for conductor %d" % (euler_phi(n), n))
        d = 1
        for c in coords:
            d = _lcm(d, c.denominator)
        return cls._make(n, [int(c * d) for c in coords], d)

    # -- internal helpers -----------------------------------------------

    def _nonzero(self):
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def lift(self, n):
        """Integer numerators of ``self`` on the power basis of Q(z_n) (n a multiple of self.n)."""
        if n == self.n:
            return list(self.coeffs)
        if n % self.n:
            raise ValueError("conductor %d does not divide %d" % (self.n, n))
        s = n // self.n
        table = _power_table(n)
        out = [0] * euler_phi(n)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, v in table[i * s]:
                    out[j] += c * v
        return out

    def _map_exponents(self, a):
        # image under z -> z^a, as dict of exponents
        return {(i * a) % self.n: c for i, c in enumerate(self.coeffs) if c}

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == other.n:
            a, b = self.coeffs, other.coeffs
            n = self.n
        else:
            n = _lcm(self.n, other.n)
            a, b = self.lift(n), other.lift(n)
        da, db = self.den, other.den
        if da == db:
            return Cyclotomic._make(n, [x + y for x, y in zip(a, b)], da)
        return Cyclotomic._make(n, [x * db + y * da for x, y in zip(a, b)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.n, [-c for c in self.coeffs], self.den)

    def __sub__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        if other.n == 1:
            c = other.coeffs[0]
            return Cyclotomic._make(self.n, [x * c for x in self.coeffs], self.den * other.den)
        if self.n == 1:
            c = self.coeffs[0]
            return Cyclotomic._make(other.n, [x * c for x in other.coeffs], self.den * other.den)
        n = self.n if self.n == other.n else _lcm(self.n, other.n)
        sa, sb = n // self.n, n // other.n
        expo = {}
        bnz = [(j * sb, d) for j, d in enumerate(other.coeffs) if d]
        for i, c in enumerate(self.coeffs):
            if c:
                ia = i * sa
                for jb, d in bnz:
                    k = (ia + jb) % n
                    expo[k] = expo.get(k, 0) + c * d
        return Cyclotomic._make(n, _reduce_exponents(n, expo), self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def galois(self, a):
        """Image under the field automorphism z_n -> z_n^a (gcd(a, n) = 1)."""
        if gcd(a, self.n) != 1:
            raise ValueError("exponent %d is not a unit mod %d" % (a, self.n))
        if self.n <= 2:
            return self
        return Cyclotomic._make(self.n, _reduce_exponents(self.n, self._map_exponents(a)), self.den)

    def conj(self):
        """Complex conjugate."""
        return self.galois(-1)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        x = self.reduced()
        if x.n == 1:
            return Cyclotomic(Fraction(x.den, x.coeffs[0]))
        # x^-1 = (product of the other conjugates) / norm
        others = Cyclotomic(1)
        for a in range(2, x.n):
            if gcd(a, x.n) == 1:
                others = others * x.galois(a)
        norm = (x * others).to_fraction()
        return others * Cyclotomic(1 / norm)

    # -- predicates and conversions -------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return self.n == 1

    def is_integral(self):
        return self.den == 1

    def to_fraction(self):
        if self.n != 1:
            raise ValueError("%s is not rational" % self)
        return Fraction(self.coeffs[0], self.den)

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        import cmath

        s = 0j
        for i, c in enumerate(self.coeffs):
            if c:
                s += c * cmath.exp(2j * cmath.pi * i / self.n)
        return s / self.den

    def to_mpc(self, dps=50):
        """High-precision complex value (mpmath)."""
        import mpmath

        with mpmath.workdps(dps + 10):
            s = mpmath.mpc(0)
            for i, c in enumerate(self.coeffs):
                if c:
                    s += c * mpmath.expjpi(mpmath.mpf(2 * i) / self.n)
            return s / self.den

    # -- canonical form ---------------------------------------------------

    def reduced(self):
        """Same element written over its minimal conductor."""
        if self._canon is None:
            self._canon = self._compute_canonical()
        return self._canon

    @property
    def conductor(self):
        return self.reduced().n

    def _compute_canonical(self):
        x = self
        while True:
            n = x.n
            if n == 1:
                return x
            if n % 4 == 2:
                m = n // 2
                h = (m + 1) // 2
                expo = {}
                for i, c in enumerate(x.coeffs):
                    if c:
                        k = (i * h) % m
                        expo[k] = expo.get(k, 0) + (c if i % 2 == 0 else -c)
                x = Cyclotomic._make(m, _reduce_exponents(m, expo), x.den)
                continue
            for p in prime_factors(n):
                m = n // p
                a = _galois_generator(n, p)
                if x.galois(a) != x:
                    continue
                cols, inv = _descent_data(n, m)
                xs = [Fraction(x.coeffs[j]) for j in cols]
                y = [sum(xs[k] * inv[k][i] for k in range(len(cols))) for i in range(len(cols))]
                d = 1
                for c in y:
                    d = _lcm(d, c.denominator)
                x = Cyclotomic._make(m, [int(c * d) for c in y], d * x.den)
                break
            else:
                return x

    @property
    def coords(self):
        """Canonical power-basis coordinates (Fractions) over the minimal conductor."""
        r = self.reduced()
        return tuple(Fraction(c, r.den) for c in r.coeffs)

    def sort_key(self):
        r = self.reduced()
        return (r.n, self.coords)

    def __eq__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == other.n:
            return self.den == other.den and self.coeffs == other.coeffs
        n = _lcm(self.n, other.n)
        a, b = self.lift(n), other.lift(n)
        return all(x * other.den == y * self.den for x, y in zip(a, b))

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        r = self.reduced()
        if r.n == 1:
            return hash(Fraction(r.coeffs[0], r.den))
        return hash((r.n, r.coeffs, r.den))

    def __lt__(self, other):
        return self.sort_key() < as_cyclotomic(other).sort_key()

    def to_json(self):
        r = self.reduced()
        return {"conductor": r.n, "coords": [str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data):
        return cls.from_coords(data["conductor"], [Fraction(c) for c in data["coords"]])

    def __repr__(self):
        return "Cyclotomic(%s)" % self

    def __str__(self):
        r = self.reduced()
        if r.n == 1:
            return str(Fraction(r.coeffs[0], r.den))
        terms = []
        for i, c in enumerate(r.coeffs):
            if not c:
                continue
            c = Fraction(c, r.den)
            base = "1" if i == 0 else ("z%d" % r.n if i == 1 else "z%d^%d" % (r.n, i))
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(base)
            elif c == -1:
                terms.append("-" + base)
            else:
                terms.append("%s*%s" % (c, base))
        s = " + ".join(terms)
        return s.replace("+ -", "- ")


def as_cyclotomic(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic(x)
    try:
        import numpy as np

        if isinstance(x, np.integer):
            return Cyclotomic(int(x))
    except ImportError:  # pragma: no cover
        pass
    return NotImplemented


def hermitian_sum(terms, scale=1):
    """scale * Sum w * a * conj(b) over (w, a, b) in ``terms`` with integer weights.

    Accumulates in one exponent table over the common conductor and reduces
    once, which is much cheaper than a chain of field operations.
    """
    terms = [(w, a, b) for w, a, b in terms if w and not a.is_zero() and not b.is_zero()]
    scale = Fraction(scale)
    if not terms:
        return Cyclotomic(0)
    n = 1
    den = 1
    for _, a, b in terms:
        n = _lcm(n, _lcm(a.n, b.n))
        den = _lcm(den, a.den * b.den)
    expo = {}
    for w, a, b in terms:
        f = w * (den // (a.den * b.den))
        sa, sb = n // a.n, n // b.n
        bnz = [((-j * sb) % n, d) for j, d in enumerate(b.coeffs) if d]
        for i, c in enumerate(a.coeffs):
            if c:
                ia = i * sa
                c *= f
                for jb, d in bnz:
                    k = (ia + jb) % n
                    expo[k] = expo.get(k, 0) + c * d
    return Cyclotomic._make(n, [x * scale.numerator for x in _reduce_exponents(n, expo)],
                            den * scale.denominator)


def E(n, k=1):
    """Shorthand for the root of unity exp(2 pi i k / n)."""
    return Cyclotomic.zeta(n, k)


def is_algebraic_integer(a):
    """True iff ``a`` lies in Z[z_n] (the ring of integers of Q(z_n))."""
    return as_cyclotomic(a).den == 1
