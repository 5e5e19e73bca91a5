"""Character tables by the Dixon class-matrix method, and class functions.

Tables are computed over GF(p) for a prime p = 1 mod exp(G) and lifted to
exact cyclotomic values through eigenvalue multiplicities.  Every table is
then certified: Sum chi(1)^2 = |G| and both orthogonality relations are
checked exactly (see :func:`check_orthogonality`).
"""

from fractions import Fraction
from math import gcd, isqrt, log2

import numpy as np

from .cyclotomic import Cyclotomic, as_cyclotomic, euler_phi, hermitian_sum, prime_factors
from .linalg import EigenSplitError, eigen_split
from .perm import QuotientMap, SubgroupHandle, conjugacy_classes

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "TableError",
    "character_table",
    "check_orthogonality",
    "det_order",
    "induce",
    "inflate",
    "inner_product",
    "linear_characters",
    "pointwise_mul",
    "restrict",
]


class TableError(ArithmeticError):
    pass


def _lcm(a, b):
    return a // gcd(a, b) * b


class ClassFunction:
    """A class function: one Cyclotomic value per conjugacy class of ``group``."""

    __slots__ = ("group", "values", "_cache")

    def __init__(self, group, values):
        values = tuple(as_cyclotomic(v) for v in values)
        if len(values) != len(conjugacy_classes(group)):
            raise ValueError("expected %d class values, got %d" % (len(group.classes), len(values)))
        self.group = group
        self.values = values
        self._cache = {}

    @classmethod
    def constant(cls, group, c=1):
        return cls(group, [c] * len(group.classes))

    @classmethod
    def from_element_function(cls, group, f):
        """Class function whose value on class i is f(rep_i)."""
        return cls(group, [f(c.rep) for c in group.classes])

    def __call__(self, g):
        """Value at the element with index g."""
        return self.values[int(self.group.class_of[g])]

    @property
    def degree(self):
        return self.values[0]

    def _check(self, other):
        if not isinstance(other, ClassFunction) or other.group is not self.group:
            raise ValueError("class functions live on different groups")

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            return pointwise_mul(self, other)
        c = as_cyclotomic(other)
        return ClassFunction(self.group, [c * v for v in self.values])

    __rmul__ = __mul__

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def conj(self):
        return ClassFunction(self.group, [a.conj() for a in self.values])

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and other.group is self.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def norm(self):
        return inner_product(self, self)

    def is_zero_on(self, cls_index):
        return self.values[cls_index].is_zero()

    def kernel(self):
        """{g : chi(g) = chi(1)} as a subgroup handle (meaningful for characters)."""
        if "kernel" not in self._cache:
            d = self.values[0]
            mem = np.concatenate([c.members for c, v in zip(self.group.classes, self.values) if v == d])
            self._cache["kernel"] = self.group.subgroup(mem)
        return self._cache["kernel"]

    def is_irreducible(self):
        """True when this is an irreducible character (exact test)."""
        if "irr" not in self._cache:
            d = self.values[0]
            ok = d.is_rational() and d.to_fraction() > 0 and d.to_fraction().denominator == 1 \
                and inner_product(self, self) == 1
            if ok:
                tab = character_table(self.group)
                ok = tab.position(self) is not None
            self._cache["irr"] = ok
        return self._cache["irr"]

    def decompose(self):
        """Inner products with the irreducible characters, in table order."""
        if "decompose" not in self._cache:
            self._cache["decompose"] = [inner_product(self, chi) for chi in character_table(self.group)]
        return list(self._cache["decompose"])

    def is_character(self):
        coeffs = self.decompose()
        return all(c.is_rational() and c.to_fraction().denominator == 1 and c.to_fraction() >= 0 for c in coeffs) \
            and any(not c.is_zero() for c in coeffs)

    def is_generalized_character(self):
        return all(c.is_rational() and c.to_fraction().denominator == 1 for c in self.decompose())

    def det_order(self):
        return det_order(self)

    def __repr__(self):
        return "ClassFunction(%s)" % ", ".join(str(v) for v in self.values)


Character = ClassFunction


def inner_product(phi, psi):
    """(1/|G|) Sum_g phi(g) conj(psi(g))."""
    if phi.group is not psi.group:
        raise ValueError("class functions live on different groups")
    G = phi.group
    terms = [(c.size, a, b) for c, a, b in zip(G.classes, phi.values, psi.values)]
    return hermitian_sum(terms, Fraction(1, G.order))


def pointwise_mul(phi, psi):
    if phi.group is not psi.group:
        raise ValueError("class functions live on different groups")
    return ClassFunction(phi.group, [a * b for a, b in zip(phi.values, psi.values)])


def restrict(chi, H):
    """Restriction of a class function of H.parent to the subgroup H."""
    if not isinstance(H, SubgroupHandle) or H.parent is not chi.group:
        raise ValueError("subgroup does not belong to the class function's group")
    K = H.group
    co = chi.group.class_of
    return ClassFunction(K, [chi.values[int(co[H.members[c.rep]])] for c in K.classes])


def induce(theta, H):
    """Induction of a class function of H.group up to H.parent."""
    if not isinstance(H, SubgroupHandle) or H.group is not theta.group:
        raise ValueError("class function is not on this subgroup")
    G = H.parent
    co = G.class_of
    sums = [Cyclotomic(0)] * len(G.classes)
    for c, v in zip(theta.group.classes, theta.values):
        if v.is_zero():
            continue
        i = int(co[H.members[c.rep]])
        sums[i] = sums[i] + v * c.size
    out = []
    for i, c in enumerate(G.classes):
        out.append(sums[i] * Fraction(G.order, H.order * c.size) if not sums[i].is_zero() else sums[i])
    return ClassFunction(G, out)


def inflate(chibar, qmap):
    """Class function of qmap.source constant on cosets of the kernel."""
    if not isinstance(qmap, QuotientMap) or chibar.group is not qmap.quotient:
        raise ValueError("class function is not on this quotient")
    G = qmap.source
    qco = qmap.quotient.class_of
    return ClassFunction(G, [chibar.values[int(qco[qmap.projection[c.rep]])] for c in G.classes])


def deflate(chi, qmap):
    """The class function of the quotient that inflates to chi (which must be constant on cosets)."""
    Q = qmap.quotient
    vals = [chi(int(qmap.section[c.rep])) for c in Q.classes]
    out = ClassFunction(Q, vals)
    if inflate(out, qmap) != chi:
        raise ValueError("class function is not constant on cosets of the kernel")
    return out


# -- multiplicities and determinants -----------------------------------------


def eigen_multiplicities(chi, cls_index):
    """Multiplicities a_j of z_m^j (m = element order) for chi on a class.

    Inverse discrete Fourier transform over the cyclic group generated by
    the class representative.  Raises ValueError if they are not
    nonnegative integers.
    """
    G = chi.group
    g = G.classes[cls_index].rep
    m = int(G.orders[g])
    co = G.class_of
    vals = [chi.values[int(co[G.power(g, k)])] for k in range(m)]
    out = []
    for j in range(m):
        s = Cyclotomic(0)
        for k, v in enumerate(vals):
            if not v.is_zero():
                s = s + v * Cyclotomic.zeta(m, -j * k)
        a = s * Fraction(1, m)
        if not a.is_rational() or a.to_fraction().denominator != 1 or a.to_fraction() < 0:
            raise ValueError("not a character: multiplicity %s on class %d" % (a, cls_index))
        out.append(int(a.to_fraction()))
    return out


def det_order(chi):
    """Order of the linear character det(chi)."""
    mults = chi._cache.get("mults")
    G = chi.group
    order = 1
    covered = set()
    # det(chi)(g^k) = det(chi)(g)^k, so classes of powers of a done rep are skipped
    for i in sorted(range(len(G.classes)), key=lambda i: -int(G.orders[G.classes[i].rep])):
        if i in covered:
            continue
        g = G.classes[i].rep
        m = int(G.orders[g])
        covered.update(int(G.class_of[G.power(g, k)]) for k in range(m))
        a = mults[i] if mults is not None else eigen_multiplicities(chi, i)
        s = sum(j * x for j, x in enumerate(a)) % m
        order = _lcm(order, m // gcd(s, m))
    return order


# -- the table ------------------------------------------------------------------


class CharacterTable:
    """Irreducible characters of a group in canonical order.

    The order is: degree ascending, the trivial character first among the
    linear ones, then lexicographic on the power-basis coordinates of the
    values over Q(z_e), e = exp(G).
    """

    def __init__(self, group, characters, prime=None):
        self.group = group
        self.characters = characters
        self.prime = prime
        self._degrees = None

    def __iter__(self):
        return iter(self.characters)

    def __len__(self):
        return len(self.characters)

    def __getitem__(self, i):
        return self.characters[i]

    def degrees(self):
        if self._degrees is None:
            self._degrees = [int(chi.values[0].to_fraction()) for chi in self.characters]
        return list(self._degrees)

    def position(self, chi):
        """Index of ``chi`` in the table or None.

        A linear scan with exact equality; hashing would force every value
        into canonical form, which costs far more than a few comparisons.
        """
        if chi.group is not self.group:
            return None
        for i, c in enumerate(self.characters):
            if c.values[0] == chi.values[0] and c.values == chi.values:
                return i
        return None

    def trivial(self):
        return self.characters[0]

    def linear(self):
        return [chi for chi in self.characters if chi.values[0] == 1]


def linear_characters(Q):
    return character_table(Q).linear()


def _is_prime(n):
    return n > 1 and prime_factors(n) == (n,)


def _primitive_root(p):
    fs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in fs):
            return g
    return 1


def _class_matrices(G, p):
    classes = G.classes
    r = len(classes)
    co = G.class_of
    tab, inv = G.table, G.inv
    cls_x = co  # class of each x
    inv_all = inv
    mats = np.zeros((r, r, r), dtype=np.int64)  # mats[j][k, i]
    for i, c in enumerate(classes):
        z = c.rep
        k = co[tab[inv_all, z]]  # class of x^-1 z for every x
        np.add.at(mats, (cls_x, k, np.full(G.order, i)), 1)
    return mats % p


def _split_primes(G):
    e = G.exponent
    bound = 2 * isqrt(G.order) + 2
    p = (bound // e + 1) * e + 1
    while True:
        if p > bound and _is_prime(p):
            yield p
        p += e


def character_table(G):
    """Exact, certified character table of G (cached on the group)."""
    if "chartable" in G._cache:
        return G._cache["chartable"]
    classes = conjugacy_classes(G)
    e = G.exponent
    sizes = np.array([c.size for c in classes], dtype=np.int64)
    invcls = G.inverse_classes()
    orders = [int(G.orders[c.rep]) for c in classes]
    last_error = None
    for attempt, p in enumerate(_split_primes(G)):
        if attempt >= 8:
            raise TableError("no splitting prime found: %s" % last_error)
        try:
            table = _dixon(G, p, classes, sizes, invcls, orders, e)
        except (EigenSplitError, TableError) as exc:
            last_error = exc
            continue
        break
    chars = [ClassFunction(G, vals) for vals, _ in table]
    for chi, (_, mults) in zip(chars, table):
        chi._cache["mults"] = mults
        chi._cache["irr"] = True
    key = _ordering_keys(table, e)
    order = sorted(range(len(chars)), key=lambda k: key[k])
    chars = [chars[k] for k in order]
    tab = CharacterTable(G, chars, p)
    check_orthogonality(tab, [table[k][1] for k in order])
    G._cache["chartable"] = tab
    return tab


def _ordering_keys(table, e):
    keys = []
    for vals, mults in table:
        deg = sum(mults[0])
        coords = []
        for a in mults:
            m = len(a)
            v = [0] * e
            for j, x in enumerate(a):
                v[(j * (e // m)) % e] += x
            coords.append(tuple(Cyclotomic.from_exponents(e, v).lift(e)))
        trivial = all(a[0] == 1 and sum(a) == 1 for a in mults)
        keys.append((deg, not trivial, tuple(coords)))
    return keys


def _dixon(G, p, classes, sizes, invcls, orders, e):
    r = len(classes)
    n = G.order
    mats = _class_matrices(G, p)
    if r == 1:
        vecs = [np.array([1], dtype=np.int64)]
    else:
        vecs = eigen_split([mats[j] for j in range(1, r)], p, simple=True)
    if len(vecs) != r:
        raise TableError("found %d characters for %d classes" % (len(vecs), r))
    z = pow(_primitive_root(p), (p - 1) // e, p)
    inv_sizes = np.array([pow(int(s), -1, p) for s in sizes], dtype=np.int64)
    W = np.array(vecs, dtype=np.int64) % p
    if (W[:, 0] == 0).any():
        raise TableError("eigenvector vanishes at the identity class")
    W = W * np.array([pow(int(x), -1, p) for x in W[:, 0]], dtype=np.int64)[:, None] % p
    # degrees from d^2 * Sum_i w_i w_i* / |C_i| = |G|
    s = (W * W[:, invcls] % p) * inv_sizes % p
    s = s.sum(axis=1) % p
    degs = []
    for x in s.tolist():
        if x == 0:
            raise TableError("degenerate eigenvector")
        d2 = n * pow(x, -1, p) % p
        d = next((d for d in range(1, isqrt(n) + 1) if d * d % p == d2), None)
        if d is None:
            raise TableError("degree not recovered")
        degs.append(d)
    degs = np.array(degs, dtype=np.int64)
    Vmod = W * degs[:, None] % p * inv_sizes % p
    mults = [[None] * r for _ in range(r)]
    dft = {}
    for i in range(r):
        m = orders[i]
        if m not in dft:
            zm = pow(z, e // m, p)
            jk = np.outer(np.arange(m), np.arange(m)) % m
            zpow = np.array([pow(zm, (-t) % m, p) for t in range(m)], dtype=np.int64)
            dft[m] = (zpow[jk], pow(m, -1, p))
        Z, inv_m = dft[m]
        pm = _powers_of_class(G, i)
        A = (Vmod[:, pm] @ Z.T) % p * inv_m % p  # A[chi, j]
        if (A > degs[:, None]).any() or (A.sum(axis=1) != degs).any():
            raise TableError("multiplicities out of range")
        for c in range(r):
            mults[c][i] = A[c].tolist()
    out = []
    for c in range(r):
        vals = [Cyclotomic.from_exponents(len(a), a) for a in mults[c]]
        out.append((vals, mults[c]))
    return out


def _powers_of_class(G, i):
    key = ("powers_of_class", i)
    if key not in G._cache:
        g = G.classes[i].rep
        m = int(G.orders[g])
        co = G.class_of
        G._cache[key] = [int(co[G.power(g, k)]) for k in range(m)]
    return G._cache[key]


# -- exact certification --------------------------------------------------------


def _certificate_primes(e, count):
    """``count`` primes P = 1 mod e below 2**24, largest first."""
    out = []
    P = ((1 << 24) - 1) // e * e + 1
    while len(out) < count:
        if P <= 2:
            raise TableError("ran out of certificate primes")
        if _is_prime(P):
            out.append(P)
        P -= e
    return out


def check_orthogonality(table, mults=None):
    """Exact check of Sum chi(1)^2 = |G| and both orthogonality relations.

    Each relation says that an element x of Z[z_e] vanishes.  Every
    table value is a sum of chi(1) roots of unity, so every Galois
    conjugate of x is bounded by B = 2 |G| max(chi(1))^2 + 2 |G|, and a nonzero
    x has |Norm(x)| <= B^phi(e).  Reducing x modulo primes P = 1 (mod e)
    through z_e -> (a primitive e-th root mod P) lands in a prime ideal of
    norm P; if x maps to 0 for primes whose product exceeds B^phi(e), then
    Norm(x) = 0, i.e. x = 0.  Raises TableError on failure.
    """
    G = table.group
    classes = G.classes
    r = len(classes)
    e = G.exponent
    degs = table.degrees()
    if sum(d * d for d in degs) != G.order:
        raise TableError("sum of squared degrees is not |G|")
    if len(degs) != r:
        raise TableError("table is not square")
    if mults is None:
        mults = [[eigen_multiplicities(chi, i) for i in range(r)] for chi in table]
    for chi, ms in zip(table, mults):
        for a in ms:
            if min(a) < 0 or sum(a) != chi.values[0]:
                raise TableError("values are not sums of degree-many roots of unity")
    dmax = max(degs)
    B = 2 * G.order * (dmax * dmax + 1)
    need_bits = euler_phi(e) * log2(B) + 1
    count = max(1, int(need_bits // 23) + 1)
    sizes = np.array([c.size for c in classes], dtype=np.int64)
    cent = G.order // sizes
    # A[a_row, i, k] = multiplicity of z_e^k in chi_a_row on class i
    A = np.zeros((r, r, e), dtype=np.int64)
    for a_row, ms in enumerate(mults):
        for i, a in enumerate(ms):
            s = e // len(a)
            A[a_row, i, np.arange(len(a)) * s] = a
    A = A.reshape(r * r, e)
    neg = (-np.arange(e)) % e
    for P in _certificate_primes(e, count):
        w = pow(_primitive_root(P), (P - 1) // e, P)
        wp = np.array([pow(w, k, P) for k in range(e)], dtype=np.int64)
        V = (A @ wp % P).reshape(r, r)
        Vc = (A @ wp[neg] % P).reshape(r, r)
        rows = (V * (sizes % P)) % P @ Vc.T % P
        if not (rows == (G.order % P) * np.eye(r, dtype=np.int64)).all():
            raise TableError("row orthogonality fails")
        cols = V.T @ Vc % P
        if not (cols == np.diag(cent % P)).all():
            raise TableError("column orthogonality fails")
    return True
