"""Factor sets of character triples and the central extension construction.

Pipeline: an exact representation of theta, intertwiners X(t) for a
transversal of N in G, the factor set alpha on Q = G/N, a cohomologous
cocycle with root-of-unity values, its class order in H^2(Q, C^x), removal
of the pi'-part of the values, the group G^ of pairs (g, k), a character
tau of G^ over theta, and finally the quasi-extension
g -> lambda^(x_pi) tau(x).
"""

from dataclasses import dataclass, field
from itertools import islice

import mpmath
import numpy as np

from .chartab import ClassFunction, character_table
from .cyclotomic import Cyclotomic, prime_factors
from .linalg import CycloMatrix, PrecisionError, cyclo_nullspace, root_exponent, solve_mod
from .perm import FiniteGroup, GroupOrderError, PrimeSet, order_cap, pi_prime_overgroups
from .repbuild import irreducible_rep
from .triples import (
    QuasiExtension,
    TheoremViolation,
    TripleError,
    extendibility_prime_set,
    extensions,
    verify_quasi_ext,
)

__all__ = [
    "CentralExtensionGroup",
    "Cocycle",
    "CocycleClassReport",
    "central_extension",
    "class_order",
    "cohomology_checks",
    "factor_set",
    "finite_order_representative",
    "intertwiner",
    "linear_representative",
    "locate_tau",
    "pi_project",
    "quasi_ext_cocycle",
    "shrink_to_order",
    "triple_cocycle",
]

FULL_IDENTITY_CHECK = 24  # verify the raw cocycle identity on all triples up to this |Q|
SAMPLE_TRIPLES = 4000
START_DPS = 128
MAX_DPS = 1024


def _pi(pi):
    return pi if isinstance(pi, PrimeSet) else PrimeSet(pi)


# -- factor sets ----------------------------------------------------------------


def intertwiner(rep, N, t):
    """X with X rep(t^-1 a t) = rep(a) X for the generators a of N.

    ``N`` is the subgroup handle the representation lives on and ``t`` an
    element index of its parent.  The first nonzero entry (row-major) is 1.
    """
    G = N.parent
    loc = N.local_map
    d = rep.degree
    rows = []
    for a in N.group.generators:
        A = rep(a)
        B = rep(int(loc[G.conj(int(N.members[a]), int(t))]))
        # (X B - A X)[i, j] = sum_k X[i,k] B[k,j] - A[i,k] X[k,j]
        for i in range(d):
            for j in range(d):
                r = [Cyclotomic(0)] * (d * d)
                for k in range(d):
                    r[i * d + k] = r[i * d + k] + B[k, j]
                    r[k * d + j] = r[k * d + j] - A[i, k]
                rows.append(r)
    if not rows:
        basis = [[Cyclotomic(1 if i == j else 0) for j in range(d)] for i in range(d)]
        basis = [[x for r in basis for x in r]]
    else:
        basis = cyclo_nullspace(rows, d * d)
    if len(basis) != 1:
        raise TheoremViolation("intertwiner space has dimension %d (theta not invariant?)" % len(basis))
    v = basis[0]
    lead = next(x for x in v if not x.is_zero())
    inv = lead.inverse()
    v = [x * inv for x in v]
    return CycloMatrix._raw([v[i * d:(i + 1) * d] for i in range(d)])


def _transversal_matrices(t, rep, section):
    N = t.N
    if rep.degree == 1:
        # one-dimensional: every intertwiner is the identity
        one = CycloMatrix.identity(1)
        return [one] * len(section)
    return [intertwiner(rep, N, int(s)) for s in section]


def _section(t, section):
    qm = t.qmap
    if section is None:
        section = qm.section
    section = [int(s) for s in section]
    if section[0] not in t.N or any(int(qm.projection[s]) != x for x, s in enumerate(section)):
        raise ValueError("section is not a transversal of N in G")
    if section[0] != 0:
        raise ValueError("section must send the trivial coset to the identity")
    return section


def factor_set(t, rep, section=None):
    """Raw factor set alpha[x][y] on Q with X(x) X(y) = alpha rep(n) X(xy).

    X(x) is the intertwiner of the transversal element s(x) and n = s(x)s(y)s(xy)^-1.
    A custom transversal can be passed as ``section`` (one element per coset,
    identity for the trivial coset).
    """
    G, N, qm = t.G, t.N, t.qmap
    Q = qm.quotient
    section = _section(t, section)
    loc = N.local_map
    X = _transversal_matrices(t, rep, section)
    n = Q.order
    alpha = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            xy = int(Q.table[x, y])
            a = G.mul(G.mul(section[x], section[y]), int(G.inv[section[xy]]))
            if a not in N:
                raise TheoremViolation("transversal product left the coset")
            lhs = X[x] @ X[y] if rep.degree > 1 else None
            if rep.degree == 1:
                # theta linear: X = 1 and alpha = theta(n)^-1
                alpha[x][y] = rep(int(loc[a]))[0, 0].inverse()
                continue
            rhs = rep(int(loc[a])) @ X[xy]
            c = lhs.scalar_ratio(rhs)
            if c is None:
                raise TheoremViolation("X(x)X(y) is not a scalar multiple of rep(n)X(xy)")
            alpha[x][y] = c
    _check_coset_constancy(t, rep, section, X, alpha)
    _check_raw_identity(Q, alpha)
    return alpha


def _check_coset_constancy(t, rep, section, X, alpha, samples=12):
    """X~(a s(x)) = rep(a) X(x) has factor set alpha(x, y) on whole cosets (sampled)."""
    G, N, qm = t.G, t.N, t.qmap
    Q = qm.quotient
    loc = N.local_map
    rng = np.random.default_rng(12345)
    nm = N.members
    d = rep.degree

    def Xt(g):
        x = int(qm.projection[g])
        a = G.mul(g, int(G.inv[section[x]]))
        return rep(int(loc[a])) @ X[x] if d > 1 else rep(int(loc[a]))

    for _ in range(samples):
        x, y = (int(v) for v in rng.integers(0, Q.order, 2))
        a, b = (int(nm[v]) for v in rng.integers(0, N.order, 2))
        g, h = G.mul(a, section[x]), G.mul(b, section[y])
        lhs = Xt(g) @ Xt(h)
        rhs = Xt(G.mul(g, h)).scale(alpha[x][y])
        if lhs != rhs:
            raise TheoremViolation("factor set is not constant on cosets of N")


def _triples(n, limit):
    if n ** 3 <= limit:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    yield x, y, z
        return
    rng = np.random.default_rng(2024)
    for _ in range(limit):
        yield tuple(int(v) for v in rng.integers(0, n, 3))


def _check_raw_identity(Q, alpha):
    n = Q.order
    limit = n ** 3 if n <= FULL_IDENTITY_CHECK else SAMPLE_TRIPLES
    T = Q.table
    for x, y, z in _triples(n, limit):
        xy, yz = int(T[x, y]), int(T[y, z])
        if alpha[x][y] * alpha[xy][z] != alpha[y][z] * alpha[x][yz]:
            raise TheoremViolation("raw factor set violates the cocycle identity at %s" % ((x, y, z),))


# -- root of unity cocycles -----------------------------------------------------


@dataclass
class Cocycle:
    """Normalized 2-cocycle on Q = base.quotient with values zeta_q^c."""

    base: object
    modulus: int
    exponents: np.ndarray

    @property
    def Q(self):
        return self.base.quotient

    def value(self, x, y):
        return Cyclotomic.zeta(self.modulus, int(self.exponents[x, y]))

    def check(self):
        """Exact cocycle identity on all triples and normalization."""
        c, q, T = self.exponents, self.modulus, self.Q.table
        if (c[0, :] % q).any() or (c[:, 0] % q).any():
            return False
        n = self.Q.order
        # c(x,y) + c(xy,z) - c(x,yz) - c(y,z) over all triples, one x at a time
        for x in range(n):
            xy = T[x]  # xy[y]
            lhs = c[x][:, None] + c[xy, :]
            rhs = c[x][T][:, :] + c
            if ((lhs - rhs) % q).any():
                return False
        return True


def finite_order_representative(alpha, base, dps=START_DPS):
    """Cohomologous cocycle with values in mu_q, q = |Q|.

    Uses alpha(x,y)^q = nu(x) nu(y) / nu(xy) with nu(x) = prod_y alpha(x,y):
    with mu(x) a q-th root of 1/nu(x), beta = alpha mu(x) mu(y) / mu(xy)
    has beta^q = 1.  The roots are identified numerically and the result is
    re-verified exactly.
    """
    Q = base.quotient
    n = Q.order
    if n == 1:
        return Cocycle(base, 1, np.zeros((1, 1), dtype=np.int64))
    T = Q.table
    while True:
        try:
            with mpmath.workdps(dps):
                a = [[alpha[x][y].to_mpc(dps) for y in range(n)] for x in range(n)]
                nu = [mpmath.fprod(row) for row in a]
                mu = [mpmath.root(1 / v, n) for v in nu]
                c = np.zeros((n, n), dtype=np.int64)
                for x in range(n):
                    for y in range(n):
                        z = a[x][y] * mu[x] * mu[y] / mu[int(T[x, y])]
                        c[x, y] = root_exponent(z, n)
            break
        except PrecisionError:
            if dps >= MAX_DPS:
                raise
            dps *= 2
    beta = Cocycle(base, n, c)
    if not beta.check():
        raise TheoremViolation("finite-order representative fails the exact cocycle checks")
    return beta


@dataclass
class CocycleClassReport:
    """Order of a cocycle class in H^2(Q, C^x) with the solver data behind it."""

    order: int
    primes: list
    witness: dict = field(default_factory=dict)


def _tree_parametrization(Q, c, scale):
    """Coboundary system reduced along a spanning tree of the Cayley graph.

    Unknowns m(x) are written as L[x].m_gens + k K[x] using the equations
    for (parent, generator) edges, m(1) = 0.  Returns (A, b, L, K) where
    the remaining equations read A m_gens == k b.
    """
    n = Q.order
    gens = list(Q.generators)
    r = len(gens)
    L = np.zeros((n, r), dtype=object)
    K = np.zeros(n, dtype=object)
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for j, s in enumerate(gens):
                y = int(Q.table[x, s])
                if not seen[y]:
                    seen[y] = True
                    # m(x s) = m(x) + m(s) - k scale c(x, s)
                    L[y] = L[x].copy()
                    L[y][j] += 1
                    K[y] = K[x] - scale * int(c[x, s])
                    nxt.append(y)
        frontier = nxt
    Li = L.astype(np.int64)
    Ki = K.astype(np.int64)
    T = Q.table
    A = Li[:, None, :] + Li[None, :, :] - Li[T]
    b = scale * c - (Ki[:, None] + Ki[None, :] - Ki[T])
    return A.reshape(n * n, r), b.reshape(n * n), Li, Ki


def _coboundary_system(beta):
    Q = beta.Q
    M = beta.modulus * Q.order
    A, b, L, K = _tree_parametrization(Q, beta.exponents % beta.modulus, Q.order)
    rows = np.concatenate([A % M, (b % M)[:, None]], axis=1)
    rows = np.unique(rows, axis=0)
    rows = rows[rows.any(axis=1)]
    return rows, M, L, K


def _solve_coboundary(beta, k):
    """m: Q -> Z/M with k |Q| c == delta m (mod M), M = q|Q|, or None."""
    rows, M, L, K = _coboundary_system(beta)
    r = L.shape[1]
    A = rows[:, :r].tolist()
    b = [(k * v) % M for v in rows[:, r].tolist()]
    if not A:
        x = [0] * r
    else:
        x, _ = solve_mod(A, b, M)
        if x is None:
            return None
    m = (L @ np.array(x, dtype=np.int64) + k * K) % M
    # exact re-check on every pair
    c = beta.exponents
    T = beta.Q.table
    dm = m[:, None] + m[None, :] - m[T]
    if ((k * beta.Q.order * c - dm) % M).any():
        raise TheoremViolation("coboundary solution fails the exact check")
    return m


def class_order(beta):
    """Order of [beta] in H^2(Q, C^x).

    A mu_q-valued cocycle is a C^x-coboundary iff it is the coboundary of a
    function with values in mu_{q|Q|}, so the order is the least k >= 1 with
    k |Q| c == delta m (mod q|Q|) solvable.
    """
    Q = beta.Q
    if Q.order == 1 or beta.modulus == 1:
        return CocycleClassReport(1, [], {"modulus": beta.modulus * Q.order, "equations": 0, "unknowns": 0})
    rows, M, L, K = _coboundary_system(beta)
    r = L.shape[1]
    if len(rows) == 0:
        k = 1
    else:
        _, k = solve_mod(rows[:, :r].tolist(), rows[:, r].tolist(), M)
    if _solve_coboundary(beta, k) is None:
        raise TheoremViolation("minimal exponent %d does not give a coboundary" % k)
    return CocycleClassReport(k, prime_factors(k), {
        "modulus": M,
        "equations": int(len(rows)),
        "unknowns": r,
        "minimal_exponent": k,
    })


def pi_project(beta, pi):
    """Cohomologous cocycle with values in mu_{q_pi}; the class order must be a pi-number."""
    pi = _pi(pi)
    q = beta.modulus
    qp = pi.part(q)
    qc = q // qp
    if qc == 1:
        return beta
    order = class_order(beta).order
    if not pi.is_pi_number(order):
        raise TripleError("cohomology class order %d is not a pi-number" % order)
    c = beta.exponents % q
    cp = (c * pow(qc, -1, qp)) % qp if qp > 1 else np.zeros_like(c)
    cc = (c * pow(qp, -1, qc)) % qc
    comp = Cocycle(beta.base, qc, cc)
    m = _solve_coboundary(comp, 1)
    if m is None:
        raise TheoremViolation("pi'-component of a pi-class is not a coboundary")
    # beta = beta_pi * comp and comp = delta of a mu_{qc |Q|}-valued function
    return Cocycle(beta.base, qp, cp)


def shrink_to_order(beta, order=None):
    """Cohomologous cocycle with values in mu_n, n the class order.

    If n |Q| c == delta m (mod q|Q|) then beta / delta(zeta_{n q |Q|}^m) takes
    values zeta_n^j with j = (n |Q| c - delta m) / (q |Q|).
    """
    n = class_order(beta).order if order is None else order
    if beta.modulus == n:
        return beta
    Q = beta.Q
    M = beta.modulus * Q.order
    m = _solve_coboundary(beta, n)
    if m is None:
        raise TheoremViolation("class order %d does not kill the class" % n)
    T = Q.table
    num = n * Q.order * (beta.exponents % beta.modulus) - (m[:, None] + m[None, :] - m[T])
    assert not (num % M).any()
    out = Cocycle(beta.base, n, (num // M) % n)
    if not out.check():
        raise TheoremViolation("shrunken cocycle fails the exact checks")
    return out


def cohomology_checks(t, report):
    """Divisibility facts relating the class order to theta and to extendible overgroups."""
    n = report.order
    d, o = t.theta_degree, t.theta_det_order
    rows = []
    for ov in pi_prime_overgroups(t.G, t.N, PrimeSet()):
        H = ov.subgroup
        if extensions(t, H):
            idx = t.G.order // H.order
            rows.append({"overgroup_order": H.order, "index": idx, "divides": idx % n == 0})
    out = {
        "primes_match": set(report.primes) == set(extendibility_prime_set(t).primes),
        "divides_degree_times_det_order": (d * o) % n == 0,
        "divides_index_over_degree": (t.N.order // d) % n == 0,
        "extendible_overgroups": rows,
    }
    out["pass"] = out["primes_match"] and out["divides_degree_times_det_order"] and \
        out["divides_index_over_degree"] and all(r["divides"] for r in rows)
    return out


# -- central extension ----------------------------------------------------------


class CentralExtensionGroup:
    """Pairs (g, k), g in G and k mod m, with (g1,k1)(g2,k2) = (g1 g2, c(g1,g2)+k1+k2).

    The pair (g, k) has index g*m + k in ``group``.
    """

    def __init__(self, triple, beta):
        G = triple.G
        m = beta.modulus
        if G.order * m > order_cap():
            raise GroupOrderError("central extension of order %d exceeds cap %d" % (G.order * m, order_cap()))
        self.triple = triple
        self.cocycle = beta
        self.m = m
        proj = triple.qmap.projection
        # trivial value group: G^ is G itself (same indices, same table)
        n = G.order
        if m == 1:
            self.group = G
            return
        # triples sharing N and the cocycle share G^ (and its character table)
        key = ("extension", triple.N.mask, m, (beta.exponents % m).tobytes())
        if key in G._cache:
            self.group = G._cache[key]
            return
        cG = (beta.exponents % m)[proj[:, None], proj[None, :]]
        g = G.table.astype(np.int64)
        k = np.arange(m)
        # table[(g1,k1),(g2,k2)]
        base = g[:, None, :, None] * m
        tw = (cG[:, None, :, None] + k[None, :, None, None] + k[None, None, None, :]) % m
        table = (base + tw).reshape(n * m, n * m)
        gens = [int(s) * m for s in G.generators] + [1]
        self.group = FiniteGroup.from_table(table, generators=gens, name="extension")
        self._check()
        G._cache[key] = self.group

    def pair(self, i):
        return divmod(int(i), self.m)

    def index(self, g, k=0):
        return int(g) * self.m + int(k) % self.m

    @property
    def Z(self):
        return self.group.subgroup(range(self.m), [1] if self.m > 1 else [])

    @property
    def N(self):
        N = self.triple.N
        return self.group.subgroup([int(a) * self.m for a in N.members], [int(a) * self.m for a in N.generators])

    @property
    def N_hat(self):
        N = self.triple.N
        mem = [int(a) * self.m + k for a in N.members for k in range(self.m)]
        return self.group.subgroup(mem, [int(a) * self.m for a in N.generators] + ([1] if self.m > 1 else []))

    def lambda_hat(self, i):
        """zeta_m^-k on (a, k) in N^."""
        return Cyclotomic.zeta(self.m, -(int(i) % self.m))

    def _check(self):
        E, m, G = self.group, self.m, self.triple.G
        T = E.table
        # projection is a homomorphism onto G (all pairs of generators and a sample)
        rng = np.random.default_rng(7)
        pairs = [(int(a), int(b)) for a, b in rng.integers(0, E.order, (64, 2))]
        for a, b in pairs:
            if int(T[a, b]) // m != G.mul(a // m, b // m):
                raise TheoremViolation("projection to G is not a homomorphism")
        for a, b, c in rng.integers(0, E.order, (64, 3)):
            if T[T[a, b], c] != T[a, T[b, c]]:
                raise TheoremViolation("multiplication is not associative")
        # Z = kernel of the projection, central
        for z in range(m):
            for g in range(0, E.order, m):
                if T[z, g] != T[g, z]:
                    raise TheoremViolation("Z is not central")
        # N^/N central in G^/N: commutators of N^ with G^ lie in N x {0}
        N = self.triple.N
        for a in list(N.generators) + [0]:
            for k in range(m):
                x = int(a) * m + k
                for g in E.generators:
                    com = E.commutator(x, g)
                    if com % m != 0 or (com // m) not in N:
                        raise TheoremViolation("N^/N is not central in G^/N")


def central_extension(t, beta):
    return CentralExtensionGroup(t, beta)


def locate_tau(E):
    """First irreducible character of G^ extending theta with Z acting by zeta_m^k."""
    t = E.triple
    theta = t.theta
    d = t.theta_degree
    m = E.m
    Eg = E.group
    N = t.N
    for tau in character_table(Eg):
        if tau.values[0] != d:
            continue
        if any(tau(k) != Cyclotomic.zeta(m, k) * d for k in range(m)):
            continue
        ok = True
        for c in N.group.classes:
            a = int(N.members[c.rep])
            if tau(a * m) != theta.values[N.group.class_of[c.rep]]:
                ok = False
                break
        if ok:
            return tau
    raise TheoremViolation("no character of the central extension lies over theta as required")


def _linear_exponents(t):
    """(L, k) with theta(a) = zeta_L^k[a] for every a in N; theta linear."""
    N = t.N.group
    L = N.exponent
    k = np.zeros(N.order, dtype=np.int64)
    per_class = []
    for i, c in enumerate(N.classes):
        o = int(N.orders[c.rep])
        v = t.theta.values[i]
        j = next(j for j in range(o) if v == Cyclotomic.zeta(o, j))
        per_class.append(j * (L // o))
    for a in range(N.order):
        k[a] = per_class[int(N.class_of[a])]
    return L, k


def linear_representative(t, section=None):
    """The mu_|Q| representative for linear theta, computed without floating point.

    Here alpha(x, y) = theta(n)^-1 = zeta_L^a(x,y).  With s(x) = Sum_y a(x, y)
    and mu(x) = zeta_{Lq}^-s(x), beta = alpha mu(x) mu(y) / mu(xy) has
    exponent q a(x,y) - s(x) - s(y) + s(xy) over Lq, a multiple of L.
    """
    if t.theta_degree != 1:
        raise TripleError("theta is not linear")
    G, N, qm = t.G, t.N, t.qmap
    Q = qm.quotient
    n = Q.order
    if n == 1:
        return Cocycle(qm, 1, np.zeros((1, 1), dtype=np.int64))
    sec = np.array(_section(t, section), dtype=np.int64)
    L, k = _linear_exponents(t)
    T = Q.table
    tab = G.table
    # n(x, y) = s(x) s(y) s(xy)^-1
    prod = tab[sec[:, None], sec[None, :]]
    nxy = tab[prod, G.inv[sec[T]]]
    if not np.isin(nxy, N.members).all():
        raise TheoremViolation("transversal product left the coset")
    a = (-k[N.local_map[nxy]]) % L
    srow = a.sum(axis=1) % L
    e = (n * a - srow[:, None] - srow[None, :] + srow[T]) % (L * n)
    if (e % L).any():
        raise TheoremViolation("linear representative is not mu_q-valued")
    beta = Cocycle(qm, n, (e // L).astype(np.int64))
    if not beta.check():
        raise TheoremViolation("linear representative fails the exact cocycle checks")
    return beta


def triple_cocycle(t, section=None):
    """(beta, class report) for the triple: mu_|Q|-valued representative of its factor set class."""
    key = ("cocycle", None if section is None else tuple(int(s) for s in section))
    if key not in t._cache:
        if t.theta_degree == 1:
            beta = linear_representative(t, section)
        else:
            rep = irreducible_rep(t.N.group, t.theta)
            alpha = factor_set(t, rep, section)
            beta = finite_order_representative(alpha, t.qmap)
        t._cache[key] = (beta, class_order(beta))
    return t._cache[key]


def quasi_ext_cocycle(t, pi, shrink=True, section=None, certify=True):
    """Normalized pi-quasi extension of theta through the central extension G^.

    With ``shrink`` the value group is cut down to the class order before
    G^ is built (keeps |G^| = |G| * order).
    """
    pi = _pi(pi)
    G, N = t.G, t.N
    ext_primes = extendibility_prime_set(t)
    if not set(ext_primes.primes) <= set(pi.primes):
        raise TripleError("obstruction primes %s not contained in pi" % sorted(ext_primes.primes))
    beta, report = triple_cocycle(t, section)
    if set(report.primes) != set(ext_primes.primes):
        raise TheoremViolation("class order primes %s differ from the obstruction set" % report.primes)
    beta = pi_project(beta, pi)
    if shrink:
        beta = shrink_to_order(beta, report.order)
    if not pi.is_pi_number(beta.modulus):
        raise TheoremViolation("value group is not a pi-group")
    key = ("extension", beta.modulus, (beta.exponents % beta.modulus).tobytes())
    if key not in t._cache:
        E = central_extension(t, beta)
        t._cache[key] = (E, locate_tau(E))
    E, tau = t._cache[key]
    Eg, m = E.group, E.m

    def value(g, k=0):
        x = E.index(g, k)
        xp = Eg.pi_part_index(x, pi)
        if xp // m not in N:
            return Cyclotomic(0)
        return E.lambda_hat(xp) * tau(x)

    vals = [value(c.rep) for c in G.classes]
    # well-definedness: other preimages and other class members
    small = G.order <= 200
    for i, c in enumerate(G.classes):
        members = c.members if small else list(islice(c.members, 4))
        for g in members:
            for k in (range(m) if small else [0, m - 1]):
                if value(int(g), k) != vals[i]:
                    raise TheoremViolation("quasi-extension depends on the chosen preimage")
    q = QuasiExtension(t, pi, ClassFunction(G, vals), True, "cocycle")
    q.cocycle = beta
    q.class_report = report
    if certify and not verify_quasi_ext(q)["pass"]:
        raise TheoremViolation("cocycle construction failed certification")
    return q
