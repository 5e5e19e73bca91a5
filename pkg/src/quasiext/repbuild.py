"""Exact irreducible matrix representations from the regular module.

For theta in Irr(N) we find v in C[N] with C[N]v isomorphic to an induced
module containing theta exactly once (v = e_psi for a linear psi of a
subgroup H with [theta_H, psi] = 1, or recursively an element generating
an irreducible C[H]-module).  Then u = e_theta v generates a submodule
affording theta, and a basis of the orbit span gives the matrices.
"""

from fractions import Fraction

from .chartab import character_table, inner_product, restrict
from .cyclotomic import Cyclotomic
from .linalg import CycloMatrix
from .perm import order_cap, subgroup_classes

__all__ = ["MatrixRep", "RepError", "irreducible_rep"]

DEFAULT_REP_CAP = 200


class RepError(ValueError):
    pass


class MatrixRep:
    """Images of every element of ``group`` (indexed like the group)."""

    def __init__(self, group, images):
        self.group = group
        self.images = images
        self.degree = images[0].shape[0]

    def __call__(self, a):
        return self.images[int(a)]

    def character_values(self):
        return [self.images[c.rep].trace() for c in self.group.classes]

    def check(self, theta=None, pairs=None):
        """Multiplicativity on generator pairs (and ``pairs``), identity, and trace = theta."""
        G = self.group
        if self.images[0] != CycloMatrix.identity(self.degree):
            return False
        todo = [(a, b) for a in G.generators for b in G.generators]
        todo += list(pairs or [])
        for a, b in todo:
            if self.images[a] @ self.images[b] != self.images[G.mul(a, b)]:
                return False
        if theta is not None and self.character_values() != list(theta.values):
            return False
        return True


def _vector_act(G, a, v):
    # (a . v)[a x] = v[x]
    out = [Cyclotomic(0)] * len(v)
    row = G.table[a]
    for x, c in enumerate(v):
        if not c.is_zero():
            out[int(row[x])] = c
    return out


def _idempotent_times(G, theta, v):
    """e_theta * v in C[G] with e_theta = theta(1)/|G| Sum theta(a^-1) a."""
    n = G.order
    coef = theta.values[0] * Fraction(1, n)
    # u[y] = sum_x v[x] theta(x y^-1)
    supp = [(x, c) for x, c in enumerate(v) if not c.is_zero()]
    tab, inv = G.table, G.inv
    co = G.class_of
    vals = theta.values
    out = []
    for y in range(n):
        s = Cyclotomic(0)
        iy = inv[y]
        for x, c in supp:
            t = vals[co[tab[x, iy]]]
            if not t.is_zero():
                s = s + c * t
        out.append(s * coef if not s.is_zero() else s)
    return out


def _linear_idempotent(H, psi, n_parent):
    """e_psi = 1/|H| Sum psi(h^-1) h as a vector on the parent's elements."""
    K = H.group
    v = [Cyclotomic(0)] * n_parent
    f = Fraction(1, K.order)
    for h in range(K.order):
        v[int(H.members[h])] = psi(int(K.inv[h])) * f
    return v


class _Echelon:
    """Incremental reduced row echelon basis of vectors."""

    def __init__(self):
        self.rows = []
        self.pivots = []

    def add(self, v):
        v = list(v)
        for r, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                v = [x - c * y if not y.is_zero() else x for x, y in zip(v, r)]
        p = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if p is None:
            return False
        inv = v[p].inverse()
        v = [x * inv if not x.is_zero() else x for x in v]
        for k, r in enumerate(self.rows):
            c = r[p]
            if not c.is_zero():
                self.rows[k] = [x - c * y if not y.is_zero() else x for x, y in zip(r, v)]
        # keep rows ordered by pivot
        pos = sum(1 for q in self.pivots if q < p)
        self.rows.insert(pos, v)
        self.pivots.insert(pos, p)
        return True


def _generating_vector(G, theta, depth=0):
    """v in C[G] such that C[G] v contains theta with multiplicity exactly 1."""
    d = int(theta.values[0].to_fraction())
    if d == 1:
        return _linear_idempotent(G.whole(), theta, G.order)
    if depth > 6:
        raise RepError("no multiplicity-one subgroup character found")
    if "rep_subgroups" not in G._cache:
        subs = [c.rep for c in subgroup_classes(G) if 1 < c.rep.order < G.order]
        # prefer linear characters, large subgroups first (small induced modules)
        subs.sort(key=lambda H: (-H.order, H.mask))
        G._cache["rep_subgroups"] = subs
    subs = G._cache["rep_subgroups"]
    fallback = None
    for H in subs:
        res = restrict(theta, H)
        for psi in character_table(H.group):
            m = inner_product(res, psi)
            if m == 1:
                if psi.values[0] == 1:
                    return _linear_idempotent(H, psi, G.order)
                if fallback is None:
                    fallback = (H, psi)
    if fallback is None:
        raise RepError("no multiplicity-one subgroup character found")
    H, psi = fallback
    vH = _generating_vector(H.group, psi, depth + 1)
    vH = _idempotent_times(H.group, psi, vH)
    v = [Cyclotomic(0)] * G.order
    for h, c in enumerate(vH):
        v[int(H.members[h])] = c
    return v


def irreducible_rep(N, theta, cap=None):
    """Exact representation of the group N affording the irreducible character theta."""
    cap = DEFAULT_REP_CAP if cap is None else cap
    if N.order > min(cap, order_cap()):
        raise RepError("group order %d exceeds the representation cap %d" % (N.order, cap))
    if theta.group is not N or character_table(N).position(theta) is None:
        raise RepError("theta is not an irreducible character of this group")
    d = int(theta.values[0].to_fraction())
    if d == 1:
        images = [CycloMatrix._raw([[theta(a)]]) for a in range(N.order)]
        return MatrixRep(N, images)
    v = _generating_vector(N, theta)
    u = _idempotent_times(N, theta, v)
    basis = _Echelon()
    if not basis.add(u):
        raise RepError("generating vector vanished")
    frontier = [u]
    while frontier:
        nxt = []
        for w in frontier:
            for s in N.generators:
                y = _vector_act(N, s, w)
                if basis.add(y):
                    nxt.append(y)
                    if len(basis.rows) > d:
                        raise RepError("submodule is larger than theta(1)")
        frontier = nxt
    if len(basis.rows) != d:
        raise RepError("submodule has dimension %d, expected %d" % (len(basis.rows), d))
    rows, piv = basis.rows, basis.pivots
    tab, inv = N.table, N.inv
    images = []
    for a in range(N.order):
        ia = inv[a]
        # column i holds the coordinates of a . b_i, read off at the pivots
        M = [[rows[i][int(tab[ia, piv[j]])] for i in range(d)] for j in range(d)]
        images.append(CycloMatrix._raw(M))
    rep = MatrixRep(N, images)
    if not rep.check(theta):
        raise RepError("constructed matrices do not afford theta")
    return rep
