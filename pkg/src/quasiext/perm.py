"""Explicit finite permutation groups with full element enumeration.

Points are 0-based and permutations are in one-line notation.  Products
compose left to right: ``(p * q)[x] == q[p[x]]``, so points are acted on from
the right.  A :class:`FiniteGroup` stores every element together with its
Cayley table; all later work (classes, subgroups, quotients, characters) is
done on element indices.  Element index order is lexicographic order of the
one-line notation, so the identity is always index 0.
"""

import os
from collections import namedtuple
from functools import reduce
from math import gcd

import numpy as np

from .cyclotomic import prime_factors

__all__ = [
    "ConjugacyClass",
    "FiniteGroup",
    "GroupOrderError",
    "OvergroupClass",
    "Permutation",
    "PrimeSet",
    "QuotientMap",
    "SubgroupHandle",
    "center",
    "centralizer",
    "centralizer_mod_N",
    "derived_subgroup",
    "is_nilpotent_members",
    "normalizer",
    "conjugacy_classes",
    "element_order",
    "generate",
    "normal_subgroups",
    "order_cap",
    "pi_parts",
    "pi_prime_overgroups",
    "quotient",
    "subgroup_classes",
    "sylow_subgroup",
]

DEFAULT_ORDER_CAP = 2000


def order_cap():
    """Largest group order we are willing to enumerate (env QUASIEXT_ORDER_CAP)."""
    return int(os.environ.get("QUASIEXT_ORDER_CAP", DEFAULT_ORDER_CAP))


class GroupOrderError(ValueError):
    pass


def _lcm(a, b):
    return a // gcd(a, b) * b


class Permutation:
    """A permutation of {0, ..., degree-1} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation: %r" % (images,))
        self.images = images

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        # apply self first, then other
        o = other.images
        return Permutation._raw(tuple(o[i] for i in self.images))

    @classmethod
    def _raw(cls, images):
        p = object.__new__(cls)
        p.images = images
        return p

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self):
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self):
        return reduce(_lcm, (len(c) for c in self.cycles()), 1)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


class PrimeSet(frozenset):
    """A finite set of primes (the pi of pi-parts and pi-numbers)."""

    def __new__(cls, primes=()):
        primes = list(primes)
        for p in primes:
            if not isinstance(p, (int, np.integer)) or p < 2 or prime_factors(int(p)) != (int(p),):
                raise ValueError("%r is not a prime" % (p,))
        if len(set(primes)) != len(primes):
            raise ValueError("duplicate primes in %r" % (primes,))
        return super().__new__(cls, (int(p) for p in primes))

    @property
    def primes(self):
        return tuple(sorted(self))

    def part(self, n):
        """The pi-part of the positive integer n."""
        r = 1
        for p in prime_factors(n):
            if p in self:
                while n % p == 0:
                    n //= p
                    r *= p
        return r

    def is_pi_number(self, n):
        return self.part(n) == n

    def is_pi_prime_number(self, n):
        return self.part(n) == 1

    def complement(self, n):
        """Primes dividing n that are not in this set."""
        return PrimeSet(p for p in prime_factors(n) if p not in self)

    def __repr__(self):
        return "PrimeSet(%s)" % (list(self.primes),)


def element_order(g):
    """Order of a permutation (lcm of its cycle lengths)."""
    return g.order()


def _crt_exponents(m, pi):
    # exponents (a, b) with g^a the pi-part and g^b the pi'-part of an element of order m
    mp = pi.part(m)
    mq = m // mp
    if mq == 1:
        return 1 % m if m > 1 else 0, 0
    if mp == 1:
        return 0, 1 % m
    a = mq * pow(mq, -1, mp)
    b = mp * pow(mp, -1, mq)
    return a % m, b % m


def pi_parts(g, pi):
    """Split a permutation into commuting pi- and pi'-parts (powers of g)."""
    pi = pi if isinstance(pi, PrimeSet) else PrimeSet(pi)
    a, b = _crt_exponents(g.order(), pi)
    return g ** a, g ** b


ConjugacyClass = namedtuple("ConjugacyClass", "rep members size")


class FiniteGroup:
    """A finite group given by its full, canonically ordered element list.

    Build one with :meth:`from_generators` (permutations) or
    :meth:`from_table` (a Cayley table whose row/column 0 is the identity;
    elements are then realized by the right regular action).
    """

    def __init__(self, table, elements=None, generators=None, name=None):
        self.table = table
        self.order = table.shape[0]
        self._elements = elements
        self._index = None
        self.name = name
        self.inv = np.argmin(table, axis=1)  # identity has index 0
        assert (table[np.arange(self.order), self.inv] == 0).all()
        self.generators = list(generators) if generators is not None else self._greedy_generators()
        self._cache = {}
        self._subgroups = {}

    # -- construction ---------------------------------------------------

    @classmethod
    def from_generators(cls, generators, degree=None, cap=None, name=None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            degree = gens[0].degree if gens else 1
        if any(g.degree != degree for g in gens):
            raise ValueError("generators have mixed degrees")
        cap = order_cap() if cap is None else cap
        ident = tuple(range(degree))
        seen = {ident}
        frontier = [ident]
        gimg = [g.images for g in gens]
        while frontier:
            nxt = []
            for e in frontier:
                for gi in gimg:
                    y = tuple(gi[i] for i in e)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > cap:
                            raise GroupOrderError("group order exceeds cap %d" % cap)
            frontier = nxt
        elems = sorted(seen)
        arr = np.array(elems, dtype=np.int64).reshape(len(elems), degree)
        table = _perm_table(arr)
        perms = [Permutation._raw(e) for e in elems]
        lookup = {e: i for i, e in enumerate(elems)}
        gens_idx = []
        for g in gens:
            i = lookup[g.images]
            if i != 0 and i not in gens_idx:
                gens_idx.append(i)
        grp = cls(table, perms, gens_idx, name=name)
        grp._index = lookup
        return grp

    @classmethod
    def from_table(cls, table, generators=None, name=None):
        table = np.asarray(table)
        if table.shape[0] > order_cap():
            raise GroupOrderError("group order %d exceeds cap %d" % (table.shape[0], order_cap()))
        return cls(table, None, generators, name=name)

    def _greedy_generators(self):
        gens = []
        members = {0}
        for i in range(self.order):
            if i not in members:
                gens.append(i)
                members = self.closure_set(gens)
                if len(members) == self.order:
                    break
        return gens

    # -- elements ---------------------------------------------------------

    def element(self, i):
        if self._elements is not None:
            return self._elements[i]
        return Permutation._raw(tuple(int(x) for x in self.table[:, i]))

    @property
    def elements(self):
        return [self.element(i) for i in range(self.order)]

    @property
    def degree(self):
        return self.element(0).degree

    def index(self, perm):
        if self._index is None:
            self._index = {self.element(i).images: i for i in range(self.order)}
        key = perm.images if isinstance(perm, Permutation) else tuple(perm)
        try:
            return self._index[key]
        except KeyError:
            raise ValueError("%r is not an element of the group" % (perm,)) from None

    def __len__(self):
        return self.order

    def __repr__(self):
        return "<FiniteGroup %sorder %d>" % ((self.name + " ") if self.name else "", self.order)

    def mul(self, i, j):
        return int(self.table[i, j])

    def power(self, i, k):
        k %= int(self.orders[i])
        r = 0
        b = i
        while k:
            if k & 1:
                r = self.table[r, b]
            b = self.table[b, b]
            k >>= 1
        return int(r)

    def conj(self, x, g):
        """x^g = g^-1 x g."""
        return int(self.table[self.inv[g], self.table[x, g]])

    def commutator(self, x, y):
        return int(self.table[self.table[self.inv[x], self.inv[y]], self.table[x, y]])

    @property
    def orders(self):
        if "orders" not in self._cache:
            n = self.order
            out = np.zeros(n, dtype=np.int64)
            cur = np.arange(n)
            k = 1
            todo = np.ones(n, dtype=bool)
            while todo.any():
                hit = todo & (cur == 0)
                out[hit] = k
                todo &= ~hit
                cur = self.table[cur, np.arange(n)]
                k += 1
            self._cache["orders"] = out
        return self._cache["orders"]

    @property
    def exponent(self):
        return int(reduce(_lcm, (int(o) for o in set(self.orders.tolist())), 1))

    def is_abelian(self):
        return bool((self.table == self.table.T).all())

    def pi_part_index(self, i, pi):
        a, _ = _crt_exponents(int(self.orders[i]), pi)
        return self.power(i, a)

    def pi_prime_part_index(self, i, pi):
        _, b = _crt_exponents(int(self.orders[i]), pi)
        return self.power(i, b)

    def closure_set(self, gens, start=None, limit=None, allowed=None):
        """Set of indices of the subgroup generated by ``gens`` (and ``start``).

        Returns None if the closure grows past ``limit`` elements or reaches
        an index outside the boolean mask ``allowed``.
        """
        members = set(start) if start is not None else {0}
        members.add(0)
        gens = [int(g) for g in gens if g != 0]
        frontier = list(members)
        tab = self.table
        while frontier:
            nxt = []
            for e in frontier:
                row = tab[e]
                for s in gens:
                    y = int(row[s])
                    if y not in members:
                        if allowed is not None and not allowed[y]:
                            return None
                        members.add(y)
                        nxt.append(y)
            if limit is not None and len(members) > limit:
                return None
            frontier = nxt
        return members

    # -- subgroups --------------------------------------------------------

    def subgroup(self, members, generators=None):
        """Cached :class:`SubgroupHandle` for a closed set of element indices."""
        members = np.array(sorted(int(m) for m in members), dtype=np.int64)
        mask = _mask(members)
        h = self._subgroups.get(mask)
        if h is None:
            if generators is None:
                generators = _pick_generators(self, members)
            h = SubgroupHandle(self, members, mask, [int(g) for g in generators])
            self._subgroups[mask] = h
        return h

    def whole(self):
        return self.subgroup(range(self.order), self.generators)

    def trivial(self):
        return self.subgroup([0], [])

    @property
    def classes(self):
        return conjugacy_classes(self)

    @property
    def class_of(self):
        conjugacy_classes(self)
        return self._cache["class_of"]

    def class_sizes(self):
        return [c.size for c in self.classes]

    def power_map(self, k):
        """Class index of g^k for a representative g of each class."""
        key = ("powermap", k)
        if key not in self._cache:
            co = self.class_of
            self._cache[key] = [int(co[self.power(c.rep, k)]) for c in self.classes]
        return self._cache[key]

    def inverse_classes(self):
        if "invclass" not in self._cache:
            co = self.class_of
            self._cache["invclass"] = [int(co[self.inv[c.rep]]) for c in self.classes]
        return self._cache["invclass"]


def _perm_table(arr):
    """Cayley table of an array of permutations sorted lexicographically."""
    n, d = arr.shape
    # base: points whose images determine an element
    alive = np.ones(n, dtype=bool)
    base = []
    for x in range(d):
        if alive.sum() == 1:
            break
        if (arr[alive, x] != x).any():
            base.append(x)
            alive &= arr[:, x] == x
    if not base:
        return np.zeros((1, 1), dtype=np.int64)
    if float(d) ** len(base) < 2 ** 62:
        weights = np.array([d ** k for k in range(len(base))], dtype=np.int64)
        keys = arr[:, base] @ weights
        order = np.argsort(keys)
        skeys = keys[order]
        table = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            # (p_i * p_j)[b] = p_j[p_i[b]]
            prod = arr[:, arr[i, base]] @ weights
            table[i] = order[np.searchsorted(skeys, prod)]
        return table
    lookup = {tuple(r): i for i, r in enumerate(arr.tolist())}
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        prods = arr[:, arr[i]]
        table[i] = [lookup[tuple(r)] for r in prods.tolist()]
    return table


def _mask(members):
    m = 0
    for i in members:
        m |= 1 << int(i)
    return m


def _pick_generators(G, members):
    gens = []
    got = {0}
    for i in members:
        i = int(i)
        if i not in got:
            gens.append(i)
            got = G.closure_set(gens)
            if len(got) == len(members):
                break
    return gens


class SubgroupHandle:
    """A subgroup of a :class:`FiniteGroup`, as a sorted set of element indices.

    ``group`` is the subgroup in its own right; its element i is the parent
    element ``members[i]``.
    """

    def __init__(self, parent, members, mask, generators):
        self.parent = parent
        self.members = members
        self.mask = mask
        self.generators = generators
        self.order = len(members)
        self._group = None
        self._local = None
        self._cache = {}

    @property
    def group(self):
        if self._group is None:
            P = self.parent
            local = self.local_map
            sub = local[P.table[np.ix_(self.members, self.members)]]
            elems = [P.element(int(m)) for m in self.members]
            grp = FiniteGroup(sub, elems, [int(local[g]) for g in self.generators])
            grp.parent_handle = self
            self._group = grp
        return self._group

    @property
    def local_map(self):
        """Array parent index -> local index (-1 outside)."""
        if self._local is None:
            loc = np.full(self.parent.order, -1, dtype=np.int64)
            loc[self.members] = np.arange(self.order)
            self._local = loc
        return self._local

    def __contains__(self, i):
        return bool((self.mask >> int(i)) & 1)

    def contains_subgroup(self, other):
        return (other.mask & ~self.mask) == 0

    def is_normal(self):
        if "normal" not in self._cache:
            P = self.parent
            ok = True
            for g in P.generators:
                conj = P.table[P.inv[g]][P.table[self.members, g]]
                if _mask(conj) != self.mask:
                    ok = False
                    break
            self._cache["normal"] = ok
        return self._cache["normal"]

    def conjugate(self, g):
        P = self.parent
        conj = P.table[P.inv[g]][P.table[self.members, g]]
        return P.subgroup(conj)

    def relative(self, inner):
        """``inner`` (a subgroup of the same parent inside self) as a subgroup of ``self.group``."""
        if not self.contains_subgroup(inner):
            raise ValueError("subgroup is not contained in this subgroup")
        loc = self.local_map
        return self.group.subgroup(loc[inner.members], [int(loc[g]) for g in inner.generators])

    def index_in_parent(self):
        return self.parent.order // self.order

    def __eq__(self, other):
        return isinstance(other, SubgroupHandle) and other.parent is self.parent and other.mask == self.mask

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __repr__(self):
        return "<Subgroup of order %d in %r>" % (self.order, self.parent)


def conjugacy_classes(G):
    """Conjugacy classes of G, ordered by size then least element (identity first)."""
    if "classes" in G._cache:
        return G._cache["classes"]
    n = G.order
    label = np.full(n, -1, dtype=np.int64)
    raw = []
    tab, inv = G.table, G.inv
    allg = np.arange(n)
    for x in range(n):
        if label[x] >= 0:
            continue
        orbit = np.unique(tab[inv[allg], tab[x, allg]])
        label[orbit] = len(raw)
        raw.append(orbit)
    order = sorted(range(len(raw)), key=lambda k: (len(raw[k]), int(raw[k][0])))
    classes = []
    class_of = np.empty(n, dtype=np.int64)
    for new, old in enumerate(order):
        mem = raw[old]
        classes.append(ConjugacyClass(int(mem[0]), mem, len(mem)))
        class_of[mem] = new
    G._cache["classes"] = classes
    G._cache["class_of"] = class_of
    return classes


def generate(parent, gens):
    """Subgroup of ``parent`` generated by the given permutations (or indices)."""
    idx = []
    for g in gens:
        i = int(g) if isinstance(g, (int, np.integer)) else parent.index(g)
        if i != 0:
            idx.append(i)
    return parent.subgroup(parent.closure_set(idx), idx)


def _p_elements(G, p):
    o = G.orders
    return [i for i in range(G.order) if PrimeSet([p]).is_pi_number(int(o[i]))]


def normalizer(G, H):
    """Normalizer of the subgroup H in G."""
    key = ("normalizer", H.mask)
    if key not in G._cache:
        tab, inv = G.table, G.inv
        mem = [g for g in range(G.order) if _mask(tab[inv[g]][tab[H.members, g]]) == H.mask]
        G._cache[key] = G.subgroup(mem)
    return G._cache[key]


def sylow_subgroup(G, p):
    """A Sylow p-subgroup of G, grown deterministically through normalizers."""
    key = ("sylow", p)
    if key in G._cache:
        return G._cache[key]
    target = PrimeSet([p]).part(G.order)
    P = G.trivial()
    pel = _p_elements(G, p)
    while P.order < target:
        Nm = normalizer(G, P)
        for y in pel:
            if y in Nm and y not in P:
                mem = G.closure_set(P.generators + [y])
                P = G.subgroup(mem, P.generators + [y])
                break
        else:  # pragma: no cover - Sylow's theorem
            raise AssertionError("normalizer growth stalled")
    G._cache[key] = P
    return P


class QuotientMap:
    """The natural map G -> G/N with a chosen transversal.

    ``quotient`` acts faithfully on the right cosets of N; ``projection[g]``
    is the quotient index of the coset Ng and ``section[q]`` the least
    element of coset q.
    """

    def __init__(self, source, kernel):
        if not kernel.is_normal():
            raise ValueError("subgroup is not normal")
        G, N = source, kernel
        n = G.order
        coset = np.full(n, -1, dtype=np.int64)
        reps = []
        for g in range(n):
            if coset[g] < 0:
                coset[G.table[N.members, g]] = len(reps)
                reps.append(g)
        reps = np.array(reps, dtype=np.int64)
        # action of g on cosets: Nr -> Nrg
        gens = [g for g in G.generators]
        perm_gens = [Permutation(coset[G.table[reps, g]]) for g in gens] or [Permutation.identity(len(reps))]
        Q = FiniteGroup.from_generators(perm_gens, degree=len(reps))
        proj = np.empty(n, dtype=np.int64)
        cache = {}
        for g in range(n):
            key = tuple(coset[G.table[reps, g]].tolist())
            if key not in cache:
                cache[key] = Q.index(key)
            proj[g] = cache[key]
        section = np.full(Q.order, -1, dtype=np.int64)
        for g in range(n):
            if section[proj[g]] < 0:
                section[proj[g]] = g
        self.source = G
        self.kernel = N
        self.quotient = Q
        self.projection = proj
        self.section = section
        self.coset_of = coset

    def lift_subgroup(self, K):
        """Full preimage in the source of a subgroup K of the quotient."""
        mem = np.nonzero(np.isin(self.projection, K.members))[0]
        gens = [int(self.section[k]) for k in K.generators] + list(self.kernel.generators)
        return self.source.subgroup(mem, gens)

    def image_subgroup(self, H):
        """Image in the quotient of a subgroup H of the source."""
        mem = np.unique(self.projection[H.members])
        return self.quotient.subgroup(mem)


def quotient(G, N):
    """Cached :class:`QuotientMap` for N normal in G."""
    key = ("quotient", N.mask)
    if key not in G._cache:
        G._cache[key] = QuotientMap(G, N)
    return G._cache[key]


SubgroupClass = namedtuple("SubgroupClass", "rep conjugates")


def subgroup_classes(G, element_filter=None, predicate=None, max_order=None):
    """Conjugacy classes of subgroups of G satisfying a hereditary condition.

    Subgroups are found by repeatedly joining cyclic subgroups onto class
    representatives.  ``element_filter`` (boolean array) restricts which
    elements may occur, ``predicate`` is tested on each candidate's member
    set and ``max_order`` prunes large joins.  All three must be inherited by
    subgroups for the scan to be complete.  Returns classes sorted by order,
    then by least conjugate mask.
    """
    n = G.order
    tab, inv = G.table, G.inv
    if element_filter is None:
        element_filter = np.ones(n, dtype=bool)
    cyclic_gens = {}
    for x in range(1, n):
        if not element_filter[x]:
            continue
        mem = frozenset(G.closure_set([x]))
        if max_order is not None and len(mem) > max_order:
            continue
        cyclic_gens.setdefault(mem, x)
    cyc = sorted(cyclic_gens.items(), key=lambda kv: (len(kv[0]), kv[1]))

    found = {}  # mask -> class id
    classes = []
    allg = np.arange(n)

    def register(members, gens):
        mem = np.array(sorted(members), dtype=np.int64)
        m = _mask(mem)
        if m in found:
            return
        if predicate is not None and not predicate(mem):
            found[m] = -1
            return
        conj_masks = set()
        for g in allg:
            conj_masks.add(_mask(tab[inv[g]][tab[mem, g]]))
        cid = len(classes)
        for cm in conj_masks:
            found[cm] = cid
        classes.append((mem, list(gens), sorted(conj_masks)))

    register([0], [])
    i = 0
    while i < len(classes):
        mem, gens, _ = classes[i]
        mset = set(mem.tolist())
        for cmem, x in cyc:
            if x in mset or cmem <= mset:
                continue
            limit = max_order
            members = G.closure_set(gens + [x], start=mset, limit=limit, allowed=element_filter)
            if members is None:
                continue
            register(members, gens + [x])
        i += 1
    out = []
    for mem, gens, conj in classes:
        h = G.subgroup(mem, gens)
        out.append(SubgroupClass(h, conj))
    out.sort(key=lambda c: (c.rep.order, c.conjugates[0]))
    return out


def normal_subgroups(G):
    """All normal subgroups of G, ordered by order then mask.

    Every normal subgroup is a union of classes, so joining class unions onto
    already found normal subgroups reaches all of them.
    """
    if "normals" not in G._cache:
        classes = conjugacy_classes(G)
        found = {1: G.trivial()}
        todo = [G.trivial()]
        while todo:
            N = todo.pop()
            nset = set(N.members.tolist())
            for c in classes[1:]:
                if int(c.rep) in nset:
                    continue
                mem = G.closure_set(c.members.tolist(), start=nset)
                h = G.subgroup(mem)
                if h.mask not in found:
                    found[h.mask] = h
                    todo.append(h)
        G._cache["normals"] = sorted(found.values(), key=lambda h: (h.order, h.mask))
    return G._cache["normals"]


OvergroupClass = namedtuple("OvergroupClass", "subgroup maximal")


def pi_prime_overgroups(G, N, pi):
    """Subgroups H with N <= H <= G and H/N a pi'-group, one per G-class.

    Each entry carries a flag marking H maximal among all such subgroups.
    Sorted by descending order.
    """
    pi = pi if isinstance(pi, PrimeSet) else PrimeSet(pi)
    key = ("piover", N.mask, pi)
    if key in G._cache:
        return G._cache[key]
    qm = quotient(G, N)
    Q = qm.quotient
    allowed = np.array([pi.is_pi_prime_number(int(o)) for o in Q.orders])
    limit = Q.order // pi.part(Q.order)
    classes = subgroup_classes(Q, element_filter=allowed, max_order=limit)
    out = []
    for c in classes:
        maximal = not any(
            d.rep.order > c.rep.order and any((c.rep.mask & ~dm) == 0 for dm in d.conjugates)
            for d in classes)
        out.append(OvergroupClass(qm.lift_subgroup(c.rep), maximal))
    out.sort(key=lambda o: (-o.subgroup.order, o.subgroup.mask))
    G._cache[key] = out
    return out


def centralizer_mod_N(G, N, x):
    """{g in G : [g, x] in N}, the preimage of the centralizer of Nx in G/N."""
    x = x if isinstance(x, (int, np.integer)) else G.index(x)
    mem = [g for g in range(G.order) if G.commutator(g, x) in N]
    return G.subgroup(mem)


def centralizer(G, x):
    return centralizer_mod_N(G, G.trivial(), x)


def center(G):
    mem = [z for z in range(G.order) if (G.table[z] == G.table[:, z]).all()]
    return G.subgroup(mem)


def derived_subgroup(G):
    comms = {G.commutator(a, b) for a in range(G.order) for b in G.generators}
    # normal closure of commutators of elements with generators
    mem = G.closure_set(sorted(comms))
    frontier = True
    while frontier:
        frontier = False
        for g in G.generators:
            for m in list(mem):
                y = G.conj(m, g)
                if y not in mem:
                    mem = G.closure_set(sorted(mem | {y}))
                    frontier = True
                    break
    return G.subgroup(mem)


def is_nilpotent_members(G, members):
    """True when the subgroup on ``members`` is nilpotent (each Sylow normal)."""
    order = len(members)
    orders = G.orders[members]
    for p in prime_factors(order) if order > 1 else ():
        pp = PrimeSet([p])
        count = sum(1 for o in orders if pp.is_pi_number(int(o)))
        if count != pp.part(order):
            return False
    return True
