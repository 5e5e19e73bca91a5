"""Character triples (G, N, theta) and pi-quasi extensions.

A pi-quasi extension of an invariant theta is a class function of G whose
restriction to every H with N <= H <= G and H/N a pi'-group is an
(irreducible) extension of theta.  It is normalized when it vanishes on
the elements g with g_pi outside N.
"""

from fractions import Fraction

from .chartab import (
    ClassFunction,
    character_table,
    det_order,
    inflate,
    inner_product,
    linear_characters,
    restrict,
)
from .cyclotomic import Cyclotomic, is_algebraic_integer
from .perm import (
    PrimeSet,
    center,
    centralizer,
    centralizer_mod_N,
    is_nilpotent_members,
    pi_prime_overgroups,
    quotient,
    subgroup_classes,
    sylow_subgroup,
)

__all__ = [
    "CharacterTriple",
    "DefectZeroSet",
    "QuasiExtension",
    "TheoremViolation",
    "TripleError",
    "bijection_dz",
    "canonical_extension",
    "closure_check",
    "compare_quasi_exts",
    "count_check",
    "dz_set",
    "extendibility_prime_set",
    "extensions",
    "integrality_certificates",
    "invariant_characters",
    "make_triple",
    "normalize",
    "over_theta_indices",
    "psi_map",
    "quasi_ext_canonical",
    "quasi_ext_search",
    "rdz_set",
    "verify_quasi_ext",
]


class TripleError(ValueError):
    """Invalid input: the data do not form a character triple, or a hypothesis fails."""


class TheoremViolation(AssertionError):
    """A computed certificate contradicts a theorem; always a bug."""


def _pi(pi):
    return pi if isinstance(pi, PrimeSet) else PrimeSet(pi)


def _int(c):
    f = c.to_fraction()
    assert f.denominator == 1
    return int(f)


# -- triples --------------------------------------------------------------------


class CharacterTriple:
    """A validated character triple; build it with :func:`make_triple`."""

    def __init__(self, G, N, theta, theta_index):
        self.G = G
        self.N = N
        self.theta = theta
        self.theta_index = theta_index
        self.qmap = quotient(G, N)
        self._cache = {}

    @property
    def Q(self):
        return self.qmap.quotient

    @property
    def theta_degree(self):
        return _int(self.theta.values[0])

    @property
    def theta_det_order(self):
        if "o" not in self._cache:
            self._cache["o"] = det_order(self.theta)
        return self._cache["o"]

    def __repr__(self):
        return "<CharacterTriple |G|=%d |N|=%d theta#%d>" % (self.G.order, self.N.order, self.theta_index)


def is_invariant(G, N, theta):
    """theta^g == theta for the generators g of G."""
    NG = N.group
    loc = N.local_map
    for g in G.generators:
        for c in NG.classes:
            x = int(N.members[c.rep])
            y = int(loc[G.conj(x, g)])
            if theta(y) != theta.values[NG.class_of[c.rep]]:
                return False
    return True


def invariant_characters(G, N):
    """Indices (in the table of N) of the G-invariant irreducible characters of N."""
    return [i for i, th in enumerate(character_table(N.group)) if is_invariant(G, N, th)]


def make_triple(G, N, theta):
    """Validate (G, N, theta); ``theta`` is a class function of N.group or an index into its table."""
    if N.parent is not G:
        raise TripleError("N is not a subgroup of G")
    if not N.is_normal():
        raise TripleError("N is not normal in G")
    tab = character_table(N.group)
    if isinstance(theta, int):
        if not 0 <= theta < len(tab):
            raise TripleError("no irreducible character with index %d" % theta)
        idx = theta
        theta = tab[idx]
    else:
        if theta.group is not N.group:
            raise TripleError("theta is not a class function of N")
        idx = tab.position(theta)
        if idx is None:
            raise TripleError("theta is not irreducible")
        theta = tab[idx]
    key = ("triple", N.mask, idx)
    if key not in G._cache:
        if not is_invariant(G, N, theta):
            raise TripleError("theta is not G-invariant")
        G._cache[key] = CharacterTriple(G, N, theta, idx)
    return G._cache[key]


def _same_values(a, b):
    return a.values == b.values


def extensions(t, H):
    """Irreducible characters of H (N <= H <= G) restricting to theta."""
    if H.parent is not t.G or not H.contains_subgroup(t.N):
        raise TripleError("H must satisfy N <= H <= G")
    key = ("ext", H.mask)
    if key not in t._cache:
        Nrel = H.relative(t.N)
        d = t.theta.values[0]
        out = []
        for chi in character_table(H.group):
            if chi.values[0] == d and restrict(chi, Nrel).values == t.theta.values:
                out.append(chi)
        t._cache[key] = out
    return t._cache[key]


def extendibility_prime_set(t):
    """Primes p such that theta does not extend to a Sylow p-preimage P (P/N Sylow in G/N)."""
    if "obstruction" not in t._cache:
        Q = t.Q
        primes = []
        for p in (PrimeSet().complement(Q.order).primes if Q.order > 1 else ()):
            P = t.qmap.lift_subgroup(sylow_subgroup(Q, p))
            if not extensions(t, P):
                primes.append(p)
        t._cache["obstruction"] = PrimeSet(primes)
    return t._cache["obstruction"]


def canonical_extension(t, H):
    """The extension of theta to H whose determinantal order equals o(theta).

    Requires gcd(|N|, |H:N|) = 1 (in particular N a pi-group and H/N a
    pi'-group), which makes it exist and be unique.
    """
    from math import gcd

    if gcd(t.N.order, H.order // t.N.order) != 1:
        raise TripleError("canonical extension needs coprime |N| and |H:N|")
    exts = extensions(t, H)
    if not exts:
        raise TripleError("theta does not extend to H")
    o = t.theta_det_order
    hits = [chi for chi in exts if det_order(chi) == o]
    if len(hits) != 1:
        raise TheoremViolation("expected exactly one extension of determinantal order %d, found %d" % (o, len(hits)))
    return hits[0]


# -- quasi extensions -------------------------------------------------------------


class QuasiExtension:
    """A class function claimed to be a pi-quasi extension of theta."""

    def __init__(self, triple, pi, values, normalized, method=""):
        self.triple = triple
        self.pi = _pi(pi)
        self.values = values
        self.normalized = normalized
        self.method = method

    def __eq__(self, other):
        return isinstance(other, QuasiExtension) and other.triple is self.triple and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "<QuasiExtension %s pi=%s>" % (self.method, list(self.pi.primes))


def support_classes(t, pi):
    """Classes of G whose elements g have g_pi in N."""
    G, N = t.G, t.N
    pi = _pi(pi)
    key = ("support", pi.primes)
    if key not in t._cache:
        t._cache[key] = [i for i, c in enumerate(G.classes) if G.pi_part_index(c.rep, pi) in N]
    return t._cache[key]


def normalize(q):
    """Zero the values on classes with g_pi outside N."""
    keep = set(support_classes(q.triple, q.pi))
    vals = [v if i in keep else Cyclotomic(0) for i, v in enumerate(q.values.values)]
    return QuasiExtension(q.triple, q.pi, ClassFunction(q.triple.G, vals), True, q.method)


def maximal_overgroups(t, pi):
    """Maximal subgroups H >= N with H/N a pi'-group, one per conjugacy class."""
    return [o.subgroup for o in pi_prime_overgroups(t.G, t.N, _pi(pi)) if o.maximal]


def verify_quasi_ext(q):
    """Certificate that q restricts to an extension of theta on every pi'-overgroup.

    Checking maximal pi'-overgroups up to conjugacy suffices: each
    pi'-overgroup lies in a conjugate of a maximal one, the restriction of
    an extension of theta is again an extension, and q is a class
    function, so conjugate subgroups behave alike.
    """
    t = q.triple
    checks = []
    ok = True
    witness = None
    for H in maximal_overgroups(t, q.pi):
        res = restrict(q.values, H)
        good = any(_same_values(res, chi) for chi in extensions(t, H))
        checks.append({"order": H.order, "pass": good})
        if not good and witness is None:
            ok = False
            witness = {"overgroup_order": H.order, "overgroup_generators": [int(g) for g in H.generators]}
    if q.normalized:
        keep = set(support_classes(t, q.pi))
        bad = [i for i, v in enumerate(q.values.values) if i not in keep and not v.is_zero()]
        if bad:
            ok = False
            witness = witness or {"nonzero_off_support": bad}
    return {"pass": ok, "overgroups": checks, "witness": witness}


def quasi_ext_canonical(t, pi):
    """Normalized quasi-extension g -> theta_g(g), theta_g the canonical extension to N<g>.

    Requires N to be a pi-group.
    """
    pi = _pi(pi)
    G, N = t.G, t.N
    if not pi.is_pi_number(N.order):
        raise TripleError("N is not a pi-group")
    vals = []
    for c in G.classes:
        g = c.rep
        if G.pi_part_index(g, pi) not in N:
            vals.append(Cyclotomic(0))
            continue
        H = G.subgroup(G.closure_set(list(N.generators) + [g], start=set(N.members.tolist())))
        chi = canonical_extension(t, H)
        vals.append(chi(int(H.local_map[g])))
    return QuasiExtension(t, pi, ClassFunction(G, vals), True, "canonical")


def _search(t, pi, find_all=False):
    G = t.G
    support = set(support_classes(t, pi))
    overs = maximal_overgroups(t, pi)
    co = G.class_of
    # for each overgroup, list of (G-class, value) per candidate extension
    options = []
    for H in overs:
        K = H.group
        gcls = [int(co[H.members[c.rep]]) for c in K.classes]
        cands = []
        for chi in extensions(t, H):
            assign = {}
            consistent = True
            for i, v in zip(gcls, chi.values):
                if i in assign and assign[i] != v:
                    consistent = False
                    break
                assign[i] = v
            if consistent:
                cands.append(assign)
        options.append(cands)
    results = []

    def rec(k, assign):
        if k == len(options):
            results.append(dict(assign))
            return not find_all
        for cand in options[k]:
            if all(assign.get(i, v) == v for i, v in cand.items()):
                added = [i for i in cand if i not in assign]
                for i in added:
                    assign[i] = cand[i]
                if rec(k + 1, assign):
                    return True
                for i in added:
                    del assign[i]
        return False

    rec(0, {})
    out = []
    for assign in results:
        if set(assign) != support:
            raise TheoremViolation("overgroups do not cover the pi-support classes")
        vals = [assign.get(i, Cyclotomic(0)) for i in range(len(G.classes))]
        out.append(QuasiExtension(t, pi, ClassFunction(G, vals), True, "search"))
    return out


def quasi_ext_search(t, pi, find_all=False):
    """Normalized quasi-extension by backtracking over extensions to maximal pi'-overgroups.

    Returns None when none exists (or, with ``find_all``, the list of all
    normalized quasi-extensions).  Overgroups are visited by descending
    order and extensions in table order, so the first solution is
    deterministic.
    """
    pi = _pi(pi)
    sols = _search(t, pi, find_all)
    if find_all:
        return sols
    return sols[0] if sols else None


def compare_quasi_exts(q1, q2):
    """The linear character lambda of G/N with q2 = lambda * q1, as (index, class function).

    Raises TheoremViolation if there is none.
    """
    t = q1.triple
    if q2.triple is not t:
        raise TripleError("quasi-extensions of different triples")
    lins = linear_characters(t.Q)
    tab = character_table(t.Q)
    for lam in lins:
        if pointwise_inflate(lam, t) * q1.values == q2.values:
            return tab.position(lam), lam
    raise TheoremViolation("no linear character relates the two quasi-extensions")


def pointwise_inflate(lam, t):
    key = ("infl", id(lam))
    if key not in t._cache:
        t._cache[key] = inflate(lam, t.qmap)
    return t._cache[key]


def closure_check(q):
    """Each lambda*q (lambda linear on G/N) is again a verified quasi-extension."""
    t = q.triple
    results = []
    for lam in linear_characters(t.Q):
        q2 = QuasiExtension(t, q.pi, pointwise_inflate(lam, t) * q.values, q.normalized, q.method)
        results.append(verify_quasi_ext(q2)["pass"])
    return all(results), len(results)


# -- defect zero sets ------------------------------------------------------------


class DefectZeroSet:
    def __init__(self, group, pi, indices, members):
        self.group = group
        self.pi = pi
        self.indices = indices
        self.members = members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def dz_set(G, pi):
    """Irreducible chi with chi(1)_pi = |G|_pi."""
    pi = _pi(pi)
    target = pi.part(G.order)
    tab = character_table(G)
    idx = [i for i, d in enumerate(tab.degrees()) if pi.part(d) == target]
    return DefectZeroSet(G, pi, idx, [tab[i] for i in idx])


def lies_over(t, chi):
    """[chi_N, theta] != 0.

    theta is G-invariant, so by Clifford chi_N is a multiple of theta exactly
    when chi lies over theta and otherwise involves no theta at all.
    """
    e, r = divmod(int(chi.values[0].to_fraction()), t.theta_degree)
    if r:
        return False
    res = restrict(chi, t.N)
    return all(a == e * b for a, b in zip(res.values, t.theta.values))


def over_theta_indices(t):
    """Indices of the irreducible characters of G lying over theta."""
    if "over" not in t._cache:
        t._cache["over"] = frozenset(i for i, chi in enumerate(character_table(t.G)) if lies_over(t, chi))
    return t._cache["over"]


def rdz_set(t, pi):
    """Irreducible chi over theta with (chi(1)/theta(1))_pi = |G/N|_pi."""
    pi = _pi(pi)
    target = pi.part(t.Q.order)
    tab = character_table(t.G)
    d = t.theta_degree
    over = over_theta_indices(t)
    degs = tab.degrees()
    idx = [i for i in sorted(over) if degs[i] % d == 0 and pi.part(degs[i] // d) == target]
    return DefectZeroSet(t.G, pi, idx, [tab[i] for i in idx])


def bijection_dz(t, q):
    """Certified bijection chi -> q * chi from dz_pi(G/N) onto rdz_pi(G|theta)."""
    pi = q.pi
    dz = dz_set(t.Q, pi)
    rdz = rdz_set(t, pi)
    tabG = character_table(t.G)
    qn = normalize(q)
    pairs = []
    images = []
    ok_irr = ok_rdz = ok_norm = True
    for i, chi in zip(dz.indices, dz.members):
        infl = inflate(chi, t.qmap)
        img = q.values * infl
        if qn.values * infl != img:
            ok_norm = False
        j = tabG.position(img)
        if j is None:
            ok_irr = False
        elif j not in rdz.indices:
            ok_rdz = False
        pairs.append((i, j))
        images.append(img)
    injective = len(set(j for _, j in pairs)) == len(pairs)
    surjective = set(j for _, j in pairs) == set(rdz.indices)
    # Images found in the certified table of G are orthonormal, as are the
    # members of dz; anything else is paired up by exact inner products.
    isometry = True
    for a in range(len(images)):
        for b in range(a, len(images)):
            ja, jb = pairs[a][1], pairs[b][1]
            lhs = int(ja == jb) if ja is not None and jb is not None else inner_product(images[a], images[b])
            if lhs != int(a == b):
                isometry = False
    cert = {
        "image_irreducible": ok_irr,
        "image_in_rdz": ok_rdz,
        "injective": injective,
        "surjective": surjective,
        "isometry": isometry,
        "normalized_agrees": ok_norm,
    }
    cert["pass"] = all(cert.values())
    return {"pairs": pairs, "dz": dz.indices, "rdz": rdz.indices, "certificate": cert}


def count_check(t, pi):
    """(|dz_pi(G/N)|, |rdz_pi(G|theta)|, equal, hypothesis_holds)."""
    pi = _pi(pi)
    a = len(dz_set(t.Q, pi))
    b = len(rdz_set(t, pi))
    hyp = extendibility_prime_set(t) <= pi
    return a, b, a == b, hyp


# -- the psi map -------------------------------------------------------------------


def _nilpotent_subgroups(G):
    """Maximal nilpotent subgroups, one per conjugacy class."""
    if "nilpotent_classes" not in G._cache:
        classes = subgroup_classes(G, predicate=lambda mem: is_nilpotent_members(G, mem))
        G._cache["nilpotent_classes"] = [
            c.rep for c in classes
            if not any(d.rep.order > c.rep.order and any(c.rep.mask & m == c.rep.mask for m in d.conjugates)
                       for d in classes)]
    return G._cache["nilpotent_classes"]


def brauer_certificate(psi):
    """psi restricted to every maximal nilpotent subgroup (up to conjugacy) is a generalized character.

    Every elementary subgroup lies in one of them, so by Brauer's
    characterization this makes psi a generalized character.
    """
    G = psi.group
    for E in _nilpotent_subgroups(G):
        if E.order == G.order:
            if not psi.is_generalized_character():
                return False
            continue
        res = restrict(psi, E)
        for xi in character_table(E.group):
            c = inner_product(res, xi)
            if not (c.is_rational() and c.to_fraction().denominator == 1):
                return False
    return True


def _pi_split(t, pi):
    """Per class of G: None if g_pi is outside N, else (class of g_pi in N, class of g_pi' in G)."""
    key = ("pi_split", pi.primes)
    if key not in t._cache:
        G, N = t.G, t.N
        loc = N.local_map
        out = []
        for c in G.classes:
            gp = G.pi_part_index(c.rep, pi)
            if gp not in N:
                out.append(None)
            else:
                gq = G.pi_prime_part_index(c.rep, pi)
                out.append((int(N.group.class_of[int(loc[gp])]), int(G.class_of[gq])))
        t._cache[key] = out
    return t._cache[key]


def psi_values(t, chi, theta, pi):
    """psi(g) = theta(g_pi) chi(g_pi') when g_pi in N, else 0 (theta a class function of N)."""
    zero = Cyclotomic(0)
    vals = [zero if s is None else theta.values[s[0]] * chi.values[s[1]] for s in _pi_split(t, _pi(pi))]
    return ClassFunction(t.G, vals)


def psi_map(t, chi, theta, pi):
    """The map of chi in rdz_pi(G|mu) (mu = t.theta) to psi, with certificates.

    ``theta`` is another G-invariant irreducible character of N (class
    function or table index).  N must be a pi-group.
    """
    pi = _pi(pi)
    G, N = t.G, t.N
    if not pi.is_pi_number(N.order):
        raise TripleError("N is not a pi-group")
    t2 = make_triple(G, N, theta)
    rdz_mu = rdz_set(t, pi)
    tabG = character_table(G)
    ci = tabG.position(chi)
    if ci is None or ci not in rdz_mu.indices:
        raise TripleError("chi is not in rdz_pi(G|mu)")
    psi = psi_values(t, chi, t2.theta, pi)
    cert = {}
    cert["generalized_character_brauer"] = brauer_certificate(psi)
    cert["generalized_character_direct"] = psi.is_generalized_character()
    NC = G.subgroup(G.closure_set(list(N.generators) + list(_centralizer_of_subgroup(G, N).generators),
                                  start=set(N.members.tolist())))
    mu_trivial = all(v == t.theta.values[0] for v in t.theta.values) and t.theta.values[0] == 1
    if NC.order == G.order and mu_trivial:
        j = tabG.position(psi)
        cert["irreducible"] = j is not None
        cert["in_rdz_theta"] = j is not None and j in rdz_set(t2, pi).indices
    if _is_central(G, N):
        key = ("central_bijection", t2.theta_index, pi.primes)
        if key not in t._cache:
            t._cache[key] = _central_bijection(t, t2, pi)
        cert["central_bijection"] = t._cache[key]
    cert["pass"] = all(v for v in cert.values())
    return psi, cert


def _centralizer_of_subgroup(G, N):
    mem = [g for g in range(G.order) if all(G.table[g, n] == G.table[n, g] for n in N.generators)]
    return G.subgroup(mem)


def _is_central(G, N):
    Z = center(G)
    return Z.contains_subgroup(N)


def _central_bijection(t_mu, t_theta, pi):
    """For N central: chi -> psi maps rdz(G|mu) onto rdz(G|theta) with inverse mu(g_pi) psi(g_pi')."""
    tabG = character_table(t_mu.G)
    src = rdz_set(t_mu, pi)
    dst = rdz_set(t_theta, pi)
    images = []
    for chi in src.members:
        psi = psi_values(t_mu, chi, t_theta.theta, pi)
        j = tabG.position(psi)
        if j is None or j not in dst.indices:
            return False
        back = psi_values(t_theta, psi, t_mu.theta, pi)
        if back != chi:
            return False
        images.append(j)
    return sorted(images) == sorted(dst.indices) and len(set(images)) == len(images)


# -- integrality -------------------------------------------------------------------


def integrality_certificates(t, chi):
    """Exact integrality of theta(1)|G:C_G(Nx)|chi(x)/chi(1) over the classes of G,
    and of |G/N:C_{G/N}(xbar)| chibar(xbar)/chibar(1) over Irr(G/N)."""
    G, N = t.G, t.N
    if not lies_over(t, chi):
        raise TripleError("chi does not lie over theta")
    d = t.theta_degree
    if "cmodN" not in t._cache:
        t._cache["cmodN"] = [G.order // centralizer_mod_N(G, N, c.rep).order for c in G.classes]
    rows = []
    ok = True
    deg = int(chi.values[0].to_fraction())
    for i, idx in enumerate(t._cache["cmodN"]):
        val = chi.values[i] * Fraction(d * idx, deg)
        good = is_algebraic_integer(val)
        ok &= good
        rows.append({"class": i, "value": val, "integral": good})
    if "omega" not in t._cache:
        Q = t.Q
        omega_rows = []
        for k, chib in enumerate(character_table(Q)):
            for j, c in enumerate(Q.classes):
                val = chib.values[j] * Fraction(c.size, int(chib.values[0].to_fraction()))
                omega_rows.append({"character": k, "class": j, "integral": is_algebraic_integer(val)})
        t._cache["omega"] = omega_rows
    omega_rows = t._cache["omega"]
    omega_ok = all(r["integral"] for r in omega_rows)
    return {"pass": ok and omega_ok, "lemma": rows, "omega": omega_rows}


def centralizer_index(G, x):
    return G.order // centralizer(G, x).order
