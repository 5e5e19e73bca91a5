from math import gcd

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import faithful, normal_of_order
from quasiext.chartab import character_table, inflate, restrict
from quasiext.cocycle import (
    Cocycle,
    central_extension,
    class_order,
    cohomology_checks,
    factor_set,
    finite_order_representative,
    intertwiner,
    linear_representative,
    locate_tau,
    pi_project,
    quasi_ext_cocycle,
    shrink_to_order,
    triple_cocycle,
)
from quasiext.cyclotomic import Cyclotomic
from quasiext.groups import builtin
from quasiext.perm import PrimeSet, center, normal_subgroups, quotient
from quasiext.repbuild import irreducible_rep
from quasiext.triples import (
    TripleError,
    compare_quasi_exts,
    extendibility_prime_set,
    invariant_characters,
    make_triple,
    quasi_ext_canonical,
    quasi_ext_search,
    verify_quasi_ext,
)


def rep_of(t):
    return irreducible_rep(t.N.group, t.theta)


def complex_value(alpha):
    return lambda x, y: complex(alpha[x][y])


@pytest.fixture(scope="module")
def d4z():
    G = builtin("dihedral4")
    Z = center(G)
    return make_triple(G, Z, faithful(Z))


# -- intertwiners ---------------------------------------------------------------------


def test_intertwiner_inside_n_is_scalar_multiple(sl23):
    rep = rep_of(sl23)
    N = sl23.N
    for a in N.members:
        X = intertwiner(rep, N, int(a))
        assert X.scalar_ratio(rep(int(N.local_map[int(a)]))) is not None


def test_intertwiner_for_centralizing_element_is_scalar():
    G = builtin("sl23")
    Z = center(G)
    t = make_triple(G, G.whole(), next(i for i, c in enumerate(character_table(G)) if c.values[0] == 2))
    rep = rep_of(t)
    X = intertwiner(rep, t.N, int(Z.members[1]))
    assert X == X.identity(2).scale(X[0, 0]) and X[0, 0] == 1


def test_intertwiner_order_three_element(sl23):
    G, N = sl23.G, sl23.N
    rep = rep_of(sl23)
    t = next(g for g in range(G.order) if int(G.orders[g]) == 3)
    X = intertwiner(rep, N, t)
    assert X.shape == (2, 2)
    lead = next(x for row in X.rows for x in row if not x.is_zero())
    assert lead == 1
    for a in N.group.generators:
        conj = int(N.local_map[G.conj(int(N.members[a]), t)])
        assert X @ rep(conj) == rep(a) @ X
    assert X @ X.inverse() == X.identity(2)


# -- factor sets and class orders -----------------------------------------------------


def test_trivial_quotient_gives_order_one():
    G = builtin("alt5")
    t = make_triple(G, G.whole(), 3)
    beta, report = triple_cocycle(t)
    assert beta.Q.order == 1 and report.order == 1 and tuple(report.primes) == ()


def test_q8_over_center(q8z):
    rep = rep_of(q8z)
    alpha = factor_set(q8z, rep)
    assert len(alpha) == 4 and all(len(r) == 4 for r in alpha)
    assert all(alpha[0][y] == 1 and alpha[y][0] == 1 for y in range(4))
    beta, report = triple_cocycle(q8z)
    assert beta.modulus == 4 and beta.check()
    assert report.order == 2 and tuple(report.primes) == (2,)
    Q = q8z.Q
    assert oracles.brute_class_order(Q, complex_value(alpha), 4) == 2
    assert oracles.brute_class_order(Q, lambda x, y: complex(beta.value(x, y)), 4) == 2


def test_sl25_over_center(sl25):
    beta, report = triple_cocycle(sl25)
    assert beta.modulus == 60 and beta.check()
    assert report.order == 2 and tuple(report.primes) == (2,)
    assert set(report.primes) == set(extendibility_prime_set(sl25).primes)


def test_sl23_over_q8_is_extendible(sl23):
    beta, report = triple_cocycle(sl23)
    assert beta.modulus == 3
    assert report.order == 1
    alpha = factor_set(sl23, rep_of(sl23))
    assert oracles.brute_class_order(sl23.Q, complex_value(alpha), 3) == 1


@pytest.mark.parametrize("name", ["dihedral4", "quaternion8", "dihedral6", "sym4", "sl23", "alt4", "dihedral8"])
def test_class_order_matches_oracle(name):
    G = builtin(name)
    for N in normal_subgroups(G):
        if N.order in (1, G.order) or G.order // N.order > 8:
            continue
        for th in invariant_characters(G, N):
            t = make_triple(G, N, th)
            alpha = factor_set(t, rep_of(t))
            beta, report = triple_cocycle(t)
            bound = t.Q.order
            assert report.order == oracles.brute_class_order(t.Q, complex_value(alpha), bound)
            assert set(report.primes) == set(extendibility_prime_set(t).primes)


def test_finite_order_representative_values(q8z, d4z):
    for t in (q8z, d4z):
        alpha = factor_set(t, rep_of(t))
        beta = finite_order_representative(alpha, t.qmap)
        q = beta.modulus
        assert q == t.Q.order
        for x in range(q):
            for y in range(q):
                assert beta.value(x, y) ** q == 1


@pytest.mark.parametrize("name", ["quaternion8", "dihedral4", "sl23", "sl25", "cyclic2xdihedral4", "alt4"])
def test_linear_representative_matches_numeric_route(name):
    G = builtin(name)
    for N in normal_subgroups(G):
        if G.order // N.order > 60:
            continue
        for th in invariant_characters(G, N):
            t = make_triple(G, N, th)
            if t.theta_degree != 1:
                continue
            exact = linear_representative(t)
            numeric = finite_order_representative(factor_set(t, rep_of(t)), t.qmap)
            assert exact.modulus == numeric.modulus and exact.check()
            # same class: the quotient of the two cocycles is a coboundary
            diff = Cocycle(t.qmap, exact.modulus, (exact.exponents - numeric.exponents) % exact.modulus)
            assert class_order(diff).order == 1


def test_section_does_not_change_class(q8z, d4z, sl25):
    for t in (q8z, d4z, sl25):
        G, N, qm = t.G, t.N, t.qmap
        n = int(N.members[-1])
        section = [0] + [G.mul(n, int(s)) for s in list(qm.section)[1:]]
        assert section != [int(s) for s in qm.section]
        _, r1 = triple_cocycle(t)
        beta2, r2 = triple_cocycle(t, section=section)
        assert beta2.check()
        assert r1.order == r2.order


def test_bad_section_rejected(q8z):
    section = [int(s) for s in q8z.qmap.section]
    with pytest.raises(ValueError):
        factor_set(q8z, rep_of(q8z), section=section[::-1])


# -- projections ---------------------------------------------------------------------


def test_pi_project_sl25(sl25):
    beta, report = triple_cocycle(sl25)
    b2 = pi_project(beta, PrimeSet([2]))
    assert b2.modulus == 4 and b2.check()
    assert class_order(b2).order == report.order == 2


def test_pi_project_noop_and_rejection(q8z, sl25):
    beta, _ = triple_cocycle(q8z)
    assert pi_project(beta, PrimeSet([2])) is beta
    with pytest.raises(TripleError):
        pi_project(triple_cocycle(sl25)[0], PrimeSet([3, 5]))


def test_trivial_class_projects_to_coboundary(sl23):
    beta, _ = triple_cocycle(sl23)
    for pi in ([], [2], [3]):
        b = pi_project(beta, PrimeSet(pi))
        assert class_order(b).order == 1


def test_shrink_to_order(q8z, sl25, sl23):
    for t in (q8z, sl25, sl23):
        beta, report = triple_cocycle(t)
        s = shrink_to_order(beta)
        assert s.modulus == report.order and s.check()
        assert class_order(s).order == report.order


# -- cocycle properties ---------------------------------------------------------------


SMALL_QUOTIENTS = [("dihedral4", 1), ("alt4", 1), ("sym3", 1), ("cyclic6", 1), ("quaternion8", 2)]


def _qmap(name, n):
    G = builtin(name)
    return quotient(G, normal_of_order(G, n))


@given(st.sampled_from(SMALL_QUOTIENTS), st.integers(1, 12), st.data())
def test_coboundaries_have_order_one(which, q, data):
    qm = _qmap(*which)
    Q = qm.quotient
    m = np.array([0] + data.draw(st.lists(st.integers(0, q - 1), min_size=Q.order - 1, max_size=Q.order - 1)))
    c = (m[:, None] + m[None, :] - m[Q.table]) % q
    beta = Cocycle(qm, q, c.astype(np.int64))
    assert beta.check()
    assert class_order(beta).order == 1


@pytest.mark.parametrize("name", ["q8z", "d4z", "sl25"])
def test_power_and_coboundary_rules(name, request):
    _power_rules(request.getfixturevalue(name))


def _power_rules(t):
    @given(st.integers(0, 11), st.data())
    def check(k, data):
        _power_rule(t, k, data)

    check()


def _power_rule(t, k, data):
    beta, report = triple_cocycle(t)
    Q, q, n = beta.Q, beta.modulus, report.order
    m = np.array([0] + data.draw(st.lists(st.integers(0, q - 1), min_size=Q.order - 1, max_size=Q.order - 1)))
    cob = m[:, None] + m[None, :] - m[Q.table]
    twisted = Cocycle(beta.base, q, ((k * beta.exponents + cob) % q).astype(np.int64))
    assert twisted.check()
    assert class_order(twisted).order == n // gcd(n, k)


def test_damaged_cocycle_fails_check(q8z):
    beta, _ = triple_cocycle(q8z)
    c = beta.exponents.copy()
    c[1, 2] = (c[1, 2] + 1) % beta.modulus
    assert not Cocycle(beta.base, beta.modulus, c).check()
    c = beta.exponents.copy()
    c[0, 1] = 1
    assert not Cocycle(beta.base, beta.modulus, c).check()


@pytest.mark.parametrize("name", ["sl23", "sym4", "dihedral6", "quaternion8", "alt5", "dihedral8"])
def test_cohomology_divisibility(name):
    G = builtin(name)
    for N in normal_subgroups(G):
        if G.order // N.order > 120:
            continue
        for th in invariant_characters(G, N):
            t = make_triple(G, N, th)
            _, report = triple_cocycle(t)
            checks = cohomology_checks(t, report)
            assert checks["pass"], checks
            n = report.order
            assert (t.theta_degree * t.theta_det_order) % n == 0
            assert (N.order // t.theta_degree) % n == 0


# -- central extension and tau -------------------------------------------------------


def test_central_extension_q8(q8z):
    beta, _ = triple_cocycle(q8z)
    E = central_extension(q8z, beta)
    assert E.m == 4 and E.group.order == 32
    s = shrink_to_order(beta)
    E2 = central_extension(q8z, s)
    assert E2.m == 2 and E2.group.order == 16
    Eg = E2.group
    Z = E2.Z
    assert Z.order == 2
    for z in Z.members:
        assert all(Eg.mul(int(z), g) == Eg.mul(g, int(z)) for g in range(Eg.order))
    # projection to G is a homomorphism with kernel Z
    G = q8z.G
    for a in range(Eg.order):
        for b in range(Eg.order):
            assert Eg.mul(a, b) // E2.m == G.mul(a // E2.m, b // E2.m)
    assert sorted(int(z) for z in Z.members) == [g for g in range(Eg.order) if g // E2.m == 0]
    assert E2.N_hat.order == q8z.N.order * 2


def test_central_extension_of_trivial_class_splits(sl23):
    beta, _ = triple_cocycle(sl23)
    E = central_extension(sl23, beta)
    G, Eg, m = sl23.G, E.group, E.m
    # trivial class: the cocycle is a coboundary, so G^ = G x Z up to isomorphism
    assert class_order(beta).order == 1
    assert Eg.order == G.order * m
    direct = [int(np.lcm(int(G.orders[g]), m // gcd(k, m))) for g in range(G.order) for k in range(m)]
    assert sorted(int(Eg.orders[i]) for i in range(Eg.order)) == sorted(direct)


def test_locate_tau(q8z, sl25, sl23):
    for t in (q8z, sl25, sl23):
        beta, _ = triple_cocycle(t)
        E = central_extension(t, shrink_to_order(beta))
        tau = locate_tau(E)
        m, d = E.m, t.theta_degree
        assert tau.values[0] == d and tau.is_irreducible()
        for k in range(m):
            assert tau(k) == Cyclotomic.zeta(m, k) * d
        for c in t.N.group.classes:
            assert tau(int(t.N.members[c.rep]) * m) == t.theta.values[t.N.group.class_of[c.rep]]


# -- quasi-extensions ----------------------------------------------------------------


def test_quasi_ext_cocycle_sl25(sl25):
    pi = PrimeSet([2])
    q = quasi_ext_cocycle(sl25, pi)
    assert verify_quasi_ext(q)["pass"]
    idx, lam = compare_quasi_exts(q, quasi_ext_search(sl25, pi))
    assert idx is not None
    # times the inflated degree-4 character of A5 gives the faithful degree-4 character
    A5 = sl25.Q
    chi4 = next(c for c in character_table(A5) if c.values[0] == 4)
    prod = inflate(chi4, sl25.qmap) * q.values
    tab = character_table(sl25.G)
    hit = tab.position(prod)
    assert hit is not None
    assert tab[hit].values[0] == 4 and tab[hit].kernel().order == 1


def test_quasi_ext_cocycle_sl23(sl23):
    pi = PrimeSet([2])
    q = quasi_ext_cocycle(sl23, pi)
    assert verify_quasi_ext(q)["pass"]
    idx, _ = compare_quasi_exts(q, quasi_ext_canonical(sl23, pi))
    assert idx is not None
    assert compare_quasi_exts(q, quasi_ext_search(sl23, pi))[0] is not None


def test_quasi_ext_cocycle_extendible_is_extension(sl23):
    q = quasi_ext_cocycle(sl23, PrimeSet())
    tab = character_table(sl23.G)
    assert tab.position(q.values) is not None
    assert restrict(q.values, sl23.N).values == sl23.theta.values


def test_quasi_ext_cocycle_needs_obstruction_in_pi(q8z, sl25):
    with pytest.raises(TripleError):
        quasi_ext_cocycle(q8z, PrimeSet())
    with pytest.raises(TripleError):
        quasi_ext_cocycle(sl25, PrimeSet([3, 5]))


def test_unshrunk_and_shrunk_pipelines_agree(q8z, d4z, sl25):
    for t in (q8z, d4z, sl25):
        pi = PrimeSet([2])
        a = quasi_ext_cocycle(t, pi, shrink=True)
        b = quasi_ext_cocycle(t, pi, shrink=False)
        assert compare_quasi_exts(a, b)[0] is not None


@pytest.mark.parametrize("name", ["dihedral4", "dihedral6", "sym4", "quaternion8"])
def test_quasi_ext_cocycle_all_triples(name):
    G = builtin(name)
    for N in normal_subgroups(G):
        for th in invariant_characters(G, N):
            t = make_triple(G, N, th)
            obs = extendibility_prime_set(t)
            q = quasi_ext_cocycle(t, obs)
            assert verify_quasi_ext(q)["pass"]
            assert compare_quasi_exts(q, quasi_ext_search(t, obs))[0] is not None
