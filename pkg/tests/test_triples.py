from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import normal_of_order
from quasiext.chartab import ClassFunction, character_table, det_order, linear_characters
from quasiext.groups import builtin
from quasiext.perm import PrimeSet, normal_subgroups, quotient
from quasiext.sweep import pi_subsets
from quasiext.triples import (
    QuasiExtension,
    TripleError,
    bijection_dz,
    brauer_certificate,
    canonical_extension,
    closure_check,
    compare_quasi_exts,
    count_check,
    dz_set,
    extendibility_prime_set,
    extensions,
    integrality_certificates,
    invariant_characters,
    lies_over,
    make_triple,
    normalize,
    over_theta_indices,
    pointwise_inflate,
    psi_map,
    quasi_ext_canonical,
    quasi_ext_search,
    rdz_set,
    verify_quasi_ext,
)


# -- triples and extensions ---------------------------------------------------------


def test_make_triple_examples(q8z):
    G = builtin("sym4")
    for i in range(len(character_table(G))):
        assert make_triple(G, G.whole(), i).theta.values == character_table(G)[i].values
    assert q8z.theta_degree == 1
    V4 = normal_of_order(G, 4)
    with pytest.raises(TripleError):
        make_triple(G, V4, 1)
    assert invariant_characters(G, V4) == [0]
    S3 = builtin("sym3")
    C2 = next(H for H in (S3.subgroup(S3.closure_set([g])) for g in range(6)) if H.order == 2)
    with pytest.raises(TripleError):
        make_triple(S3, C2, 0)


def test_extensions_examples(q8z, sl23):
    assert extensions(q8z, q8z.N) == [q8z.theta]
    assert extensions(q8z, q8z.G.whole()) == []
    exts = extensions(sl23, sl23.G.whole())
    assert len(exts) == 3 and all(chi.values[0] == 2 for chi in exts)
    with pytest.raises(TripleError):
        extensions(sl23, sl23.G.trivial())


@pytest.mark.parametrize("name", ["sl23", "sym4", "dihedral4", "cyclic2xsym3", "quaternion8", "alt4"])
def test_gallagher_counts(name):
    G = builtin(name)
    for N in normal_subgroups(G):
        for th in invariant_characters(G, N):
            t = make_triple(G, N, th)
            for o in __import__("quasiext").perm.pi_prime_overgroups(G, N, PrimeSet()):
                H = o.subgroup
                n = len(extensions(t, H))
                HN = quotient(H.group, H.relative(N)).quotient
                assert n in (0, len(linear_characters(HN)))


def test_obstruction_examples(q8z, sl25, sl23):
    assert extendibility_prime_set(q8z) == PrimeSet([2])
    assert extendibility_prime_set(sl25) == PrimeSet([2])
    assert extendibility_prime_set(sl23) == PrimeSet()
    G = builtin("sym4")
    assert extendibility_prime_set(make_triple(G, G.trivial(), 0)) == PrimeSet()


def _numeric_extends(t, members):
    """Oracle: some row of the numeric table of the subgroup restricts to theta."""
    G, N = t.G, t.N
    H = G.subgroup(members)
    rows = oracles.numeric_table(H.group)
    loc = H.local_map
    theta_n = [complex(t.theta(int(N.local_map[n]))) for n in N.members]
    for row in rows:
        vals = [row[int(H.group.class_of[loc[n]])] for n in N.members]
        if np.allclose(vals, theta_n, atol=1e-6):
            return True
    return False


@pytest.mark.parametrize("name", ["quaternion8", "sl23", "dihedral4", "sym4", "cyclic2xquaternion8", "dihedral6"])
def test_obstruction_matches_oracle(name):
    G = builtin(name)
    subs = oracles.subgroups(G)
    for N in normal_subgroups(G):
        nset = frozenset(N.members.tolist())
        for th in invariant_characters(G, N):
            t = make_triple(G, N, th)
            qord = G.order // N.order
            bad = set()
            for p in PrimeSet().complement(qord).primes if qord > 1 else ():
                target = PrimeSet([p]).part(qord) * N.order
                sylows = [H for H in subs if nset <= H and len(H) == target]
                assert sylows
                # theta extends to one Sylow preimage iff to all (they are conjugate)
                ext = [_numeric_extends(t, sorted(H)) for H in sylows]
                assert len(set(ext)) == 1
                if not ext[0]:
                    bad.add(p)
            assert extendibility_prime_set(t) == PrimeSet(bad)


# -- canonical extensions and quasi-extensions --------------------------------------


def test_canonical_extension_examples(sl23):
    assert canonical_extension(sl23, sl23.N) == sl23.theta
    exts = extensions(sl23, sl23.G.whole())
    assert sorted(det_order(chi) for chi in exts) == [1, 3, 3]
    assert det_order(canonical_extension(sl23, sl23.G.whole())) == 1
    G = builtin("cyclic6")
    N = normal_of_order(G, 2)
    t = make_triple(G, N, 1)
    assert t.theta_det_order == 2
    ext = canonical_extension(t, G.whole())
    assert det_order(ext) == 2
    assert sorted(det_order(chi) for chi in extensions(t, G.whole())) == [2, 6, 6]
    with pytest.raises(TripleError):
        canonical_extension(make_triple(builtin("cyclic4"), normal_of_order(builtin("cyclic4"), 2), 1),
                            builtin("cyclic4").whole())


def test_canonical_quasi_extension_examples(sl23):
    G, N = sl23.G, sl23.N
    pi = PrimeSet([2])
    q = quasi_ext_canonical(sl23, pi)
    assert verify_quasi_ext(q)["pass"]
    ext = canonical_extension(sl23, G.whole())
    for i, c in enumerate(G.classes):
        if G.pi_part_index(c.rep, pi) in N:
            assert q.values.values[i] == ext.values[i]
        else:
            assert q.values.values[i] == 0
        if c.rep in N:
            assert q.values.values[i] == sl23.theta(int(N.local_map[c.rep]))
        if pi.is_pi_prime_number(int(G.orders[c.rep])):
            assert not q.values.values[i].is_zero()
    with pytest.raises(TripleError):
        quasi_ext_canonical(sl23, PrimeSet([3]))


def test_search_examples(q8z, sl25):
    G = builtin("sym4")
    N = normal_of_order(G, 12)
    t = make_triple(G, N, 0)
    q = quasi_ext_search(t, PrimeSet())
    assert q.values.values in [chi.values for chi in extensions(t, G.whole())]
    q = quasi_ext_search(q8z, PrimeSet([2]))
    Z = q8z.N
    for i, c in enumerate(q8z.G.classes):
        expect = q8z.theta(int(Z.local_map[c.rep])) if c.rep in Z else 0
        assert q.values.values[i] == expect
    assert quasi_ext_search(sl25, PrimeSet([5])) is None
    assert quasi_ext_search(sl25, PrimeSet([2])) is not None


def test_verify_rejects_damaged_extension(sl23):
    ext = ClassFunction(sl23.G, canonical_extension(sl23, sl23.G.whole()).values)
    vals = list(ext.values)
    vals[-1] = vals[-1] + 1
    bad = QuasiExtension(sl23, PrimeSet(), ClassFunction(sl23.G, vals), False)
    cert = verify_quasi_ext(bad)
    assert not cert["pass"] and cert["witness"]["overgroup_order"] == 24
    good = QuasiExtension(sl23, PrimeSet(), ext, False)
    assert verify_quasi_ext(good)["pass"]


def test_normalize_examples(sl23, q8z):
    q = quasi_ext_canonical(sl23, PrimeSet([2]))
    assert normalize(q).values == q.values
    ext = ClassFunction(sl23.G, canonical_extension(sl23, sl23.G.whole()).values)
    full = QuasiExtension(sl23, PrimeSet([2, 3]), ext, False)
    n = normalize(full)
    for i, c in enumerate(sl23.G.classes):
        assert n.values.values[i] == (ext.values[i] if c.rep in sl23.N else 0)
    assert normalize(QuasiExtension(sl23, PrimeSet(), ext, False)).values == ext


def _all_pi_prime_overgroups_ok(q):
    """Oracle: q restricts to an irreducible extension of theta on every pi'-overgroup."""
    t = q.triple
    G, N = t.G, t.N
    nset = frozenset(N.members.tolist())
    for H in oracles.subgroups(G):
        if not nset <= H or not q.pi.is_pi_prime_number(len(H) // N.order):
            continue
        Hs = sorted(H)
        f = lambda x: q.values(Hs[x])  # noqa: E731
        norm = sum(abs(complex(f(x))) ** 2 for x in range(len(Hs))) / len(Hs)
        if abs(norm - 1) > 1e-9:
            return False
        for n in N.members:
            if q.values(int(n)) != t.theta(int(N.local_map[n])):
                return False
    return True


@pytest.mark.parametrize("name", ["sl23", "quaternion8", "dihedral4", "sym4", "dihedral6", "cyclic2xquaternion8"])
def test_search_and_verify_against_oracle(name):
    G = builtin(name)
    for N in normal_subgroups(G):
        for th in invariant_characters(G, N):
            t = make_triple(G, N, th)
            obstruction = extendibility_prime_set(t)
            for pi in pi_subsets(G.order // N.order):
                q = quasi_ext_search(t, pi)
                assert (q is not None) == (obstruction <= pi)
                if q is not None:
                    assert _all_pi_prime_overgroups_ok(q)


def test_compare_examples(sl23):
    pi = PrimeSet([2])
    q = quasi_ext_search(sl23, pi)
    idx, lam = compare_quasi_exts(q, q)
    assert idx == 0
    for j, lam in enumerate(linear_characters(sl23.Q)):
        q2 = QuasiExtension(sl23, pi, pointwise_inflate(lam, sl23) * q.values, True)
        assert compare_quasi_exts(q, q2)[0] == character_table(sl23.Q).position(lam)
    qc = quasi_ext_canonical(sl23, pi)
    idx, lam = compare_quasi_exts(q, qc)
    assert lam in linear_characters(sl23.Q)


def test_search_solutions_are_one_orbit(sl23):
    for pi in (PrimeSet([2]), PrimeSet([2, 3]), PrimeSet()):
        sols = quasi_ext_search(sl23, pi, find_all=True)
        q = sols[0]
        orbit = {(pointwise_inflate(lam, sl23) * q.values).values for lam in linear_characters(sl23.Q)}
        assert {s.values.values for s in sols} == orbit
        assert closure_check(q)[0]


# -- defect zero sets and the bijection ---------------------------------------------


def test_dz_examples():
    A5 = builtin("alt5")
    assert len(dz_set(A5, PrimeSet([7]))) == 5
    assert [chi.values[0] for chi in dz_set(A5, PrimeSet([2]))] == [4]
    assert [chi.values[0] for chi in dz_set(A5, PrimeSet([3]))] == [3, 3]


def test_rdz_example(sl25):
    r = rdz_set(sl25, PrimeSet([2]))
    assert [chi.values[0] for chi in r] == [4]
    assert r.members[0].kernel().order == 1
    assert sorted(int(character_table(sl25.G)[i].values[0].to_fraction()) for i in over_theta_indices(sl25)) == [2, 2, 4, 6]


def test_bijection_examples(sl25, sl23):
    q = quasi_ext_search(sl25, PrimeSet([2]))
    b = bijection_dz(sl25, q)
    assert b["certificate"]["pass"]
    assert len(b["pairs"]) == 1
    i, j = b["pairs"][0]
    assert character_table(sl25.Q)[i].values[0] == 4
    assert character_table(sl25.G)[j].values[0] == 4
    q = quasi_ext_search(sl23, PrimeSet([2]))
    b = bijection_dz(sl23, q)
    assert b["certificate"]["pass"] and len(b["pairs"]) == 3
    assert all(character_table(sl23.G)[j].values[0] == 2 for _, j in b["pairs"])


def test_bijection_empty(q8z):
    q = quasi_ext_search(q8z, PrimeSet([2]))
    b = bijection_dz(q8z, q)
    assert b["pairs"] == [] and b["rdz"] == [] and b["certificate"]["pass"]


def test_count_examples(q8z, sl23, sl25):
    assert count_check(q8z, PrimeSet([2]))[:3] == (0, 0, True)
    assert count_check(sl23, PrimeSet([2]))[:3] == (3, 3, True)
    assert count_check(sl25, PrimeSet([2]))[:3] == (1, 1, True)
    a, b, eq, hyp = count_check(sl25, PrimeSet([5]))
    assert not hyp


def test_count_for_extendible_theta_all_primes():
    G = builtin("sym4")
    N = normal_of_order(G, 4)
    t = make_triple(G, N, 0)
    pi = PrimeSet([2, 3])
    a, b, eq, hyp = count_check(t, pi)
    assert hyp and eq and a == len(dz_set(t.Q, pi))


# -- the psi map and integrality ----------------------------------------------------


def test_psi_map_example(sl25):
    G, Z = sl25.G, sl25.N
    pi = PrimeSet([2])
    t0 = make_triple(G, Z, 0)
    r = rdz_set(t0, pi)
    assert [chi.values[0] for chi in r] == [4]
    psi, cert = psi_map(t0, r.members[0], sl25.theta_index, pi)
    assert cert["pass"] and cert["central_bijection"]
    assert psi == rdz_set(sl25, pi).members[0]


def test_psi_map_identity_cases(sl25):
    pi = PrimeSet([2])
    for chi in rdz_set(sl25, pi):
        psi, cert = psi_map(sl25, chi, sl25.theta_index, pi)
        assert psi == chi and cert["pass"]
    S4 = builtin("sym4")
    t = make_triple(S4, S4.trivial(), 0)
    for p in ([2], [3], [2, 3]):
        for chi in rdz_set(t, PrimeSet(p)):
            psi, _ = psi_map(t, chi, 0, PrimeSet(p))
            assert psi == chi
    with pytest.raises(TripleError):
        psi_map(sl25, rdz_set(sl25, pi).members[0], 1, PrimeSet([3]))


def test_integrality_examples(sl25):
    tab = character_table(sl25.G)
    for i in sorted(over_theta_indices(sl25)):
        cert = integrality_certificates(sl25, tab[i])
        assert cert["pass"]
        assert cert["lemma"][0]["value"] == sl25.theta_degree
    A = builtin("cyclic6")
    t = make_triple(A, A.trivial(), 0)
    for chi in character_table(A):
        cert = integrality_certificates(t, chi)
        assert [r["value"] for r in cert["lemma"]] == list(chi.values)
    with pytest.raises(TripleError):
        integrality_certificates(sl25, tab[0])


@given(st.sampled_from(["sl23", "sym4", "dihedral6", "sl25", "cyclic2xquaternion8"]), st.data())
def test_integrality_property(name, data):
    G = builtin(name)
    N = data.draw(st.sampled_from(normal_subgroups(G)))
    th = data.draw(st.sampled_from(invariant_characters(G, N)))
    t = make_triple(G, N, th)
    chi = character_table(G)[data.draw(st.sampled_from(sorted(over_theta_indices(t))))]
    assert integrality_certificates(t, chi)["pass"]


@pytest.mark.parametrize("name", ["sym4", "alt5", "dihedral6", "sl23"])
@given(data=st.data())
def test_brauer_certificate_matches_decomposition(name, data):
    G = builtin(name)
    tab = character_table(G)
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(tab), max_size=len(tab)))
    den = data.draw(st.sampled_from([1, 1, 2, 3]))
    vals = [sum((chi.values[k] * Fraction(c, den) for c, chi in zip(coeffs, tab)), tab[0].values[0] * 0)
            for k in range(len(tab))]
    psi = ClassFunction(G, vals)
    expected = all(Fraction(c, den).denominator == 1 for c in coeffs)
    assert brauer_certificate(psi) == expected == psi.is_generalized_character()


@pytest.mark.parametrize("name", ["sym4", "sl23", "dihedral6", "cyclic2xdihedral4"])
def test_lies_over_matches_inner_product(name):
    G = builtin(name)
    for N in normal_subgroups(G):
        for th in invariant_characters(G, N):
            t = make_triple(G, N, th)
            for chi in character_table(G):
                res = [complex(chi.values[G.class_of[int(N.members[c.rep])]]) for c in N.group.classes]
                ip = sum(c.size * a * complex(b).conjugate() for c, a, b in zip(N.group.classes, res, t.theta.values))
                assert lies_over(t, chi) == (abs(ip) > 1e-9)
