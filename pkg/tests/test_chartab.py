from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from quasiext.chartab import (
    ClassFunction,
    check_orthogonality,
    character_table,
    deflate,
    det_order,
    induce,
    inflate,
    inner_product,
    linear_characters,
    pointwise_mul,
    restrict,
)
from quasiext.cyclotomic import Cyclotomic
from quasiext.groups import builtin, builtin_names
from quasiext.perm import normal_subgroups, quotient, subgroup_classes
from quasiext.repbuild import irreducible_rep
from quasiext.sweep import sweep_groups

TABLE_GROUPS = builtin_names(120) + ["cyclic2xsym3", "cyclic3xquaternion8", "dihedral4xcyclic3",
                                      "quaternion8xquaternion8", "cyclic2xalt4", "sym3xsym3"]
SMALL = ["sym3", "quaternion8", "dihedral4", "alt4", "sl23", "sym4", "dihedral6", "cyclic2xsym3", "cyclic6"]


def degrees(name):
    return character_table(builtin(name)).degrees()


def test_table_examples():
    tab = character_table(builtin("cyclic2"))
    assert tab.degrees() == [1, 1]
    assert [list(map(int, (v.to_fraction() for v in chi.values))) for chi in tab] == [[1, 1], [1, -1]]
    assert degrees("sym3") == [1, 1, 2]
    assert degrees("sl23") == [1, 1, 1, 2, 2, 2, 3]
    assert degrees("alt5") == [1, 3, 3, 4, 5]
    assert degrees("sl25") == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert degrees("quaternion8") == [1, 1, 1, 1, 2]


@pytest.mark.parametrize("name", TABLE_GROUPS)
def test_table_matches_numeric_oracle(name):
    G = builtin(name)
    tab = character_table(G)
    assert oracles.rows_match([chi.values for chi in tab], oracles.numeric_table(G))
    assert sum(d * d for d in tab.degrees()) == G.order
    check_orthogonality(tab)


@pytest.mark.parametrize("name", SMALL)
def test_orthogonality_direct(name):
    G = builtin(name)
    tab = list(character_table(G))
    for i, a in enumerate(tab):
        for j, b in enumerate(tab):
            assert inner_product(a, b) == (1 if i == j else 0)
    for k, c in enumerate(G.classes):
        s = sum((chi.values[k] * chi.values[k].conj() for chi in tab), Cyclotomic(0))
        assert s == G.order // c.size


@pytest.mark.parametrize("name", SMALL + ["alt5"])
def test_canonical_order(name):
    tab = character_table(builtin(name))
    degs = tab.degrees()
    assert degs == sorted(degs)
    assert all(v == 1 for v in tab[0].values)


def test_table_is_deterministic():
    from quasiext.groups import parse_group

    spec = {"degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 2, 3]]}
    a = character_table(parse_group(spec))
    b = character_table(parse_group(spec))
    assert [chi.values for chi in a] == [chi.values for chi in b]


def test_inner_product_examples():
    G = builtin("sym4")
    tab = character_table(G)
    one = tab.trivial()
    assert inner_product(one, one) == 1
    assert inner_product(tab[1], tab[2]) == 0
    reg = ClassFunction(G, [G.order] + [0] * (len(G.classes) - 1))
    for chi in tab:
        assert inner_product(reg, chi) == chi.values[0]
    with pytest.raises(ValueError):
        inner_product(one, character_table(builtin("sym3")).trivial())


def test_restrict_induce_inflate_examples():
    G = builtin("sym4")
    N = next(n for n in normal_subgroups(G) if n.order == 4)
    one = character_table(G).trivial()
    assert restrict(one, N) == character_table(N.group).trivial()
    ind = induce(character_table(N.group).trivial(), N)
    assert ind.values[0] == 6
    qm = quotient(G, N)
    for chib in character_table(qm.quotient):
        infl = inflate(chib, qm)
        r = restrict(infl, N)
        assert all(v == chib.values[0] for v in r.values)
        assert deflate(infl, qm) == chib


@st.composite
def subgroup_pairs(draw):
    G = builtin(draw(st.sampled_from(SMALL + ["alt5", "sl25"])))
    subs = subgroup_classes(G)
    H = draw(st.sampled_from(subs)).rep
    chi = draw(st.sampled_from(list(character_table(G))))
    th = draw(st.sampled_from(list(character_table(H.group))))
    return G, H, chi, th


@given(subgroup_pairs())
def test_frobenius_reciprocity(data):
    G, H, chi, th = data
    assert inner_product(induce(th, H), chi) == inner_product(th, restrict(chi, H))


@given(subgroup_pairs())
def test_induce_matches_element_formula(data):
    G, H, chi, th = data
    ind = induce(th, H)
    loc = H.local_map
    for c in G.classes[:4]:
        g = c.rep
        tot = Cyclotomic(0)
        for x in range(G.order):
            y = G.conj(g, x)
            if loc[y] >= 0:
                tot = tot + th(int(loc[y]))
        assert ind.values[G.class_of[g]] == tot * Fraction(1, H.order)


@pytest.mark.parametrize("name", SMALL + ["sl25"])
def test_inflation_is_isometry(name):
    G = builtin(name)
    for N in normal_subgroups(G):
        qm = quotient(G, N)
        tq = list(character_table(qm.quotient))
        for a in tq[:4]:
            for b in tq[:4]:
                assert inner_product(inflate(a, qm), inflate(b, qm)) == inner_product(a, b)


def _numeric_det_order(G, chi):
    rep = irreducible_rep(G, chi)
    dets = [complex(np.linalg.det(np.array([[complex(x) for x in r] for r in rep(g).rows])))
            for g in G.generators]
    k = 1
    while not all(abs(d ** k - 1) < 1e-8 for d in dets):
        k += 1
    return k


def test_det_order_examples():
    S3 = builtin("sym3")
    assert det_order(character_table(S3)[2]) == 2
    Q8 = builtin("quaternion8")
    assert det_order(character_table(Q8)[4]) == 1
    C6 = builtin("cyclic6")
    assert sorted(det_order(chi) for chi in character_table(C6)) == [1, 2, 3, 3, 6, 6]


@pytest.mark.parametrize("name", SMALL + ["alt5", "sl25"])
def test_det_order_matches_matrices(name):
    G = builtin(name)
    for chi in character_table(G):
        o = det_order(chi)
        assert G.exponent % o == 0
        assert o == _numeric_det_order(G, chi)


def test_det_order_rejects_non_characters():
    G = builtin("sym3")
    half = ClassFunction(G, [Fraction(1, 2)] * 3)
    with pytest.raises(ValueError):
        det_order(half)


@pytest.mark.parametrize("name", SMALL + ["alt5"])
def test_linear_characters_form_a_group(name):
    G = builtin(name)
    lins = linear_characters(G)
    vals = {chi.values for chi in lins}
    for a in lins:
        assert det_order(a) == next(k for k in range(1, G.order + 1) if all(v ** k == 1 for v in a.values))
        for b in lins:
            assert pointwise_mul(a, b).values in vals
    if G.is_abelian():
        assert len(lins) == G.order


def test_linear_character_examples():
    assert len(linear_characters(builtin("alt5"))) == 1
    assert len(linear_characters(builtin("sym3"))) == 2
    assert len(linear_characters(builtin("cyclic2xcyclic4"))) == 8


def test_pointwise_mul_examples():
    S3 = builtin("sym3")
    tab = character_table(S3)
    sign = tab[1]
    assert pointwise_mul(sign, sign) == tab.trivial()
    assert pointwise_mul(tab[2], tab.trivial()) == tab[2]
    C5 = builtin("cyclic5")
    for lam in linear_characters(C5):
        assert pointwise_mul(lam, lam.conj()) == character_table(C5).trivial()


def test_class_function_helpers():
    G = builtin("sl23")
    tab = character_table(G)
    chi = tab[3] + tab[4]
    assert chi.is_character() and not chi.is_irreducible()
    assert tab[6].is_irreducible()
    assert [int(c.to_fraction()) for c in chi.decompose()] == [0, 0, 0, 1, 1, 0, 0]
    assert (tab[1] - tab[2]).is_generalized_character() and not (tab[1] - tab[2]).is_character()
    assert tab[0].kernel().order == 24
    assert tab[3].kernel().order == 1
    with pytest.raises(ValueError):
        ClassFunction(G, [1, 2])


def test_sweep_group_tables_build():
    # every group in the acceptance sweep has a certified table
    for name in sweep_groups(60, products=True)[:40]:
        check_orthogonality(character_table(builtin(name)))
