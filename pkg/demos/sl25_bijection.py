"""SL(2,5) over its center: three quasi-extensions of the faithful linear
character agree up to linear characters of A5, and multiplying by the
2-defect-zero character of A5 lands on the faithful degree 4 character."""

from quasiext import PrimeSet, builtin, center, character_table, make_triple
from quasiext.cocycle import quasi_ext_cocycle
from quasiext.triples import bijection_dz, compare_quasi_exts, quasi_ext_canonical, quasi_ext_search


def main():
    G = builtin("sl25")
    Z = center(G)
    th = next(i for i, c in enumerate(character_table(Z.group)) if c.kernel().order == 1)
    t = make_triple(G, Z, th)
    pi = PrimeSet([2])
    found = {
        "search": quasi_ext_search(t, pi),
        "canonical": quasi_ext_canonical(t, pi),
        "cocycle": quasi_ext_cocycle(t, pi),
    }
    for name, q in found.items():
        print("%-9s %s" % (name, [str(v) for v in q.values.values]))
    idx, _ = compare_quasi_exts(found["search"], found["cocycle"])
    print("search vs cocycle differ by linear character #%s of G/N" % idx)
    bij = bijection_dz(t, found["search"])
    tab = character_table(G)
    for i, j in bij["pairs"]:
        print("dz character #%d of A5 -> Irr(G) #%d of degree %s" % (i, j, tab[j].values[0]))
    print("certificate:", bij["certificate"])


if __name__ == "__main__":
    main()
