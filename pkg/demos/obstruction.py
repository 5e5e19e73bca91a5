"""Obstruction primes and class orders for the triples of a few small groups."""

from quasiext import builtin, class_order, extendibility_prime_set, make_triple, normal_subgroups
from quasiext.cocycle import triple_cocycle
from quasiext.triples import invariant_characters


def main():
    for name in ("quaternion8", "dihedral4", "sl23", "sl25"):
        G = builtin(name)
        for N in normal_subgroups(G):
            if N.order in (1, G.order):
                continue
            for th in invariant_characters(G, N):
                t = make_triple(G, N, th)
                beta, report = triple_cocycle(t)
                assert class_order(beta).order == report.order
                print("%-12s |N|=%-3d theta#%d deg %d  class order %d  obstruction %s"
                      % (name, N.order, th, t.theta_degree, report.order,
                         list(extendibility_prime_set(t).primes)))


if __name__ == "__main__":
    main()
