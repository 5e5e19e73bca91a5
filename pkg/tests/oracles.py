"""Slow, independent reference computations used to cross-check the library.

Nothing here reuses the library's algorithms: classes come from conjugating
Permutation objects, tables from floating point diagonalization of class
matrices, subgroups from closure under joins, modular systems from
enumeration and Smith forms from determinantal divisors.
"""

import cmath
from fractions import Fraction
from itertools import combinations, product
from math import gcd

import numpy as np


# -- groups --------------------------------------------------------------------


def perm_mul(p, q):
    """p then q, on image tuples."""
    return tuple(q[i] for i in p)


def perm_inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_order(p):
    e = tuple(range(len(p)))
    x, k = p, 1
    while x != e:
        x, k = perm_mul(x, p), k + 1
    return k


def elements(gens, degree):
    """All elements generated by ``gens`` (image tuples), by breadth first search."""
    e = tuple(range(degree))
    seen = {e}
    todo = [e]
    while todo:
        x = todo.pop()
        for g in gens:
            y = perm_mul(x, g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen)


def classes(elems):
    """Conjugacy classes as frozensets of image tuples."""
    left = set(elems)
    out = []
    while left:
        x = min(left)
        cls = frozenset(perm_mul(perm_mul(perm_inv(g), x), g) for g in elems)
        out.append(cls)
        left -= cls
    return out


def subgroups(G):
    """All subgroups of a FiniteGroup as frozensets of indices (closure under joins)."""
    def close(gens):
        return frozenset(G.closure_set(list(gens)))

    found = {frozenset([0])}
    layer = {close([x]) for x in range(G.order)}
    found |= layer
    cyclic = list(layer)
    while layer:
        new = set()
        for H in layer:
            for C in cyclic:
                if not C <= H:
                    J = close(sorted(H | C))
                    if J not in found:
                        new.add(J)
        found |= new
        layer = new
    return found


def _prime_divisors(n):
    return {p for p in range(2, n + 1) if n % p == 0 and all(p % r for r in range(2, p))}


def pi_parts(p, primes):
    """(pi-part, pi'-part) of a permutation by searching its powers."""
    m = perm_order(p)
    powers = [tuple(range(len(p)))]
    for _ in range(1, m):
        powers.append(perm_mul(powers[-1], p))
    for a in powers:
        if not _prime_divisors(perm_order(a)) <= set(primes):
            continue
        for b in powers:
            if not _prime_divisors(perm_order(b)) & set(primes) and perm_mul(a, b) == p:
                return a, b
    raise AssertionError("no decomposition")


# -- numerical character tables -------------------------------------------------


def numeric_table(G):
    """Character table of a FiniteGroup in floating point (Burnside's method).

    Central characters omega(C_k) = |C_k| chi(g_k) / chi(1) are the common
    eigenvectors of the class multiplication matrices.  Rows are complex
    arrays over G.classes in arbitrary order.
    """
    cls = [np.array(c.members) for c in G.classes]
    r = len(cls)
    reps = [int(c[0]) for c in cls]
    # a[j, k, l] = #{(x, y) in C_j x C_k : xy = z_l}
    a = np.zeros((r, r, r))
    for j in range(r):
        for k in range(r):
            prods = G.table[np.ix_(cls[j], cls[k])].ravel()
            for l, z in enumerate(reps):
                a[j, k, l] = np.count_nonzero(prods == z)
    w = np.random.default_rng(7).normal(size=r)
    A = np.einsum("j,jkl->kl", w, a)
    _, vecs = np.linalg.eig(A)
    sizes = np.array([len(c) for c in cls], dtype=float)
    rows = []
    for i in range(r):
        om = vecs[:, i] / vecs[0, i]
        deg = np.sqrt(G.order / np.sum(np.abs(om) ** 2 / sizes))
        rows.append(deg * om / sizes)
    return rows


def rows_match(exact_rows, numeric_rows, tol=1e-6):
    """True when the exact rows are a permutation of the numeric ones."""
    ex = [np.array([complex(v) for v in row]) for row in exact_rows]
    used = set()
    for row in ex:
        hit = None
        for i, nr in enumerate(numeric_rows):
            if i not in used and np.allclose(row, nr, atol=tol):
                hit = i
                break
        if hit is None:
            return False
        used.add(hit)
    return len(used) == len(numeric_rows)


def element_inner(G, f, g):
    """(1/|G|) sum over elements of f(x) conj(g(x)) for functions on element indices."""
    return sum(complex(f(x)) * complex(g(x)).conjugate() for x in range(G.order)) / G.order


# -- integer algebra ------------------------------------------------------------


def int_det(M):
    """Exact determinant by fraction-based elimination."""
    n = len(M)
    A = [[Fraction(x) for x in r] for r in M]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            for j in range(c, n):
                A[i][j] -= f * A[c][j]
    return int(det)


def smith_invariants(A):
    """Diagonal of the Smith form from the gcds of k x k minors."""
    m, n = len(A), len(A[0])
    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, int_det([[A[i][j] for j in cols] for i in rows]))
        if g == 0:
            out.extend([0] * (min(m, n) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


def brute_solve_mod(A, b, M):
    """(some solution or None, least k >= 1 with A x = k b solvable) by enumeration."""
    n = len(A[0])
    sols = {}
    for x in product(range(M), repeat=n):
        v = tuple(sum(a * y for a, y in zip(r, x)) % M for r in A)
        sols.setdefault(v, x)
    first = sols.get(tuple(y % M for y in b))
    for k in range(1, M + 1):
        if tuple(k * y % M for y in b) in sols:
            return first, k
    raise AssertionError("k = M always works")


def has_linear_projective_rep(Q, value, tol=1e-8):
    """Is there f : Q -> C^x with f(x) f(y) = value(x, y) f(xy)?

    ``value`` is a normalized cocycle with complex values.  f is fixed on
    the generators by a choice of root of the cyclic relation, spread over
    Q along words in the generators, then tested on every pair.
    """
    n = Q.order
    T = Q.table
    gens = list(Q.generators)
    choices = []
    for s in gens:
        k = int(Q.orders[s])
        # f(s)^k = prod_{i<k} value(s^i, s) because f(1) = 1
        prod_, x = 1, 0
        for _ in range(k):
            prod_ *= value(x, s)
            x = int(T[x, s])
        r = cmath.exp(cmath.log(prod_) / k)
        choices.append([r * root_of_unity(k, j) for j in range(k)])
    for pick in product(*choices):
        f = {0: 1}
        todo = [0]
        while todo:
            x = todo.pop()
            for s, fs in zip(gens, pick):
                y = int(T[x, s])
                if y not in f:
                    f[y] = f[x] * fs / value(x, s)
                    todo.append(y)
        if all(abs(f[x] * f[y] - value(x, y) * f[int(T[x, y])]) < tol for x in range(n) for y in range(n)):
            return True
    return False


def brute_class_order(Q, value, bound):
    """Least k <= bound such that value^k has a 1-dimensional projective representation."""
    for k in range(1, bound + 1):
        if has_linear_projective_rep(Q, lambda x, y: value(x, y) ** k):
            return k
    raise AssertionError("order exceeds the bound")


def root_of_unity(n, k):
    return cmath.exp(2j * cmath.pi * k / n)
