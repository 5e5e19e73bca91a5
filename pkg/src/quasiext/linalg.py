"""Exact linear algebra: GF(p), cyclotomic matrices, and integer Smith forms."""

from math import gcd

import mpmath
import numpy as np

from .cyclotomic import Cyclotomic, as_cyclotomic

__all__ = [
    "CycloMatrix",
    "EigenSplitError",
    "PrecisionError",
    "cyclo_nullspace",
    "eigen_split",
    "gfp_nullspace",
    "gfp_rref",
    "identify_root_of_unity",
    "smith_normal_form",
    "root_exponent",
    "solve_mod",
]


# -- GF(p) -------------------------------------------------------------------


def gfp_rref(A, p):
    """Reduced row echelon form of A over GF(p); returns (R, pivot_columns)."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, p) % p
        col = R[:, c].copy()
        col[r] = 0
        R = (R - np.outer(col, R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def gfp_nullspace(A, p):
    """Basis (rows) of the right nullspace {x : A x = 0} over GF(p)."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, pivots = gfp_rref(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-R[i, f]) % p
    return basis


class EigenSplitError(ArithmeticError):
    """Commuting matrices did not split into 1-dimensional common eigenspaces."""


def _restrict(M, B, p):
    # matrix A with M B^T = B^T A, for B a row basis of an M-invariant space
    Bt = B.T % p
    MB = M @ Bt % p
    k = B.shape[0]
    R, pivots = gfp_rref(np.hstack([Bt, MB]), p)
    if len(pivots) != k or pivots != list(range(k)):
        raise EigenSplitError("subspace is not invariant")
    return R[:k, k:]


def eigen_split(mats, p, simple=False):
    """Common eigenvectors of commuting matrices over GF(p).

    Returns vectors v (with M v = lambda v for every M), a basis of each
    common eigenspace in turn, in a deterministic order.  Raises
    EigenSplitError if the matrices are not simultaneously diagonalizable
    over GF(p), or, with ``simple``, if some common eigenspace has
    dimension above 1.
    """
    n = mats[0].shape[0]
    spaces = [np.eye(n, dtype=np.int64)]
    for M in mats:
        M = np.asarray(M, dtype=np.int64) % p
        new = []
        for B in spaces:
            if B.shape[0] == 1:
                new.append(B)
                continue
            A = _restrict(M, B, p)
            k = A.shape[0]
            found = 0
            pieces = []
            for lam in _eigenvalues(A, p):
                ns = gfp_nullspace((A - lam * np.eye(k, dtype=np.int64)) % p, p)
                if len(ns):
                    pieces.append(ns @ B % p)
                    found += len(ns)
            if found != k:
                raise EigenSplitError("matrix is not diagonalizable over GF(%d)" % p)
            new.extend(pieces)
        spaces = new
        if all(B.shape[0] == 1 for B in spaces):
            break
    if simple and any(B.shape[0] != 1 for B in spaces):
        raise EigenSplitError("common eigenspaces are not 1-dimensional")
    return [v for B in spaces for v in B]


def _charpoly(A, p):
    """Characteristic polynomial coefficients (lowest degree first) over GF(p)."""
    # Hessenberg reduction then the usual recurrence
    H = np.array(A, dtype=np.int64) % p
    n = H.shape[0]
    for m in range(1, n - 1):
        piv = None
        for i in range(m, n):
            if H[i, m - 1]:
                piv = i
                break
        if piv is None:
            continue
        if piv != m:
            H[[piv, m]] = H[[m, piv]]
            H[:, [piv, m]] = H[:, [m, piv]]
        inv = pow(int(H[m, m - 1]), -1, p)
        for i in range(m + 1, n):
            if H[i, m - 1]:
                u = H[i, m - 1] * inv % p
                H[i] = (H[i] - u * H[m]) % p
                H[:, m] = (H[:, m] + u * H[:, i]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        # p_k = (x - h_kk) p_{k-1} - sum_i h_ik prod(h_j,j-1) p_{i-1}
        prev = polys[k - 1]
        cur = [0] + list(prev)
        for i, c in enumerate(prev):
            cur[i] = (cur[i] - H[k - 1, k - 1] * c) % p
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * H[i, i - 1] % p
            coef = prod * H[i - 1, k - 1] % p
            for j, c in enumerate(polys[i - 1]):
                cur[j] = (cur[j] - coef * c) % p
        polys.append([int(c) for c in cur])
    return polys[n]


def _eigenvalues(A, p):
    poly = _charpoly(A, p)
    roots = []
    xs = np.arange(p, dtype=np.int64)
    val = np.zeros(p, dtype=np.int64)
    for c in reversed(poly):
        val = (val * xs + c) % p
    roots = [int(x) for x in np.nonzero(val == 0)[0]]
    return roots


# -- cyclotomic matrices ------------------------------------------------------


class CycloMatrix:
    """Dense matrix with Cyclotomic entries (row-major lists)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [[as_cyclotomic(x) for x in r] for r in rows]

    @classmethod
    def identity(cls, n):
        return cls([[Cyclotomic(1 if i == j else 0) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls([[Cyclotomic(0)] * m for _ in range(n)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        cols = [[other.rows[t][j] for t in range(k)] for j in range(m)]
        out = []
        for r in self.rows:
            nzr = [(t, x) for t, x in enumerate(r) if not x.is_zero()]
            row = []
            for col in cols:
                s = Cyclotomic(0)
                for t, x in nzr:
                    y = col[t]
                    if not y.is_zero():
                        s = s + x * y
                row.append(s)
            out.append(row)
        return CycloMatrix._raw(out)

    @classmethod
    def _raw(cls, rows):
        m = object.__new__(cls)
        m.rows = rows
        return m

    def scale(self, c):
        c = as_cyclotomic(c)
        return CycloMatrix._raw([[c * x for x in r] for r in self.rows])

    def __add__(self, other):
        return CycloMatrix._raw([[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return CycloMatrix._raw([[x - y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and self.shape == other.shape and all(
            x == y for a, b in zip(self.rows, other.rows) for x, y in zip(a, b))

    def trace(self):
        s = Cyclotomic(0)
        for i in range(len(self.rows)):
            s = s + self.rows[i][i]
        return s

    def is_scalar(self):
        """The scalar c if self == c*I, else None."""
        n, m = self.shape
        if n != m:
            return None
        c = self.rows[0][0]
        for i in range(n):
            for j in range(n):
                if i == j and self.rows[i][j] != c:
                    return None
                if i != j and not self.rows[i][j].is_zero():
                    return None
        return c

    def scalar_ratio(self, other):
        """c with self == c*other, or None (other must be nonzero)."""
        c = None
        for a, b in zip(self.rows, other.rows):
            for x, y in zip(a, b):
                if y.is_zero():
                    if not x.is_zero():
                        return None
                elif c is None:
                    c = x / y
                elif x != c * y:
                    return None
        return c

    def inverse(self):
        n, m = self.shape
        aug = [list(r) + [Cyclotomic(1 if i == j else 0) for j in range(n)] for i, r in enumerate(self.rows)]
        R, piv = cyclo_rref(aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return CycloMatrix._raw([r[n:] for r in R[:n]])

    def __repr__(self):
        return "CycloMatrix(%s)" % [[str(x) for x in r] for r in self.rows]


def cyclo_rref(rows):
    """Reduced row echelon form over Q(z); returns (rows, pivot_columns)."""
    R = [[as_cyclotomic(x) for x in r] for r in rows]
    nrows = len(R)
    ncols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if not R[i][c].is_zero()), None)
        if k is None:
            continue
        R[r], R[k] = R[k], R[r]
        inv = R[r][c].inverse()
        R[r] = [x * inv if not x.is_zero() else x for x in R[r]]
        for i in range(nrows):
            if i != r and not R[i][c].is_zero():
                f = R[i][c]
                R[i] = [x - f * y if not y.is_zero() else x for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def cyclo_nullspace(rows, ncols=None):
    """Basis of {x : A x = 0} over Q(z), as a list of vectors (canonical RREF basis)."""
    if not rows:
        return [[Cyclotomic(1 if i == j else 0) for i in range(ncols)] for j in range(ncols)]
    ncols = len(rows[0])
    R, pivots = cyclo_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Cyclotomic(0)] * ncols
        v[f] = Cyclotomic(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(v)
    return basis


# -- integer lattices ---------------------------------------------------------


def _ext_gcd(a, b):
    # returns (g, s, t) with s*a + t*b = g >= 0
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def smith_normal_form(A):
    """Smith normal form over Z.

    Returns (U, D, V) as lists of lists of ints with U*A*V == D, U and V
    unimodular and the diagonal of D nonnegative with d_i | d_{i+1}.
    """
    A = [[int(x) for x in r] for r in A]
    m = len(A)
    n = len(A[0]) if m else 0
    D = [r[:] for r in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(M, i, j, a, b, c, d):
        # rows (i, j) <- (a*ri + b*rj, c*ri + d*rj)
        ri, rj = M[i], M[j]
        M[i] = [a * x + b * y for x, y in zip(ri, rj)]
        M[j] = [c * x + d * y for x, y in zip(ri, rj)]

    def col_op(M, i, j, a, b, c, d):
        # cols (i, j) <- (a*ci + b*cj, c*ci + d*cj)
        for r in M:
            x, y = r[i], r[j]
            r[i] = a * x + b * y
            r[j] = c * x + d * y

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            D[i], D[t] = D[t], D[i]
            U[i], U[t] = U[t], U[i]
        if j != t:
            col_op(D, t, j, 0, 1, 1, 0)
            col_op(V, t, j, 0, 1, 1, 0)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    a, b = D[t][t], D[i][t]
                    if b % a == 0:
                        row_op(D, t, i, 1, 0, -(b // a), 1)
                        row_op(U, t, i, 1, 0, -(b // a), 1)
                        continue
                    g, s, u = _ext_gcd(a, b)
                    row_op(D, t, i, s, u, -b // g, a // g)
                    row_op(U, t, i, s, u, -b // g, a // g)
            for j in range(t + 1, n):
                if D[t][j]:
                    a, b = D[t][t], D[t][j]
                    if b % a == 0:
                        col_op(D, t, j, 1, 0, -(b // a), 1)
                        col_op(V, t, j, 1, 0, -(b // a), 1)
                        continue
                    g, s, u = _ext_gcd(a, b)
                    col_op(D, t, j, s, u, -b // g, a // g)
                    col_op(V, t, j, s, u, -b // g, a // g)
                    done = False
            if any(D[i][t] for i in range(t + 1, m)):
                continue
            if not done:
                continue
            # divisibility by the pivot of the remaining block
            p = D[t][t]
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            i, _ = bad
            row_op(D, t, i, 1, 1, 0, 1)
            row_op(U, t, i, 1, 1, 0, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def _mat_vec(A, x):
    return [sum(a * b for a, b in zip(r, x)) for r in A]


def _echelon_mod(rows, M, width):
    """Row-reduce integer rows modulo M (unimodular row operations only)."""
    basis = {}  # pivot column -> row
    for row in rows:
        r = [x % M for x in row]
        while True:
            lead = next((c for c in range(width) if r[c]), None)
            if lead is None:
                break
            if lead not in basis:
                basis[lead] = r
                break
            piv = basis[lead]
            a, b = piv[lead], r[lead]
            g, s, t = _ext_gcd(a, b)
            new_piv = [(s * x + t * y) % M for x, y in zip(piv, r)]
            rest = [(-(b // g) * x + (a // g) * y) % M for x, y in zip(piv, r)]
            basis[lead] = new_piv
            r = rest
    return [basis[c] for c in sorted(basis)]


def solve_mod(A, b, M):
    """Solve A x == b (mod M).

    Returns (x, kmin): x is a solution as a list of ints in [0, M) or None,
    and kmin is the least k >= 1 for which A x == k b (mod M) is solvable.
    Tall systems are first row-reduced modulo M; the decision itself uses
    the Smith form of the reduced matrix.
    """
    M = int(M)
    A = [[int(x) for x in r] for r in A]
    b = [int(x) for x in b]
    ncols = len(A[0]) if A else 0
    if M == 1:
        return [0] * ncols, 1
    aug = _echelon_mod([r + [y] for r, y in zip(A, b)], M, ncols + 1)
    if not aug:
        return [0] * ncols, 1
    A2 = [r[:ncols] for r in aug]
    b2 = [r[ncols] for r in aug]
    if ncols == 0:
        A2 = [[0] for _ in aug]
        ncols_eff = 1
    else:
        ncols_eff = ncols
    U, D, V = smith_normal_form(A2)
    c = _mat_vec(U, b2)
    kmin = 1
    y = [0] * ncols_eff
    ok = True
    for i, ci in enumerate(c):
        d = D[i][i] if i < ncols_eff else 0
        g = gcd(d, M)
        ci %= M
        if ci % g:
            ok = False
        kmin = _lcm(kmin, g // gcd(g, ci))
        if i < ncols_eff and g and ci % g == 0 and d % M:
            # d*y == ci (mod M)
            dm = d // g
            y[i] = (ci // g) * pow(dm, -1, M // g) % (M // g) if M // g > 1 else 0
    if not ok:
        return None, kmin
    x = [v % M for v in _mat_vec(V, y)][:ncols]
    for r, rhs in zip(A, b):
        assert sum(p * q for p, q in zip(r, x)) % M == rhs % M, "solve_mod self-check failed"
    return x, kmin


def _lcm(a, b):
    return a // gcd(a, b) * b


# -- roots of unity -----------------------------------------------------------


class PrecisionError(ArithmeticError):
    """A numerical value could not be matched to a root of unity safely."""


def root_exponent(z, q, eps_bound=None):
    """Exponent k in [0, q) with z within ``eps_bound`` of exp(2 pi i k / q).

    The default bound is sin(pi/q)/2, half the gap between neighbouring
    roots.  Raises PrecisionError when z is not that close to any root.
    """
    q = int(q)
    z = mpmath.mpc(z)
    if eps_bound is None:
        eps_bound = mpmath.sin(mpmath.pi / q) / 2 if q > 1 else mpmath.mpf("0.5")
    k = int(mpmath.nint(mpmath.arg(z) / (2 * mpmath.pi) * q)) % q
    if not abs(z - mpmath.expjpi(mpmath.mpf(2 * k) / q)) < eps_bound:
        raise PrecisionError("value %s is not within %s of a %d-th root of unity"
                             % (mpmath.nstr(z, 10), mpmath.nstr(eps_bound, 5), q))
    return k


def identify_root_of_unity(z, q, eps_bound=None):
    """The q-th root of unity nearest to z, as an exact Cyclotomic."""
    return Cyclotomic.zeta(int(q), root_exponent(z, q, eps_bound))
