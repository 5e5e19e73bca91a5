"""Builtin permutation groups and group file parsing."""

import json
import re
from math import factorial

from .perm import FiniteGroup, Permutation

__all__ = ["builtin", "builtin_names", "builtin_order", "direct_product", "load_group_file", "parse_group", "parse_group_text"]


def cyclic(n):
    return FiniteGroup.from_generators([Permutation([(i + 1) % n for i in range(n)])], name="C%d" % n)


def dihedral(n):
    """Symmetries of a regular n-gon (order 2n)."""
    if n == 1:
        return cyclic(2)
    if n == 2:
        return direct_product(cyclic(2), cyclic(2), name="D2")
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return FiniteGroup.from_generators([rot, ref], name="D%d" % n)


def symmetric(n):
    if n == 1:
        return FiniteGroup.from_generators([Permutation([0])], name="S1")
    gens = [Permutation.from_cycles(n, tuple(range(n)))]
    if n > 2:
        gens.append(Permutation.from_cycles(n, (0, 1)))
    return FiniteGroup.from_generators(gens, name="S%d" % n)


def alternating(n):
    if n < 3:
        return FiniteGroup.from_generators([Permutation(range(max(n, 1)))], name="A%d" % n)
    gens = [Permutation.from_cycles(n, (0, 1, k)) for k in range(2, n)]
    return FiniteGroup.from_generators(gens, name="A%d" % n)


def quaternion8():
    # regular action of Q8 on itself
    i = Permutation.from_cycles(8, (0, 2, 1, 3), (4, 6, 5, 7))
    j = Permutation.from_cycles(8, (0, 4, 1, 5), (2, 7, 3, 6))
    return FiniteGroup.from_generators([i, j], name="Q8")


def _projective_line_action(p, matrices):
    """Action of 2x2 matrices over GF(p) on the nonzero vectors of GF(p)^2."""
    vecs = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    index = {v: k for k, v in enumerate(vecs)}
    perms = []
    for (a, b, c, d) in matrices:
        # row vector times matrix
        perms.append(Permutation([index[((x * a + y * c) % p, (x * b + y * d) % p)] for x, y in vecs]))
    return perms


def sl2(p):
    gens = _projective_line_action(p, [(1, 1, 0, 1), (0, 1, p - 1, 0)])
    return FiniteGroup.from_generators(gens, name="SL(2,%d)" % p)


def direct_product(*groups, name=None):
    """External direct product, acting on the disjoint union of point sets."""
    offset = 0
    total = sum(G.degree for G in groups)
    gens = []
    for G in groups:
        d = G.degree
        for g in G.generators:
            img = list(range(total))
            for x, y in enumerate(G.element(g).images):
                img[offset + x] = offset + y
            gens.append(Permutation(img))
        offset += d
    if not gens:
        gens = [Permutation.identity(max(total, 1))]
    if name is None:
        name = "x".join(G.name or "?" for G in groups)
    return FiniteGroup.from_generators(gens, degree=max(total, 1), name=name)


_FIXED = {
    "quaternion8": quaternion8,
    "q8": quaternion8,
    "sl23": lambda: sl2(3),
    "sl25": lambda: sl2(5),
}

_FAMILIES = {
    "cyclic": cyclic,
    "c": cyclic,
    "dihedral": dihedral,
    "d": dihedral,
    "sym": symmetric,
    "s": symmetric,
    "alt": alternating,
    "a": alternating,
}

_FAMILY_ORDER = {
    cyclic: lambda n: n,
    dihedral: lambda n: 2 * n,
    symmetric: lambda n: factorial(n),
    alternating: lambda n: max(factorial(n) // 2, 1),
}


def builtin_names(max_order=None):
    """Names of the builtin catalogue, optionally only groups of order <= max_order."""
    names = ["cyclic%d" % n for n in range(1, 13)]
    names += ["dihedral%d" % n for n in range(3, 13)]
    names += ["sym%d" % n for n in range(2, 7)]
    names += ["alt%d" % n for n in range(4, 7)]
    names += ["quaternion8", "sl23", "sl25"]
    if max_order is None:
        return names
    return [n for n in names if builtin_order(n) <= max_order]


def _parse_factor(token):
    token = token.strip().lower()
    if token in _FIXED:
        return _FIXED[token], None
    m = re.fullmatch(r"([a-z]+)[:_ ]?(\d+)", token)
    if m and m.group(1) in _FAMILIES:
        return _FAMILIES[m.group(1)], int(m.group(2))
    raise KeyError("unknown builtin group %r" % token)


def _factors(name):
    key = re.sub(r"\s+", "", name.lower())
    return [t for t in re.split(r"[*x]|×", key) if t] if key not in _FIXED else [key]


def builtin_order(name):
    total = 1
    for tok in _factors(name):
        fn, n = _parse_factor(tok)
        total *= {"quaternion8": 8, "q8": 8, "sl23": 24, "sl25": 120}[tok] if n is None else _FAMILY_ORDER[fn](n)
    return total


_cache = {}


def builtin(name, n=None):
    """A builtin group.

    Names: cyclicN, dihedralN (order 2N), symN, altN, quaternion8, sl23,
    sl25 (short forms cN, dN, sN, aN, q8 also work), or direct products
    joined with ``x`` or ``*`` such as ``cyclic2xsym3``.
    """
    if n is not None:
        name = "%s%d" % (name, n)
    key = re.sub(r"\s+", "", name.lower())
    if key in _cache:
        return _cache[key]
    parts = _factors(key)
    if not parts:
        raise KeyError("unknown builtin group %r" % name)
    if len(parts) > 1:
        G = direct_product(*(builtin(p) for p in parts), name=key)
    else:
        fn, num = _parse_factor(parts[0])
        G = fn() if num is None else fn(num)
    G.name = key
    _cache[key] = G
    return G


def parse_group(spec):
    """Group from a spec dict: {"builtin": name, "n": k} or {"degree": d, "generators": [...]}.

    Generators are 0-based one-line permutations.
    """
    if isinstance(spec, str):
        spec = json.loads(spec)
    if "builtin" in spec:
        return builtin(spec["builtin"], spec.get("n"))
    if "generators" in spec:
        gens = spec["generators"]
        degree = spec.get("degree") or (len(gens[0]) if gens else 1)
        perms = []
        for g in gens:
            if len(g) != degree:
                raise ValueError("generator %r does not have degree %d" % (g, degree))
            perms.append(Permutation(g))
        if not perms:
            perms = [Permutation.identity(degree)]
        return FiniteGroup.from_generators(perms, degree=degree)
    raise ValueError("group spec needs 'builtin' or 'generators'")


def parse_group_text(text):
    """Parse generators from JSON or cycle notation.

    JSON: ``{"degree": n, "generators": [[images...], ...]}`` (0-based) or a
    ``{"builtin": ...}`` spec.  Otherwise each nonblank line is one generator in cycle
    notation over 0-based points, like ``(0,1,2)(3,4)``; a line ``degree n``
    fixes the degree.
    """
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        data = json.loads(text)
        if isinstance(data, dict) and "builtin" in data:
            G = parse_group(data)
            return [G.element(g) for g in G.generators] or [G.element(0)], G.degree
        if isinstance(data, dict):
            gens = data["generators"]
            degree = data.get("degree")
        else:
            gens, degree = data, None
        if degree is None:
            degree = max(len(g) for g in gens)
        perms = []
        for g in gens:
            if len(g) != degree:
                raise ValueError("generator of wrong length")
            perms.append(Permutation(g))
        return perms, degree
    degree = None
    cyc_lines = []
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"degree\s+(\d+)", line)
        if m:
            degree = int(m.group(1))
            continue
        cycles = re.findall(r"\(([^()]*)\)", line)
        if not cycles or re.sub(r"\([^()]*\)", "", line).strip():
            raise ValueError("cannot parse generator line %r" % line)
        cyc_lines.append([tuple(int(x) for x in re.split(r"[,\s]+", c.strip()) if x) for c in cycles])
    if not cyc_lines:
        raise ValueError("no generators found")
    top = max((max(c) for cl in cyc_lines for c in cl if c), default=0) + 1
    degree = max(degree or 0, top)
    perms = []
    for cl in cyc_lines:
        flat = [x for c in cl for x in c]
        if len(flat) != len(set(flat)) or min(flat, default=0) < 0:
            raise ValueError("cycles are not disjoint")
        perms.append(Permutation.from_cycles(degree, *[c for c in cl if c]))
    return perms, degree


def load_group_file(path):
    with open(path) as fh:
        perms, degree = parse_group_text(fh.read())
    return FiniteGroup.from_generators(perms, degree=degree, name=str(path))
