"""Command line front end; every command prints one JSON report.

Exit status: 0 when all certificates pass, 1 on bad input, 2 when a
certificate fails.
"""

import argparse
import json
import sys

from .chartab import ClassFunction, character_table
from .cocycle import quasi_ext_cocycle, triple_cocycle
from .groups import builtin, load_group_file, parse_group, parse_group_text
from .linalg import PrecisionError
from .perm import GroupOrderError, Permutation, PrimeSet, center, derived_subgroup, normal_subgroups, sylow_subgroup
from .report import decode_exact, digest, dumps, encode
from .sweep import pi_subsets, summarize, sweep, sweep_groups
from .triples import (
    QuasiExtension,
    TheoremViolation,
    TripleError,
    bijection_dz,
    compare_quasi_exts,
    count_check,
    dz_set,
    extendibility_prime_set,
    invariant_characters,
    make_triple,
    quasi_ext_canonical,
    quasi_ext_search,
    rdz_set,
    verify_quasi_ext,
)

COMMANDS = ("chartable", "triples", "obstruction", "quasiext", "dz", "rdz", "bijection", "sweep", "verify")
METHODS = ("search", "canonical", "cocycle")


class InputError(ValueError):
    pass


# -- argument handling ----------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="quasiext", description="Character triples, quasi-extensions and defect zero bijections.")
    p.add_argument("command", choices=COMMANDS)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--group", metavar="FILE", help="generators as JSON or cycle notation (0-based points)")
    g.add_argument("--builtin", metavar="NAME", help="builtin group, e.g. sym4, sl25, cyclic2xsym3")
    p.add_argument("--normal", metavar="SPEC",
                   help="center, derived, sylowP, trivial, whole, index:K (normal subgroup list) or generators")
    p.add_argument("--scan-normals", action="store_true")
    p.add_argument("--theta", metavar="SPEC", help="index into Irr(N), faithful or faithful-linear")
    p.add_argument("--scan-thetas", action="store_true")
    p.add_argument("--pi", metavar="PRIMES", help='comma separated primes; "" for the empty set')
    p.add_argument("--scan-pi", action="store_true")
    p.add_argument("--method", choices=METHODS + ("all",), default="search")
    p.add_argument("--input", metavar="FILE", help="report to re-check (verify)")
    p.add_argument("--max-order", type=int, default=120, help="sweep: largest group order")
    p.add_argument("--no-products", action="store_true", help="sweep: builtins only")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--jobs", type=int, default=1)
    return p


def _group(args):
    if args.builtin:
        return builtin(args.builtin), {"builtin": args.builtin}
    if args.group:
        G = load_group_file(args.group)
        return G, {"degree": G.degree, "generators": [list(G.element(g).images) for g in G.generators]}
    raise InputError("a group is required (--group or --builtin)")


def _normal_from_spec(G, spec):
    s = spec.strip().lower()
    if s == "center":
        return center(G)
    if s == "derived":
        return derived_subgroup(G)
    if s == "trivial":
        return G.trivial()
    if s == "whole":
        return G.whole()
    if s.startswith("sylow"):
        return sylow_subgroup(G, int(s[5:]))
    if s.startswith("index:"):
        normals = normal_subgroups(G)
        k = int(s[6:])
        if not 0 <= k < len(normals):
            raise InputError("normal subgroup index out of range")
        return normals[k]
    perms, degree = parse_group_text(spec)
    if degree != G.degree:
        raise InputError("normal subgroup generators have degree %d, group has %d" % (degree, G.degree))
    idx = []
    for p in perms:
        try:
            idx.append(G.index(p))
        except (KeyError, ValueError):
            raise InputError("generator %s is not in the group" % (p,))
    return G.subgroup(G.closure_set(idx), idx)


def _normals(G, args):
    if args.scan_normals:
        return normal_subgroups(G)
    if args.normal is None:
        raise InputError("--normal or --scan-normals is required")
    N = _normal_from_spec(G, args.normal)
    if not N.is_normal():
        raise InputError("the subgroup is not normal")
    return [N]


def _thetas(G, N, args):
    inv = invariant_characters(G, N)
    if args.scan_thetas:
        return inv
    if args.theta is None:
        raise InputError("--theta or --scan-thetas is required")
    s = args.theta.strip().lower()
    tab = character_table(N.group)
    if s in ("faithful", "faithful-linear"):
        for i in inv:
            chi = tab[i]
            if chi.kernel().order == 1 and (s == "faithful" or chi.values[0] == 1):
                return [i]
        raise InputError("no invariant %s character of N" % s)
    try:
        return [int(s)]
    except ValueError:
        raise InputError("bad --theta %r" % args.theta)


def _pis(order, args):
    if args.scan_pi:
        return pi_subsets(order)
    if args.pi is None:
        raise InputError("--pi or --scan-pi is required")
    text = args.pi.strip().lower()
    if text in ("", "none", "empty", "{}"):
        return [PrimeSet()]
    try:
        return [PrimeSet(int(x) for x in text.replace(" ", "").split(",") if x)]
    except ValueError as e:
        raise InputError(str(e))


def _triples(G, args):
    for N in _normals(G, args):
        for th in _thetas(G, N, args):
            yield make_triple(G, N, th)


def _normal_info(N):
    return {"order": N.order, "generators": [list(N.parent.element(g).images) for g in N.generators]}


def _triple_info(t):
    return {"normal": _normal_info(t.N), "theta": t.theta_index, "theta_degree": t.theta_degree,
            "theta_values": t.theta}


# -- commands ---------------------------------------------------------------------


def cmd_chartable(G, args):
    tab = character_table(G)
    classes = [{"representative": list(G.element(c.rep).images), "size": c.size, "order": int(G.orders[c.rep])}
               for c in G.classes]
    return {"order": G.order, "classes": classes, "characters": list(tab), "degrees": tab.degrees()}, True


def cmd_triples(G, args):
    out = []
    normals = normal_subgroups(G) if args.normal is None else _normals(G, args)
    for N in normals:
        out.append({"normal": _normal_info(N), "invariant_thetas": invariant_characters(G, N),
                    "degrees": character_table(N.group).degrees()})
    return out, True


def cmd_obstruction(G, args):
    out = []
    ok = True
    for t in _triples(G, args):
        primes = extendibility_prime_set(t)
        row = dict(_triple_info(t), primes=primes)
        try:
            _, rep = triple_cocycle(t)
            row["order"] = rep.order
            row["order_primes"] = list(rep.primes)
            row["witness"] = rep.witness
            ok &= set(rep.primes) == set(primes.primes)
        except GroupOrderError as e:
            row["order"] = None
            row["note"] = str(e)
        out.append(row)
    return out, ok


def _methods(args):
    return METHODS if args.method == "all" else (args.method,)


def _construct(t, pi, method):
    if method == "search":
        return quasi_ext_search(t, pi)
    if method == "canonical":
        if not pi.is_pi_number(t.N.order):
            return None
        return quasi_ext_canonical(t, pi)
    if extendibility_prime_set(t) <= pi:
        return quasi_ext_cocycle(t, pi)
    return None


def cmd_quasiext(G, args):
    out = []
    ok = True
    for t in _triples(G, args):
        for pi in _pis(t.Q.order, args):
            row = dict(_triple_info(t), pi=pi, obstruction=extendibility_prime_set(t))
            found = {}
            cons = {}
            for m in _methods(args):
                q = _construct(t, pi, m)
                if q is None:
                    cons[m] = None
                    continue
                cert = verify_quasi_ext(q)
                ok &= cert["pass"]
                found[m] = q
                cons[m] = {"values": q.values, "certificate": cert}
            row["constructions"] = cons
            comps = []
            names = sorted(found)
            for i, a in enumerate(names):
                for b in names[i + 1:]:
                    idx, lam = compare_quasi_exts(found[a], found[b])
                    ok &= idx is not None
                    comps.append({"pair": [a, b], "linear_index": idx, "linear": lam})
            row["comparisons"] = comps
            # Theorem A: a quasi-extension exists iff the obstruction lies in pi
            exists = bool(found)
            row["exists"] = exists
            if "search" in cons:
                ok &= (cons["search"] is not None) == (extendibility_prime_set(t) <= pi)
            out.append(row)
    return out, ok


def cmd_dz(G, args):
    out = []
    for pi in _pis(G.order, args):
        d = dz_set(G, pi)
        out.append({"pi": pi, "characters": d.indices})
    return out, True


def cmd_rdz(G, args):
    out = []
    for t in _triples(G, args):
        for pi in _pis(t.Q.order, args):
            r = rdz_set(t, pi)
            out.append(dict(_triple_info(t), pi=pi, characters=r.indices))
    return out, True


def cmd_bijection(G, args):
    out = []
    ok = True
    for t in _triples(G, args):
        for pi in _pis(t.Q.order, args):
            row = dict(_triple_info(t), pi=pi)
            q = quasi_ext_search(t, pi)
            a, b, eq, hyp = count_check(t, pi)
            row["counts"] = {"dz": a, "rdz": b, "equal": eq, "hypothesis": hyp}
            if hyp:
                ok &= eq
            if q is None:
                row["bijection"] = None
            else:
                bij = bijection_dz(t, q)
                ok &= bij["certificate"]["pass"]
                row["bijection"] = bij
                row["quasi_extension"] = q.values
            out.append(row)
    return out, ok


def cmd_sweep(G, args):
    if G is not None:
        names = [args.builtin]
    else:
        names = sweep_groups(args.max_order, products=not args.no_products)
    results = sweep(names, jobs=args.jobs)
    summary = summarize(results)
    ok = all(not v["failed"] for v in summary.values())
    return {"groups": names, "summary": summary, "results": results}, ok


def cmd_verify(G, args):
    """Re-check the quasi-extensions stored in a quasiext report."""
    if not args.input:
        raise InputError("verify needs --input REPORT")
    with open(args.input, encoding="utf-8") as fh:
        rep = json.load(fh)
    if rep.get("command") != "quasiext":
        raise InputError("verify expects a quasiext report")
    G = parse_group(rep["group"])
    out = []
    ok = True
    for row in rep["results"]:
        idx = []
        for perm in row["normal"]["generators"]:
            idx.append(G.index(Permutation(perm)))
        N = G.subgroup(G.closure_set(idx), idx)
        t = make_triple(G, N, row["theta"])
        pi = PrimeSet(row["pi"])
        certs = {}
        for m, c in sorted(row["constructions"].items()):
            if c is None:
                certs[m] = None
                continue
            vals = decode_exact(c["values"])
            q = QuasiExtension(t, pi, ClassFunction(G, vals), True, m)
            cert = verify_quasi_ext(q)
            ok &= cert["pass"]
            certs[m] = {"certificate": cert, "matches_report": encode(cert) == c["certificate"]}
            ok &= certs[m]["matches_report"]
        out.append({"normal": row["normal"], "theta": row["theta"], "pi": pi, "certificates": certs})
    return out, ok


def run(argv=None):
    """Parse ``argv``, run the command and return (exit status, report text)."""
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify" or (args.command == "sweep" and not args.builtin and not args.group):
            G, gspec = None, None
        else:
            G, gspec = _group(args)
        handler = globals()["cmd_" + args.command]
        results, ok = handler(G, args)
    except (InputError, TripleError, GroupOrderError, KeyError, ValueError, OSError) as e:
        return 1, dumps({"command": args.command, "error": str(e) or e.__class__.__name__})
    except (TheoremViolation, PrecisionError) as e:
        return 2, dumps({"command": args.command, "error": str(e), "certificate_failure": True})
    echo = {k: v for k, v in sorted(vars(args).items()) if k not in ("out", "jobs")}
    report = {
        "command": args.command,
        "arguments": echo,
        "group": gspec,
        "input_digest": digest({"arguments": echo, "group": gspec}),
        "results": results,
        "pass": bool(ok),
        "schema": 1,
    }
    return (0 if ok else 2), dumps(report)


def main(argv=None):
    args = build_parser().parse_args(argv)
    status, text = run(argv)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
