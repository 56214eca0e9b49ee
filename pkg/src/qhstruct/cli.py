"""qhstruct command line.

Exit status: 0 on success, 1 on a domain error (or a failed check), 2 on a
usage error. JSON output always carries "schema": "qhstruct/1".
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting
from .errors import QhError, UnsupportedError
from .quiver import Quiver, is_tree, is_type_a, load_quiver, mask_of, reachability

SCHEMA = "qhstruct/1"


def _emit_json(payload: dict, dest: str | None):
    text = json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=False) + "\n"
    if dest in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text)


def _emit_text(text: str, dest: str):
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text)


def _workers(args, n: int) -> int:
    from .structures import default_workers
    if args.threads is not None:
        return max(1, args.threads)
    return default_workers() if n >= 9 else 1


def _read_order(path: str):
    from .order import PartialOrder
    with open(path) as fh:
        return PartialOrder.from_json(json.load(fh))


# ---------------------------------------------------------------- verbs

def cmd_enumerate(args) -> int:
    from .structures import enumerate_structures
    q = args.quiver
    p = enumerate_structures(q, _workers(args, q.n))
    if args.json:
        _emit_json(p.to_json(), args.json)
    if args.dot:
        _emit_text(p.to_dot(), args.dot)
    if not args.json and not args.dot:
        print(f"{len(p)} quasi-hereditary structures")
        for k, s in enumerate(p.structures):
            print(f"{k:4d}  {s.label()}")
    return 0


def _count_methods(name: str | None, q: Quiver) -> dict:
    """Applicable counting routes for the input, as name -> thunk."""
    import re
    from .deconcat import iterated_typeA
    methods = {}
    m = re.fullmatch(r"(A|K|D1|D2)(\d+)", name or "")
    star = re.fullmatch(r"Q\((\d+),(\d+),(\d+)\)", (name or "").replace(" ", ""))
    if m:
        kind, n = m.group(1), int(m.group(2))
        closed = {"A": counting.catalan, "K": counting.count_K,
                  "D1": counting.count_D1, "D2": counting.count_D2}[kind]
        methods["formula"] = lambda: closed(n)
        if kind == "D1":
            methods["recursive"] = lambda: counting.count_star(n - 3, 1, 1)
        if kind == "D2":
            methods["recursive"] = lambda: counting.count_star(1, n - 3, 1)
    elif star:
        r, s, t = map(int, star.groups())
        methods["recursive"] = lambda: counting.count_star(r, s, t)
    elif is_type_a(q):
        def product():
            out = 1
            for vs, _ in iterated_typeA(q).parts:
                out *= counting.catalan(len(vs))
            return out
        methods["formula"] = product
    methods["brute"] = lambda: len(_enumerate(q))
    return methods


def _enumerate(q):
    from .structures import enumerate_structures
    return enumerate_structures(q, 1)


def cmd_count(args) -> int:
    q = args.quiver
    methods = _count_methods(args.quiver_name, q)
    if args.verify:
        results = {k: f() for k, f in methods.items()}
        for k, v in results.items():
            print(f"{k}: {v}")
        if len(set(results.values())) != 1:
            print("methods disagree", file=sys.stderr)
            return 1
        return 0
    method = args.method or next(k for k in ("formula", "recursive", "brute") if k in methods)
    if method not in methods:
        raise UnsupportedError(f"method {method!r} does not apply to this quiver")
    print(methods[method]())
    return 0


def cmd_lattice(args) -> int:
    from .obstructions import find_Dtilde, find_Zn
    from .structures import enumerate_structures
    q = args.quiver
    p = enumerate_structures(q, _workers(args, q.n))
    w = p.lattice_witness()
    zn = find_Zn(reachability(q))
    dt = find_Dtilde(q) if is_tree(q) else None
    payload = {"structures": len(p), "lattice": w is None,
               "Zm_subposet": list(zn) if zn else None,
               "Dtilde_subquiver": list(dt) if dt else None}
    if w is not None:
        kind, a, b = w
        payload["witness"] = {"missing": kind,
                              "pair": [[list(x) for x in p.structures[a].min_order.pairs()],
                                       [list(x) for x in p.structures[b].min_order.pairs()]]}
    if args.json:
        _emit_json(payload, args.json)
        return 0
    if w is None:
        print(f"lattice ({len(p)} structures)")
    else:
        kind, a, b = w
        print(f"not a lattice ({len(p)} structures): no {kind} of "
              f"{p.structures[a].label()} and {p.structures[b].label()}")
    if zn:
        print(f"full subposet Z_{len(zn)} on vertices {list(zn)}")
    if dt:
        print(f"D~ subquiver between vertices {dt[0]} and {dt[1]}")
    return 0


def cmd_deconcat(args) -> int:
    from .deconcat import deconcatenate, maximal_deconcatenation
    q = args.quiver
    d = deconcatenate(q, args.at) if args.at is not None else maximal_deconcatenation(q)
    _emit_json(d.to_json(), args.json or "-")
    return 0


def cmd_tilting(args) -> int:
    from .deconcat import tree_tilting_supports
    from .standard import minimal_adapted, tilting_supports
    q = args.quiver
    m = minimal_adapted(_read_order(args.order), q)
    supp = tilting_supports(m, q) if is_type_a(q) else tree_tilting_supports(q, m)
    _emit_json({"minimal_order": [list(x) for x in m.pairs()],
                "tilting_supports": {str(i + 1): sorted(s) for i, s in enumerate(supp)}}, args.json or "-")
    return 0


def cmd_tamari(args) -> int:
    from .poset import hasse_dot
    from .type_a import tamari_poset, to_parens
    t = tamari_poset(args.n)
    if args.dot:
        _emit_text(hasse_dot(t.poset, [to_parens(x) for x in t.trees], "tamari"), args.dot)
    else:
        print(f"Tamari({args.n}): {len(t.trees)} trees, {t.cover_count} covers, "
              f"lattice: {t.poset.is_lattice()}")
    return 0


def cmd_tree_order(args) -> int:
    from .type_a import from_parens, tree_to_order
    o = tree_to_order(from_parens(args.tree))
    print(" ".join(f"{i}<{j}" for i, j in o.pairs()))
    return 0


def cmd_lift(args) -> int:
    from .lift import lift_order
    q = args.quiver
    subset = [int(x) for x in args.subset.split(",") if x.strip()]
    o = _read_order(args.order)
    lifted = lift_order(reachability(q), mask_of(subset), o)
    _emit_json({"order": lifted.to_json()}, args.json or "-")
    return 0


def cmd_verify(args) -> int:
    from .acceptance import run_all
    numbers = None if not args.only else {int(x) for x in args.only.split(",")}
    results = run_all(numbers)
    for r in results:
        print(r.line(), flush=True)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhstruct",
                                 description="Quasi-hereditary structures on path algebras of acyclic quivers.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def quiver_arg(p):
        p.add_argument("quiver", help="catalog name (A5, K3, Z4, Dtilde4, D15, D25, 'Q(1,3,2)') or JSON file")

    p = sub.add_parser("enumerate", help="list all structures")
    quiver_arg(p)
    p.add_argument("--json", metavar="OUT", help="write JSON ('-' for stdout)")
    p.add_argument("--dot", metavar="OUT", help="write the Hasse diagram as DOT ('-' for stdout)")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count structures")
    quiver_arg(p)
    p.add_argument("--method", choices=["formula", "recursive", "brute"])
    p.add_argument("--verify", action="store_true", help="run every applicable method and compare")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("lattice", help="lattice test with witness and obstructions")
    quiver_arg(p)
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("deconcat", help="deconcatenate at a sink or source (maximally without --at)")
    quiver_arg(p)
    p.add_argument("--at", type=int)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_deconcat)

    p = sub.add_parser("tilting", help="supports of the characteristic tilting module")
    quiver_arg(p)
    p.add_argument("--order", required=True, help='JSON file {"n": n, "pairs": [[i, j], ...]}')
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_tilting)

    p = sub.add_parser("tamari", help="Tamari poset of binary trees")
    p.add_argument("n", type=int)
    p.add_argument("--dot", metavar="OUT")
    p.set_defaults(func=cmd_tamari)

    p = sub.add_parser("tree-order", help="the order of a binary tree given as a parenthesis word")
    p.add_argument("tree")
    p.set_defaults(func=cmd_tree_order)

    p = sub.add_parser("lift", help="lift an order from a full subposet of the reachability poset")
    quiver_arg(p)
    p.add_argument("--subset", required=True, help="comma separated vertices")
    p.add_argument("--order", required=True)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--only", help="comma separated criterion numbers")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if hasattr(args, "quiver"):
        args.quiver_name = args.quiver
        try:
            args.quiver = load_quiver(args.quiver)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            ap.error(f"cannot read quiver {args.quiver!r}: {exc}")
    try:
        return args.func(args)
    except QhError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
