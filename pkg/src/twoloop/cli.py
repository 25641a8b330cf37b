"""Command-line interface.

Exit codes: 0 success, 2 usage, 3 bad input (parse or validation), 4 math
failure (singular matrix).
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog, lookup
from .contraction import contract, whitehead_linking_matrix
from .invariants import q1_whitehead
from .parse import load_linking, load_seifert, parse_laurent
from .ratfun import SingularMatrixError
from .seifert import alexander, conway_a2, half_conway_a2, levine_matrix
from .theta import theta_from_tensor


def _knot_options(sub):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--knot", metavar="NAME", help="catalog name")
    group.add_argument("--seifert", metavar="FILE", help="Seifert matrix file")


def _load_knot(args):
    if args.knot is not None:
        return lookup(args.knot).matrix
    return load_seifert(args.seifert)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twoloop",
        description="Exact two-loop invariants of untwisted Whitehead doubles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alexander", help="symmetric Alexander polynomial")
    _knot_options(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("a2", help="degree-2 Conway coefficient")
    _knot_options(p)
    p.set_defaults(func=cmd_a2)

    p = sub.add_parser("a-cor", help="half the degree-2 coefficient (doubling multiplier)")
    _knot_options(p)
    p.set_defaults(func=cmd_a_cor)

    p = sub.add_parser("levine", help="equivariant linking matrix (t-1)(tA-A^T)^-1")
    _knot_options(p)
    p.set_defaults(func=cmd_levine)

    p = sub.add_parser("canon", help="canonical form of a beaded theta tensor")
    p.add_argument("--slot", action="append", metavar="EXPR", required=True,
                   help="Laurent expression; give exactly three")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("contract", help="contract a clasper pair given its linking matrix")
    p.add_argument("--linking", metavar="FILE", required=True)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("q1-wh", help="two-loop invariant of the untwisted Whitehead double")
    _knot_options(p)
    p.add_argument("--eps", choices=["+1", "-1", "1"], required=True,
                   help="clasp sign")
    p.set_defaults(func=cmd_q1_wh)

    p = sub.add_parser("catalog", help="list built-in knots")
    p.set_defaults(func=cmd_catalog)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=["text", "json"], default="text")
    return parser


class UsageError(Exception):
    pass


def _theta_output(x, fmt):
    if fmt == "json":
        terms = [{"triple": list(k), "coeff": str(c)}
                 for k, c in sorted(x.terms.items())]
        return json.dumps({"terms": terms})
    return f"{x}\nbead: {x.bead_form()}"


def cmd_alexander(args):
    p = alexander(_load_knot(args))
    if args.format == "json":
        return json.dumps({"terms": [{"exp": e, "coeff": str(c)}
                                     for e, c in sorted(p.items(), reverse=True)]})
    return str(p)


def cmd_a2(args):
    v = conway_a2(_load_knot(args))
    if args.format == "json":
        return json.dumps({"value": str(v)})
    return str(v)


def cmd_a_cor(args):
    v = half_conway_a2(_load_knot(args))
    if args.format == "json":
        return json.dumps({"value": str(v)})
    return str(v)


def cmd_levine(args):
    b = levine_matrix(_load_knot(args))
    if args.format == "json":
        return json.dumps({"entries": [[str(e) for e in row] for row in b]})
    return str(b)


def cmd_canon(args):
    if len(args.slot) != 3:
        raise UsageError(f"expected exactly three --slot, got {len(args.slot)}")
    p, q, r = (parse_laurent(s) for s in args.slot)
    return _theta_output(theta_from_tensor(p, q, r), args.format)


def cmd_contract(args):
    return _theta_output(contract(load_linking(args.linking)), args.format)


def cmd_q1_wh(args):
    eps = 1 if args.eps in ("+1", "1") else -1
    return _theta_output(q1_whitehead(_load_knot(args), eps), args.format)


def cmd_catalog(args):
    entries = catalog()
    if args.format == "json":
        return json.dumps({"knots": [
            {"name": e.name, "size": e.matrix.n,
             "matrix": [list(r) for r in e.matrix.rows], "notes": e.notes}
            for e in entries]})
    width = max(len(e.name) for e in entries)
    lines = []
    for e in entries:
        mat = str([list(r) for r in e.matrix.rows])
        lines.append(f"{e.name:<{width}}  {e.matrix.n}x{e.matrix.n}  {mat}  # {e.notes}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (SingularMatrixError, ZeroDivisionError) as exc:
        print(f"math error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
