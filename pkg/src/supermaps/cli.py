"""Command-line interface.  Every command prints ``key = value`` lines in a fixed order.

Exit status: 0 on success, 1 on a user error, 2 on an internal error.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import List, Optional, Sequence, TextIO

from . import chern, sheafcalc, superscheme
from .moduli import (
    GraphError,
    ModuliProblem,
    enumerate_stable_graphs,
    forget_point,
    is_stable_map_graph,
    natural_maps,
    parse_graph,
    stabilize_curve,
    taub_consistency,
    vsdim,
    witten_count,
)
from .parsing import ParseError, infer_ring, parse_many, parse_poly
from .sheafcalc import BundleSum
from .superideal import DegreeBoundError, SuperIdeal, membership, normal_form
from .superring import ParityError, tau_b


class UserError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _twists(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _target(text: str):
    try:
        return superscheme.parse_target(text)
    except superscheme.TargetSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nat(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {k}")
    return k


def _read_graph(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UserError(f"cannot read graph file {path!r}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise UserError(f"{path}: {exc}") from None


def _ideal_texts(text: str) -> List[str]:
    return [g for g in (s.strip() for s in text.split(";")) if g]


def _poly_and_ideal(expr: str, ideal_spec: str):
    gens = _ideal_texts(ideal_spec)
    ring = infer_ring([expr] + gens)
    (p,) = parse_many([expr], ring)
    try:
        gen_polys = parse_many(gens, ring)
    except ParseError as exc:
        raise UserError(f"in --ideal generator {exc.line} (column {exc.column}): {exc.message}") from None
    return p, SuperIdeal(ring, gen_polys)


# commands; each returns a list of (key, value) pairs


def cmd_truncate(args):
    p = parse_poly(args.expr)
    return [("result", tau_b(p))]


def cmd_nf(args):
    p, ideal = _poly_and_ideal(args.expr, args.ideal)
    return [("result", normal_form(p, ideal, args.degree)), ("degree_bound", args.degree)]


def cmd_member(args):
    p, ideal = _poly_and_ideal(args.expr, args.ideal)
    res = membership(p, ideal, args.degree)
    out = [("member", _bool(res.member)), ("degree_bound", args.degree)]
    if res.member:
        out.append(("status", "certified"))
        for i, (cof, g) in enumerate(res.certificate):
            out.append((f"cofactor[{i}]", f"({cof}) * ({g})"))
    else:
        out.append(("status", f"not a member up to degree {args.degree}"))
    return out


def _problem(args):
    return ModuliProblem(args.g, args.n, args.target, args.d)


def cmd_vsdim(args):
    return [("vsdim", vsdim(_problem(args)))]


def cmd_witten(args):
    try:
        bos, ferm = witten_count(args.p, args.q, args.d)
    except ValueError as exc:
        raise UserError(str(exc)) from None
    return [("bosonic", bos), ("fermionic", ferm), ("sdim", bos - ferm)]


def cmd_convexity(args):
    bos, ferm = sheafcalc.convexity_check(args.target, args.d)
    return [("bosonic_ok", _bool(bos)), ("fermionic_ok", _bool(ferm)), ("convex", _bool(bos and ferm))]


def cmd_qrank(args):
    return [("qrank", sheafcalc.q_rank(args.target, args.d))]


def cmd_stable(args):
    G = _read_graph(args.graph)
    ok, reasons = is_stable_map_graph(G, {"g": args.g, "n": args.n, "d": args.d})
    out = [("stable", _bool(ok))]
    out += [(f"reason[{i}]", r) for i, r in enumerate(reasons)]
    return out


def cmd_stabilize(args):
    G = _read_graph(args.graph)
    H = stabilize_curve(G, args.g, args.n)
    return [("vertices", H.num_vertices), ("edges", len(H.edges)), ("graph", H)]


def cmd_forget(args):
    G = _read_graph(args.graph)
    H = forget_point(G, {"g": args.g, "n": args.n, "d": args.d}, args.point)
    return [("vertices", H.num_vertices), ("edges", len(H.edges)), ("graph", H)]


def cmd_enumerate(args):
    graphs = enumerate_stable_graphs(args.n, args.d, args.max_vertices)
    out = [("count", len(graphs))]
    out += [(f"graph[{i}]", G) for i, G in enumerate(graphs)]
    return out


def cmd_chern(args):
    V = BundleSum(args.twists, args.m)
    if args.exterior is None:
        c = chern.total_chern(V)
    else:
        c = chern.chern_exterior(V, args.exterior)
    return [("c", c), ("integral", chern.integrate(c))]


def cmd_todd(args):
    V = chern.tangent_roots(args.m) if args.twists is None else BundleSum(args.twists, args.m)
    td = chern.todd(V, args.m)
    return [("td", td), ("integral", chern.integrate(td))]


def cmd_kfc(args):
    c = chern.kfc_demo(BundleSum(args.twists, args.m))
    return [("kfc", c), ("integral", chern.integrate(c))]


def cmd_scy(args):
    X = args.target
    return [
        ("target", X),
        ("sdim", superscheme.sdim(X)),
        ("canonical_degree", superscheme.canonical_degree(X)),
        ("super_calabi_yau", _bool(superscheme.is_super_calabi_yau(X))),
    ]


def cmd_maps(args):
    nm = natural_maps(_problem(args))
    rep = taub_consistency(_problem(args))
    return [
        ("evaluation", ",".join(nm.evaluation) or "none"),
        ("kappa_defined", _bool(nm.kappa_defined)),
        ("kappa_target", nm.kappa_target or "none"),
        ("forget_defined", _bool(nm.forget_defined)),
        ("bosonic", rep.bosonic),
        ("fermionic", rep.fermionic),
        ("vsdim", rep.super_vsdim),
        ("taub_consistent", _bool(rep.consistent)),
    ]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="supermaps", description="Exact computations for stable maps into split super-schemes.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=func)
        return p

    p = add("truncate", cmd_truncate, "bosonic truncation of an expression")
    p.add_argument("expr")

    for name, func, help_ in (("nf", cmd_nf, "normal form modulo an ideal"), ("member", cmd_member, "ideal membership")):
        p = add(name, func, help_)
        p.add_argument("expr")
        p.add_argument("--ideal", required=True, help="generators separated by ';'")
        p.add_argument("--degree", type=int, required=True, help="truncation degree")

    def moduli_args(p, with_d=True):
        p.add_argument("--target", type=_target, required=True, help="P(p|q) or 'split m=<m> V=<a1,...>'")
        p.add_argument("--g", type=_nat, default=0)
        p.add_argument("--n", type=_nat, default=0)
        if with_d:
            p.add_argument("--d", type=_nat, required=True)

    moduli_args(add("vsdim", cmd_vsdim, "virtual super-dimension"))
    moduli_args(add("maps", cmd_maps, "natural maps and truncation bookkeeping"))

    p = add("witten", cmd_witten, "dimensions of the irreducible-map chart for P(p|q)")
    p.add_argument("--p", type=_nat, required=True)
    p.add_argument("--q", type=_nat, required=True)
    p.add_argument("--d", type=_nat, required=True)

    for name, func, help_ in (("convexity", cmd_convexity, "H^1 vanishing for genus-0 maps"), ("qrank", cmd_qrank, "rank of Q")):
        p = add(name, func, help_)
        p.add_argument("--target", type=_target, required=True)
        p.add_argument("--d", type=_nat, required=True)

    p = add("stable", cmd_stable, "check the stable-map conditions on a dual graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--g", type=_nat, required=True)
    p.add_argument("--n", type=_nat, required=True)
    p.add_argument("--d", type=_nat, required=True)

    p = add("stabilize", cmd_stabilize, "stable model of the underlying marked curve")
    p.add_argument("--graph", required=True)
    p.add_argument("--g", type=_nat, required=True)
    p.add_argument("--n", type=_nat, required=True)

    p = add("forget", cmd_forget, "forget a marked point and contract")
    p.add_argument("--graph", required=True)
    p.add_argument("--point", type=int, required=True)
    p.add_argument("--g", type=_nat, required=True)
    p.add_argument("--n", type=_nat, required=True)
    p.add_argument("--d", type=_nat, required=True)

    p = add("enumerate", cmd_enumerate, "genus-0 stable-map dual graphs")
    p.add_argument("--n", type=_nat, required=True)
    p.add_argument("--d", type=_nat, required=True)
    p.add_argument("--max-vertices", type=int, default=None)

    p = add("chern", cmd_chern, "total Chern class of a split bundle on P^m")
    p.add_argument("--twists", type=_twists, required=True)
    p.add_argument("--m", type=_nat, required=True)
    p.add_argument("--exterior", type=_nat, default=None, help="use the k-th exterior power")

    p = add("todd", cmd_todd, "Todd class (default: tangent bundle of P^m)")
    p.add_argument("--m", type=_nat, required=True)
    p.add_argument("--twists", type=_twists, default=None)

    p = add("kfc", cmd_kfc, "formal fundamental-class expression on P^m")
    p.add_argument("--twists", type=_twists, required=True)
    p.add_argument("--m", type=_nat, required=True)

    p = add("scy", cmd_scy, "super-Calabi-Yau test")
    p.add_argument("--target", type=_target, required=True)
    return parser


def run(argv: Sequence[str], out: TextIO, err: TextIO) -> int:
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lines = args.func(args)
    except ParseError as exc:
        err.write(f"supermaps: parse error: {exc}\n")
        return 1
    except (UserError, GraphError, DegreeBoundError, ParityError, ValueError, ZeroDivisionError) as exc:
        err.write(f"supermaps: error: {exc}\n")
        return 1
    except Exception as exc:  # pragma: no cover - reported as internal
        err.write(f"supermaps: internal error: {type(exc).__name__}: {exc}\n")
        return 2
    for key, value in lines:
        out.write(f"{key} = {value}\n")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
