"""Command line front end: ``ceilab <command> <graph> ...``.

Graphs are given as a file in the text format (``n <count>`` then one edge
per line) or as a short description such as ``path5``, ``cycle:4`` or
``path3+path3``.

Exit codes: 0 success, 1 a computation contradicted a proven statement (or a
suite could not certify its claim), 2 usage error, 3 resource budget
exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import budget
from .depth import DepthEvaluator, dstab
from .errors import CeilabError, InconsistencyError, ResourceError
from .generators import load_graph
from .graphs import (
    Graph,
    component_profile,
    connected_elimination_order,
    is_elimination_order,
    koszul_necessary_conditions,
    unicyclic_labeling,
    unicyclic_profile,
)
from .monomials import complementary_edge_ideal, edge_ideal, format_monomial, ideal_power
from .rees import (
    enumerate_primitive_even_walks,
    format_binomial,
    is_quadratic,
    max_x_degree,
    reduced_gb_lex,
    walk_binomial_crosscheck,
)
from .report import SCHEMA_VERSION, graph_descriptor, to_csv, to_json, write_report
from .resolution import betti_table
from .spread import analytic_spread, kernel_dimension_of_incidence, normality_certificate
from .suites import SUITE_ORDER, Params, run_suite

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _emit(args, report: dict, rows: List[dict], command: str) -> None:
    if args.json:
        write_report(args.json, to_json(report))
    if args.csv:
        write_report(args.csv, to_csv(command, rows))


def _header(g: Graph) -> str:
    prof = component_profile(g)
    return f"graph: {g.n} vertices, {g.m} edges, c(G)={prof.c}, b(G)={prof.b}"


def _base(command: str, g: Optional[Graph]) -> dict:
    out = {"schema": SCHEMA_VERSION, "command": command}
    if g is not None:
        out["graph"] = graph_descriptor(g)
    return out


# --------------------------------------------------------------------------


def cmd_ideal(args, out) -> int:
    g = load_graph(args.graph)
    ic, ie = complementary_edge_ideal(g), edge_ideal(g)
    report = _base("ideal", g)
    report["complementary"] = [list(u) for u in ic.gens]
    report["edge"] = [list(u) for u in ie.gens]
    rows = [{"ideal": "I_c", "power": 1, "index": i + 1, "generator": format_monomial(u),
             "degree": sum(u)} for i, u in enumerate(ic.gens)]
    rows += [{"ideal": "I", "power": 1, "index": i + 1, "generator": format_monomial(u),
              "degree": sum(u)} for i, u in enumerate(ie.gens)]
    print(_header(g), file=out)
    print(f"I_c(G) = {ic}", file=out)
    print(f"I(G)   = {ie}", file=out)
    target = ic
    if args.power and args.power > 1:
        target = ideal_power(ic, args.power)
        report["power"] = args.power
        report["power_generators"] = [list(u) for u in target.gens]
        rows += [{"ideal": "I_c", "power": args.power, "index": i + 1,
                  "generator": format_monomial(u), "degree": sum(u)}
                 for i, u in enumerate(target.gens)]
        print(f"I_c(G)^{args.power}: {len(target)} generators", file=out)
        print(f"  {target}", file=out)
    if args.betti:
        bt = betti_table(target)
        report["betti"] = [[i, j, v] for (i, j), v in sorted(bt.entries.items())]
        report["depth"] = bt.depth
        report["regularity"] = bt.regularity
        print("Betti table of S/I (rows i, columns j):", file=out)
        print(bt.to_csv(), end="", file=out)
        print(f"depth S/I = {bt.depth}, reg S/I = {bt.regularity}", file=out)
        if args.csv:
            write_report(args.csv, bt.to_csv())
            args.csv = None
    _emit(args, report, rows, "ideal")
    return EXIT_OK


def cmd_depth(args, out) -> int:
    g = load_graph(args.graph)
    ev = DepthEvaluator(prefer="oracle" if args.oracle else "auto", crosscheck=args.crosscheck)
    kmax = args.kmax or max(g.n - 1, 1)
    rows = []
    print(_header(g), file=out)
    print(f"{'k':>3}  {'depth':>5}  method", file=out)
    for k in range(1, kmax + 1):
        v = ev(g, k)
        rows.append({"k": k, "depth": v.depth, "method": v.method})
        print(f"{k:>3}  {v.depth:>5}  {v.method}", file=out)
    report = _base("depth", g)
    report["table"] = rows
    status = EXIT_OK
    if g.n >= 3 and g.m:
        try:
            st = dstab(g, ev, kmax=kmax)
        except InconsistencyError as exc:
            print(f"INCONSISTENT: {exc}", file=out)
            report["error"] = str(exc)
            status = EXIT_FAIL
        else:
            report.update(dstab=st.dstab, bound=st.bound, limit=st.limit, b=st.b)
            print(f"dstab={st.dstab} (bound n-c(G)-1 = {st.bound}), limit depth {st.limit}, "
                  f"b(G) = {st.b}", file=out)
    _emit(args, report, rows, "depth")
    return status


def _choose_labeling(g: Graph, mode: str):
    """(order, kind) for the reduced basis."""
    if mode == "given":
        kind = "elimination" if is_elimination_order(g, tuple(g.vertices)) else "any"
        return tuple(g.vertices), kind
    uni, _ = unicyclic_profile(g)
    if uni:
        return unicyclic_labeling(g), "unicyclic"
    return connected_elimination_order(g).order, "elimination"


def cmd_rees(args, out) -> int:
    g = load_graph(args.graph)
    order, kind = _choose_labeling(g, args.labeling)
    gb = reduced_gb_lex(g, labeling=order, kind=kind, max_gens=args.max_gens)
    rows = []
    print(_header(g), file=out)
    print(f"labeling ({kind}): " + " ".join(map(str, order)), file=out)
    print(f"reduced lex Groebner basis of J: {len(gb)} elements", file=out)
    for i, f in enumerate(gb):
        xd = max(sum(gb.x_part(f.lead)), sum(gb.x_part(f.trail)))
        rows.append({"index": i + 1, "lead": " ".join(map(str, f.lead)),
                     "trail": " ".join(map(str, f.trail)), "x_degree": xd,
                     "total_degree": f.degree()})
        print(f"  {format_binomial(gb, f)}", file=out)
    mx, quad = max_x_degree(gb), is_quadratic(gb)
    print(f"max x-degree {mx}, quadratic {quad}", file=out)
    report = _base("rees", g)
    report.update(labeling=list(order), kind=kind, elements=len(gb), max_x_degree=mx,
                  quadratic=quad, stats=gb.stats._asdict() if gb.stats else None)
    status = EXIT_OK
    walks = args.walks
    if walks == "auto":
        walks = "on" if g.m <= g.n and g.n <= 8 else "off"
    if walks == "on":
        found = enumerate_primitive_even_walks(g.relabel(order))
        rep = walk_binomial_crosscheck(gb, found)
        report["walks"] = {"primitive_walks": len(found), "matched": rep.matched, "total": rep.total}
        print(f"walk cross-check: {rep.matched}/{rep.total} basis elements match one of "
              f"{len(found)} primitive even closed walks of G*", file=out)
        if not rep.ok:
            status = EXIT_FAIL
    _emit(args, report, rows, "rees")
    return status


def _component_graph(g: Graph, comp) -> Graph:
    pos = {v: i + 1 for i, v in enumerate(comp)}
    return Graph(len(comp), tuple((pos[i], pos[j]) for i, j in g.induced_edges(comp)))


def cmd_spread(args, out) -> int:
    g = load_graph(args.graph)
    prof = component_profile(g)
    le, lc = analytic_spread(g, "edge"), analytic_spread(g, "complementary")
    cert = normality_certificate(g)
    kernels = []
    for comp in prof.components:
        if len(comp) > 1:
            info = kernel_dimension_of_incidence(_component_graph(g, comp))
            kernels.append({"component": list(comp), "kernel_dimension": info.dimension})
    ok = le == lc == g.n - prof.b
    print(_header(g), file=out)
    print(f"l(I(G)) = {le}, l(I_c(G)) = {lc}, n - b(G) = {g.n - prof.b}", file=out)
    for k in kernels:
        print(f"component {k['component']}: dim Ker B = {k['kernel_dimension']}", file=out)
    print(f"normal = {str(cert.normal).lower()} (odd cycle condition)", file=out)
    if cert.violation:
        print(f"  far-apart odd cycles: {cert.violation}", file=out)
    print(f"limit depth b(G) = {prof.b}", file=out)
    report = _base("spread", g)
    report.update(spread_edge=le, spread_complementary=lc, b=prof.b, kernels=kernels,
                  normal=cert.normal, limit_depth=prof.b)
    rows = [{"quantity": "spread_edge", "value": le},
            {"quantity": "spread_complementary", "value": lc},
            {"quantity": "b", "value": prof.b},
            {"quantity": "normal", "value": cert.normal},
            {"quantity": "limit_depth", "value": prof.b}]
    _emit(args, report, rows, "spread")
    if not ok:
        print("INCONSISTENT: spreads differ from n - b(G)", file=out)
        return EXIT_FAIL
    return EXIT_OK


def cmd_koszul(args, out) -> int:
    g = load_graph(args.graph)
    chk = koszul_necessary_conditions(g)
    print(_header(g), file=out)
    print(f"necessary conditions hold: {chk.holds}", file=out)
    rows = []
    for cond in ("c", "i", "ii", "iii"):
        wit = [w for c, w in chk.witnesses if c == cond]
        rows.append({"condition": cond, "violated": cond in chk.violated,
                     "witness": "; ".join(" ".join(map(str, cyc)) for w in wit[:1] for cyc in w)})
        print(f"  ({cond}) {'violated' if cond in chk.violated else 'ok'}"
              + (f", e.g. cycles {wit[0]}" if wit and wit[0] else ""), file=out)
    report = _base("koszul", g)
    report.update(holds=chk.holds, violated=list(chk.violated),
                  witnesses=[[c, [list(x) for x in w]] for c, w in chk.witnesses])
    _emit(args, report, rows, "koszul")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = SUITE_ORDER if args.suite == "all" else (args.suite,)
    mode = "random" if args.random is not None else "exhaustive"
    p = Params(nmax=args.nmax, seed=args.seed, mode=mode, count=args.random or 0,
               kmax=args.kmax, jobs=args.jobs)
    verdicts = [run_suite(n, p) for n in names]
    print(f"{'suite':<14} {'status':<8} {'instances':>9}  theorem", file=out)
    for v in verdicts:
        print(f"{v.suite:<14} {v.status:<8} {v.instances:>9}  {v.theorem}", file=out)
        if v.reason:
            print(f"{'':<14} {v.reason}", file=out)
        for lab, det in v.failures:
            print(f"{'':<14} {lab}: {det}", file=out)
    report = _base("verify", None)
    report.update(seed=args.seed, mode=mode, suites=[v.to_dict(args.timing) for v in verdicts])
    rows = [{"suite": v.suite, "theorem": v.theorem, "status": v.status,
             "instances": v.instances, "min_instances": v.min_instances,
             "failures": v.failure_count, "reason": v.reason,
             "elapsed_ms": v.elapsed_ms if args.timing else ""} for v in verdicts]
    _emit(args, report, rows, "verify")
    if any(v.status == "fail" for v in verdicts):
        return EXIT_FAIL
    if any(v.reason.startswith("resource") for v in verdicts):
        return EXIT_RESOURCE
    if any(v.status != "pass" for v in verdicts):
        return EXIT_FAIL
    return EXIT_OK


# --------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("--json", metavar="FILE", help="write a JSON report to FILE")
    io_opts.add_argument("--csv", metavar="FILE", help="write a CSV table to FILE")

    ap = argparse.ArgumentParser(prog="ceilab", description="Complementary edge ideals of graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", parents=[io_opts], help="generators of I_c(G), I(G) and powers")
    p.add_argument("graph")
    p.add_argument("--power", type=_positive, default=1)
    p.add_argument("--betti", action="store_true", help="also print the Betti table of the power")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("depth", parents=[io_opts], help="depth table, dstab and limit depth")
    p.add_argument("graph")
    p.add_argument("--kmax", type=_positive, help="largest power (default n-1)")
    p.add_argument("--oracle", action="store_true", help="always use the Betti oracle")
    p.add_argument("--crosscheck", action="store_true",
                   help="run the oracle as well wherever linear quotients apply")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("rees", parents=[io_opts], help="reduced Groebner basis of the Rees ideal")
    p.add_argument("graph")
    p.add_argument("--labeling", choices=("auto", "given"), default="auto")
    p.add_argument("--walks", choices=("auto", "on", "off"), default="auto",
                   help="cross-check against primitive even closed walks of G*")
    p.add_argument("--max-gens", type=_positive, default=12, dest="max_gens")
    p.set_defaults(func=cmd_rees)

    p = sub.add_parser("spread", parents=[io_opts], help="analytic spreads and normality")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spread)

    p = sub.add_parser("koszul", parents=[io_opts], help="necessary conditions for Koszulness")
    p.add_argument("graph")
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser("verify", parents=[io_opts], help="run verification suites")
    p.add_argument("--suite", choices=("all",) + SUITE_ORDER, default="all")
    p.add_argument("--nmax", type=_positive)
    p.add_argument("--kmax", type=_positive)
    p.add_argument("--seed", type=int, default=0)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="enumerate every instance (default)")
    mode.add_argument("--random", type=_positive, metavar="R", help="draw R random instances")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    p.add_argument("--timing", action="store_true", help="include wall-clock times in reports")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            return args.func(args, out)  # suites budget each instance themselves
        with budget.instance_budget():
            return args.func(args, out)
    except ResourceError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (CeilabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
