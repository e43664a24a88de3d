"""``spexlab`` command line.

Exit codes: 0 all checks passed, 1 a DIFFER verdict or a violated check,
2 usage error (bad arguments, unreadable input, cap exceeded).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from ..constructions import RecipeError, build_G0, parse_recipe
from ..families import INF, FamilyError, derive_families, family_numbers, independent_covering_number, vertex_cover_number
from ..graphs import Graph, GraphError, graph6_decode, graph6_encode, graph_stats, to_dot
from ..graphs.atlas import build_atlas
from ..oracles import (
    EnumerationCapError,
    OracleError,
    blocking_pair_search,
    bound_checks,
    brute_ex,
    brute_ex_constrained,
    brute_spex,
    build_G_family,
    slope_probe,
)
from . import reports
from .probe import stability_probe
from .scenario import OracleAssertionError, ScenarioError, load_scenario, parse_n_range, resolve_family, scenario_paths, verify_scenario

log = logging.getLogger("spexlab")


class UsageError(Exception):
    pass


def _graph_arg(text: str) -> Graph:
    try:
        if ":" in text or "(" in text:
            return parse_recipe(text)
        return graph6_decode(text)
    except (RecipeError, GraphError, ValueError) as exc:
        raise UsageError(f"cannot read graph {text!r}: {exc}") from exc


def _family(args) -> object:
    try:
        return resolve_family(args.family)
    except (ScenarioError, FamilyError) as exc:
        raise UsageError(str(exc)) from exc


def _n(args) -> int:
    if args.max_n is not None and args.n > args.max_n:
        raise UsageError(f"n = {args.n} exceeds --max-n {args.max_n}")
    return args.n


def _fmt_beta(x) -> str:
    return "inf" if x == INF else str(x)


def _names(graphs) -> str:
    return "{" + ", ".join(graph6_encode(g) for g in graphs) + "}"


def cmd_atlas(args, out: Path) -> int:
    g = _graph_arg(args.recipe) if args.recipe else build_atlas(args.name, args.params)
    print(graph6_encode(g))
    if args.dot:
        reports.write_text(out / args.dot, to_dot(g))
    return 0


def cmd_stats(args, out: Path) -> int:
    g = _graph_arg(args.graph)
    st = graph_stats(g)
    sizes = st.bipartition_sizes
    print(f"order {st.order}\nedges {st.edges}\nmax_degree {st.max_degree}\nmatching_number {st.matching_number}\n"
          f"circumference {st.circumference}\nbipartition {'absent' if sizes is None else f'{sizes[0]}/{sizes[1]}'}")
    return 0


def cmd_beta(args, out: Path) -> int:
    g = _graph_arg(args.graph)
    print(f"beta={vertex_cover_number(g)} beta'={_fmt_beta(independent_covering_number(g))}")
    return 0


def cmd_derive(args, out: Path) -> int:
    f = _family(args)
    beta, bp = family_numbers(f)
    print(f"β={_fmt_beta(beta)}, β′={_fmt_beta(bp)}")
    d = derive_families(f)
    print(f"M={_names(d.m_family)}, H={_names(d.h_family)}")
    if d.full_vertex_members:
        print(f"full-vertex-set members: {_names(d.full_vertex_members)}")
    if args.n is not None:
        g0 = build_G0(f, _n(args))
        print(f"G0(n={args.n})={_names(g0.graphs)}")
    return 0


def _emit_oracle(rep, name: str, out: Path) -> None:
    print(f"n={rep.n} {rep.objective}={rep.value_text()}")
    if rep.objective == "lambda" and rep.value is not None:
        print(rep.value.to_text())
    print("witnesses: " + " ".join(rep.witness_graph6))
    print(f"scanned {rep.graphs_scanned} in {rep.duration:.2f}s")
    reports.write_text(out / f"{name}.csv", reports.oracle_csv([rep]))


def cmd_ex(args, out: Path) -> int:
    f = _family(args)
    rep = brute_ex(_n(args), f, long_run=args.long_run, workers=args.threads)
    _emit_oracle(rep, f"ex_{f.name or 'family'}_{args.n}", out)
    return 0


def cmd_spex(args, out: Path) -> int:
    f = _family(args)
    rep = brute_spex(_n(args), f, long_run=args.long_run, workers=args.threads)
    _emit_oracle(rep, f"spex_{f.name or 'family'}_{args.n}", out)
    return 0


def cmd_exh(args, out: Path) -> int:
    f = _family(args)
    n = _n(args)
    if args.host:
        hosts = [_graph_arg(args.host)]
    else:
        hosts = list(build_G0(f, n).graphs)
    status = 0
    for h in hosts:
        rep = brute_ex_constrained(n, f, h, mode=args.mode, long_run=args.long_run)
        print(f"host {graph6_encode(h)}: ex_H={rep.value_text()} witnesses: {' '.join(rep.witness_graph6)}")
        if args.cross_check and n <= 9:
            other = brute_ex_constrained(n, f, h, mode="generic" if args.mode == "upward" else "upward")
            if (other.value, other.witness_graph6) != (rep.value, rep.witness_graph6):
                print(f"MODE MISMATCH: other mode gives {other.value_text()}")
                status = 1
        reports.write_text(out / f"exh_{f.name or 'family'}_{n}_{graph6_encode(h)}.csv".replace("/", "_"),
                           reports.oracle_csv([rep]))
    if not args.host:
        g = build_G_family(f, n)
        print(f"G(F) = {_names(g.graphs)}")
    return status


def cmd_slope(args, out: Path) -> int:
    f = _family(args)
    ns = parse_n_range(args.n_range)
    est = slope_probe(f, ns)
    for (n, v), off in zip(est.per_n, est.offsets):
        print(f"n={n} ex_H={v} offset={off}")
    verdict = str(est.fitted_r) if est.conclusive else "inconclusive"
    print(f"raw slope {est.raw_slope}, r = {verdict}, residual spread {est.residual_bound}")
    return 0


def cmd_blockpair(args, out: Path) -> int:
    f = _family(args)
    res = blocking_pair_search(args.t, f, args.p_max, args.q_max)
    print("none" if res is None else f"p={res[0]} q={res[1]}")
    return 0


def cmd_probe(args, out: Path) -> int:
    f = _family(args)
    rep = stability_probe(_graph_arg(args.graph), f)
    print(f"lambda {rep.lam:.12f}\nbeta_prime {rep.beta_prime}\ncore_set {list(rep.core_set)}\nt {rep.t}\n"
          f"min_core_entry {rep.min_core_entry:.12f}\nmax_noncore_entry {rep.max_noncore_entry:.12f}")
    for flag in rep.flags:
        print(f"flag: {flag}")
    return 0


def cmd_bounds(args, out: Path) -> int:
    rows = bound_checks(_n(args), workers=args.threads, long_run=args.long_run)
    bad = 0
    for r in rows:
        if r.name == "erdos-gallai":
            print(f"erdos-gallai n={r.n} k={r.k}: ex={r.observed} bound={float(r.bound):g} {'ok' if r.ok else 'VIOLATED'}")
        else:
            print(f"chvatal-hanson n={r.n}: violations={r.violations} min slack={r.observed}")
        bad += r.violations
    print(f"{bad} violations")
    return 1 if bad else 0


def cmd_verify(args, out: Path) -> int:
    paths = args.scenarios or [str(p) for p in scenario_paths()]
    status = 0
    for p in paths:
        try:
            s = load_scenario(p)
        except (ScenarioError, FamilyError, RecipeError, GraphError) as exc:
            raise UsageError(f"{p}: {exc}") from exc
        try:
            v = verify_scenario(s, max_n=args.max_n, long_run=args.long_run, workers=args.threads)
        except OracleAssertionError as exc:
            print(f"{s.name}: CHECK FAILED: {exc}")
            status = 1
            continue
        for row in v.rows:
            print(f"{s.name} n={row.n} {row.verdict} value={row.report.value_text()}")
        print(f"{s.name}: frontier {v.frontier if v.frontier is not None else 'none'}")
        reports.write_text(out / f"{s.name}.csv", reports.scenario_csv(v))
        reports.write_json(out / f"{s.name}.manifest.json",
                           reports.scenario_manifest(v, threads=args.threads, max_n=args.max_n, long_run=args.long_run))
        if args.strict and not v.all_agree:
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="worker processes for scans")
    common.add_argument("--max-n", type=int, default=None, help="refuse orders above this")
    common.add_argument("--long-run", action="store_true", help="allow order 10 for exhaustive oracles")
    common.add_argument("--out", default=None, help="output directory (default $SPEXLAB_OUT or ./spexlab-out)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="spexlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("atlas", parents=[common], help="build a named graph and print graph6")
    a.add_argument("name", nargs="?", help="builder id (K, I, P, C, M, S, T, G, Fr, KK2I, Kmulti)")
    a.add_argument("params", nargs="*", type=int)
    a.add_argument("--recipe", help="recipe string instead of a builder")
    a.add_argument("--dot", help="also write DOT to this file in the output directory")
    a.set_defaults(fn=cmd_atlas)

    for name, fn, text in (("stats", cmd_stats, "structural statistics"), ("beta", cmd_beta, "covering numbers")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("graph", help="graph6 string or recipe")
        s.set_defaults(fn=fn)

    d = sub.add_parser("derive", parents=[common], help="β, β′, M(F), H(F) and optionally G₀(F)")
    d.add_argument("--family", required=True)
    d.add_argument("-n", type=int, default=None)
    d.set_defaults(fn=cmd_derive)

    for name, fn in (("ex", cmd_ex), ("spex", cmd_spex)):
        s = sub.add_parser(name, parents=[common], help=f"exhaustive {name}(n, F)")
        s.add_argument("-n", type=int, required=True)
        s.add_argument("--family", required=True)
        s.set_defaults(fn=fn)

    e = sub.add_parser("exh", parents=[common], help="constrained ex_H(n, F); hosts default to G₀(F)")
    e.add_argument("-n", type=int, required=True)
    e.add_argument("--family", required=True)
    e.add_argument("--host", help="host graph (graph6 or recipe)")
    e.add_argument("--mode", choices=("upward", "generic"), default="upward")
    e.add_argument("--cross-check", action="store_true", help="also run the other mode and compare (n <= 9)")
    e.set_defaults(fn=cmd_exh)

    s = sub.add_parser("slope", parents=[common], help="classify the growth of ex_H - e(H)")
    s.add_argument("--family", required=True)
    s.add_argument("--n-range", required=True, help="a..b or a comma list")
    s.set_defaults(fn=cmd_slope)

    b = sub.add_parser("blockpair", parents=[common], help="smallest blocking pair (p, q)")
    b.add_argument("-t", type=int, required=True)
    b.add_argument("--family", required=True)
    b.add_argument("--p-max", type=int, default=8)
    b.add_argument("--q-max", type=int, default=8)
    b.set_defaults(fn=cmd_blockpair)

    v = sub.add_parser("verify", parents=[common], help="run scenario files (default: the shipped suite)")
    v.add_argument("scenarios", nargs="*")
    v.add_argument("--strict", action="store_true", help="exit 1 on any DIFFER verdict")
    v.set_defaults(fn=cmd_verify)

    pr = sub.add_parser("probe", parents=[common], help="Perron concentration diagnostic")
    pr.add_argument("--graph", required=True)
    pr.add_argument("--family", required=True)
    pr.set_defaults(fn=cmd_probe)

    bd = sub.add_parser("bounds", parents=[common], help="Erdős–Gallai and Chvátal–Hanson sanity checks")
    bd.add_argument("-n", type=int, required=True)
    bd.set_defaults(fn=cmd_bounds)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.threads < 1:
        parser.error("--threads must be positive")
    if args.command == "atlas" and not args.recipe and not args.name:
        parser.error("atlas needs a builder id or --recipe")
    try:
        out = reports.output_dir(args.out)
        return args.fn(args, out)
    except (UsageError, EnumerationCapError, FamilyError, GraphError, RecipeError, ScenarioError, OracleError) as exc:
        print(f"spexlab: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"spexlab: check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
