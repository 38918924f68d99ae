"""Command-line front end.

Exit codes: 0 ok, 1 unsat / violations, 2 bad input, 3 reduction stuck.
Every command can write a JSON run report (``--report``); certificates in it
carry ``"schema_version": "1"``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import cover, solver
from .cover import InstanceError
from .graph import FAMILIES, Graph, GraphFormatError, count_f53, degeneracy, find_f53, generate, has_cycle_len, parse_graph

SCHEMA_VERSION = "1"
EXIT = {"ok": 0, "unsat": 1, "error": 2, "stuck": 3}


class InputError(Exception):
    pass


def _read_graph(path) -> Graph:
    try:
        return parse_graph(Path(path).read_text())
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    except GraphFormatError as e:
        raise InputError(f"{path}: {e}") from None


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e})") from None


def _edges_json(edges):
    return [list(e) for e in sorted(edges)]


def trace_to_json(trace: solver.ReductionTrace) -> list:
    out = []
    for s in trace.steps:
        if isinstance(s, solver.LowDegree):
            out.append({"kind": "low-degree", "vertex": s.vertex, "neighbors": list(s.neighbors)})
        else:
            out.append({
                "kind": "gadget",
                "witness": list(s.witness.vertices),
                "external": [list(x) for x in s.external],
            })
    return out


def certificate_to_json(cert: solver.ChromaticCertificate, g: Graph) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "value": cert.value,
        "t_max": cert.t_max,
        "searched": list(cert.searched),
        "spanning_forest": _edges_json(solver.spanning_forest(g)),
        "exhaustive_count": cert.exhaustive_count,
        "failing": None,
    }
    if cert.failing is not None:
        doc["failing"] = {
            "t": cert.failing_t,
            "lists": cover.lists_to_json(cover.full_lists(g, cert.failing_t)),
            "matchings": cover.matchings_to_json(cert.failing),
        }
    return doc


def _stuck_json(e: solver.ReductionStuck) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "steps": trace_to_json(e.trace),
        "remainder": {
            "vertices": list(e.labels),
            "edges": _edges_json(e.remainder_original_edges()),
        },
    }


# ---------------------------------------------------------------- commands

def cmd_analyze(args) -> tuple[str, dict, dict]:
    g = _read_graph(args.graph)
    rep = degeneracy(g)
    cycles = {k: has_cycle_len(g, k) for k in (3, 4, 5, 6)}
    w = find_f53(g)
    summary = ", ".join(f"C{k}: {'yes' if c else 'no'}" for k, c in cycles.items())
    print(f"{summary}; degeneracy {rep.degeneracy}; F_5^3: {'found' if w else 'none'}")
    print(f"vertices {g.n}, edges {g.m}")
    print("degeneracy ordering:", " ".join(map(str, rep.ordering)))
    for k, c in cycles.items():
        if c:
            print(f"C{k} witness: {'-'.join(map(str, c))}")
    if w:
        print("F_5^3 witness (v1..v6):", " ".join(map(str, w.vertices)))
    cert = {
        "schema_version": SCHEMA_VERSION,
        "n": g.n,
        "m": g.m,
        "degeneracy": rep.degeneracy,
        "ordering": list(rep.ordering),
        "cycles": {f"C{k}": c for k, c in cycles.items()},
        "f53": list(w.vertices) if w else None,
    }
    if args.all:
        cert["f53_count"] = count_f53(g)
        print(f"F_5^3 subgraphs: {cert['f53_count']}")
    return "ok", {"graph": args.graph, "all": args.all}, cert


def _choose_method(g, lists):
    min_list = min((len(c) for c in lists.values()), default=0)
    if min_list >= 4 and has_cycle_len(g, 4) is None:
        return "c4free"
    if min_list >= degeneracy(g).degeneracy + 1:
        return "greedy"
    return "exact"


def cmd_color(args):
    g = _read_graph(args.graph)
    inputs = {"graph": args.graph, "method": args.method}
    if args.lists:
        lists = cover.lists_from_json(_read_json(args.lists))
        inputs["lists"] = args.lists
    else:
        lists = cover.full_lists(g, args.t)
        inputs["t"] = args.t
    cover.validate_instance(g, lists)
    if args.matchings:
        m = cover.matchings_from_json(_read_json(args.matchings))
        inputs["matchings"] = args.matchings
    elif args.random:
        m = cover.random_matchings(g, lists, args.seed)
        inputs["seed"] = args.seed
    else:
        m = cover.identity_matchings(g, lists)
    cover.validate_instance(g, lists, m)

    method = _choose_method(g, lists) if args.method == "auto" else args.method
    print(f"method: {method}")
    if method == "c4free":
        f = solver.color_planar_c4free(g, lists, m)
    elif method == "greedy":
        f = solver.greedy_degenerate_color(g, lists, m)
    else:
        f = solver.solve_transversal(g, lists, m)
    if f is None:
        print("unsat")
        cert = {"schema_version": SCHEMA_VERSION, "method": method, "coloring": None}
        return "unsat", inputs, cert
    bad = cover.verify_coloring(g, lists, m, f)
    if bad:
        raise AssertionError(f"solver returned an invalid coloring: {bad[0]}")
    if args.output:
        Path(args.output).write_text(cover.dumps(cover.coloring_to_json(f)))
    if args.write_matchings:
        Path(args.write_matchings).write_text(cover.dumps(cover.matchings_to_json(m)))
    print("ok (verified)")
    cert = {"schema_version": SCHEMA_VERSION, "method": method, "coloring": cover.coloring_to_json(f)}
    return "ok", inputs, cert


def cmd_chromatic(args):
    g = _read_graph(args.graph)
    cert = solver.dp_chromatic(g, args.max_t)
    doc = certificate_to_json(cert, g)
    if args.output:
        Path(args.output).write_text(cover.dumps(doc))
    inputs = {"graph": args.graph, "max_t": args.max_t}
    if cert.value is None:
        print(f"chi_DP > {args.max_t}")
        return "unsat", inputs, doc
    print(f"chi_DP = {cert.value}")
    return "ok", inputs, doc


def cmd_verify(args):
    g = _read_graph(args.graph)
    lists = cover.lists_from_json(_read_json(args.lists))
    m = cover.matchings_from_json(_read_json(args.matchings))
    f = cover.coloring_from_json(_read_json(args.coloring))
    cover.validate_instance(g, lists, m)
    bad = cover.verify_coloring(g, lists, m, f)
    inputs = {k: getattr(args, k) for k in ("graph", "lists", "matchings", "coloring")}
    cert = {"schema_version": SCHEMA_VERSION, "violations": [v.to_json() for v in bad]}
    for v in bad:
        print(v)
    if bad:
        return "unsat", inputs, cert
    print("ok")
    return "ok", inputs, cert


def cmd_gen(args):
    try:
        g = generate(args.family, args.n)
    except ValueError as e:
        raise InputError(str(e)) from None
    text = g.to_text(comment=f"{args.family}" + (f" {args.n}" if args.n is not None else ""))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"{args.family}: {g.n} vertices, {g.m} edges", file=sys.stderr)
    return "ok", {"family": args.family, "n": args.n}, {"schema_version": SCHEMA_VERSION, "n": g.n, "m": g.m}


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dpcolor", description="DP-coloring (correspondence coloring) toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_report(sp):
        sp.add_argument("--report", metavar="PATH", help="write the JSON run report here")

    a = sub.add_parser("analyze", help="degeneracy, short cycles and F_5^3 gadgets of a graph")
    a.add_argument("graph", help="edge-list file")
    a.add_argument("--all", action="store_true", help="also count all F_5^3 subgraphs")
    add_report(a)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("color", help="find and verify a DP-coloring")
    c.add_argument("graph", help="edge-list file")
    lg = c.add_mutually_exclusive_group(required=True)
    lg.add_argument("--lists", metavar="PATH", help="JSON lists {vertex: [colors]}")
    lg.add_argument("--t", type=int, metavar="N", help="use lists {1..N} everywhere")
    mg = c.add_mutually_exclusive_group()
    mg.add_argument("--matchings", metavar="PATH", help="JSON matchings [{u, v, pairs}]")
    mg.add_argument("--random", action="store_true", help="random maximum matchings (see --seed)")
    c.add_argument("--seed", type=int, default=0, help="seed for --random (default 0)")
    c.add_argument("--method", choices=("auto", "exact", "greedy", "c4free"), default="auto",
                   help="auto: c4free if 4-cycle-free with lists >= 4, else greedy if lists > degeneracy, else exact")
    c.add_argument("-o", "--output", metavar="PATH", help="write the coloring JSON here")
    c.add_argument("--write-matchings", metavar="PATH", help="write the matchings used as JSON")
    add_report(c)
    c.set_defaults(func=cmd_color)

    h = sub.add_parser("chromatic", help="exact DP-chromatic number of a small graph")
    h.add_argument("graph", help="edge-list file")
    h.add_argument("--max-t", type=int, default=4, help="largest t to try (default 4)")
    h.add_argument("-o", "--output", metavar="PATH", help="write the certificate JSON here")
    add_report(h)
    h.set_defaults(func=cmd_chromatic)

    v = sub.add_parser("verify", help="check a coloring against lists and matchings")
    v.add_argument("graph")
    v.add_argument("lists")
    v.add_argument("matchings")
    v.add_argument("coloring")
    add_report(v)
    v.set_defaults(func=cmd_verify)

    gp = sub.add_parser("gen", help="write a generated graph in edge-list format")
    gp.add_argument("--family", required=True, choices=sorted(FAMILIES))
    gp.add_argument("-n", type=int, help="family parameter")
    gp.add_argument("-o", "--output", metavar="PATH", help="output file (default stdout)")
    add_report(gp)
    gp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "command", "report")}
    try:
        outcome, inputs, cert = args.func(args)
    except solver.ContainsC4 as e:
        print(f"error: {e}", file=sys.stderr)
        outcome, cert = "error", None
        err = {"message": str(e), "c4_witness": e.witness}
    except solver.ReductionStuck as e:
        print(f"stuck: {e}", file=sys.stderr)
        print("remainder edges:", " ".join(f"{u}-{v}" for u, v in e.remainder_original_edges()), file=sys.stderr)
        outcome, cert, err = "stuck", _stuck_json(e), None
    except (InputError, InstanceError, GraphFormatError, solver.PreconditionError, solver.GuardExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        outcome, cert, err = "error", None, {"message": str(e)}
    else:
        err = None
    if getattr(args, "report", None):
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "inputs": inputs,
            "outcome": outcome,
            "certificate": cert,
            "wall_time": round(time.perf_counter() - start, 6),
        }
        if err:
            report["error"] = err
        Path(args.report).write_text(cover.dumps(report))
    return EXIT[outcome]


if __name__ == "__main__":
    sys.exit(main())
