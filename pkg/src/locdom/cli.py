"""Command-line surface: lambda, classify, assoc, family, census, verify.

Exit codes: 0 success, 1 property violation (verify/census found a
counterexample), 2 usage or input error.  Reports are JSON with a fixed key
order; the timing field stays null unless --timing is given so identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import suites
from .associated import build_associated, cactus_stats, component_trace_check, \
    label_multiplicity, label_subgraph
from .bipartite import ClassificationReport, classify, graph_from_traces, run_census
from .families import FamilySpec, generate
from .graphio import export_dot, parse_documents, to_edge_list, to_graph6
from .graphs import Graph, VertexSet
from .ld import LDReport, lambda_bounded, lambda_bruteforce

SCHEMA = "locdom-report/1"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graphs(path: str) -> list[Graph]:
    return [doc.graph for doc in parse_documents(_read_text(path))]


def _emit(obj, single: bool) -> None:
    if single and isinstance(obj, list) and len(obj) == 1:
        obj = obj[0]
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _vs(v: VertexSet | None):
    return None if v is None else list(v)


def _ld_json(rep: LDReport) -> dict:
    out = {"lambda": rep.lam, "witness": _vs(rep.witness)}
    if rep.all_codes is not None:
        out["all_codes"] = [_vs(c) for c in rep.all_codes]
    return out


def _classify_json(rep: ClassificationReport) -> dict:
    c = rep.conditions
    return {
        "r": rep.r,
        "s": rep.s,
        "lambda": rep.lambda_g,
        "lambda_bar": rep.lambda_gbar,
        "relation": rep.relation,
        "conditions": {"c1": c.c1, "c2": c.c2, "c3": c.c3,
                       "c3_twin_form": c.c3_twin_form},
        "predicted_plus_one": rep.predicted_plus_one,
        "witness": _vs(rep.witness_g),
        "witness_bar": _vs(rep.witness_gbar),
        "partial": rep.partial,
    }


def _parse_vertex_list(text: str) -> VertexSet:
    try:
        return VertexSet.of(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise ValueError(f"expected comma-separated vertex indices, got {text!r}") from None


def cmd_lambda(args) -> int:
    reports = []
    for g in _load_graphs(args.file):
        if args.bounded is not None:
            found, size, wit = lambda_bounded(g, args.bounded)
            reports.append({"bounded": args.bounded, "found": found,
                            "size": size, "witness": _vs(wit)})
        else:
            reports.append(_ld_json(lambda_bruteforce(g, enumerate_all=args.all_codes)))
    _emit(reports, single=True)
    return 0


def cmd_classify(args) -> int:
    reports = [_classify_json(classify(g)) for g in _load_graphs(args.file)]
    _emit(reports, single=True)
    return 0


def cmd_assoc(args) -> int:
    graphs = _load_graphs(args.file)
    if len(graphs) != 1:
        raise ValueError("assoc expects exactly one input graph")
    ag = build_associated(graphs[0], _parse_vertex_list(args.set))
    report = {
        "n": graphs[0].n,
        "set": list(_parse_vertex_list(args.set)),
        "k": ag.k,
        "vertices": list(ag.vertices),
        "levels": [[v, ag.level[v]] for v in ag.vertices],
        "edges": [list(e) for e in ag.edges],
    }
    if args.labels:
        report["label_multiplicity"] = {str(u): c for u, c in
                                        sorted(label_multiplicity(ag).items())}
    if args.subgraph is not None:
        sel = _parse_vertex_list(args.subgraph)
        ls = label_subgraph(ag, sel)
        st = cactus_stats(ls)
        report["subgraph"] = {
            "labels": list(sel),
            "edges": [list(e) for e in ls.edges],
            "components": [list(c) for c in ls.components],
            "component_traces_ok": component_trace_check(ls),
            "cactus": {"cc": st.cc, "cy": st.cy, "ex": st.ex,
                       "is_cactus": st.is_cactus},
        }
    if args.dot is not None:
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(export_dot(ag))
    _emit(report, single=False)
    return 0


def cmd_family(args) -> int:
    spec = FamilySpec(args.kind, n=args.n, r=args.r, s=args.s)
    g = generate(spec)
    if args.emit == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        sys.stdout.write(to_graph6(g) + "\n")
    return 0


def cmd_census(args) -> int:
    start = time.monotonic()
    entries = run_census(args.max_n, jobs=args.jobs)
    by_relation: dict[str, int] = {"-1": 0, "0": 0, "1": 0}
    rows = []
    counterexamples = []
    for e in entries:
        rel = e.report.relation
        by_relation[str(rel)] += 1
        row = {"key": to_graph6(graph_from_traces(e.r, e.traces))}
        row.update(_classify_json(e.report))
        row["ok"] = e.ok()
        rows.append(row)
        if not e.ok():
            counterexamples.append(row["key"])
    report = {
        "schema": SCHEMA,
        "command": ["census", "--max-n", str(args.max_n), "--jobs", str(args.jobs)],
        "entries": rows,
        "summary": {
            "graphs": len(rows),
            "by_relation": by_relation,
            "counterexamples": counterexamples,
        },
        "timing": round(time.monotonic() - start, 3) if args.timing else None,
    }
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        cols = ["key", "r", "s", "lambda", "lambda_bar", "relation",
                "c1", "c2", "c3", "c3_twin_form", "predicted_plus_one", "ok"]
        lines = [",".join(cols)]
        for row in rows:
            rec = dict(row)
            rec.update(rec.pop("conditions"))
            lines.append(",".join(str(rec[c]) for c in cols))
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
    return 1 if counterexamples else 0


def cmd_verify(args) -> int:
    start = time.monotonic()
    max_n = args.max_n
    if args.suite == "table1":
        checked, bad = suites.table1_suite()
        max_n = None
    elif args.suite == "thm3":
        max_n = 7 if max_n is None else max_n
        checked, bad = suites.thm3_suite(max_n=max_n)
    elif args.suite == "parity":
        max_n = 14 if max_n is None else max_n
        checked, bad = suites.parity_suite(seed=args.seed, trials=args.trials, max_n=max_n)
    else:
        max_n = 14 if max_n is None else max_n
        checked, bad = suites.cactus_suite(seed=args.seed, trials=args.trials, max_n=max_n)
    report = {
        "schema": SCHEMA,
        "command": ["verify", "--suite", args.suite],
        "suite": args.suite,
        "params": {"seed": args.seed, "trials": args.trials, "max_n": max_n},
        "checked": checked,
        "violations": bad,
        "timing": round(time.monotonic() - start, 3) if args.timing else None,
    }
    _emit(report, single=False)
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="locdom",
        description="Exact toolkit for locating-dominating sets, associated "
                    "graphs, and the bipartite complement characterization.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    lam = sub.add_parser("lambda", help="minimum LD-set size of each input graph")
    lam.add_argument("file", help="graph file (graph6 or edge list), or - for stdin")
    lam.add_argument("--all-codes", action="store_true", help="enumerate every minimum LD-set")
    lam.add_argument("--bounded", type=int, metavar="K", default=None,
                     help="bounded search: decide existence of an LD-set of size <= K")
    lam.set_defaults(func=cmd_lambda)

    cls = sub.add_parser("classify", help="bipartite complement classification report")
    cls.add_argument("file")
    cls.set_defaults(func=cmd_classify)

    asc = sub.add_parser("assoc", help="associated graph of a distinguishing set")
    asc.add_argument("file")
    asc.add_argument("--set", required=True, metavar="V,V,...",
                     help="distinguishing set, comma-separated vertex indices")
    asc.add_argument("--dot", metavar="OUT", default=None, help="write DOT rendering")
    asc.add_argument("--labels", action="store_true", help="include label multiplicities")
    asc.add_argument("--subgraph", metavar="V,V,...", default=None,
                     help="report the subgraph induced by these labels")
    asc.set_defaults(func=cmd_assoc)

    fam = sub.add_parser("family", help="generate a named family graph")
    fam.add_argument("kind", choices=["path", "cycle", "star", "complete_bipartite",
                                      "bistar", "extremal", "banner"])
    fam.add_argument("--n", type=int, default=None)
    fam.add_argument("--r", type=int, default=None)
    fam.add_argument("--s", type=int, default=None)
    fam.add_argument("--emit", choices=["graph6", "edges"], default="graph6")
    fam.set_defaults(func=cmd_family)

    cen = sub.add_parser("census", help="exhaustive bipartite characterization check")
    cen.add_argument("--max-n", type=int, required=True)
    cen.add_argument("--jobs", type=int, default=1)
    cen.add_argument("--out", default=None, help="write the JSON report to a file")
    cen.add_argument("--csv", default=None, help="also write a one-line-per-graph CSV summary")
    cen.add_argument("--timing", action="store_true",
                     help="include wall time (breaks byte-reproducibility)")
    cen.set_defaults(func=cmd_census)

    ver = sub.add_parser("verify", help="run a property suite; exit 1 on any violation")
    ver.add_argument("--suite", required=True, choices=["table1", "thm3", "cactus", "parity"])
    ver.add_argument("--seed", type=int, default=2024)
    ver.add_argument("--trials", type=int, default=500)
    ver.add_argument("--max-n", type=int, default=None,
                     help="graph order ceiling (default: 7 for thm3, 14 for parity/cactus)")
    ver.add_argument("--timing", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"locdom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
