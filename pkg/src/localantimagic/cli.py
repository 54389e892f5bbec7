"""Command-line driver: construct, verify, solve, scan and export-dot.

Exit codes: 0 success or valid, 1 invalid or infeasible, 2 usage or input
error, 3 search budget exhausted before a verdict.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import constructions as C
from .documents import (
    DocumentError,
    graph_from_doc,
    graph_to_doc,
    graphs_from_graph6,
    labeling_from_doc,
    labeling_to_doc,
    read_json,
    to_dot,
    write_json,
)
from .labeling import verify_local_antimagic
from .solver import SearchLimits, exact_chi_la, exists_labeling_with_colors, scan_order

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunReport:
    command: list[str]
    input_digest: str
    outcome: dict[str, Any]
    wall_time: float

    def as_dict(self) -> dict[str, Any]:
        return {"command": self.command, "input_digest": self.input_digest,
                "outcome": self.outcome, "wall_time": round(self.wall_time, 4)}


class UsageError(Exception):
    pass


def _digest(*parts: bytes) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p)
    return h.hexdigest()[:16]


def _load(path: str) -> tuple[Any, bytes]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return read_json(path), raw


def _graph_of(doc: Any):
    if isinstance(doc, dict) and "graph" in doc:
        return labeling_from_doc(doc)[0]
    return graph_from_doc(doc)


def _color_table(construction_or_report) -> list[str]:
    classes = construction_or_report.report.classes if hasattr(construction_or_report, "report") \
        else construction_or_report.classes
    lines = [f"{len(classes)} colors", "  sum    vertices"]
    for s in sorted(classes):
        lines.append(f"  {s:<6} {len(classes[s])}")
    return lines


# ---- subcommands -------------------------------------------------------------------

_ARITY = {"k12r": 1, "wheel": 1, "coconut": 2, "kpq": 2, "chi2": 1, "star": 1,
          "join-general": 1, "join-regular": 1}


def cmd_construct(args) -> tuple[int, dict, list[str], bytes]:
    fam, params = args.family, args.params
    if len(params) != _ARITY[fam]:
        raise UsageError(f"{fam} takes {_ARITY[fam]} integer parameter(s)")
    raw = b""
    if fam.startswith("join"):
        if not args.base:
            raise UsageError(f"{fam} needs --base LABELING.json")
        doc, raw = _load(args.base)
        g, f = labeling_from_doc(doc)
        build = C.label_join_general if fam == "join-general" else C.label_join_regular
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = build(g, f, params[0])
        notes = [str(w.message) for w in caught]
    else:
        build = {"k12r": C.label_k12r, "wheel": C.label_wheel, "coconut": C.label_coconut,
                 "kpq": C.label_kpq, "chi2": C.chi2_graph, "star": C.label_star}[fam]
        result = build(*params)
        notes = []
    doc = labeling_to_doc(result.graph, result.labeling, result.matrix)
    if args.output:
        write_json(args.output, doc)
    lines = [f"{fam} {' '.join(map(str, params))}: order {result.graph.order}, {result.graph.size} edges"]
    lines += [f"warning: {n}" for n in notes]
    if result.matrix is not None:
        from .labeling import matrix_sums
        sums = matrix_sums(result.matrix)
        lines.append(f"row sums {sums.rows}")
        lines.append(f"column sums {sums.columns}")
    lines += _color_table(result)
    outcome = {"labeling": doc, "colors": list(result.colors), "warnings": notes}
    return EXIT_OK, outcome, lines, raw


def cmd_verify(args):
    doc, raw = _load(args.document)
    g, f = labeling_from_doc(doc)
    report = verify_local_antimagic(g, f)
    outcome = {"valid": report.valid, "color_count": report.color_count,
               "classes": {str(s): list(vs) for s, vs in sorted(report.classes.items())},
               "first_violation": report.first_violation}
    if report.valid:
        lines = ["valid local antimagic labeling"] + _color_table(report)
    else:
        lines = [f"invalid: {report.first_violation}"]
    return (EXIT_OK if report.valid else EXIT_INVALID), outcome, lines, raw


def _limits(args, graph=None) -> SearchLimits:
    max_edges = args.max_edges
    if max_edges is None:
        max_edges = max(12, graph.size if graph is not None and args.target is not None else 12)
    try:
        return SearchLimits(max_edges=max_edges, time_budget=args.time_budget,
                            node_budget=args.node_budget, workers=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_solve(args):
    doc, raw = _load(args.document)
    g = _graph_of(doc)
    limits = _limits(args, g)
    if args.target is not None:
        out = exists_labeling_with_colors(g, args.target, limits)
        outcome = {"target": args.target, "feasible": out.feasible, "exhausted": out.exhausted,
                   "nodes": out.nodes, "gated": out.gated,
                   "witness": None if out.witness is None else list(out.witness.labels)}
        if out.witness is not None:
            lines = [f"labeling with at most {args.target} colors found: {list(out.witness.labels)}"]
            return EXIT_OK, outcome, lines, raw
        if not out.exhausted:
            return EXIT_BUDGET, outcome, [f"budget exhausted after {out.nodes} nodes; undecided"], raw
        why = " (two-color divisibility gate)" if out.gated else ""
        return EXIT_INVALID, outcome, [f"no labeling with at most {args.target} colors{why}"], raw
    cert = exact_chi_la(g, limits)
    outcome = {"lower": cert.lower, "upper": cert.upper, "value": cert.value, "exhausted": cert.exhausted,
               "witness": None if cert.witness is None else list(cert.witness.labels)}
    if cert.value is not None:
        lines = [f"chi_la = {cert.value}", f"witness labels {list(cert.witness.labels)}"]
        return EXIT_OK, outcome, lines, raw
    return EXIT_BUDGET, outcome, [f"chi_la in [{cert.lower}, {cert.upper}] (budget hit)"], raw


def cmd_scan(args):
    raw = b""
    graphs = None
    if args.graph6:
        try:
            raw = Path(args.graph6).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.graph6}: {exc.strerror}") from None
        graphs = graphs_from_graph6(raw.decode("ascii", "replace").splitlines())
    elif args.n > 7:
        raise UsageError("built-in enumeration covers n <= 7; pass --graph6 for larger orders")
    limits = SearchLimits(max_edges=max(12, args.n * (args.n - 1) // 2), time_budget=args.time_budget,
                          workers=args.threads)
    rep = scan_order(args.n, args.c, limits, graphs)
    outcome = {"order": rep.order, "colors": rep.colors, "total": rep.total, "gated_out": rep.gated_out,
               "searched": rep.searched, "undecided": rep.undecided,
               "found": [{"graph": graph_to_doc(g), "labels": list(f.labels)} for g, f in rep.found]}
    lines = [f"order {rep.order}, at most {rep.colors} colors: {rep.total} connected graphs, "
             f"{rep.gated_out} excluded by bounds, {rep.searched} searched, {rep.undecided} undecided",
             f"found {len(rep.found)}"]
    lines += [f"  edges {list(g.edges)} labels {list(f.labels)}" for g, f in rep.found]
    code = EXIT_BUDGET if rep.undecided else EXIT_OK
    return code, outcome, lines, raw


def cmd_export_dot(args):
    doc, raw = _load(args.document)
    if isinstance(doc, dict) and "graph" in doc:
        g, f = labeling_from_doc(doc)
    else:
        g, f = graph_from_doc(doc), None
    text = to_dot(g, f)
    if args.output:
        Path(args.output).write_text(text)
        lines = [f"wrote {args.output}"]
    else:
        lines = [text.rstrip("\n")]
    return EXIT_OK, {"dot": text}, lines, raw


# ---- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="localantimagic", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="print a machine-readable run report")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a machine-readable run report")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a labeling for a named family")
    c.add_argument("family", choices=sorted(_ARITY))
    c.add_argument("params", type=int, nargs="*")
    c.add_argument("-o", "--output", help="write the labeling document here")
    c.add_argument("--base", help="labeling document of G for the join families")
    c.set_defaults(run=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check a labeling document")
    v.add_argument("document")
    v.set_defaults(run=cmd_verify)

    s = sub.add_parser("solve", parents=[common], help="exact chi_la, or feasibility for --target colors")
    s.add_argument("document", help="graph or labeling document")
    s.add_argument("--target", type=int)
    s.add_argument("--max-edges", type=int)
    s.add_argument("--time-budget", type=float, default=600.0)
    s.add_argument("--node-budget", type=int)
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(run=cmd_solve)

    sc = sub.add_parser("scan", parents=[common], help="all connected graphs of order n with at most c colors")
    sc.add_argument("n", type=int)
    sc.add_argument("c", type=int)
    sc.add_argument("--graph6", help="read candidate graphs from a graph6 file")
    sc.add_argument("--time-budget", type=float, default=1800.0)
    sc.add_argument("--threads", type=int, default=1)
    sc.set_defaults(run=cmd_scan)

    d = sub.add_parser("export-dot", parents=[common], help="DOT text for a graph or labeling document")
    d.add_argument("document")
    d.add_argument("-o", "--output")
    d.set_defaults(run=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code, outcome, lines, raw = args.run(args)
    except (UsageError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = RunReport(argv, _digest(" ".join(argv).encode(), raw), outcome, time.perf_counter() - start)
    if args.json:
        print(json.dumps(report.as_dict(), indent=1))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
