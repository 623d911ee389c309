"""Command-line front end.

Subcommands read graph6 lines (``--input`` or stdin) unless ``--n`` asks
for the built-in generator.  Exit codes: 0 when every predicate held,
1 when some predicate failed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import TextIO

from . import oracle
from .certificate import certify_all_edges, type_tag_of
from .extendability import (
    ExtendabilityError,
    is_k_extendable,
    is_minimal_k_extendable,
)
from .graph import find_claw, min_degree
from .graph6 import Graph6Error, emit_graph6
from .search import (
    FilterSpec,
    IngestError,
    SearchError,
    conjecture_scan,
    enumerate_graphs,
    ingest_graph6,
    run_pipeline,
)

SUBCOMMANDS = ("check", "certify", "search", "conjecture", "oracle")


@dataclass(frozen=True)
class CommandPlan:
    subcommand: str
    k: int | None = None
    n: int | None = None
    input: str | None = None
    claw_free: bool = False
    minimal: bool = False
    min_degree: int | None = None
    max_degree: int | None = None
    format: str = "json"
    jobs: int = 1
    on_error: str = "abort"
    survivors: str | None = None


def _default_jobs() -> int:
    raw = os.environ.get("EXTENDLAB_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extendlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, k_required: bool) -> None:
        p.add_argument("--k", type=int, required=k_required)
        p.add_argument("--input", help="graph6 file (default: stdin)")
        p.add_argument("--claw-free", action="store_true")
        p.add_argument("--minimal", action="store_true")
        p.add_argument("--min-degree", type=int)
        p.add_argument("--max-degree", type=int)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--jobs", type=int, default=_default_jobs())
        p.add_argument("--on-error", choices=("skip", "abort"), default="abort")
        p.add_argument("--survivors", help="write graph6 lines of survivors here")
        p.add_argument("--n", type=int, help="use the built-in generator for this order")

    common(sub.add_parser("check", help="k-extendability verdict per input graph"), True)
    common(sub.add_parser("certify", help="per-edge certificates per input graph"), True)
    common(sub.add_parser("search", help="filter a graph stream into a degree report"), True)
    common(sub.add_parser("conjecture", help="claw-free minimal k-extendable degree scan"), True)
    common(sub.add_parser("oracle", help="brute-force reference values per input graph"), False)
    return parser


def parse_args(argv: list[str]) -> CommandPlan:
    parser = _parser()
    ns = parser.parse_args(argv)
    if ns.jobs < 1:
        parser.error("--jobs must be at least 1")
    if ns.n is not None and ns.input is not None:
        parser.error("--n and --input are mutually exclusive")
    if ns.subcommand in ("check", "certify") and ns.n is not None:
        parser.error(f"{ns.subcommand} reads graph6 input; --n is not accepted")
    if ns.subcommand == "conjecture" and ns.n is None and ns.input is None:
        parser.error("conjecture needs --n or --input")
    if (ns.min_degree is None) != (ns.max_degree is None):
        parser.error("--min-degree and --max-degree go together")
    if ns.min_degree is not None and ns.min_degree > ns.max_degree:
        parser.error("--min-degree exceeds --max-degree")
    if ns.format == "tsv" and ns.subcommand not in ("search", "conjecture"):
        parser.error("--format tsv applies to search and conjecture only")
    return CommandPlan(
        subcommand=ns.subcommand,
        k=ns.k,
        n=ns.n,
        input=ns.input,
        claw_free=ns.claw_free,
        minimal=ns.minimal,
        min_degree=ns.min_degree,
        max_degree=ns.max_degree,
        format=ns.format,
        jobs=ns.jobs,
        on_error=ns.on_error,
        survivors=ns.survivors,
    )


def _emit(out: TextIO, record: dict) -> None:
    out.write(json.dumps(record) + "\n")
    out.flush()


def _check_record(g, plan: CommandPlan) -> tuple[dict, bool]:
    line = emit_graph6(g)
    record: dict = {"graph6": line, "k": plan.k}
    claw = find_claw(g)
    try:
        verdict = is_k_extendable(g, plan.k)
    except ExtendabilityError as exc:
        record.update(extendable=False, error=str(exc))
        return record, False
    record["extendable"] = verdict.result
    if not verdict.result:
        record["witness"] = verdict.witness.as_lists()
        record["stranded"] = list(verdict.stranded) if verdict.stranded is not None else None
    ok = verdict.result
    if plan.minimal:
        if verdict.result:
            mv = is_minimal_k_extendable(g, plan.k)
            record["minimal"] = mv.result
            if not mv.result:
                record["non_critical_edge"] = list(mv.non_critical_edge)
            ok = ok and mv.result
        else:
            record["minimal"] = False
    record["claw_free"] = claw is None
    if plan.claw_free:
        ok = ok and claw is None
    record["min_degree"] = min_degree(g)
    return record, ok


def _certify_record(g, plan: CommandPlan) -> tuple[dict, bool]:
    record: dict = {"graph6": emit_graph6(g), "k": plan.k}
    try:
        certs = certify_all_edges(g, plan.k)
    except ExtendabilityError as exc:
        record.update(extendable=False, error=str(exc))
        return record, False
    entries = []
    for edge, cert in certs.items():
        if cert is None:
            entries.append({"edge": list(edge), "s": None})
        else:
            entries.append(cert.to_json(type_tag_of(cert) if plan.k == 2 else None))
    everything = all(c is not None for c in certs.values())
    record.update(extendable=True, all_certified=everything, certificates=entries)
    return record, everything


def _oracle_record(g, plan: CommandPlan) -> tuple[dict, bool]:
    record: dict = {
        "graph6": emit_graph6(g),
        "order": g.order,
        "size": g.size,
        "connected": oracle.is_connected(g),
        "max_matching_size": oracle.max_matching_size(g),
        "perfect_matching": oracle.has_perfect_matching(g),
        "claw_free": oracle.is_claw_free(g),
        "min_degree": min(len(g.neighbors(v)) for v in range(g.order)),
        "connectivity": oracle.vertex_connectivity(g),
    }
    ok = True
    if plan.claw_free:
        ok = record["claw_free"]
    if plan.k is not None:
        ext = oracle.is_k_extendable(g, plan.k)
        record["k"] = plan.k
        record["extendable"] = ext
        ok = ok and ext
        if plan.minimal:
            record["minimal"] = ext and oracle.is_minimal_k_extendable(g, plan.k)
            ok = ok and record["minimal"]
            if ext and g.order >= 2 * plan.k + 2:
                record["certified_edges"] = sum(
                    oracle.smallest_certificate(g, e, plan.k) is not None for e in g.edges()
                )
    return record, ok


def _oracle_counts(plan: CommandPlan) -> dict:
    counts = oracle.connected_graph_counts(plan.n)
    return {"n": plan.n, "graphs": oracle.graph_count(plan.n), "connected_graphs": counts[-1]}


def _open_lines(plan: CommandPlan, stdin: TextIO):
    if plan.input is None:
        return stdin, None
    handle = open(plan.input, encoding="ascii")
    return handle, handle


def execute(plan: CommandPlan, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    try:
        return _execute(plan, stdin, stdout, stderr)
    except (IngestError, Graph6Error, SearchError, OSError) as exc:
        stderr.write(f"extendlab: {exc}\n")
        return 2


def _execute(plan: CommandPlan, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    if plan.subcommand == "oracle" and plan.n is not None:
        _emit(stdout, _oracle_counts(plan))
        return 0

    diagnostics: list[tuple[int, str]] = []
    source, handle = (None, None) if plan.n is not None else _open_lines(plan, stdin)
    try:
        if plan.n is not None:
            graphs = enumerate_graphs(plan.n)
        else:
            graphs = ingest_graph6(source, plan.on_error, diagnostics)

        if plan.subcommand in ("check", "certify", "oracle"):
            handler = {"check": _check_record, "certify": _certify_record, "oracle": _oracle_record}[
                plan.subcommand
            ]
            all_ok = True
            for g in graphs:
                record, ok = handler(g, plan)
                all_ok = all_ok and ok
                _emit(stdout, record)
            code = 0 if all_ok else 1
        else:
            code = _run_search(plan, graphs, stdout)
    finally:
        if handle is not None:
            handle.close()
    for lineno, message in diagnostics:
        stderr.write(f"extendlab: skipped line {lineno}: {message}\n")
    return code


def _run_search(plan: CommandPlan, graphs, stdout: TextIO) -> int:
    if plan.subcommand == "conjecture":
        n = plan.n
        if n is None:
            graphs = list(graphs)
            orders = {g.order for g in graphs}
            if len(orders) != 1:
                raise SearchError("conjecture input must contain graphs of one order")
            n = orders.pop()
        report = conjecture_scan(n, plan.k, jobs=plan.jobs, graphs=graphs)
        failed = bool(report.violations) or not report.within_expected
    else:
        degree_range = None
        if plan.min_degree is not None:
            degree_range = (plan.min_degree, plan.max_degree)
        spec = FilterSpec.extendability(
            plan.k, claw_free=plan.claw_free, minimal=plan.minimal, degree_range=degree_range
        )
        report = run_pipeline(graphs, spec, plan.k, jobs=plan.jobs)
        failed = bool(report.violations)
    if plan.survivors:
        with open(plan.survivors, "w", encoding="ascii") as fh:
            fh.writelines(line + "\n" for line in report.survivors)
    if plan.format == "tsv":
        stdout.write(report.to_tsv())
    else:
        stdout.write(report.to_json() + "\n")
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    plan = parse_args(sys.argv[1:] if argv is None else argv)
    return execute(plan, sys.stdin, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
