"""Exhaustive small-graph generation and the filter/report pipeline."""

from __future__ import annotations

import json
import logging
import multiprocessing
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache, partial

from .canon import canonical_labeling, graph_from_key
from .extendability import extendable, is_minimal_k_extendable, k_in_range, theorem_suite
from .graph import Graph, find_claw, is_connected, min_degree
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .matching import has_perfect_matching

log = logging.getLogger(__name__)

MAX_GENERATED_ORDER = 10
EXEMPLAR_CAP = 10


class SearchError(ValueError):
    pass


class IngestError(Graph6Error):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


# -- generation ---------------------------------------------------------------

def _children(parent_code: int, n: int) -> set[int]:
    """Canonical codes of every graph obtained by adding vertex ``n - 1`` to the parent."""
    base = list(graph_from_key(n - 1, parent_code).rows) if n > 1 else []
    out = set()
    new = n - 1
    for nbrs in range(1 << new):
        rows = base.copy()
        for v in range(new):
            if nbrs >> v & 1:
                rows[v] |= 1 << new
        rows.append(nbrs)
        out.add(canonical_labeling(Graph(n, tuple(rows)))[0])
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    codes: set[int] = set()
    for parent in _level(n - 1):
        codes |= _children(parent, n)
    return tuple(sorted(codes))


@lru_cache(maxsize=None)
def graph6_corpus(n: int) -> tuple[str, ...]:
    """graph6 strings of one canonical representative per isomorphism class, sorted."""
    if not 1 <= n <= MAX_GENERATED_ORDER:
        raise SearchError(f"built-in generation covers orders 1..{MAX_GENERATED_ORDER}; ingest larger orders")
    return tuple(sorted(emit_graph6(graph_from_key(n, code)) for code in _level(n)))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on ``n`` vertices up to isomorphism, in graph6 order.

    Orders 9 and 10 are supported but slow (minutes and hours respectively).
    """
    for line in graph6_corpus(n):
        yield parse_graph6(line)


def ingest_graph6(
    source: Iterable[str],
    on_error: str = "abort",
    diagnostics: list[tuple[int, str]] | None = None,
) -> Iterator[Graph]:
    """Parse graph6 lines in order; blank lines are ignored.

    With ``on_error="skip"`` bad lines are logged (and appended to
    ``diagnostics`` when given); with ``"abort"`` the first bad line raises.
    """
    if on_error not in ("skip", "abort"):
        raise ValueError(f"unknown error policy {on_error!r}")
    for lineno, line in enumerate(source, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            if on_error == "abort":
                raise IngestError(lineno, str(exc)) from exc
            log.warning("skipping line %d: %s", lineno, exc)
            if diagnostics is not None:
                diagnostics.append((lineno, str(exc)))


# -- filters -------------------------------------------------------------------

# evaluation order inside a FilterSpec; cheap structural tests run first
_COST = {
    "even-order": 0,
    "min-degree-in": 1,
    "connected": 2,
    "has-perfect-matching": 3,
    "claw-free": 4,
    "k-extendable": 5,
    "minimal": 6,
}


@dataclass(frozen=True)
class Predicate:
    name: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in _COST:
            raise SearchError(f"unknown predicate {self.name!r}")
        arity = {"k-extendable": 1, "minimal": 1, "min-degree-in": 2}.get(self.name, 0)
        if len(self.params) != arity:
            raise SearchError(f"{self.name} takes {arity} parameter(s)")

    def __call__(self, g: Graph) -> bool:
        name = self.name
        if name == "even-order":
            return g.order % 2 == 0
        if name == "min-degree-in":
            lo, hi = self.params
            return lo <= min_degree(g) <= hi
        if name == "connected":
            return is_connected(g)
        if name == "has-perfect-matching":
            return has_perfect_matching(g)
        if name == "claw-free":
            return find_claw(g) is None
        if name == "k-extendable":
            return extendable(g, self.params[0])
        k = self.params[0]
        return extendable(g, k) and is_minimal_k_extendable(g, k).result

    def describe(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class FilterSpec:
    """Conjunction of predicates; results do not depend on the listed order."""

    predicates: tuple[Predicate, ...]

    @classmethod
    def of(cls, *items: str | tuple) -> FilterSpec:
        preds = []
        for item in items:
            if isinstance(item, str):
                preds.append(Predicate(item))
            else:
                preds.append(Predicate(item[0], tuple(item[1:])))
        return cls(tuple(preds))

    @classmethod
    def extendability(
        cls,
        k: int,
        *,
        claw_free: bool = False,
        minimal: bool = False,
        degree_range: tuple[int, int] | None = None,
    ) -> FilterSpec:
        items: list = ["connected", "even-order"]
        if claw_free:
            items.append("claw-free")
        if degree_range is not None:
            items.append(("min-degree-in", *degree_range))
        items.append(("k-extendable", k))
        if minimal:
            items.append(("minimal", k))
        return cls.of(*items)

    def accepts(self, g: Graph) -> bool:
        return all(p(g) for p in sorted(self.predicates, key=lambda p: _COST[p.name]))

    def describe(self) -> list[str]:
        return [p.describe() for p in self.predicates]

    def guarantees(self, name: str, k: int) -> bool:
        return any(p.name == name and p.params == (k,) for p in self.predicates)


# -- reports --------------------------------------------------------------------

@dataclass
class SearchReport:
    filters: list[str]
    k: int
    input_count: int = 0
    survivor_count: int = 0
    min_degree_histogram: dict[int, int] = field(default_factory=dict)
    exemplars: dict[int, list[str]] = field(default_factory=dict)
    violations: list[tuple[str, str]] = field(default_factory=list)
    expected_degrees: list[int] | None = None
    survivors: list[str] = field(default_factory=list, repr=False)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.min_degree_histogram)

    @property
    def within_expected(self) -> bool | None:
        if self.expected_degrees is None:
            return None
        return set(self.min_degree_histogram) <= set(self.expected_degrees)

    def to_dict(self) -> dict:
        out = {
            "filters": self.filters,
            "k": self.k,
            "input_count": self.input_count,
            "survivor_count": self.survivor_count,
            "min_degree_histogram": {str(d): self.min_degree_histogram[d] for d in self.degrees},
            "exemplars": {str(d): self.exemplars[d] for d in sorted(self.exemplars)},
            "violations": [list(v) for v in self.violations],
        }
        if self.expected_degrees is not None:
            out["expected_degrees"] = self.expected_degrees
            out["within_expected"] = self.within_expected
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_tsv(self) -> str:
        lines = ["min_degree\tcount"]
        lines += [f"{d}\t{self.min_degree_histogram[d]}" for d in self.degrees]
        return "\n".join(lines) + "\n"


def _evaluate(line: str, spec: FilterSpec, k: int) -> tuple[str, int, list[str]] | None:
    g = parse_graph6(line)
    if not spec.accepts(g):
        return None
    failed: list[str] = []
    if g.order % 2 == 0 and k_in_range(g.order, k) and is_connected(g):
        known_min = spec.guarantees("minimal", k)
        known_ext = known_min or spec.guarantees("k-extendable", k)
        report = theorem_suite(
            g, k,
            k_extendable=True if known_ext else None,
            is_minimal=True if known_min else None,
        )
        failed = report.violations()
    return line, min_degree(g), failed


def _as_lines(graphs: Iterable[Graph | str]) -> Iterator[str]:
    for g in graphs:
        yield g if isinstance(g, str) else emit_graph6(g)


def run_pipeline(
    graphs: Iterable[Graph | str],
    spec: FilterSpec,
    k: int,
    *,
    jobs: int = 1,
    exemplar_cap: int = EXEMPLAR_CAP,
    chunksize: int = 64,
) -> SearchReport:
    """Filter a graph stream and aggregate survivors by minimum degree.

    Every survivor that is connected, of even order and admits ``k`` is also
    run through the theorem suite; failed checks land in ``violations``.
    The report is identical for any ``jobs``.
    """
    if jobs < 1:
        raise SearchError("jobs must be at least 1")
    report = SearchReport(filters=spec.describe(), k=k)
    work = partial(_evaluate, spec=spec, k=k)
    counter = {"n": 0}

    def counted() -> Iterator[str]:
        for line in _as_lines(graphs):
            counter["n"] += 1
            yield line

    if jobs == 1:
        results = map(work, counted())
        _collect(report, results)
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            _collect(report, pool.imap_unordered(work, counted(), chunksize))
    report.input_count = counter["n"]

    report.survivors.sort()
    report.survivor_count = len(report.survivors)
    report.violations.sort()
    for d in report.exemplars:
        report.exemplars[d] = sorted(report.exemplars[d])[:exemplar_cap]
    report.min_degree_histogram = dict(sorted(report.min_degree_histogram.items()))
    return report


def _collect(report: SearchReport, results) -> None:
    for res in results:
        if res is None:
            continue
        line, delta, failed = res
        report.survivors.append(line)
        report.min_degree_histogram[delta] = report.min_degree_histogram.get(delta, 0) + 1
        report.exemplars.setdefault(delta, []).append(line)
        report.violations.extend((line, name) for name in failed)


def conjecture_scan(
    n: int,
    k: int,
    *,
    jobs: int = 1,
    graphs: Iterable[Graph | str] | None = None,
) -> SearchReport:
    """Minimum degrees of minimal k-extendable claw-free graphs of order ``n``.

    ``expected_degrees`` is ``[2k, 2k+1]``; ``within_expected`` tells whether
    every observed degree falls in it.
    """
    if n % 2:
        raise SearchError(f"order {n} is odd")
    if not k_in_range(n, k):
        raise SearchError(f"k={k} outside 1..{n // 2 - 1}")
    spec = FilterSpec.extendability(k, claw_free=True, minimal=True)
    source = enumerate_graphs(n) if graphs is None else graphs
    report = run_pipeline(source, spec, k, jobs=jobs)
    report.expected_degrees = [2 * k, 2 * k + 1]
    return report
