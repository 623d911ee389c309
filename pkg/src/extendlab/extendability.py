"""k-extendability, minimality and the implications they are known to satisfy."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    Edge,
    Graph,
    GraphError,
    bits,
    components_of,
    find_claw,
    is_connected,
    is_connected_mask,
    is_l_connected,
    min_degree,
    to_mask,
)
from .matching import Matching, has_perfect_matching_on, matching_on, matchings_upto

# exhaustive budgets for the sufficient-condition scans and the cut checks
STRANDING_SCAN_MAX_ORDER = 12
CUT_SCAN_MAX_ORDER = 10


class ExtendabilityError(GraphError):
    pass


@dataclass(frozen=True)
class ExtendabilityVerdict:
    k: int
    result: bool
    witness: Matching | None = None
    stranded: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.result


@dataclass(frozen=True)
class MinimalityVerdict:
    k: int
    result: bool
    non_critical_edge: Edge | None = None

    def __bool__(self) -> bool:
        return self.result


def k_in_range(n: int, k: int) -> bool:
    return 1 <= k <= n // 2 - 1


def _check_inputs(g: Graph, k: int) -> None:
    if g.order % 2:
        raise ExtendabilityError(f"odd order {g.order}")
    if not is_connected(g):
        raise ExtendabilityError("graph is disconnected")
    if not k_in_range(g.order, k):
        raise ExtendabilityError(f"k={k} outside 1..{g.order // 2 - 1}")


def _odd_component(rows, mask: int) -> int:
    for comp in components_of(rows, mask):
        if comp.bit_count() & 1:
            return comp
    return 0


def stranding_scan(g: Graph, k: int) -> ExtendabilityVerdict | None:
    """First matching of size at most ``k`` whose removal leaves an odd component.

    Matchings are tried by size, then lexicographically.  Applies to graphs
    with a perfect matching, where any hit rules out k-extendability.
    """
    edges = g.edges()
    full = g.all_vertices
    for size in range(1, k + 1):
        for sel in matchings_upto(edges, size):
            used = 0
            for u, v in sel:
                used |= 1 << u | 1 << v
            comp = _odd_component(g.rows, full & ~used)
            if comp:
                return ExtendabilityVerdict(k, False, Matching(sel), tuple(bits(comp)))
    return None


def cut_scan(g: Graph, k: int) -> ExtendabilityVerdict | None:
    """Look for a (2k-1)-vertex cut whose maximum matching misses one vertex that sees two sides.

    Such a cut yields a k-matching stranding an odd component.
    """
    if k < 2:
        return None
    full = g.all_vertices
    rows = g.rows
    for cut in combinations(range(g.order), 2 * k - 1):
        xmask = to_mask(cut)
        comps = components_of(rows, full & ~xmask)
        if len(comps) < 2:
            continue
        inner = matching_on(rows, xmask)
        if len(inner) != k - 1:
            continue
        covered = 0
        for a, b in inner:
            covered |= 1 << a | 1 << b
        x = (xmask & ~covered).bit_length() - 1
        touched = [c for c in comps if rows[x] & c]
        if len(touched) < 2:
            continue
        h1, h2 = touched[0], touched[1]
        if h1.bit_count() & 1:
            y = (rows[x] & h2 & -(rows[x] & h2)).bit_length() - 1
        else:
            y = (rows[x] & h1 & -(rows[x] & h1)).bit_length() - 1
        sel = tuple(sorted(inner + [(min(x, y), max(x, y))]))
        used = covered | 1 << x | 1 << y
        comp = _odd_component(rows, full & ~used)
        return ExtendabilityVerdict(k, False, Matching(sel), tuple(bits(comp)))
    return None


def _witness_key(v: ExtendabilityVerdict):
    return len(v.witness), v.witness.edges


def witness_scan(g: Graph, k: int) -> ExtendabilityVerdict | None:
    """Sound, incomplete search for a certificate of non-k-extendability.

    Runs the stranding-matching scan (orders up to 12) and the cut scan
    (orders up to 10) and returns the smaller witness.  ``None`` proves nothing.
    """
    if g.order % 2:
        raise ExtendabilityError(f"odd order {g.order}")
    found = []
    if g.order <= STRANDING_SCAN_MAX_ORDER:
        hit = stranding_scan(g, k)
        if hit is not None:
            found.append(hit)
    if g.order <= CUT_SCAN_MAX_ORDER:
        hit = cut_scan(g, k)
        if hit is not None:
            found.append(hit)
    return min(found, key=_witness_key) if found else None


def is_k_extendable(g: Graph, k: int) -> ExtendabilityVerdict:
    """Decide whether every k-matching of ``g`` lies in a perfect matching.

    A connected even-order graph without a perfect matching is reported as
    not k-extendable with the empty matching as witness.
    """
    _check_inputs(g, k)
    full = g.all_vertices
    if not has_perfect_matching_on(g.rows, full):
        comp = _odd_component(g.rows, full)
        return ExtendabilityVerdict(k, False, Matching(), tuple(bits(comp)) if comp else None)
    hit = witness_scan(g, k)
    if hit is not None:
        return hit
    for sel in matchings_upto(g.edges(), k):
        used = 0
        for u, v in sel:
            used |= 1 << u | 1 << v
        if not has_perfect_matching_on(g.rows, full & ~used):
            comp = _odd_component(g.rows, full & ~used)
            return ExtendabilityVerdict(k, False, Matching(sel), tuple(bits(comp)) if comp else None)
    return ExtendabilityVerdict(k, True)


def extendable(g: Graph, k: int) -> bool:
    """Total form of :func:`is_k_extendable`: malformed inputs are simply not extendable."""
    if g.order % 2 or not k_in_range(g.order, k) or not is_connected(g):
        return False
    return is_k_extendable(g, k).result


def is_minimal_k_extendable(g: Graph, k: int) -> MinimalityVerdict:
    if not is_k_extendable(g, k).result:
        raise ExtendabilityError(f"graph is not {k}-extendable")
    for u, v in g.edges():
        if extendable(g.without_edge(u, v), k):
            return MinimalityVerdict(k, False, (u, v))
    return MinimalityVerdict(k, True)


def minimal(g: Graph, k: int) -> bool:
    return extendable(g, k) and is_minimal_k_extendable(g, k).result


def witness_holds(g: Graph, verdict: ExtendabilityVerdict) -> bool:
    """Re-check a negative verdict directly from its witness."""
    if verdict.result or verdict.witness is None:
        return False
    m = verdict.witness
    if len(m) > verdict.k:
        return False
    used = 0
    for u, v in m:
        if not g.has_edge(u, v) or (used >> u | used >> v) & 1:
            return False
        used |= 1 << u | 1 << v
    rest = g.all_vertices & ~used
    if verdict.stranded is not None:
        comp = to_mask(verdict.stranded)
        return comp.bit_count() & 1 == 1 and comp in components_of(g.rows, rest)
    return len(m) == verdict.k and not has_perfect_matching_on(g.rows, rest)


@dataclass
class TheoremReport:
    """Named implication checks; ``None`` marks a check whose hypothesis does not hold."""

    k: int
    checks: dict[str, bool | None] = field(default_factory=dict)

    def violations(self) -> list[str]:
        return [name for name, ok in self.checks.items() if ok is False]

    @property
    def passed(self) -> bool:
        return not self.violations()


def _cut_matching_bound(g: Graph, k: int) -> bool:
    """Every vertex cut whose induced subgraph has a perfect matching M has |M| >= k,
    and when |M| = k all components beyond the cut are even and every cut
    vertex sees each of them."""
    rows = g.rows
    full = g.all_vertices
    n = g.order
    for size in range(2, n - 1, 2):
        for cut in combinations(range(n), size):
            xmask = to_mask(cut)
            rest = full & ~xmask
            if is_connected_mask(rows, rest):
                continue
            if not has_perfect_matching_on(rows, xmask):
                continue
            half = size // 2
            if half < k:
                return False
            if half == k:
                comps = components_of(rows, rest)
                if any(c.bit_count() & 1 for c in comps):
                    return False
                if any(not rows[x] & c for x in cut for c in comps):
                    return False
    return True


def theorem_suite(
    g: Graph,
    k: int,
    *,
    k_extendable: bool | None = None,
    is_minimal: bool | None = None,
) -> TheoremReport:
    """Evaluate the known consequences of (minimal) k-extendability on ``g``.

    Checks, each ``None`` when its hypothesis fails:

    - ``monotone_connectivity``: k-extendable implies (k-1)-extendable and (k+1)-connected.
    - ``degree_window``: minimal k-extendable of order 2n implies k+1 <= delta <= n or delta >= 2k+1.
    - ``claw_free_degree_bound``: k-extendable and claw-free implies delta >= 2k.
    - ``claw_free_minimal_degree``: minimal 2-extendable and claw-free implies delta in {4, 5}.
    - ``cut_matching_bound``: the cut/perfect-matching bound for k-extendable graphs (orders <= 10).

    Precomputed verdicts may be passed in to skip recomputation.
    """
    _check_inputs(g, k)
    if k_extendable is None:
        k_extendable = is_k_extendable(g, k).result
    report = TheoremReport(k)
    checks = report.checks
    if not k_extendable:
        for name in ("monotone_connectivity", "degree_window", "claw_free_degree_bound",
                     "claw_free_minimal_degree", "cut_matching_bound"):
            checks[name] = None
        return report
    if is_minimal is None:
        is_minimal = is_minimal_k_extendable(g, k).result
    delta = min_degree(g)
    half = g.order // 2
    claw_free = find_claw(g) is None

    lower = k == 1 or is_k_extendable(g, k - 1).result
    checks["monotone_connectivity"] = lower and is_l_connected(g, k + 1)
    checks["degree_window"] = (
        (k + 1 <= delta <= half or delta >= 2 * k + 1) if is_minimal else None
    )
    checks["claw_free_degree_bound"] = delta >= 2 * k if claw_free else None
    checks["claw_free_minimal_degree"] = (
        delta in (4, 5) if (k == 2 and is_minimal and claw_free) else None
    )
    checks["cut_matching_bound"] = (
        _cut_matching_bound(g, k) if g.order <= CUT_SCAN_MAX_ORDER else None
    )
    return report
