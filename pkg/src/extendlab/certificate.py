"""Per-edge certificates of criticality for k-extendability.

For an edge ``uv`` of a k-extendable graph, a certificate is a vertex set
``S`` avoiding ``u`` and ``v`` such that

1. ``G[S]`` has a matching of size at least ``k``;
2. ``G - uv - S`` has exactly ``|S| - 2k + 2`` odd components;
3. ``u`` and ``v`` sit in two different odd components of ``G - uv - S``.

A k-extendable graph is minimal exactly when every edge has one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .extendability import ExtendabilityError, extendable, k_in_range
from .graph import Check, ComponentSplit, Edge, Graph, GraphError, bits, components_of, to_mask
from .matching import matching_on

TYPE1 = "type1"
TYPE2 = "type2"
UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class Certificate:
    edge: Edge
    k: int
    s: tuple[int, ...]
    matching_size: int
    split: ComponentSplit
    u_component: int
    v_component: int

    @property
    def odd_components(self) -> list[int]:
        return self.split.odd_components()

    def to_json(self, type_tag: str | None = None) -> dict:
        return {
            "edge": list(self.edge),
            "s": list(self.s),
            "matching_size": self.matching_size,
            "odd_components": [list(bits(c)) for c in self.odd_components],
            "type_tag": type_tag,
        }


@dataclass(frozen=True)
class EdgeProfile:
    certificate: Certificate
    t: int
    odd_orders: tuple[int, ...]
    even_count: int
    type_tag: str
    twin_flag: bool


def _edge_rows(g: Graph, u: int, v: int) -> list[int]:
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return rows


def _require_edge(g: Graph, edge) -> tuple[int, int]:
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    return u, v


def _evaluate(g: Graph, rows: list[int], u: int, v: int, k: int, smask: int):
    """Condition-by-condition evaluation; returns (failed condition or None, details)."""
    inner = len(matching_on(g.rows, smask)) if smask else 0
    comps = components_of(rows, g.all_vertices & ~smask)
    split = ComponentSplit(tuple(comps))
    if inner < k:
        return "i", (inner, split)
    need = smask.bit_count() - 2 * k + 2
    if split.odd_count != need:
        return "ii", (inner, split)
    iu, iv = split.index_of(u), split.index_of(v)
    if iu == iv or not comps[iu].bit_count() & 1 or not comps[iv].bit_count() & 1:
        return "iii", (inner, split)
    return None, (inner, split)


_REASONS = {
    "i": "condition (i): matching inside S is smaller than k",
    "ii": "condition (ii): odd component count differs from |S| - 2k + 2",
    "iii": "condition (iii): endpoints are not in two distinct odd components",
}


def validate_certificate(g: Graph, edge, k: int, s) -> Check:
    """Check the three certificate conditions; ``reason`` names the first that fails."""
    u, v = _require_edge(g, edge)
    smask = to_mask(s)
    if smask & ~g.all_vertices:
        raise GraphError("certificate set leaves the vertex range")
    if (smask >> u | smask >> v) & 1:
        raise GraphError("certificate set contains an endpoint of the edge")
    failed, (inner, split) = _evaluate(g, _edge_rows(g, u, v), u, v, k, smask)
    if failed:
        return Check(False, _REASONS[failed], split)
    return Check(True, None, split)


def find_certificate(g: Graph, edge, k: int) -> Certificate | None:
    """Smallest valid certificate for ``edge``, lexicographically first among equal sizes."""
    u, v = _require_edge(g, edge)
    if not k_in_range(g.order, k):
        raise ExtendabilityError(f"k={k} outside 1..{g.order // 2 - 1}")
    rows = _edge_rows(g, u, v)
    others = [x for x in range(g.order) if x != u and x != v]
    full = g.all_vertices
    for size in range(2 * k, len(others) + 1):
        for s in combinations(others, size):
            smask = to_mask(s)
            # cheap component conditions first, the matching condition last
            comps = components_of(rows, full & ~smask)
            odd = sum(c.bit_count() & 1 for c in comps)
            if odd != size - 2 * k + 2:
                continue
            cu = next(i for i, c in enumerate(comps) if c >> u & 1)
            cv = next(i for i, c in enumerate(comps) if c >> v & 1)
            if cu == cv or not comps[cu].bit_count() & 1 or not comps[cv].bit_count() & 1:
                continue
            inner = len(matching_on(g.rows, smask))
            if inner < k:
                continue
            return Certificate(
                edge=(u, v),
                k=k,
                s=s,
                matching_size=inner,
                split=ComponentSplit(tuple(comps)),
                u_component=cu,
                v_component=cv,
            )
    return None


def certify_all_edges(g: Graph, k: int) -> dict[Edge, Certificate | None]:
    if not extendable(g, k):
        raise ExtendabilityError(f"graph is not {k}-extendable")
    return {e: find_certificate(g, e, k) for e in g.edges()}


def type_tag_of(c: Certificate) -> str:
    split = c.split
    t = split.odd_count
    nu = split.components[c.u_component].bit_count()
    nv = split.components[c.v_component].bit_count()
    if len(c.s) == 4 and t == 2 and nu > 1 and nv > 1:
        return TYPE1
    if len(c.s) == 5 and t == 3 and nu == 1 and nv == 1 and split.even_count == 0:
        return TYPE2
    return UNCLASSIFIED


def profile_edge(g: Graph, c: Certificate) -> EdgeProfile:
    if c.k != 2:
        raise ValueError("edge typing is only defined for k = 2")
    u, v = c.edge
    split = c.split
    return EdgeProfile(
        certificate=c,
        t=split.odd_count,
        odd_orders=tuple(sorted(comp.bit_count() for comp in split.odd_components())),
        even_count=split.even_count,
        type_tag=type_tag_of(c),
        twin_flag=(g.rows[u] & ~(1 << v)) == (g.rows[v] & ~(1 << u)),
    )


def check_property_p(g: Graph, edge, x) -> Check:
    """Five-vertex set ``x`` containing ``v`` with a 2-matching, where ``u`` lies in an odd
    component of ``g - x`` joined to ``v`` only through the edge ``uv``."""
    u, v = _require_edge(g, edge)
    xmask = to_mask(x)
    if xmask >> u & 1:
        raise GraphError("u must lie outside x")
    if xmask.bit_count() != 5 or len(matching_on(g.rows, xmask)) != 2:
        return Check(False, "condition (i): |x| = 5 with a maximum matching of size 2 fails")
    if not xmask >> v & 1:
        return Check(False, "condition (ii): v is not in x")
    cu = next(c for c in components_of(g.rows, g.all_vertices & ~xmask) if c >> u & 1)
    if not cu.bit_count() & 1:
        return Check(False, "condition (iii): the component of u is even")
    if g.rows[v] & cu != 1 << u:
        return Check(False, "condition (iv): v has a neighbor in the component of u besides u")
    return Check(True, witness=tuple(bits(cu)))
