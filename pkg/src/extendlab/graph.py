"""Immutable bitset graphs and the structural queries everything else builds on.

Vertices are dense indices ``0..n-1``; a vertex set is an ``int`` bitmask, so
``mask >> v & 1`` tests membership.  Public functions also accept any iterable
of vertex indices wherever a vertex set is expected.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

MAX_ORDER = 64

VertexSet = int
Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph construction or an invalid query."""


class Check:
    """Boolean outcome with a diagnostic; truthiness follows ``ok``."""

    __slots__ = ("ok", "reason", "witness")

    def __init__(self, ok: bool, reason: str | None = None, witness=None):
        self.ok = ok
        self.reason = reason
        self.witness = witness

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"Check(ok={self.ok!r}, reason={self.reason!r}, witness={self.witness!r})"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: VertexSet | Iterable[int]) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbor bitmask of ``v``."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise GraphError(f"order {self.order} outside 1..{MAX_ORDER}")
        if len(self.rows) != self.order:
            raise GraphError("row count does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond the vertex range")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for w in bits(row):
                if not self.rows[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @property
    def all_vertices(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and 0 <= v < self.order and bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not in graph")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def complement(self) -> Graph:
        full = self.all_vertices
        return Graph(self.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph whose vertex ``i`` is this graph's vertex ``perm[i]``."""
        where = [0] * self.order
        for i, old in enumerate(perm):
            where[old] = i
        rows = [0] * self.order
        for i, old in enumerate(perm):
            r = 0
            for w in bits(self.rows[old]):
                r |= 1 << where[w]
            rows[i] = r
        return Graph(self.order, tuple(rows))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph on ``n`` vertices; duplicate edges are merged."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 1..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an index outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(G[s], back)`` where ``back[i]`` is the original index of vertex ``i``."""
    mask = to_mask(s) & g.all_vertices
    if not mask:
        raise GraphError("induced subgraph of an empty vertex set")
    back = list(bits(mask))
    where = {old: i for i, old in enumerate(back)}
    rows = []
    for old in back:
        r = 0
        for w in bits(g.rows[old] & mask):
            r |= 1 << where[w]
        rows.append(r)
    return Graph(len(back), tuple(rows)), back


def components_of(rows: tuple[int, ...] | list[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, ordered by least vertex."""
    comps = []
    while mask:
        seen = mask & -mask
        frontier = seen
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= rows[v]
            frontier = reach & mask & ~seen
            seen |= frontier
        comps.append(seen)
        mask &= ~seen
    return comps


def is_connected_mask(rows: tuple[int, ...] | list[int], mask: int) -> bool:
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= rows[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g.rows, g.all_vertices)


@dataclass(frozen=True)
class ComponentSplit:
    """Components (as bitmasks, ordered by least vertex) of a graph after deletions."""

    components: tuple[int, ...]

    @property
    def odd_count(self) -> int:
        return sum(c.bit_count() & 1 for c in self.components)

    @property
    def even_count(self) -> int:
        return len(self.components) - self.odd_count

    def odd_components(self) -> list[int]:
        return [c for c in self.components if c.bit_count() & 1]

    def index_of(self, v: int) -> int:
        for i, c in enumerate(self.components):
            if c >> v & 1:
                return i
        raise GraphError(f"vertex {v} not in any component")

    def vertex_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.components]


def component_split(
    g: Graph,
    removed: VertexSet | Iterable[int] = 0,
    removed_edge: tuple[int, int] | None = None,
) -> ComponentSplit:
    """Components of ``g`` minus the ``removed`` vertices and then minus ``removed_edge``."""
    removed = to_mask(removed)
    if removed & ~g.all_vertices:
        raise GraphError("removed set leaves the vertex range")
    survivors = g.all_vertices & ~removed
    if not survivors:
        raise GraphError("cannot remove every vertex")
    rows = g.rows
    if removed_edge is not None:
        u, v = removed_edge
        if not g.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not in graph")
        if (removed >> u | removed >> v) & 1:
            raise GraphError("removed edge has an endpoint inside the removed set")
        rows = list(rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return ComponentSplit(tuple(components_of(rows, survivors)))


def is_l_connected(g: Graph, l: int) -> bool:
    """True iff ``g`` has more than ``l`` vertices and no vertex cut smaller than ``l``.

    Exhaustive over all vertex subsets of size below ``l``; meant for small orders.
    """
    if not 1 <= l < g.order:
        raise GraphError(f"connectivity level {l} outside 1..{g.order - 1}")
    full = g.all_vertices
    for size in range(l):
        for cut in combinations(range(g.order), size):
            if not is_connected_mask(g.rows, full & ~to_mask(cut)):
                return False
    return True


def find_claw(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    """Lexicographically first ``(center, leaves)`` of an induced K_{1,3}, if any."""
    rows = g.rows
    for c in range(g.order):
        nbrs = g.neighbors(c)
        if len(nbrs) < 3:
            continue
        for a, b, d in combinations(nbrs, 3):
            if not (rows[a] >> b & 1 or rows[a] >> d & 1 or rows[b] >> d & 1):
                return c, (a, b, d)
    return None


def is_claw_free(g: Graph) -> Check:
    claw = find_claw(g)
    if claw is None:
        return Check(True)
    return Check(False, f"claw centered at {claw[0]}", claw)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.order
    for start in range(g.order):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in bits(g.rows[v]):
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True
