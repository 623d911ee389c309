"""Maximum matching on general graphs and k-matching enumeration.

The maximum matching is Edmonds' augmenting-path search with blossom
contraction, run on the subgraph induced by a vertex mask so that callers
can ask "does G - V(M) have a perfect matching" without building new graphs.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .graph import Edge, Graph, GraphError, VertexSet, bits, components_of, to_mask


class InvalidMatching(GraphError):
    pass


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges, each stored as ``(u, v)`` with ``u < v``, sorted."""

    edges: tuple[Edge, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @property
    def vertices(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= 1 << u | 1 << v
        return mask

    def as_lists(self) -> list[list[int]]:
        return [[u, v] for u, v in self.edges]


def make_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> Matching:
    """Validate ``edges`` against ``g`` and normalize them into a :class:`Matching`."""
    norm = sorted((min(u, v), max(u, v)) for u, v in edges)
    used = 0
    for u, v in norm:
        if not g.has_edge(u, v):
            raise InvalidMatching(f"edge ({u}, {v}) not in graph")
        if (used >> u | used >> v) & 1:
            raise InvalidMatching(f"edge ({u}, {v}) overlaps another matching edge")
        used |= 1 << u | 1 << v
    return Matching(tuple(norm))


def _blossom(adj: list[list[int]]) -> list[int]:
    """Maximum matching of a graph given by local adjacency lists; returns mates."""
    n = len(adj)
    match = [-1] * n
    # greedy start; blossom search only has to repair what is left
    for v in range(n):
        if match[v] < 0:
            for w in adj[v]:
                if match[w] < 0:
                    match[v], match[w] = w, v
                    break

    for root in range(n):
        if match[root] >= 0:
            continue
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        end = -1
        while queue and end < 0:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        end = to
                        break
                    used[match[to]] = True
                    queue.append(match[to])
        v = end
        while v >= 0:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv
    return match


def _local(rows, mask: int) -> tuple[list[int], list[list[int]]]:
    back = list(bits(mask))
    where = {old: i for i, old in enumerate(back)}
    adj = [[where[w] for w in bits(rows[old] & mask)] for old in back]
    return back, adj


def matching_on(rows, mask: int) -> list[Edge]:
    """Edges of a maximum matching of the subgraph induced by ``mask``."""
    back, adj = _local(rows, mask)
    mate = _blossom(adj)
    return [(back[i], back[j]) for i, j in enumerate(mate) if i < j]


def has_perfect_matching_on(rows, mask: int) -> bool:
    if mask.bit_count() & 1:
        return False
    if not mask:
        return True
    # odd components rule a perfect matching out without running the search
    for comp in components_of(rows, mask):
        if comp.bit_count() & 1:
            return False
    back, adj = _local(rows, mask)
    return all(m >= 0 for m in _blossom(adj))


def maximum_matching(g: Graph) -> Matching:
    return Matching(tuple(sorted(matching_on(g.rows, g.all_vertices))))


def has_perfect_matching(g: Graph) -> bool:
    return has_perfect_matching_on(g.rows, g.all_vertices)


def max_matching_size_in(g: Graph, x: VertexSet | Iterable[int]) -> int:
    mask = to_mask(x) & g.all_vertices
    if not mask:
        raise GraphError("matching of an empty vertex set")
    return len(matching_on(g.rows, mask))


def extends_to_perfect(g: Graph, m: Matching | Iterable[tuple[int, int]]) -> bool:
    if not isinstance(m, Matching):
        m = make_matching(g, m)
    else:
        make_matching(g, m.edges)
    return has_perfect_matching_on(g.rows, g.all_vertices & ~m.vertices)


def matchings_upto(edges: list[Edge], k: int, exact: bool = True) -> Iterator[tuple[Edge, ...]]:
    """Disjoint edge selections from ``edges`` in lexicographic order of sorted lists.

    With ``exact`` only selections of size ``k`` are produced; otherwise every
    nonempty selection of size at most ``k``.
    """
    m = len(edges)
    chosen: list[Edge] = []

    def walk(start: int, used: int) -> Iterator[tuple[Edge, ...]]:
        if chosen and (not exact or len(chosen) == k):
            yield tuple(chosen)
        if len(chosen) == k:
            return
        need = k - len(chosen)
        for i in range(start, m if not exact else m - need + 1):
            u, v = edges[i]
            if (used >> u | used >> v) & 1:
                continue
            chosen.append((u, v))
            yield from walk(i + 1, used | 1 << u | 1 << v)
            chosen.pop()

    if k >= 1:
        yield from walk(0, 0)


def enumerate_k_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """Every matching of exactly ``k`` edges, lexicographically by sorted edge list."""
    if k < 1:
        raise GraphError("k must be at least 1")
    for sel in matchings_upto(g.edges(), k):
        yield Matching(sel)
