"""Small named graphs used as fixtures and in scripts."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, build_graph


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def octahedron() -> Graph:
    """K_{2,2,2}; the antipodal pairs are (0, 1), (2, 3) and (4, 5)."""
    return build_graph(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
