"""Definition-literal reference implementations for differential testing.

Nothing here touches the bitset helpers, the blossom search or any pruning;
each function works from the plain edge list and follows the textbook
definition, so it is exponential and only meant for small orders.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial, gcd

from .graph import Graph


def _adjacency(g: Graph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(g.order)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _components(adj: dict[int, set[int]], keep: set[int]) -> list[set[int]]:
    left = set(keep)
    comps = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in left and y not in comp:
                    comp.add(y)
                    stack.append(y)
        left -= comp
        comps.append(comp)
    return comps


def _drop_edge(adj: dict[int, set[int]], u: int, v: int) -> dict[int, set[int]]:
    out = {x: set(ys) for x, ys in adj.items()}
    out[u].discard(v)
    out[v].discard(u)
    return out


def brute_matching_size(adj: dict[int, set[int]], keep: set[int]) -> int:
    """Largest matching inside ``keep`` by exhaustive branching on the least vertex."""
    if len(keep) < 2:
        return 0
    x = min(keep)
    rest = keep - {x}
    best = brute_matching_size(adj, rest)
    for y in adj[x] & rest:
        best = max(best, 1 + brute_matching_size(adj, rest - {y}))
    return best


def max_matching_size(g: Graph) -> int:
    return brute_matching_size(_adjacency(g), set(range(g.order)))


def has_perfect_matching(g: Graph) -> bool:
    return g.order % 2 == 0 and 2 * max_matching_size(g) == g.order


def is_connected(g: Graph) -> bool:
    return len(_components(_adjacency(g), set(range(g.order)))) == 1


def vertex_connectivity(g: Graph) -> int:
    """Largest ``l < n`` with no vertex cut of size below ``l`` (``n - 1`` for K_n)."""
    adj = _adjacency(g)
    everything = set(range(g.order))
    for size in range(g.order - 1):
        for cut in combinations(range(g.order), size):
            if len(_components(adj, everything - set(cut))) > 1:
                return size
    return g.order - 1


def is_claw_free(g: Graph) -> bool:
    adj = _adjacency(g)
    for c in range(g.order):
        for a, b, d in combinations(sorted(adj[c]), 3):
            if b not in adj[a] and d not in adj[a] and d not in adj[b]:
                return False
    return True


def _extendable(adj: dict[int, set[int]], n: int, k: int) -> bool:
    everything = set(range(n))
    if len(_components(adj, everything)) != 1:
        return False
    if 2 * brute_matching_size(adj, everything) != n:
        return False
    edges = sorted((u, v) for u in adj for v in adj[u] if u < v)
    for sel in combinations(edges, k):
        covered = [x for e in sel for x in e]
        if len(set(covered)) != 2 * k:
            continue
        rest = everything - set(covered)
        if 2 * brute_matching_size(adj, rest) != len(rest):
            return False
    return True


def is_k_extendable(g: Graph, k: int) -> bool:
    """Connected, has a perfect matching, and every k-matching extends to one."""
    return _extendable(_adjacency(g), g.order, k)


def is_minimal_k_extendable(g: Graph, k: int) -> bool:
    adj = _adjacency(g)
    if not _extendable(adj, g.order, k):
        return False
    return not any(_extendable(_drop_edge(adj, u, v), g.order, k) for u, v in g.edges())


def certificate_holds(g: Graph, edge: tuple[int, int], k: int, s: set[int]) -> bool:
    u, v = edge
    adj = _adjacency(g)
    if brute_matching_size(adj, set(s)) < k:
        return False
    comps = _components(_drop_edge(adj, u, v), set(range(g.order)) - set(s))
    odd = [c for c in comps if len(c) % 2]
    if len(odd) != len(s) - 2 * k + 2:
        return False
    cu = next(c for c in comps if u in c)
    cv = next(c for c in comps if v in c)
    return cu is not cv and len(cu) % 2 == 1 and len(cv) % 2 == 1


def smallest_certificate(g: Graph, edge: tuple[int, int], k: int) -> tuple[int, ...] | None:
    """Scan every subset of the other vertices by size; first hit in lexicographic order."""
    others = [x for x in range(g.order) if x not in edge]
    for size in range(len(others) + 1):
        for s in combinations(others, size):
            if certificate_holds(g, edge, k, set(s)):
                return s
    return None


def canonical_code(g: Graph) -> tuple[int, ...]:
    """Lexicographically least sorted edge list over all n! relabelings."""
    edges = g.edges()
    best = None
    for perm in permutations(range(g.order)):
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or code < best:
            best = code
    return best


def labeled_class_counts(n: int) -> tuple[int, int]:
    """(all, connected) isomorphism class counts by grouping every labeled graph."""
    pairs = list(combinations(range(n), 2))
    classes: dict[tuple, bool] = {}
    for bitsel in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if bitsel >> i & 1]
        g = Graph(n, _rows(n, edges))
        code = canonical_code(g)
        if code not in classes:
            classes[code] = is_connected(g)
    return len(classes), sum(classes.values())


def _rows(n: int, edges) -> tuple[int, ...]:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return tuple(rows)


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def graph_count(n: int) -> int:
    """Unlabeled graphs on ``n`` vertices by orbit counting over permutation cycle types."""
    total = Fraction(0)
    for cycles in _partitions(n):
        mult = Counter(cycles)
        # number of permutations with this cycle type
        size = factorial(n)
        for length, count in mult.items():
            size //= length**count * factorial(count)
        # cycles induced on unordered vertex pairs
        pair_cycles = 0
        for length, count in mult.items():
            pair_cycles += count * (length // 2) + length * count * (count - 1) // 2
        lens = sorted(mult.elements())
        for i in range(len(lens)):
            for j in range(i + 1, len(lens)):
                if lens[i] != lens[j]:
                    pair_cycles += gcd(lens[i], lens[j])
        total += size * 2**pair_cycles
    return int(total / factorial(n))


def connected_graph_counts(limit: int) -> list[int]:
    """Connected counts ``c[1..limit]`` from total counts by inverting the Euler transform."""
    a = [1] + [graph_count(n) for n in range(1, limit + 1)]
    c = [0] * (limit + 1)
    for n in range(1, limit + 1):
        # a(x) = prod (1 - x^i)^(-c_i); every factor with i < n is already known
        poly = [1] + [0] * n
        for i in range(1, n):
            factor = [comb(c[i] + j - 1, j) for j in range(n // i + 1)]
            poly = [
                sum(poly[d - i * j] * factor[j] for j in range(d // i + 1))
                for d in range(n + 1)
            ]
        c[n] = a[n] - poly[n]
    return c[1:]
