import random

from hypothesis import strategies as st

from extendlab.graph import Graph, build_graph


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


@st.composite
def graphs(draw, min_order=1, max_order=8, even=False):
    n = draw(st.integers(min_order, max_order))
    if even and n % 2:
        n = n + 1 if n < max_order else n - 1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def dense_graphs(draw, min_order=2, max_order=8, even=True):
    """Graphs biased toward high density so extendability questions are non-trivial."""
    n = draw(st.integers(min_order, max_order))
    if even and n % 2:
        n = n + 1 if n < max_order else n - 1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    missing = draw(st.sets(st.sampled_from(pairs), max_size=max(1, len(pairs) // 3))) if pairs else set()
    return build_graph(n, [p for p in pairs if p not in missing])
