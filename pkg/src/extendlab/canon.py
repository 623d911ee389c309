"""Canonical labeling by partition refinement and individualization.

Ordered partitions are refined by neighbor counts until equitable; each
non-discrete partition branches on the vertices of its first non-singleton
cell, and the canonical labeling is the leaf whose upper-triangle bit
string is largest.  Two vertices of one cell that are twins (same
neighborhood apart from each other) lead to isomorphic subtrees, so only
one of them is branched on.
"""

from __future__ import annotations

from .graph import Graph


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                split = True
                out.extend(groups[key] for key in sorted(groups))
            else:
                out.append(cell)
        if not split:
            return out
        cells = out


def _code(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            code = code << 1 | (rj >> order[i] & 1)
    return code


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, perm)``: ``g.relabel(perm)`` is the canonical form, ``code`` its bits."""
    rows = g.rows
    best_code = -1
    best_perm: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_perm
        cells = _refine(rows, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(rows, order)
            if code > best_code:
                best_code, best_perm = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any((rows[v] & ~(1 << w)) == (rows[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.order))])
    return best_code, best_perm


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


def canonical_key(g: Graph) -> tuple[int, int]:
    return g.order, canonical_labeling(g)[0]


def graph_from_key(order: int, code: int) -> Graph:
    """Rebuild the canonical graph from the bit string produced by :func:`canonical_labeling`."""
    rows = [0] * order
    pos = order * (order - 1) // 2
    for j in range(1, order):
        for i in range(j):
            pos -= 1
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(order, tuple(rows))
