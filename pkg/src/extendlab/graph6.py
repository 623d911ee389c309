"""Short-form graph6 codec (orders up to 62)."""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_SHORT_ORDER = 62
HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def emit_graph6(g: Graph) -> str:
    n = g.order
    if n > MAX_SHORT_ORDER:
        raise Graph6Error(f"order {n} needs the long graph6 form")
    out = [chr(63 + n)]
    acc = 0
    width = 0
    rows = g.rows
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (rows[i] >> j & 1)
            width += 1
            if width == 6:
                out.append(chr(63 + acc))
                acc = width = 0
    if width:
        out.append(chr(63 + (acc << (6 - width))))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 line")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"byte outside the graph6 range in {text!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("long-form graph6 (order > 62) is not supported")
    if n == 0:
        raise Graph6Error("graph6 header encodes an empty graph")
    body = codes[1:]
    expected = _body_length(n)
    if len(body) != expected:
        kind = "trailing garbage" if len(body) > expected else "truncated body"
        raise Graph6Error(f"{kind}: expected {expected} body bytes, got {len(body)}")
    total = n * (n - 1) // 2
    pad = expected * 6 - total
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if body[pos // 6] >> (5 - pos % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))
