"""graph6 encoding for graphs with at most 62 vertices (single-byte order)."""

from __future__ import annotations

from toughore.graph import Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 token."""


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise Graph6Error("only n <= 62 is supported")
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 token; the ``>>graph6<<`` prefix is tolerated."""
    token = text.strip()
    if token.startswith(HEADER):
        token = token[len(HEADER):]
    if not token:
        raise Graph6Error("empty graph6 token")
    values = []
    for pos, ch in enumerate(token):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"character {ch!r} at offset {pos} outside '?'..'~'")
        values.append(code - 63)
    n = values[0]
    if n == 63:
        raise Graph6Error("multi-byte order (n > 62) is not supported")
    total = n * (n - 1) // 2
    expected = 1 + (total + 5) // 6
    if len(values) != expected:
        raise Graph6Error(f"length {len(values)} does not match n={n} (want {expected})")
    pad = (expected - 1) * 6 - total
    if pad and values[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    p = 0
    j, i = 1, 0
    for v in values[1:]:
        for shift in range(5, -1, -1):
            if p == total:
                break
            if v >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            p += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    try:
        return Graph(n, tuple(rows))
    except GraphError as exc:
        raise Graph6Error(str(exc)) from exc
