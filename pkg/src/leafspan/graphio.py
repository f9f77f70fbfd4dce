"""graph6 and edge-list serialization.

graph6 encodes the order followed by the upper triangle of the adjacency
matrix in column-major bit order, six bits per printable character offset
by 63. Strict parsing: exact length, characters in [63, 126], zero padding
bits required.
"""
from __future__ import annotations

from .graph import Graph, from_edges


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6 encoding")


def _decode_order(s: str) -> tuple[int, int]:
    """Return (n, number of header characters consumed)."""
    if not s:
        raise Graph6Error("empty graph6 string")
    c0 = ord(s[0])
    if c0 != 126:
        if not 63 <= c0 <= 126:
            raise Graph6Error(f"invalid graph6 character {s[0]!r}")
        return c0 - 63, 1
    if len(s) >= 2 and s[1] == "~":
        raise Graph6Error("graph6 orders above 258047 unsupported")
    if len(s) < 4:
        raise Graph6Error("truncated graph6 order header")
    n = 0
    for ch in s[1:4]:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        n = (n << 6) | (c - 63)
    return n, 4


def format_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string."""
    n = g.n
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def parse_graph6(s: str) -> Graph:
    """Decode a graph6 string; inverse of format_graph6."""
    s = s.strip()
    n, consumed = _decode_order(s)
    if n < 1:
        raise Graph6Error(f"graph6 order {n} out of range")
    body = s[consumed:]
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise Graph6Error(
            f"graph6 body has {len(body)} characters, expected {expect} for order {n}"
        )
    bits = 0
    for ch in body:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        bits = (bits << 6) | (c - 63)
    pad = 6 * expect - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in graph6 body")
    bits >>= pad
    adj = [0] * n
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


class EdgeListError(ValueError):
    """Malformed edge list input."""


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse "u v" lines, 0-indexed; blank lines and '#' comments ignored.

    The order defaults to one past the largest vertex index mentioned.
    """
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: negative vertex index")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at {u}")
        top = max(top, u, v)
        edges.append((u, v))
    if not edges:
        raise EdgeListError("edge list contains no edges")
    order = n if n is not None else top + 1
    if top >= order:
        raise EdgeListError(f"vertex {top} out of range for declared order {order}")
    return from_edges(order, edges)


def format_edge_list(g: Graph) -> str:
    """One "u v" line per edge, lexicographic order."""
    return "\n".join(f"{u} {v}" for u, v in g.edges()) + "\n"
