"""Graph serialisation: graph6, DIMACS edge lists and JSON."""

from __future__ import annotations

import json

from .cayley import Graph

HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphFormatError("graph too large for graph6")


def to_graph6(graph: Graph, header: bool = False) -> str:
    """Encode in graph6: upper triangle column by column, six bits per byte, offset 63."""
    bits = []
    adj = graph.adj
    for j in range(1, graph.n):
        row = adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return (HEADER if header else "") + _encode_n(graph.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x < 64 for x in data):
        raise GraphFormatError("graph6 contains characters outside '?'..'~'")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n, pos = 0, 8
        for x in data[2:8]:
            n = n << 6 | x
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n, pos = 0, 4
        for x in data[1:4]:
            n = n << 6 | x
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {need} for n = {n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_dimacs(graph: Graph) -> str:
    lines = [f"p edge {graph.n} {graph.num_edges}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Read DIMACS (``p edge n m`` / ``e u v``, one-based) or bare ``u v`` lines (zero-based)."""
    n = None
    edges = []
    dimacs = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(("c", "#")):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if len(parts) != 4:
                    raise GraphFormatError(f"line {lineno}: malformed problem line")
                n, dimacs = int(parts[2]), True
            elif parts[0] == "e":
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            elif len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1])))
            else:
                raise GraphFormatError(f"line {lineno}: cannot parse {line!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: cannot parse {line!r}") from None
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    seen = set()
    clean = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            base = 1 if dimacs else 0
            raise GraphFormatError(f"edge ({u + base}, {v + base}) outside the vertex range")
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            clean.append(key)
    return Graph.from_edges(n, clean)


def to_json(graph: Graph, render=None) -> dict:
    out: dict = {"n": graph.n, "edges": [list(e) for e in graph.edges()]}
    if graph.labels is not None:
        render = render or getattr(graph.group, "render", str)
        out["labels"] = [render(g) for g in graph.labels]
    return out


def from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def read_graph(path: str, fmt: str) -> Graph:
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    if fmt == "edges":
        return from_edge_list(text)
    if fmt == "json":
        return from_json(text)
    raise GraphFormatError(f"unknown format {fmt!r}")
