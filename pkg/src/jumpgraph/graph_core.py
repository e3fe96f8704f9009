"""Simple undirected graphs and the jump/line/complement operators.

Graphs are immutable: a vertex count plus one adjacency bitmask per vertex.
All operators are pure functions. The jump graph J(G) has one vertex per
edge of G, two of them adjacent exactly when the edges share no endpoint;
it equals the complement of the line graph L(G) on the same edge ordering.

Edge ordering is fixed: edges sorted lexicographically by (min endpoint,
max endpoint). Vertex i of J(G) or L(G) always means the i-th edge of G
under that ordering, which makes every operator deterministic.
"""

from __future__ import annotations

import math
import os
from itertools import combinations

DEFAULT_VERTEX_LIMIT = 64

INFINITE = math.inf


class VertexLimitError(ValueError):
    """Raised when an operation would create a graph above the vertex limit."""


def vertex_limit() -> int:
    """Hard cap on vertex count, overridable via JUMPGRAPH_VERTEX_LIMIT."""
    return int(os.environ.get("JUMPGRAPH_VERTEX_LIMIT", DEFAULT_VERTEX_LIMIT))


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``rows[v]`` is the neighbourhood of v as a bitmask. No self loops,
    symmetric by construction. Equality and hashing are on the labelled
    graph (identical, not merely isomorphic).
    """

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, rows: tuple[int, ...]):
        if n > vertex_limit():
            raise VertexLimitError(
                f"graph on {n} vertices exceeds the vertex limit {vertex_limit()}"
            )
        self.n = n
        self.rows = rows
        self.m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return self.m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """Edges in the fixed lexicographic order; index = EdgeId."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                out.append((u, v))
                row &= row - 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# operators


def jump(g: Graph) -> Graph:
    """Jump graph: vertices are edges of g, adjacent iff not incident."""
    edges = g.edges()
    m = len(edges)
    masks = [(1 << u) | (1 << v) for u, v in edges]
    rows = [0] * m
    for i, j in combinations(range(m), 2):
        if not masks[i] & masks[j]:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(m, tuple(rows))


def line_graph(g: Graph) -> Graph:
    """Line graph: vertices are edges of g, adjacent iff incident."""
    edges = g.edges()
    m = len(edges)
    masks = [(1 << u) | (1 << v) for u, v in edges]
    rows = [0] * m
    for i, j in combinations(range(m), 2):
        if masks[i] & masks[j]:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(m, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple((full ^ g.rows[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows)


def strip_isolated(g: Graph) -> Graph:
    """Drop degree-0 vertices, relabelling the rest in order.

    jump(strip_isolated(g)) is identical (not just isomorphic) to jump(g):
    the surviving edges keep their relative lexicographic order.
    """
    keep = [v for v in range(g.n) if g.rows[v]]
    remap = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        row = g.rows[v]
        acc = 0
        while row:
            w = (row & -row).bit_length() - 1
            acc |= 1 << remap[w]
            row &= row - 1
        rows[remap[v]] = acc
    return Graph(len(keep), tuple(rows))


def edge_count_of_jump(g: Graph) -> int:
    """|E(J(g))| by the closed form C(m,2) - sum_v C(deg v, 2)."""
    m = g.edge_count
    incident_pairs = sum(d * (d - 1) // 2 for d in g.degrees())
    return m * (m - 1) // 2 - incident_pairs


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        row = frontier
        while row:
            v = (row & -row).bit_length() - 1
            nxt |= g.rows[v]
            row &= row - 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, each ascending, ordered by least vertex."""
    comps = []
    unseen = (1 << g.n) - 1
    while unseen:
        s = (unseen & -unseen).bit_length() - 1
        seen = 1 << s
        frontier = seen
        while frontier:
            nxt = 0
            row = frontier
            while row:
                v = (row & -row).bit_length() - 1
                nxt |= g.rows[v]
                row &= row - 1
            frontier = nxt & ~seen
            seen |= frontier
        comps.append([v for v in range(g.n) if seen >> v & 1])
        unseen &= ~seen
    return comps


def diameter(g: Graph) -> int | float:
    """Longest shortest path; INFINITE when disconnected. BFS per vertex."""
    if g.n == 0:
        raise ValueError("diameter of the 0-vertex graph is undefined")
    full = (1 << g.n) - 1
    best = 0
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while True:
            nxt = 0
            row = frontier
            while row:
                v = (row & -row).bit_length() - 1
                nxt |= g.rows[v]
                row &= row - 1
            nxt &= ~seen
            if not nxt:
                break
            dist += 1
            seen |= nxt
            frontier = nxt
        if seen != full:
            return INFINITE
        if dist > best:
            best = dist
    return best


# ---------------------------------------------------------------------------
# common constructions


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def star_graph(n: int) -> Graph:
    """Star S_n: one centre (vertex 0) with n pendant edges."""
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# graph6 text format (bit-exact per the published format)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = chr(63 + n)
    elif n <= 258047:
        header = "~" + chr(63 + (n >> 12 & 63)) + chr(63 + (n >> 6 & 63)) + chr(63 + (n & 63))
    else:
        raise ValueError(f"graph6 cannot encode {n} vertices")
    bits = []
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return header + "".join(chars)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise ValueError("unsupported graph6 size header")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    if any(bits[need:]):
        raise ValueError("nonzero padding bits in graph6 string")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge-list text format: header line "n <vertex_count>" then "u v" lines


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"edge-list header must be 'n <vertex_count>', got {lines[0]!r}")
    n = int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse one graph from text in graph6 or edge-list form.

    Auto-detection: a first line starting with the token 'n' is an
    edge list (graph6 strings never contain whitespace).
    """
    if fmt == "g6":
        return from_graph6(text)
    if fmt == "edges":
        return from_edge_list(text)
    if fmt != "auto":
        raise ValueError(f"unknown format {fmt!r}")
    stripped = text.strip()
    first = stripped.splitlines()[0].split() if stripped else []
    if first and first[0] == "n":
        return from_edge_list(text)
    return from_graph6(stripped)
