"""Snipped subgraphs: decision procedure, certificates, and the named
certificate graphs used throughout classification.

H is a snipped subgraph of G when H is a quotient (glue vertices, drop
loops and duplicate edges) of a subgraph of G. It suffices to search for
an injective assignment of H-edges to G-edges together with a consistent
partial labelling of G-vertices by H-vertices: the label fibres recover
the quotient blocks, and restricting to a subgraph with exactly |E(H)|
edges loses nothing. A G-vertex never carries two labels; several
G-vertices may share one (that sharing is the gluing).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph, cycle_graph, complete_bipartite


@dataclass(frozen=True)
class SnippedWitness:
    """Certificate that H is a snipped subgraph of G.

    ``edge_map[i]`` is the EdgeId in G hosting H-edge i (injective);
    ``labels`` maps each endpoint of a chosen G-edge to an H-vertex.
    """

    edge_map: tuple[int, ...]
    labels: dict[int, int]


def find_snipped(h: Graph, g: Graph) -> SnippedWitness | None:
    """First snipped witness in backtracking order, or None.

    Complete search: backtracking assignment of H-edges (in an order that
    keeps already-labelled H-vertices involved) to unused G-edges in both
    orientations, candidates filtered by the current labelling first.
    """
    if any(h.rows[v] == 0 for v in range(h.n)):
        raise ValueError("pattern for find_snipped must have no isolated vertices")
    h_edges = h.edges()
    g_edges = g.edges()
    if len(h_edges) > len(g_edges):
        return None

    # H-edge order: greedily prefer edges touching already-seen H-vertices.
    order: list[int] = []
    seen = 0
    remaining = list(range(len(h_edges)))
    while remaining:
        best = None
        key = None
        for i in remaining:
            a, b = h_edges[i]
            k = ((seen >> a & 1) + (seen >> b & 1), -i)
            if key is None or k > key:
                key = k
                best = i
        order.append(best)
        a, b = h_edges[best]
        seen |= (1 << a) | (1 << b)
        remaining.remove(best)

    labels: dict[int, int] = {}
    edge_map = [-1] * len(h_edges)
    used = [False] * len(g_edges)

    def rec(pos: int) -> bool:
        if pos == len(order):
            return True
        ei = order[pos]
        a, b = h_edges[ei]
        for j, (u, v) in enumerate(g_edges):
            if used[j]:
                continue
            for x, y in ((u, v), (v, u)):
                if labels.get(x, a) != a or labels.get(y, b) != b:
                    continue
                added = []
                if x not in labels:
                    labels[x] = a
                    added.append(x)
                if y not in labels:
                    labels[y] = b
                    added.append(y)
                used[j] = True
                edge_map[ei] = j
                if rec(pos + 1):
                    return True
                used[j] = False
                edge_map[ei] = -1
                for z in added:
                    del labels[z]
        return False

    if rec(0):
        return SnippedWitness(edge_map=tuple(edge_map), labels=dict(labels))
    return None


def verify_snipped(w: SnippedWitness, h: Graph, g: Graph) -> bool:
    """Check every certificate invariant, independent of the search."""
    h_edges = h.edges()
    g_edges = g.edges()
    if len(w.edge_map) != len(h_edges):
        return False
    if len(set(w.edge_map)) != len(w.edge_map):
        return False
    for gv, hv in w.labels.items():
        if not (0 <= gv < g.n and 0 <= hv < h.n):
            return False
    for i, (a, b) in enumerate(h_edges):
        j = w.edge_map[i]
        if not 0 <= j < len(g_edges):
            return False
        u, v = g_edges[j]
        if u not in w.labels or v not in w.labels:
            return False
        if {w.labels[u], w.labels[v]} != {a, b}:
            return False
    return True


# ---------------------------------------------------------------------------
# named certificate graphs: every one has no finite dissipation number and
# forces accumulation, so a snipped hit certifies divergence


def net_graph() -> Graph:
    """Triangle with one pendant edge at each corner."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])


def bug_graph() -> Graph:
    """4-cycle with two pendant edges on one vertex."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)])


def stickman_graph() -> Graph:
    """Adjacent centres, one with three leaves, the other with two."""
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)])


def pendulum_graph() -> Graph:
    """Triangle, an edge to a new vertex, two pendants on that vertex."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)])


@dataclass(frozen=True)
class NamedGraph:
    tag: str
    graph: Graph


def named_graphs() -> list[NamedGraph]:
    """The six divergence-certificate graphs, in search priority order."""
    return [
        NamedGraph("C5", cycle_graph(5)),
        NamedGraph("Net", net_graph()),
        NamedGraph("K23", complete_bipartite(2, 3)),
        NamedGraph("Bug", bug_graph()),
        NamedGraph("Stickman", stickman_graph()),
        NamedGraph("Pendulum", pendulum_graph()),
    ]
