"""Isomorph-free exhaustive generation of small graphs and graph6 catalogs.

Two generators: by vertex count (extend every (n-1)-vertex class by one
vertex with every possible neighbourhood, deduplicate by canonical form)
and by edge count (grow one edge at a time over isolated-vertex-free
graphs; needed wherever candidates have few edges but many vertices,
e.g. disjoint unions of single edges).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import (
    Graph,
    diameter,
    from_graph6,
    is_connected,
    to_graph6,
)
from .iso import canonical_form, canonical_graph

GENERATION_BOUND = 8

# non-isomorphic simple graph counts, used as generator self-checks
KNOWN_GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


class GenerationBoundError(ValueError):
    pass


@dataclass
class GraphCatalog:
    """Canonical representatives keyed by vertex count."""

    by_vertices: dict[int, list[Graph]]
    source: str
    duplicates_dropped: int = 0

    def all_graphs(self):
        for n in sorted(self.by_vertices):
            yield from self.by_vertices[n]

    def count(self) -> int:
        return sum(len(v) for v in self.by_vertices.values())


def generate(n_max: int) -> GraphCatalog:
    """All non-isomorphic simple graphs on <= n_max vertices."""
    if n_max > GENERATION_BOUND:
        raise GenerationBoundError(
            f"generation bound is {GENERATION_BOUND} vertices, asked for {n_max}"
        )
    by_vertices: dict[int, list[Graph]] = {0: [Graph.empty(0)]}
    for n in range(1, n_max + 1):
        seen: dict[bytes, Graph] = {}
        for parent in by_vertices[n - 1]:
            for mask in range(1 << (n - 1)):
                rows = [parent.rows[v] | ((mask >> v & 1) << (n - 1)) for v in range(n - 1)]
                rows.append(mask)
                child = Graph(n, tuple(rows))
                key = canonical_form(child)
                if key not in seen:
                    seen[key] = canonical_graph(child)
        by_vertices[n] = [seen[k] for k in sorted(seen)]
    return GraphCatalog(by_vertices=by_vertices, source=f"Generated({n_max})")


def _one_edge_extensions(g: Graph):
    """All ways to add one edge keeping the graph isolated-vertex-free."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                rows = list(g.rows)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                yield Graph(g.n, tuple(rows))
    for u in range(g.n):
        rows = [g.rows[v] for v in range(g.n)] + [1 << u]
        rows[u] |= 1 << g.n
        yield Graph(g.n + 1, tuple(rows))
    rows = list(g.rows) + [1 << (g.n + 1), 1 << g.n]
    yield Graph(g.n + 2, tuple(rows))


def generate_by_edges(max_edges: int) -> dict[int, list[Graph]]:
    """All non-isomorphic isolated-vertex-free graphs with <= max_edges edges.

    Complete: removing any edge (and stripping the at most two vertices it
    isolates) from an m-edge graph gives an (m-1)-edge graph, and the three
    extension moves invert exactly those removals.
    """
    levels: dict[int, list[Graph]] = {0: [Graph.empty(0)]}
    for m in range(1, max_edges + 1):
        seen: dict[bytes, Graph] = {}
        for parent in levels[m - 1]:
            for child in _one_edge_extensions(parent):
                key = canonical_form(child)
                if key not in seen:
                    seen[key] = canonical_graph(child)
        levels[m] = [seen[k] for k in sorted(seen)]
    return levels


def ingest(path: str) -> GraphCatalog:
    """Read a graph6 file, deduplicating by canonical form.

    Malformed lines raise ValueError naming the line number.
    """
    by_vertices: dict[int, list[Graph]] = {}
    seen: set[bytes] = set()
    duplicates = 0
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = from_graph6(line)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
            key = canonical_form(g)
            if key in seen:
                duplicates += 1
                continue
            seen.add(key)
            by_vertices.setdefault(g.n, []).append(canonical_graph(g))
    for n in by_vertices:
        by_vertices[n].sort(key=canonical_form)
    return GraphCatalog(
        by_vertices=by_vertices, source=f"Ingested({path})", duplicates_dropped=duplicates
    )


def write_graph6(path: str, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def filter_catalog(
    c: GraphCatalog,
    connected: bool | None = None,
    diameter_eq: int | float | None = None,
    min_edges: int | None = None,
    max_edges: int | None = None,
    edges: int | None = None,
) -> GraphCatalog:
    """Sub-catalog matching every supplied predicate field."""
    out: dict[int, list[Graph]] = {}
    for n, graphs in c.by_vertices.items():
        kept = []
        for g in graphs:
            if edges is not None and g.m != edges:
                continue
            if min_edges is not None and g.m < min_edges:
                continue
            if max_edges is not None and g.m > max_edges:
                continue
            if connected is not None and is_connected(g) != connected:
                continue
            if diameter_eq is not None:
                if g.n == 0 or diameter(g) != diameter_eq:
                    continue
            kept.append(g)
        if kept:
            out[n] = kept
    return GraphCatalog(by_vertices=out, source=f"{c.source}|filtered")
