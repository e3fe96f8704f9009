"""Canonical forms, isomorphism testing, and subgraph search with witnesses.

Canonical labelling: equitable-partition refinement followed by
individualise-and-refine search for the ordering that maximises the
adjacency bit string (column-major upper triangle, the graph6 bit order).
Disconnected graphs are canonicalised per component and reassembled, which
keeps sparse many-vertex graphs (collections of tiny components) cheap.
Adequate well past the 10-12 vertex graphs that dominate this project.

Subgraph search: plain backtracking over an order that keeps the pattern
connected, with degree and adjacency-mask pruning. Deterministic: fixed
pattern order, host candidates tried in ascending vertex index, so the
returned witness is the first in that backtracking order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph_core import Graph, connected_components, to_graph6


class IsoLimitError(ValueError):
    """Raised when canonicalisation is asked for an unreasonably large graph."""


CANONICAL_MAX_VERTICES = 4096  # sanity bound only; cost grows with structure, not n


def _refine(rows: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to equitability.

    Splits every cell by the multiset of neighbour counts into each cell,
    keyed by the (label-invariant) signature, until stable. Cell order is a
    pure function of the signatures, so it is isomorphism-invariant.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    new_cells.append(buckets[sig])
        cells = new_cells
        if not changed:
            return cells


def _columns_for_order(rows: list[int], order: list[int]) -> tuple[int, ...]:
    """Column codes of the reordered adjacency matrix, graph6 bit order.

    Column j encodes adjacency of order[j] to order[0..j-1], MSB first.
    """
    cols = []
    for j in range(1, len(order)):
        rj = rows[order[j]]
        code = 0
        for i in range(j):
            code = code << 1 | (rj >> order[i] & 1)
        cols.append(code)
    return tuple(cols)


def _canonical_order_connected(rows: list[int], n: int) -> list[int]:
    """Vertex order maximising the adjacency bit string, via
    individualise-and-refine over the equitable partition."""
    if n <= 1:
        return list(range(n))
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    cells = _refine(rows, [by_degree[d] for d in sorted(by_degree)])

    best: dict = {"cols": None, "order": None}

    def rec(cells: list[list[int]]) -> None:
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    rest = [u for u in cell if u != v]
                    rec(_refine(rows, cells[:i] + [[v], rest] + cells[i + 1 :]))
                return
        order = [c[0] for c in cells]
        cols = _columns_for_order(rows, order)
        if best["cols"] is None or cols > best["cols"]:
            best["cols"] = cols
            best["order"] = order

    rec(cells)
    return best["order"]


def _component_subrows(g: Graph, verts: list[int]) -> list[int]:
    remap = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        acc = 0
        row = g.rows[v]
        while row:
            w = (row & -row).bit_length() - 1
            acc |= 1 << remap[w]
            row &= row - 1
        rows.append(acc)
    return rows


def canonical_graph(g: Graph) -> Graph:
    """A canonically labelled copy of g: equal for isomorphic inputs."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise IsoLimitError(f"canonical form of a {g.n}-vertex graph is not supported")
    pieces = []
    for verts in connected_components(g):
        sub = _component_subrows(g, verts)
        order = _canonical_order_connected(sub, len(verts))
        cols = _columns_for_order(sub, order)
        pieces.append((len(verts), cols, sub, order))
    pieces.sort(key=lambda p: (p[0], p[1]))
    rows: list[int] = []
    offset = 0
    for size, _cols, sub, order in pieces:
        pos = {order[i]: i for i in range(size)}
        for i in range(size):
            acc = 0
            row = sub[order[i]]
            while row:
                w = (row & -row).bit_length() - 1
                acc |= 1 << (offset + pos[w])
                row &= row - 1
            rows.append(acc)
        offset += size
    return Graph(g.n, tuple(rows))


@lru_cache(maxsize=200_000)
def _canonical_form_cached(n: int, rows: tuple[int, ...]) -> bytes:
    return to_graph6(canonical_graph(Graph(n, rows))).encode("ascii")


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string (graph6 of the canonical copy)."""
    return _canonical_form_cached(g.n, g.rows)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n <= 16:
        return canonical_form(g) == canonical_form(h)
    w = find_subgraph(h, g, induced=True)
    return w is not None


# ---------------------------------------------------------------------------
# subgraph search


@dataclass(frozen=True)
class SubgraphWitness:
    """Injection V(H) -> V(G): vertex_map[i] is the image of H-vertex i."""

    vertex_map: tuple[int, ...]
    induced: bool


def verify_subgraph(w: SubgraphWitness, h: Graph, g: Graph) -> bool:
    """Re-validate a witness straight from the definition."""
    vm = w.vertex_map
    if len(vm) != h.n or len(set(vm)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in vm):
        return False
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if h.has_edge(u, v) and not g.has_edge(vm[u], vm[v]):
                return False
            if w.induced and not h.has_edge(u, v) and g.has_edge(vm[u], vm[v]):
                return False
    return True


def _matching_order(h: Graph) -> list[int]:
    """Pattern vertex order: most placed-neighbours first, then degree.

    Keeps each component contiguous so adjacency constraints bite early.
    Deterministic (ties broken by vertex index).
    """
    order = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        best = None
        key = None
        for v in remaining:
            k = ((h.rows[v] & placed).bit_count(), h.degree(v), -v)
            if key is None or k > key:
                key = k
                best = v
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def find_subgraph(h: Graph, g: Graph, induced: bool = False) -> SubgraphWitness | None:
    """First witness of H in G (induced or not), or None.

    Handles pattern graphs with isolated vertices; those simply consume a
    spare host vertex (non-adjacent to all other images when induced).
    """
    if h.n > g.n or h.m > g.m:
        return None
    order = _matching_order(h)
    gdeg = g.degrees()
    hdeg = h.degrees()
    base = []
    for v in range(h.n):
        mask = 0
        for u in range(g.n):
            if gdeg[u] >= hdeg[v]:
                mask |= 1 << u
        base.append(mask)
    assign = [-1] * h.n
    g_full = (1 << g.n) - 1

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        cand = base[v] & ~used
        row = h.rows[v]
        nonrow = ~row & ((1 << h.n) - 1) & ~(1 << v)
        for w_ in range(h.n):
            if assign[w_] < 0:
                continue
            if row >> w_ & 1:
                cand &= g.rows[assign[w_]]
            elif induced and nonrow >> w_ & 1:
                cand &= g_full & ~g.rows[assign[w_]]
        while cand:
            u = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            assign[v] = u
            if rec(i + 1, used | 1 << u):
                return True
            assign[v] = -1
        return False

    if rec(0, 0):
        return SubgraphWitness(vertex_map=tuple(assign), induced=induced)
    return None
