"""Backwards jump: line-graph recognition by the nine forbidden induced
subgraphs, preimage reconstruction, and the dissipation tree.

A graph is a line graph exactly when none of the nine minimal forbidden
graphs occurs as an induced subgraph; a graph is a jump graph of something
exactly when its complement is a line graph, i.e. when none of the nine
complements occurs induced. Preimage search is enumeration-based: every
candidate has exactly |V(g)| edges and no isolated vertices, so the
edge-count-bounded generator covers the whole space.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .graph_core import (
    Graph,
    complement,
    complete_graph,
    jump,
    star_graph,
    strip_isolated,
    to_graph6,
)
from .catalog import generate_by_edges
from .classify import UnresolvedError, classify
from .iso import SubgraphWitness, canonical_form, find_subgraph, is_isomorphic


class SearchBoundError(ValueError):
    pass


def _k4_minus_edge_plus_apex() -> Graph:
    # K4 minus one edge, plus a vertex joined to the two nonadjacent corners
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2), (0, 4), (4, 3)])


def _k4_minus_edge_two_pendants() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2), (0, 4), (3, 5)])


def _k4_minus_edge_plus_path() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2), (0, 4), (4, 5), (5, 3)])


def _twin_triangles_bridged() -> Graph:
    # two triangles 0-1-4 and 1-2-5 ... transcription of the 9-edge ladder-like graph
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (3, 1), (1, 4), (4, 2), (2, 5)]
    )


def _k4_with_ear_and_tail() -> Graph:
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3), (1, 4), (4, 2), (4, 5)]
    )


def _dense_eleven_edge() -> Graph:
    return Graph.from_edges(
        6,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 4), (4, 2), (3, 1), (1, 5), (1, 4)],
    )


def _k5_minus_edge() -> Graph:
    g = complete_graph(5)
    rows = list(g.rows)
    rows[3] &= ~(1 << 4)
    rows[4] &= ~(1 << 3)
    return Graph(5, tuple(rows))


def _wheel_5() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)]
    return Graph.from_edges(6, edges)


_LINE_FORBIDDEN: list[Graph] | None = None


def line_forbidden() -> list[Graph]:
    """The nine minimal graphs no line graph contains induced; [0] is the claw."""
    global _LINE_FORBIDDEN
    if _LINE_FORBIDDEN is None:
        _LINE_FORBIDDEN = [
            star_graph(3),
            _k4_minus_edge_plus_apex(),
            _k4_minus_edge_two_pendants(),
            _k4_minus_edge_plus_path(),
            _twin_triangles_bridged(),
            _k4_with_ear_and_tail(),
            _dense_eleven_edge(),
            _k5_minus_edge(),
            _wheel_5(),
        ]
    return _LINE_FORBIDDEN


_JUMP_FORBIDDEN: list[Graph] | None = None


def jump_forbidden() -> list[Graph]:
    """Complements of the nine: no jump graph contains any of them induced."""
    global _JUMP_FORBIDDEN
    if _JUMP_FORBIDDEN is None:
        _JUMP_FORBIDDEN = [complement(g) for g in line_forbidden()]
    return _JUMP_FORBIDDEN


@dataclass(frozen=True)
class ForbiddenHit:
    index: int
    witness: SubgraphWitness


def line_graph_obstruction(g: Graph) -> ForbiddenHit | None:
    """First forbidden induced subgraph found in g, or None if g is a line graph."""
    for i, f in enumerate(line_forbidden()):
        if f.n > g.n or f.m > g.m:
            continue
        w = find_subgraph(f, g, induced=True)
        if w is not None:
            return ForbiddenHit(index=i, witness=w)
    return None


def is_line_graph(g: Graph) -> bool:
    return line_graph_obstruction(g) is None


def has_jump_preimage(g: Graph) -> bool:
    """True iff g = J(H) for some H: the complement must be a line graph."""
    return is_line_graph(complement(g))


def jump_preimages(g: Graph, search_bound: int = 8) -> list[Graph]:
    """All H (no isolated vertices, up to isomorphism) with J(H) isomorphic to g.

    Candidates have exactly |V(g)| edges, hence at most 2|V(g)| vertices.
    Apart from the triangle/3-star ambiguity, a connected preimage is unique.
    """
    m = g.vertex_count
    if m > search_bound:
        raise SearchBoundError(f"preimage search needs {m} edges, bound is {search_bound}")
    out = []
    for h in generate_by_edges(m)[m]:
        jh = jump(h)
        if jh.n == g.n and jh.m == g.m and is_isomorphic(jh, g):
            out.append(h)
    return out


# ---------------------------------------------------------------------------
# dissipation tree


@dataclass(frozen=True)
class TreeNode:
    graph: Graph
    level: int
    parent: bytes | None  # canonical form of the jump target


@dataclass
class DissipationTree:
    """Levelled DAG of every dissipating graph up to an edge bound.

    Arrows point along the jump operation (isolated vertices stripped).
    Level 0 is the empty graph; level 1 is the isolated-vertices node,
    represented by the 1-vertex graph since any number behaves alike.
    """

    nodes: dict[bytes, TreeNode]
    max_edges: int

    def levels(self) -> dict[int, list[bytes]]:
        out: dict[int, list[bytes]] = {}
        for key, node in self.nodes.items():
            out.setdefault(node.level, []).append(key)
        for lvl in out:
            out[lvl].sort()
        return out


EMPTY_KEY = canonical_form(Graph.empty(0))
ISOLATED_KEY = canonical_form(Graph.empty(1))


def build_dissipation_tree(max_edges: int = 6, max_k: int | None = None) -> DissipationTree:
    """Enumerate isolated-vertex-free graphs up to max_edges edges, keep the
    dissipating ones, and connect each to its jump.

    The node set is closed under the jump: a dissipating graph can jump to
    one with more edges (e.g. two disjoint edges plus a 2-path jumps to the
    diamond), so chains are followed to the empty graph even when they pass
    the enumeration bound. At max_edges >= 6 the closure adds nothing.
    """
    from .iso import canonical_graph

    nodes: dict[bytes, TreeNode] = {
        EMPTY_KEY: TreeNode(Graph.empty(0), 0, None),
        ISOLATED_KEY: TreeNode(Graph.empty(1), 1, EMPTY_KEY),
    }

    def add_chain(g: Graph, d: int) -> None:
        key = canonical_form(g)
        if key in nodes:
            return
        image = strip_isolated(jump(g))
        if image.n == 0:
            nodes[key] = TreeNode(g, d, ISOLATED_KEY)
            return
        nodes[key] = TreeNode(g, d, canonical_form(image))
        add_chain(canonical_graph(image), d - 1)

    levels = generate_by_edges(max_edges)
    for m in range(1, max_edges + 1):
        for h in levels[m]:
            try:
                c = classify(h, max_k)
            except UnresolvedError as exc:
                raise RuntimeError(f"tree build unresolved on {to_graph6(h)}") from exc
            if c.verdict == "dissipates":
                add_chain(h, c.d_value)
    return DissipationTree(nodes=nodes, max_edges=max_edges)


def _node_name(key: bytes) -> str:
    return "g" + hashlib.sha256(key).hexdigest()[:10]


def tree_to_manifest(tree: DissipationTree) -> str:
    """One line per node: canonical_form, d value, parent canonical form."""
    lines = []
    for level in sorted(tree.levels()):
        for key in tree.levels()[level]:
            node = tree.nodes[key]
            parent = node.parent.decode("ascii") if node.parent is not None else "-"
            lines.append(f"{key.decode('ascii')}\t{node.level}\t{parent}")
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: DissipationTree) -> str:
    """DOT with one cluster per level; node names are canonical-form hashes."""
    out = ["digraph dissipation {", "  rankdir=LR;"]
    levels = tree.levels()
    for level in sorted(levels):
        out.append(f"  subgraph cluster_level_{level} {{")
        out.append(f'    label="d = {level}";')
        for key in levels[level]:
            g6 = key.decode("ascii")
            out.append(f'    {_node_name(key)} [label="{g6}"];')
        out.append("  }")
    for level in sorted(levels):
        for key in levels[level]:
            node = tree.nodes[key]
            if node.parent is not None:
                out.append(f"  {_node_name(key)} -> {_node_name(node.parent)};")
    out.append("}")
    return "\n".join(out) + "\n"
