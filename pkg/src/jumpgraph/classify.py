"""End-behaviour classification of iterated jump-graph sequences.

Every sequence {J^k(G)} terminates at the empty graph, converges to one of
the two fixed points (the 5-cycle and the net graph), or diverges while
accumulating one of them as a subgraph. classify() decides which, with a
machine-checkable certificate for divergence: the iterate index k and a
subgraph witness placing C5 or the net inside J^k(G).

The decision procedure is plain iteration plus subgraph search; the
dissipating-graph catalog and the diameter casework live here only as
independent cross-checks (see the verify module).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .graph_core import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    jump,
    path_graph,
    strip_isolated,
    vertex_limit,
)
from .iso import SubgraphWitness, canonical_form, find_subgraph, is_isomorphic
from .snipped import net_graph

DEFAULT_MAX_K = 12


def default_max_k() -> int:
    return int(os.environ.get("JUMPGRAPH_MAX_K", DEFAULT_MAX_K))


class IterateTooLargeError(RuntimeError):
    """An iterate would exceed the vertex limit before the question resolved."""


class UnresolvedError(RuntimeError):
    """classify() ran out of iterations or room without reaching a verdict."""

    def __init__(self, max_k: int, reason: str, trace: list[tuple[int, int, int]]):
        super().__init__(f"unresolved after k={max_k}: {reason}")
        self.max_k = max_k
        self.reason = reason
        self.trace = trace


@dataclass(frozen=True)
class Accumulation:
    k: int
    target: str  # "C5" or "Net"
    witness: SubgraphWitness


@dataclass(frozen=True)
class Classification:
    verdict: str  # "dissipates" | "converges" | "diverges"
    d_value: int | None = None
    fixed_point: str | None = None  # "C5" | "Net"
    accumulation: Accumulation | None = None
    trace: tuple[tuple[int, int, int], ...] = ()  # (k, vertex_count, edge_count)


def dissipation_number(g: Graph, max_k: int | None = None) -> int | None:
    """Smallest k with J^k(g) empty, or None if not reached within max_k.

    A graph of isolated vertices counts as one jump from empty. Raises
    IterateTooLargeError if an iterate would exceed the vertex limit first.
    """
    if max_k is None:
        max_k = default_max_k()
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    cur = g
    for k in range(max_k + 1):
        if cur.edge_count == 0:
            return k + (1 if cur.vertex_count > 0 else 0)
        if k == max_k:
            return None
        if cur.edge_count > vertex_limit():
            raise IterateTooLargeError(
                f"J^{k + 1} would have {cur.edge_count} vertices (limit {vertex_limit()})"
            )
        cur = jump(cur)
    return None


def classify(g: Graph, max_k: int | None = None) -> Classification:
    """Full verdict with certificate. Raises UnresolvedError rather than guess.

    Isolated vertices are stripped first. Convergence can only happen at the
    start: the fixed points have no other preimages, so any later iterate
    isomorphic to one would force the input to be it already.
    """
    if max_k is None:
        max_k = default_max_k()
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    g0 = strip_isolated(g)
    c5 = cycle_graph(5)
    net = net_graph()
    if is_isomorphic(g0, c5):
        return Classification(verdict="converges", fixed_point="C5", trace=((0, 5, 5),))
    if is_isomorphic(g0, net):
        return Classification(verdict="converges", fixed_point="Net", trace=((0, 6, 6),))

    trace: list[tuple[int, int, int]] = [(0, g0.n, g0.m)]
    cur = g0
    k = 0
    while True:
        if cur.edge_count == 0:
            d = k + (1 if cur.vertex_count > 0 else 0)
            return Classification(verdict="dissipates", d_value=d, trace=tuple(trace))
        w = find_subgraph(c5, cur, induced=False)
        target = "C5"
        if w is None:
            w = find_subgraph(net, cur, induced=False)
            target = "Net"
        if w is not None:
            return Classification(
                verdict="diverges",
                accumulation=Accumulation(k=k, target=target, witness=w),
                trace=tuple(trace),
            )
        if k == max_k:
            raise UnresolvedError(max_k, "max_k exhausted", trace)
        if cur.edge_count > vertex_limit():
            raise UnresolvedError(
                max_k, f"iterate would exceed the vertex limit {vertex_limit()}", trace
            )
        cur = jump(cur)
        k += 1
        trace.append((k, cur.n, cur.m))


# ---------------------------------------------------------------------------
# catalog of dissipating graphs: the finite nodes of the dissipation tree
# plus its four parametric families


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    d_value: int


def _triangle_with_tail_and_pendants(pendants: int) -> Graph:
    # triangle 0-1-2, path 0-3-4, extra pendants on vertex 0
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]
    edges += [(0, 5 + i) for i in range(pendants)]
    return Graph.from_edges(5 + pendants, edges)


def _diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def _diamond_pendant_high() -> Graph:
    # pendant on a degree-3 vertex of the diamond
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 4)])


def _diamond_pendant_low() -> Graph:
    # pendant on a degree-2 vertex of the diamond
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 4)])


def _bull() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])


def _h_shape() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])


def bowtie_graph() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def _c4_pendant() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def _spider_1_1_3() -> Graph:
    # centre 0: two pendant legs and one leg of length 3
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])


def _spider_1_2_2() -> Graph:
    # centre 0: one pendant leg and two legs of length 2
    return Graph.from_edges(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)])


def _triangle_two_one_pendants() -> Graph:
    # triangle with two pendants at one corner and one at another
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (1, 5)])


def _fork() -> Graph:
    # path of length 3 with a pendant on the second vertex
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])


def _k2() -> Graph:
    return path_graph(2)


def _matching(k: int) -> Graph:
    g = _k2()
    for _ in range(k - 1):
        g = disjoint_union(g, _k2())
    return g


def _finite_catalog() -> list[tuple[str, Graph, int]]:
    """Dissipating graphs that are not members of the parametric families."""
    p3 = path_graph(3)
    entries = [
        ("empty", Graph.empty(0), 0),
        ("K3", complete_graph(3), 2),
        ("3K2", _matching(3), 3),
        ("K3+K2", disjoint_union(complete_graph(3), _k2()), 3),
        ("K4", complete_graph(4), 4),
        ("C4", cycle_graph(4), 4),
        ("diamond", _diamond(), 4),
        ("bull", _bull(), 4),
        ("triangle-tail2", _triangle_with_tail_and_pendants(0), 4),
        ("P5", path_graph(5), 4),
        ("P4+K2", disjoint_union(path_graph(4), _k2()), 4),
        ("paw+K2", disjoint_union(Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]), _k2()), 4),
        ("4K2", _matching(4), 5),
        ("C4-pendant", _c4_pendant(), 5),
        ("diamond-pendant-high", _diamond_pendant_high(), 5),
        ("spider(1,2,2)", _spider_1_2_2(), 5),
        ("P3+2K2", disjoint_union(p3, _matching(2)), 5),
        ("2P3", disjoint_union(p3, p3), 5),
        ("H-shape", _h_shape(), 5),
        ("spider(1,1,3)", _spider_1_1_3(), 6),
        ("triangle-pendants-2+1", _triangle_two_one_pendants(), 6),
        ("fork+K2", disjoint_union(_fork(), _k2()), 6),
        ("diamond-pendant-low", _diamond_pendant_low(), 6),
        ("bowtie", bowtie_graph(), 6),
        ("triangle-tail2-pendant", _triangle_with_tail_and_pendants(1), 7),
        ("C4+K2", disjoint_union(cycle_graph(4), _k2()), 7),
    ]
    return entries


_FINITE_BY_FORM: dict[bytes, CatalogEntry] | None = None


def _finite_lookup() -> dict[bytes, CatalogEntry]:
    global _FINITE_BY_FORM
    if _FINITE_BY_FORM is None:
        _FINITE_BY_FORM = {
            canonical_form(g): CatalogEntry(name, d) for name, g, d in _finite_catalog()
        }
    return _FINITE_BY_FORM


def _is_star(g: Graph) -> int | None:
    """n for g = S_n (a centre with n >= 1 pendants), else None."""
    if g.n < 2 or g.m != g.n - 1:
        return None
    degs = sorted(g.degrees())
    if degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1]):
        return g.n - 1
    return None


def _is_triangle_with_pendants(g: Graph) -> int | None:
    """n for a triangle with n >= 1 pendants all on one corner, else None."""
    n = g.n - 3
    if n < 1 or g.m != 3 + n:
        return None
    degs = g.degrees()
    centre = [v for v in range(g.n) if degs[v] == n + 2]
    if len(centre) != 1:
        return None
    c = centre[0]
    two = [v for v in range(g.n) if degs[v] == 2]
    ones = [v for v in range(g.n) if degs[v] == 1]
    if len(two) != 2 or len(ones) != n:
        return None
    a, b = two
    return n if g.has_edge(a, b) and g.has_edge(c, a) and g.has_edge(c, b) else None


def _is_spider_with_tail(g: Graph) -> int | None:
    """n for a centre with n >= 1 pendants plus one leg of length 2, else None.

    Equivalently a path of length 2 with n pendants on one end; the only
    dissipating shape with diameter 3 once it has 7 or more edges. For n=1
    this is the 4-vertex path, where either inner vertex works as centre.
    """
    n = g.n - 3
    if n < 1 or g.m != n + 2:
        return None
    degs = g.degrees()
    for c in range(g.n):
        if degs[c] != n + 1:
            continue
        pendants = 0
        mid = None
        row = g.rows[c]
        ok = True
        while row:
            w = (row & -row).bit_length() - 1
            row &= row - 1
            if degs[w] == 1:
                pendants += 1
            elif degs[w] == 2 and mid is None:
                mid = w
            else:
                ok = False
                break
        if not ok or mid is None or pendants != n:
            continue
        tip = (g.rows[mid] & ~(1 << c)).bit_length() - 1
        if degs[tip] == 1 and not g.has_edge(c, tip):
            return n
    return None


def _is_star_plus_k2(g: Graph) -> int | None:
    """n for g = S_n plus one disjoint edge, else None."""
    if g.m < 2 or g.m != g.n - 2:
        return None
    from .graph_core import connected_components

    comps = connected_components(g)
    if len(comps) != 2:
        return None
    comps.sort(key=len)
    small, big = comps
    if len(small) != 2:
        return None
    sub = Graph.from_edges(
        len(big), [(big.index(u), big.index(v)) for u, v in g.edges() if u in big and v in big]
    )
    return _is_star(sub)


def catalog_membership(g: Graph) -> CatalogEntry | None:
    """Match g against the dissipating-graph catalog, up to isomorphism.

    Covers the finite list plus the families S_n, triangle with n pendants
    on one corner, centre with n pendants and one length-2 leg, and
    S_n disjoint-union an edge. Returns the catalog dissipation number.
    """
    g = strip_isolated(g)
    n = _is_star(g)
    if n is not None:
        return CatalogEntry(f"S{n}", 2)
    n = _is_triangle_with_pendants(g)
    if n is not None:
        return CatalogEntry(f"K3+{n}pendants", 3)
    n = _is_spider_with_tail(g)
    if n is not None:
        return CatalogEntry(f"spider(1^{n},2)", 3)
    n = _is_star_plus_k2(g)
    if n is not None:
        return CatalogEntry(f"S{n}+K2", 3)
    return _finite_lookup().get(canonical_form(g))


# ---------------------------------------------------------------------------
# growth and periodicity


@dataclass(frozen=True)
class GrowthStep:
    k: int
    edge_count: int
    delta: int | None


@dataclass(frozen=True)
class GrowthReport:
    steps: tuple[GrowthStep, ...]
    truncated: bool


def growth_check(g: Graph, k_max: int) -> GrowthReport:
    """Edge counts of J^0..J^k_max with deltas, truncating at the vertex limit."""
    steps = [GrowthStep(0, g.edge_count, None)]
    cur = g
    truncated = False
    for k in range(1, k_max + 1):
        if cur.edge_count > vertex_limit():
            truncated = True
            break
        cur = jump(cur)
        steps.append(GrowthStep(k, cur.edge_count, cur.edge_count - steps[-1].edge_count))
    return GrowthReport(steps=tuple(steps), truncated=truncated)


@dataclass(frozen=True)
class PeriodicResult:
    k: int | None
    truncated: bool


def find_periodic(g: Graph, k_max: int) -> PeriodicResult:
    """Smallest 1 <= k <= k_max with J^k(g) isomorphic to g (both stripped)."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    base = strip_isolated(g)
    cur = base
    for k in range(1, k_max + 1):
        if cur.edge_count > vertex_limit():
            return PeriodicResult(k=None, truncated=True)
        cur = jump(cur)
        stripped = strip_isolated(cur)
        if stripped.n == base.n and stripped.m == base.m and is_isomorphic(stripped, base):
            return PeriodicResult(k=k, truncated=False)
    return PeriodicResult(k=None, truncated=False)


def growth_reference_graphs() -> dict[str, Graph]:
    """The two growth benchmark graphs: a 5-cycle with a chord, and the net
    graph with one extra pendant edge."""
    c5_chord = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    net_pendant = Graph.from_edges(
        7, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (0, 6)]
    )
    return {"c5_chord": c5_chord, "net_pendant": net_pendant}
