import math
import random

import pytest

from jumpgraph.graph_core import (
    Graph,
    INFINITE,
    VertexLimitError,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    edge_count_of_jump,
    from_edge_list,
    from_graph6,
    is_connected,
    jump,
    line_graph,
    parse_graph,
    path_graph,
    star_graph,
    strip_isolated,
    to_edge_list,
    to_graph6,
)
from jumpgraph.iso import is_isomorphic
from jumpgraph.snipped import net_graph
from jumpgraph.classify import bowtie_graph


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def gamma_graph():
    """4-cycle plus one disjoint edge."""
    return disjoint_union(cycle_graph(4), path_graph(2))


class TestJump:
    def test_c4_plus_edge_gives_bowtie(self):
        assert is_isomorphic(jump(gamma_graph()), bowtie_graph())

    def test_single_edge(self):
        j = jump(path_graph(2))
        assert j.n == 1 and j.m == 0

    def test_k23_gives_c6(self):
        assert is_isomorphic(jump(complete_bipartite(2, 3)), cycle_graph(6))

    def test_fixed_points(self):
        assert is_isomorphic(jump(cycle_graph(5)), cycle_graph(5))
        assert is_isomorphic(jump(net_graph()), net_graph())

    def test_empty(self):
        assert jump(Graph.empty(0)).n == 0
        assert jump(Graph.empty(4)).n == 0

    def test_vertex_count_is_edge_count(self):
        rng = random.Random(7)
        for _ in range(25):
            g = random_graph(rng.randrange(0, 9), rng.random(), rng)
            assert jump(g).n == g.m


class TestLineGraph:
    def test_triangle(self):
        assert is_isomorphic(line_graph(cycle_graph(3)), cycle_graph(3))

    def test_star3(self):
        assert is_isomorphic(line_graph(star_graph(3)), cycle_graph(3))

    def test_p4(self):
        assert is_isomorphic(line_graph(path_graph(4)), path_graph(3))

    def test_jump_is_complement_of_line_graph(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_graph(rng.randrange(0, 8), rng.random(), rng)
            assert jump(g) == complement(line_graph(g))


class TestComplement:
    def test_edgeless_to_complete(self):
        assert complement(Graph.empty(4)) == complete_graph(4)

    def test_c5_self_complementary(self):
        assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))

    def test_k2(self):
        assert complement(path_graph(2)) == Graph.empty(2)

    def test_involution(self):
        rng = random.Random(13)
        for _ in range(30):
            g = random_graph(rng.randrange(0, 10), rng.random(), rng)
            assert complement(complement(g)) == g


class TestStripIsolated:
    def test_k2_plus_isolated(self):
        g = disjoint_union(path_graph(2), Graph.empty(3))
        assert strip_isolated(g) == path_graph(2)

    def test_all_isolated(self):
        assert strip_isolated(Graph.empty(5)).n == 0

    def test_no_op(self):
        assert strip_isolated(cycle_graph(4)) == cycle_graph(4)

    def test_jump_unaffected_identically(self):
        rng = random.Random(17)
        for _ in range(30):
            g = random_graph(rng.randrange(1, 10), 0.3, rng)
            assert jump(strip_isolated(g)) == jump(g)


class TestDiameter:
    def test_examples(self):
        assert diameter(cycle_graph(5)) == 2
        assert diameter(path_graph(5)) == 4
        assert diameter(disjoint_union(path_graph(2), path_graph(2))) == INFINITE

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            diameter(Graph.empty(0))

    def test_single_vertex(self):
        assert diameter(Graph.empty(1)) == 0


class TestEdgeCountOfJump:
    def test_examples(self):
        assert edge_count_of_jump(cycle_graph(5)) == 5
        assert edge_count_of_jump(star_graph(4)) == 0
        assert edge_count_of_jump(complete_bipartite(2, 3)) == 6

    def test_formula_matches_materialized(self, catalog6):
        for g in catalog6.all_graphs():
            assert edge_count_of_jump(g) == jump(g).edge_count


class TestConnectivity:
    def test_disconnected_isolated_free_jump_connected(self):
        rng = random.Random(23)
        count = 0
        for _ in range(60):
            a = random_graph(rng.randrange(2, 5), 0.7, rng)
            b = random_graph(rng.randrange(2, 5), 0.7, rng)
            g = disjoint_union(a, b)
            if any(d == 0 for d in g.degrees()):
                continue
            count += 1
            assert is_connected(jump(g))
        assert count > 20


class TestGraph6:
    def test_known_encodings(self):
        assert to_graph6(path_graph(4)) == "Ch"
        assert is_isomorphic(from_graph6("D?{"), star_graph(4))
        assert to_graph6(Graph.empty(0)) == "?"
        assert to_graph6(Graph.empty(1)) == "@"

    def test_round_trip(self):
        rng = random.Random(29)
        for _ in range(50):
            g = random_graph(rng.randrange(0, 14), rng.random(), rng)
            assert from_graph6(to_graph6(g)) == g

    def test_round_trip_above_62_vertices(self):
        g = Graph.from_edges(63, [(0, 1), (61, 62)])
        s = to_graph6(g)
        assert s.startswith("~")
        assert from_graph6(s) == g

    def test_optional_header_prefix(self):
        assert from_graph6(">>graph6<<Ch") == path_graph(4)

    def test_malformed(self):
        with pytest.raises(ValueError):
            from_graph6("")
        with pytest.raises(ValueError):
            from_graph6("D?")  # truncated body
        with pytest.raises(ValueError):
            from_graph6("C\x19")  # out-of-range byte
        with pytest.raises(ValueError):
            from_graph6("C}")  # nonzero padding


class TestEdgeListFormat:
    def test_round_trip(self):
        g = gamma_graph()
        assert from_edge_list(to_edge_list(g)) == g

    def test_bad_header(self):
        with pytest.raises(ValueError):
            from_edge_list("5\n0 1\n")

    def test_bad_edge_line(self):
        with pytest.raises(ValueError):
            from_edge_list("n 3\n0 1 2\n")

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            from_edge_list("n 3\n1 1\n")

    def test_autodetect(self):
        assert parse_graph("n 2\n0 1\n") == path_graph(2)
        assert parse_graph("Ch") == path_graph(4)


class TestVertexLimit:
    def test_default_limit_enforced(self):
        with pytest.raises(VertexLimitError):
            Graph.empty(65)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("JUMPGRAPH_VERTEX_LIMIT", "80")
        g = Graph.empty(70)
        assert g.n == 70


class TestEdgeOrdering:
    def test_lexicographic(self):
        g = Graph.from_edges(4, [(3, 2), (1, 0), (0, 2)])
        assert g.edges() == [(0, 1), (0, 2), (2, 3)]
