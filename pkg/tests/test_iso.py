import random

from jumpgraph.graph_core import (
    Graph,
    complement,
    cycle_graph,
    disjoint_union,
    is_connected,
    jump,
    line_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from jumpgraph.iso import (
    SubgraphWitness,
    canonical_form,
    canonical_graph,
    find_subgraph,
    is_isomorphic,
    verify_subgraph,
)
from jumpgraph.snipped import net_graph


def permuted(g, perm):
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


class TestCanonicalForm:
    def test_relabelled_triangle(self):
        t = cycle_graph(3)
        assert canonical_form(t) == canonical_form(permuted(t, [2, 0, 1]))

    def test_triangle_vs_star(self):
        assert canonical_form(cycle_graph(3)) != canonical_form(star_graph(3))

    def test_c5_vs_its_jump(self):
        assert canonical_form(cycle_graph(5)) == canonical_form(jump(cycle_graph(5)))

    def test_invariant_under_random_permutation(self):
        rng = random.Random(31)
        for _ in range(60):
            g = random_graph(rng.randrange(1, 10), rng.random(), rng)
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g) == canonical_form(permuted(g, perm))

    def test_separates_same_degree_sequence(self):
        # 6-cycle vs two triangles: both 2-regular on 6 vertices
        two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3))
        assert canonical_form(cycle_graph(6)) != canonical_form(two_triangles)

    def test_canonical_graph_is_isomorphic_copy(self):
        rng = random.Random(37)
        for _ in range(20):
            g = random_graph(rng.randrange(1, 9), rng.random(), rng)
            cg = canonical_graph(g)
            assert is_isomorphic(g, cg)

    def test_complement_respects_classes(self):
        # the complement of the class is a class: permuting first changes nothing
        rng = random.Random(41)
        for _ in range(30):
            g = random_graph(rng.randrange(1, 9), rng.random(), rng)
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(complement(g)) == canonical_form(complement(permuted(g, perm)))

    def test_isolated_vertices_matter(self):
        assert canonical_form(path_graph(2)) != canonical_form(
            disjoint_union(path_graph(2), Graph.empty(1))
        )


class TestIsIsomorphic:
    def test_c5_and_its_jump(self):
        assert is_isomorphic(cycle_graph(5), jump(cycle_graph(5)))

    def test_triangle_vs_star(self):
        assert not is_isomorphic(cycle_graph(3), star_graph(3))

    def test_empty(self):
        assert is_isomorphic(Graph.empty(0), Graph.empty(0))

    def test_larger_graphs_via_matcher(self):
        g = line_graph(petersen_graph())  # 15 vertices
        perm = list(range(15))
        random.Random(43).shuffle(perm)
        assert is_isomorphic(g, permuted(g, perm))
        assert not is_isomorphic(g, complement(g))


class TestFindSubgraph:
    def test_c5_in_petersen(self):
        w = find_subgraph(cycle_graph(5), petersen_graph())
        assert w is not None
        assert verify_subgraph(w, cycle_graph(5), petersen_graph())

    def test_c5_not_in_diamond(self):
        diamond = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        assert find_subgraph(cycle_graph(5), diamond) is None

    def test_net_in_jump_of_tagged_path(self):
        # diameter-4 path with a pendant on each of the two middle vertices:
        # its jump must contain the net graph
        g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6)])
        w = find_subgraph(net_graph(), jump(g))
        assert w is not None
        assert verify_subgraph(w, net_graph(), jump(g))

    def test_induced_vs_not(self):
        # P3 occurs in the triangle, but never induced
        assert find_subgraph(path_graph(3), cycle_graph(3)) is not None
        assert find_subgraph(path_graph(3), cycle_graph(3), induced=True) is None

    def test_pattern_with_isolated_vertices(self):
        pattern = disjoint_union(path_graph(2), Graph.empty(1))
        w = find_subgraph(pattern, path_graph(4), induced=True)
        assert w is not None
        assert verify_subgraph(w, pattern, path_graph(4))
        # induced: the spare vertex may not touch the edge's image
        assert find_subgraph(pattern, cycle_graph(3), induced=True) is None

    def test_deterministic(self):
        w1 = find_subgraph(cycle_graph(5), petersen_graph())
        w2 = find_subgraph(cycle_graph(5), petersen_graph())
        assert w1 == w2

    def test_witness_validation_rejects_corruption(self):
        w = find_subgraph(cycle_graph(4), cycle_graph(5))
        assert w is None  # C4 does not occur in C5
        w = find_subgraph(path_graph(3), path_graph(5))
        assert w is not None
        bad = SubgraphWitness(vertex_map=(0, 0, 1), induced=False)
        assert not verify_subgraph(bad, path_graph(3), path_graph(5))

    def test_jump_preserves_subgraphs_induced(self):
        # random edge-subsets H of G: J(H) occurs induced in J(G)
        rng = random.Random(47)
        for _ in range(40):
            g = random_graph(rng.randrange(2, 8), 0.6, rng)
            if g.m == 0:
                continue
            edges = g.edges()
            keep = [e for e in edges if rng.random() < 0.7]
            h = Graph.from_edges(g.n, keep)
            w = find_subgraph(jump(h), jump(g), induced=True)
            assert w is not None
            assert verify_subgraph(w, jump(h), jump(g))


class TestWhitney:
    def test_unique_line_graphs_up_to_seven_vertices(self, catalog7):
        groups = {}
        for g in catalog7.all_graphs():
            if g.n == 0 or not is_connected(g):
                continue
            lg = line_graph(g)
            groups.setdefault(canonical_form(lg), []).append(g)
        collisions = [v for v in groups.values() if len(v) > 1]
        assert len(collisions) == 1
        pair = {canonical_form(g) for g in collisions[0]}
        assert pair == {canonical_form(cycle_graph(3)), canonical_form(star_graph(3))}
