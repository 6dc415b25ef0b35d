from itertools import combinations

import pytest
from hypothesis import given, settings

from pmin_inherit.graph import (
    Cycle,
    GraphFormatError,
    Partition,
    WeightedGraph,
    connected_components,
    format_graph,
    fundamental_cycle,
    min_weight_edges,
    parse_graph,
    prim_mst,
    shortest_path,
)

from conftest import graph, weighted_graphs


class TestParse:
    def test_simple(self):
        g = parse_graph("3 2\n1 2 1\n2 3 2")
        assert g.n == 3
        assert g.edges == ((1, 2, 1), (2, 3, 2))
        assert g.adjacency[2][1] == 1 and g.adjacency[3][2] == 2 and g.adjacency[1][3] == 0

    def test_comments_blank_lines_and_crlf(self):
        g = parse_graph("# header next\r\n3 1\r\n\r\n# edge\r\n3 1 4\r\n")
        assert g.edges == ((1, 3, 4),)

    @pytest.mark.parametrize(
        "text, line, fragment",
        [
            ("2 1\n1 1 5", 2, "self-loop"),
            ("3 2\n1 2 1\n1 2 2", 3, "duplicate edge 1-2 (first on line 2)"),
            ("3 2\n1 2 1\n2 1 2", 3, "duplicate"),
            ("3 1\n1 2 0", 2, "weight"),
            ("3 1\n1 2 -3", 2, "weight"),
            ("3 1\n1 4 1", 2, "out of range"),
            ("3 1\n1 2", 2, "u v w"),
            ("3 1\n1 2 1.5", 2, "integers"),
            ("3\n", 1, "header"),
            ("3 2\n1 2 1", 2, "declared 2 edges but found 1"),
            ("3 1\n1 2 1\n2 3 1", 3, "more than"),
            ("", 1, "missing"),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line, fragment):
        with pytest.raises(GraphFormatError) as info:
            parse_graph(text)
        assert info.value.lineno == line
        assert fragment in str(info.value)

    def test_isolated_vertices_allowed(self):
        g = parse_graph("4 1\n1 2 7")
        assert g.n == 4 and g.degree(4) == 0

    @given(weighted_graphs())
    def test_format_round_trip(self, g):
        assert parse_graph(format_graph(g)) == g

    def test_constructor_invariants(self):
        for bad in ([(1, 1, 1)], [(1, 2, 0)], [(1, 5, 1)], [(1, 2, 1), (2, 1, 3)]):
            with pytest.raises(ValueError):
                WeightedGraph.from_edges(3, bad)


class TestMinWeightEdges:
    def test_unique_minimum(self):
        assert min_weight_edges(graph(3, (1, 2, 1), (2, 3, 2)), [1, 2, 3]) == [(1, 2)]

    def test_all_minimal(self):
        tri = graph(3, (1, 2, 5), (2, 3, 5), (1, 3, 5))
        assert min_weight_edges(tri, [1, 2, 3]) == [(1, 2), (1, 3), (2, 3)]

    def test_no_inner_edges(self):
        assert min_weight_edges(graph(3, (1, 2, 1), (2, 3, 2)), [1, 3]) == []

    @given(weighted_graphs())
    def test_matches_direct_scan(self, g):
        for size in range(1, g.n + 1):
            for a in combinations(g.vertices, size):
                inner = [(u, v, w) for u, v, w in g.edges if u in a and v in a]
                expect = [(u, v) for u, v, w in inner if w == min(x[2] for x in inner)] if inner else []
                assert min_weight_edges(g, a) == expect


class TestComponents:
    def test_excluding_an_edge(self):
        p = connected_components(graph(3, (1, 2, 1), (2, 3, 2)), [1, 2, 3], [(1, 2)])
        assert p.blocks == ((1,), (2, 3))

    def test_tree_without_edges_is_singletons(self):
        g = graph(4, (1, 2, 1), (1, 3, 1), (3, 4, 2))
        p = connected_components(g, [1, 2, 3, 4], [(u, v) for u, v, _ in g.edges])
        assert p.blocks == ((1,), (2,), (3,), (4,))

    def test_triangle_whole(self):
        tri = graph(3, (1, 2, 1), (2, 3, 1), (1, 3, 1))
        assert connected_components(tri, [1, 2, 3]).blocks == ((1, 2, 3),)

    def test_partition_helpers(self):
        p = Partition.of([1, 2, 3], [[3, 2], [1]])
        assert p.blocks == ((1,), (2, 3))
        assert p.restrict([1, 3]).blocks == ((1,), (3,))
        assert p.restrict([1, 3]).refines(p)
        with pytest.raises(ValueError):
            p.restrict([4])


def _hop_distance_by_enumeration(g, s, t, allowed):
    best = None

    def walk(path):
        nonlocal best
        if path[-1] == t:
            if best is None or len(path) - 1 < best:
                best = len(path) - 1
            return
        for v in g.neighbors(path[-1]):
            if v in allowed and v not in path:
                walk(path + [v])

    walk([s])
    return best


class TestShortestPath:
    SQUARE = graph(4, (1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 1))

    def test_tie_break_toward_lower_index(self):
        assert shortest_path(self.SQUARE, 1, 3).vertices == (1, 2, 3)

    def test_same_endpoint(self):
        assert shortest_path(self.SQUARE, 2, 2).vertices == (2,)

    def test_threshold_filter(self):
        assert shortest_path(graph(3, (1, 2, 1), (2, 3, 2)), 1, 3, above=1) is None

    def test_other_filters(self):
        g = graph(3, (1, 2, 1), (2, 3, 2), (1, 3, 1))
        assert shortest_path(g, 1, 3, skip_edge=(3, 1)).vertices == (1, 2, 3)
        assert shortest_path(g, 1, 3, at_least=2) is None
        assert shortest_path(g, 1, 3, [1, 3], at_least=1).vertices == (1, 3)

    def test_endpoint_must_be_allowed(self):
        with pytest.raises(ValueError):
            shortest_path(self.SQUARE, 1, 3, [1, 2])

    @settings(max_examples=60)
    @given(weighted_graphs(max_n=7))
    def test_length_is_true_hop_distance(self, g):
        for s in g.vertices:
            for t in g.vertices:
                found = shortest_path(g, s, t)
                expect = _hop_distance_by_enumeration(g, s, t, set(g.vertices))
                assert (found is None) == (expect is None)
                if found is not None:
                    assert len(found) == expect
                    assert found.vertices[0] == s and found.vertices[-1] == t


def _spans(comp, subset):
    parent = {v: v for v in comp}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v, _ in subset:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _brute_force_mst_weight(g, comp):
    inner = [e for e in g.edges if e[0] in comp]
    totals = [
        sum(w for *_, w in subset)
        for subset in combinations(inner, len(comp) - 1)
        if _spans(comp, subset)
    ]
    return min(totals) if totals else 0


class TestPrim:
    def test_triangle(self):
        (t,) = prim_mst(graph(3, (1, 2, 1), (2, 3, 2), (1, 3, 3)))
        assert t.edges == ((1, 2, 1), (2, 3, 2)) and t.total_weight == 3

    def test_tree_is_itself(self):
        g = graph(5, (1, 2, 3), (2, 3, 1), (2, 4, 2), (4, 5, 9))
        (t,) = prim_mst(g)
        assert t.edges == g.edges

    def test_square_tie_break(self):
        (t,) = prim_mst(graph(4, (1, 2, 1), (2, 3, 1), (3, 4, 2), (1, 4, 2)))
        assert t.total_weight == 4
        assert (3, 4, 2) in t.edges and (1, 4, 2) not in t.edges

    def test_one_tree_per_component(self):
        trees = prim_mst(graph(5, (1, 2, 1), (4, 5, 1)))
        assert [t.vertices for t in trees] == [(1, 2), (3,), (4, 5)]

    @settings(max_examples=60, deadline=None)
    @given(weighted_graphs(max_n=7))
    def test_minimum_total_weight(self, g):
        for t in prim_mst(g):
            assert len(t.edges) == len(t.vertices) - 1
            assert t.total_weight == _brute_force_mst_weight(g, set(t.vertices))


class TestFundamentalCycle:
    def test_triangle(self):
        g = graph(3, (1, 2, 1), (2, 3, 1), (1, 3, 5))
        (t,) = prim_mst(g)
        assert fundamental_cycle(t, (1, 3)).vertices == (1, 2, 3)

    def test_square_with_chord_star_tree(self):
        g = graph(4, (1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 3, 2), (3, 4, 2))
        (t,) = prim_mst(g)
        assert set(t.edges) == {(1, 2, 1), (1, 3, 1), (1, 4, 1)}
        assert fundamental_cycle(t, (2, 3)).vertices == (1, 2, 3)

    def test_tree_edge_rejected(self):
        (t,) = prim_mst(graph(3, (1, 2, 1), (2, 3, 1), (1, 3, 5)))
        with pytest.raises(ValueError):
            fundamental_cycle(t, (1, 2))

    @settings(max_examples=60)
    @given(weighted_graphs(max_n=7))
    def test_cycle_invariants(self, g):
        for t in prim_mst(g):
            members = set(t.vertices)
            tree_edges = {(u, v) for u, v, _ in t.edges}
            non_tree = [(u, v) for u, v, _ in g.edges if u in members and (u, v) not in tree_edges]
            m_comp = sum(1 for u, _, _ in g.edges if u in members)
            assert len(non_tree) == m_comp - (len(members) - 1)
            for e in non_tree:
                c = fundamental_cycle(t, e)
                assert len(set(c.vertices)) == len(c.vertices) >= 3
                assert e in c.edges
                assert all(f == e or f in tree_edges for f in c.edges)


def test_cycle_canonical_and_chords():
    g = graph(4, (1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 1), (1, 3, 2))
    c = Cycle((3, 2, 1, 4)).canonical()
    assert c.vertices == (1, 2, 3, 4)
    assert c.chords(g) == [(1, 3)]
