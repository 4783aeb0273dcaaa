from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordrep.errors import GraphSizeError
from wordrep.graphs import (
    Graph,
    are_isomorphic,
    chromatic_number,
    complete,
    contains_induced,
    cycle,
    induced,
    is_k_colourable,
    nonisomorphic_graphs,
    wheel,
)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, ((0, 3),))

    def test_rejects_unsorted_or_duplicate(self):
        with pytest.raises(ValueError):
            Graph(3, ((1, 2), (0, 1)))
        with pytest.raises(ValueError):
            Graph(3, ((0, 1), (0, 1)))

    def test_rejects_too_many_vertices(self):
        with pytest.raises(GraphSizeError):
            Graph(25, ())

    def test_from_edges_normalises(self):
        g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))

    def test_adjacency_symmetric(self):
        g = cycle(5)
        for u, v in g.edges:
            assert g.has_edge(u, v) and g.has_edge(v, u)

    def test_json_round_trip(self):
        g = wheel(5)
        assert Graph.from_json_obj(g.to_json_obj()) == g


class TestColouring:
    def test_triangle_three_colours(self):
        c = is_k_colourable(complete(3), 3)
        assert c is not None and c.is_proper_for(complete(3))

    def test_w5_needs_four(self):
        w5 = wheel(5)
        assert is_k_colourable(w5, 3) is None
        c = is_k_colourable(w5, 4)
        assert c is not None and c.is_proper_for(w5)

    def test_first_vertex_pinned(self):
        c = is_k_colourable(cycle(6), 3)
        assert c.colours[0] == 1

    def test_deterministic(self):
        g = wheel(6)
        assert is_k_colourable(g, 4) == is_k_colourable(g, 4)

    def test_chromatic_examples(self):
        assert chromatic_number(cycle(4)) == 2
        assert chromatic_number(cycle(5)) == 3
        assert chromatic_number(wheel(5)) == 4
        assert chromatic_number(wheel(3)) == 4  # K4

    def test_empty_graph(self):
        assert chromatic_number(Graph(0, ())) == 0
        assert is_k_colourable(Graph(4, ()), 1).colours == (1, 1, 1, 1)

    @given(graphs(), st.integers(1, 4))
    @settings(max_examples=120, deadline=None)
    def test_returned_colouring_is_proper(self, g, k):
        c = is_k_colourable(g, k)
        if c is not None:
            assert c.is_proper_for(g)
            assert all(1 <= col <= k for col in c.colours)


class TestInduced:
    def test_identity(self):
        assert induced(cycle(4), range(4)) == cycle(4)

    def test_adjacent_pair(self):
        assert induced(cycle(4), [0, 1]).edges == ((0, 1),)

    def test_non_adjacent_pair(self):
        assert induced(cycle(4), [0, 2]).edges == ()

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced(cycle(4), [0, 7])


class TestContainsInduced:
    def test_triangle_free_host(self):
        assert contains_induced(cycle(4), complete(3)) is None

    def test_rim_of_wheel(self):
        m = contains_induced(wheel(6), cycle(6))
        assert m is not None
        assert set(m) == set(range(6))

    def test_induced_rejects_extra_edges(self):
        # A path on 3 vertices is not induced in a triangle: the missing pair
        # would land on an edge.
        path = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert contains_induced(complete(3), path) is None

    def test_pattern_size_budget(self):
        with pytest.raises(GraphSizeError):
            contains_induced(complete(14), complete(13))

    @given(graphs(max_n=6), graphs(max_n=4))
    @settings(max_examples=60, deadline=None)
    def test_mapping_induces_isomorphic_copy(self, host, pattern):
        m = contains_induced(host, pattern)
        if m is not None:
            assert are_isomorphic(induced(host, m), pattern)


class TestConstructors:
    def test_cycle(self):
        c = cycle(4)
        assert c.n == 4 and c.edges == ((0, 1), (0, 3), (1, 2), (2, 3))

    def test_wheel_counts(self):
        w = wheel(5)
        assert w.n == 6 and w.edge_count == 10
        assert w.degree(5) == 5  # hub is the last vertex

    def test_wheel3_is_k4(self):
        assert are_isomorphic(wheel(3), complete(4))

    def test_too_short(self):
        with pytest.raises(ValueError):
            cycle(2)
        with pytest.raises(ValueError):
            wheel(2)


class TestIsomorphism:
    def test_relabelled_cycle(self):
        assert are_isomorphic(cycle(4), cycle(4).relabel((2, 0, 3, 1)))

    def test_different_edge_counts(self):
        assert not are_isomorphic(wheel(5), cycle(6))

    def test_same_degrees_not_isomorphic(self):
        # C6 vs two triangles: both 2-regular on 6 vertices.
        two_triangles = Graph.from_edges(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )
        assert not are_isomorphic(cycle(6), two_triangles)

    @given(graphs(max_n=6), st.randoms(use_true_random=False))
    @settings(max_examples=80, deadline=None)
    def test_invariant_under_relabelling(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert are_isomorphic(g, g.relabel(tuple(perm)))

    def test_equivalence_relation_spot_checks(self):
        a, b, c = cycle(5), cycle(5).relabel((4, 2, 0, 3, 1)), cycle(5).relabel((1, 3, 0, 2, 4))
        assert are_isomorphic(a, a)
        assert are_isomorphic(a, b) == are_isomorphic(b, a)
        assert are_isomorphic(a, b) and are_isomorphic(b, c) and are_isomorphic(a, c)


def test_nonisomorphic_graph_counts():
    assert [len(nonisomorphic_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]
