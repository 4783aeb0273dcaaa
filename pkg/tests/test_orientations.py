from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordrep.errors import BudgetExceededError
from wordrep.graphs import (
    Colouring,
    Graph,
    complete,
    cycle,
    is_k_colourable,
    nonisomorphic_graphs,
    wheel,
)
from wordrep.orientations import (
    Orientation,
    decide_word_representable,
    exists_semi_transitive,
    find_shortcut,
    is_acyclic,
    is_semi_transitive,
    orientation_from_arcs,
    orientation_from_colouring,
    semi_transitive_certificate,
)


def transitive_tournament(n: int) -> Orientation:
    g = complete(n)
    return orientation_from_arcs(g, [(u, v) for u, v in g.edges])


class TestAcyclicity:
    def test_transitive_tournament(self):
        assert is_acyclic(transitive_tournament(4))

    def test_directed_triangle(self):
        o = orientation_from_arcs(complete(3), [(0, 1), (1, 2), (2, 0)])
        assert not is_acyclic(o)

    def test_partial_rejected(self):
        o = Orientation(cycle(3), (1, None, 1))
        with pytest.raises(ValueError):
            is_acyclic(o)


class TestShortcuts:
    def test_minimal_shortcut(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        o = orientation_from_arcs(g, [(0, 1), (1, 2), (2, 3), (0, 3)])
        w = find_shortcut(o)
        assert w is not None
        assert w.path == (0, 1, 2, 3)
        assert w.missing in ((0, 2), (1, 3))
        assert w.verify(o)

    def test_transitive_tournaments_have_none(self):
        for n in range(4, 7):
            assert find_shortcut(transitive_tournament(n)) is None

    def test_square_orientations(self):
        # Of the 14 acyclic orientations of the 4-cycle, the 8 that orient a
        # three-arc path plus a same-direction closing arc are shortcuts; the
        # other 6 are semi-transitive.
        acyclic = semi_transitive = 0
        for dirs in itertools.product((1, -1), repeat=4):
            o = Orientation(cycle(4), dirs)
            if is_acyclic(o):
                acyclic += 1
                w = find_shortcut(o)
                if w is None:
                    semi_transitive += 1
                else:
                    assert w.verify(o)
        assert acyclic == 14
        assert semi_transitive == 6

    def test_cyclic_rejected(self):
        o = orientation_from_arcs(complete(3), [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(ValueError):
            find_shortcut(o)

    def test_witness_self_contained(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        o = orientation_from_arcs(g, [(0, 1), (1, 2), (2, 3), (0, 3)])
        w = find_shortcut(o)
        arcs = [(w.path[i], w.path[i + 1]) for i in range(len(w.path) - 1)]
        arcs.append((w.path[0], w.path[-1]))
        for tail, head in arcs:
            weakened = [
                None
                if tuple(sorted((tail, head))) == e
                else d
                for e, d in zip(g.edges, o.directions)
            ]
            assert not w.verify(Orientation(g, tuple(weakened)))


class TestColourOrientation:
    def test_triangle(self):
        o = orientation_from_colouring(complete(3), Colouring((1, 2, 3)))
        assert o.has_arc(0, 1) and o.has_arc(1, 2) and o.has_arc(0, 2)
        assert is_semi_transitive(o)

    def test_bipartite_square(self):
        o = orientation_from_colouring(cycle(4), Colouring((1, 2, 1, 2)))
        assert all(o.has_arc(u, v) == (u in (0, 2)) for u, v in [(0, 1), (2, 3)])
        assert is_semi_transitive(o)

    def test_rejects_improper(self):
        with pytest.raises(ValueError):
            orientation_from_colouring(complete(3), Colouring((1, 1, 2)))

    def test_rejects_fourth_colour(self):
        with pytest.raises(ValueError):
            orientation_from_colouring(Graph(2, ()), Colouring((1, 4)))

    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_tripartite_ladders_are_semi_transitive(self, data):
        n = data.draw(st.integers(3, 10))
        classes = [data.draw(st.integers(1, 3)) for _ in range(n)]
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if classes[u] != classes[v] and data.draw(st.booleans())
        ]
        g = Graph.from_edges(n, edges)
        o = orientation_from_colouring(g, Colouring(tuple(classes)))
        assert is_semi_transitive(o)


class TestSearch:
    def test_complete_graphs(self):
        for n in (2, 3, 4, 5):
            o = exists_semi_transitive(complete(n))
            assert o is not None and is_semi_transitive(o)

    def test_odd_wheels_exhausted(self):
        assert exists_semi_transitive(wheel(5)) is None
        assert exists_semi_transitive(wheel(7)) is None

    def test_even_wheel_found(self):
        o = exists_semi_transitive(wheel(6))
        assert o is not None and is_semi_transitive(o)

    def test_certificates_reverse(self):
        for g in (cycle(5), wheel(6), complete(4)):
            o = exists_semi_transitive(g)
            assert o is not None
            assert is_semi_transitive(o.reversed())

    def test_vertex_budget(self):
        path = Graph.from_edges(21, [(i, i + 1) for i in range(20)])
        with pytest.raises(BudgetExceededError):
            exists_semi_transitive(path)

    def test_edge_budget(self):
        with pytest.raises(BudgetExceededError):
            exists_semi_transitive(complete(11))
        with pytest.raises(BudgetExceededError):
            exists_semi_transitive(cycle(5), edge_budget=3)


class TestDecide:
    def test_square_yes(self):
        assert decide_word_representable(cycle(4))

    def test_w5_no(self):
        assert not decide_word_representable(wheel(5))

    def test_single_vertex(self):
        assert decide_word_representable(Graph(1, ()))

    def test_fast_path_produces_checked_certificate(self):
        o = semi_transitive_certificate(cycle(6))
        assert o is not None and is_semi_transitive(o)
        assert is_k_colourable(cycle(6), 3) is not None

    def test_agreement_with_word_oracle_small(self):
        from wordrep.words import represents, search_uniform_word

        for g in nonisomorphic_graphs(4):
            assert decide_word_representable(g)
            w = next(
                w
                for k in (1, 2, 3)
                if (w := search_uniform_word(g, k)) is not None
            )
            assert represents(w, g)

    def test_orientation_json(self):
        o = semi_transitive_certificate(complete(3))
        obj = o.to_json_obj()
        assert all(len(entry) == 3 and entry[2] in ("uv", "vu") for entry in obj["edges"])
