from __future__ import annotations

import itertools

import pytest

from wordrep.boards import (
    Axis,
    Board,
    Domino,
    DominoPattern,
    Symmetry,
    base_graph,
    domino_placements,
    enumerate_triangulations,
    flip_domino_pattern,
    parse_board,
    parse_triangulation,
    transform,
    transform_board,
    transform_triangulation,
    triangulate,
)
from wordrep.errors import BudgetExceededError
from wordrep.graphs import are_isomorphic, chromatic_number, cycle, induced, is_k_colourable


class TestBoardType:
    def test_spec_round_trip(self):
        spec = "cells 2x3; domino H 1 1"
        assert parse_board(spec).spec_string() == spec

    def test_rejects_out_of_bounds(self):
        with pytest.raises(ValueError):
            parse_board("cells 1x1; domino H 0 0")
        with pytest.raises(ValueError):
            Board(2, 2, (Domino(1, 1, Axis.V),))

    def test_rejects_overlap(self):
        with pytest.raises(ValueError):
            Board(2, 3, (Domino(0, 0, Axis.H), Domino(0, 1, Axis.H)), exploratory=True)

    def test_multi_domino_needs_exploratory(self):
        dominoes = (Domino(0, 0, Axis.H), Domino(1, 0, Axis.H))
        with pytest.raises(ValueError):
            Board(2, 2, dominoes)
        assert Board(2, 2, dominoes, exploratory=True).unit_cells() == ()

    def test_bad_specs(self):
        for spec in ("", "cells x2", "cells 2x2; domino X 0 0", "domino H 0 0"):
            with pytest.raises(ValueError):
                parse_board(spec)


class TestBaseGraph:
    def test_unit_square(self):
        e = base_graph(Board(1, 1))
        assert e.graph.n == 4 and e.graph.edge_count == 4

    def test_domino_hexagon(self):
        e = base_graph(parse_board("cells 1x2; domino H 0 0"))
        assert e.graph.n == 6 and e.graph.edge_count == 6
        assert are_isomorphic(e.graph, cycle(6))

    def test_hexagon_chordless_inside_larger_board(self):
        board = parse_board("cells 2x2; domino H 0 0")
        e = base_graph(board)
        idx = e.coord_index()
        corners = [idx[rc] for rc in board.dominoes[0].corners()]
        assert are_isomorphic(induced(e.graph, corners), cycle(6))

    def test_three_domino_board(self):
        # 3x4-cell board with two horizontal dominoes and one vertical one.
        board = Board(
            3,
            4,
            (Domino(0, 0, Axis.H), Domino(1, 0, Axis.V), Domino(2, 2, Axis.H)),
            exploratory=True,
        )
        e = base_graph(board)
        assert e.graph.n == 20
        assert e.graph.edge_count == 28


class TestTriangulate:
    def test_unit_square_slash(self):
        b = Board(1, 1)
        e = triangulate(b, parse_triangulation(b, "/"))
        assert e.graph.edge_count == 5

    def test_hexagon_fall_chords(self):
        b = parse_board("cells 1x2; domino H 0 0")
        e = triangulate(b, parse_triangulation(b, "F"))
        assert e.graph.edge_count == 9
        idx = e.coord_index()
        for a, c in (((0, 0), (1, 1)), ((0, 0), (1, 2)), ((0, 1), (1, 2))):
            assert e.graph.has_edge(idx[a], idx[c])

    def test_two_by_two_all_slash(self):
        b = Board(2, 2)
        e = triangulate(b, parse_triangulation(b, "////"))
        assert e.graph.n == 9 and e.graph.edge_count == 16

    def test_edge_count_formula(self):
        for spec in ("cells 2x2", "cells 2x2; domino H 0 0", "cells 2x3; domino H 1 1"):
            b = parse_board(spec)
            base = base_graph(b).graph.edge_count
            for t in enumerate_triangulations(b):
                e = triangulate(b, t)
                assert (
                    e.graph.edge_count
                    == base + len(b.unit_cells()) + 3 * len(b.dominoes)
                )

    def test_triangulations_are_three_or_four_chromatic(self):
        b = parse_board("cells 2x2; domino H 1 0")
        for t in enumerate_triangulations(b):
            assert chromatic_number(triangulate(b, t).graph) in (3, 4)

    def test_three_domino_triangulation(self):
        board = Board(
            3,
            4,
            (Domino(0, 0, Axis.H), Domino(1, 0, Axis.V), Domino(2, 2, Axis.H)),
            exploratory=True,
        )
        # cells row-major: (0,2),(0,3),(1,1),(1,2),(1,3),(2,1); then H, V, H.
        t = parse_triangulation(board, "//" + "//\\" + "\\" + "RFF")
        e = triangulate(board, t)
        assert e.graph.edge_count == 28 + 6 + 9
        assert chromatic_number(e.graph) in (3, 4)

    def test_shape_mismatch(self):
        b = Board(2, 2)
        with pytest.raises(ValueError):
            parse_triangulation(b, "///")


class TestEnumeration:
    def test_counts(self):
        assert len(list(enumerate_triangulations(Board(1, 1)))) == 2
        b = parse_board("cells 2x2; domino H 0 0")
        assert len(list(enumerate_triangulations(b))) == 8
        b33 = parse_board("cells 3x3; domino H 1 0")
        assert len(list(enumerate_triangulations(b33))) == 256

    def test_distinct_and_ordered(self):
        b = parse_board("cells 2x2; domino H 0 0")
        literals = [t.literal() for t in enumerate_triangulations(b)]
        assert literals == sorted(set(literals), key=literals.index)
        assert len(set(literals)) == len(literals)
        assert literals[0] == "//F"

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            list(enumerate_triangulations(Board(5, 5)))


class TestPlacements:
    def test_counts(self):
        assert len(domino_placements(2, 2, Axis.H)) == 2
        assert len(domino_placements(3, 3, Axis.H)) == 6
        assert len(domino_placements(1, 1, Axis.H)) == 0
        assert len(domino_placements(3, 3, Axis.V)) == 6
        assert len(domino_placements(1, 4, Axis.V)) == 0

    def test_formula_up_to_4x4(self):
        for rows in range(1, 5):
            for cols in range(1, 5):
                assert len(domino_placements(rows, cols, Axis.H)) == rows * (cols - 1)
                assert len(domino_placements(rows, cols, Axis.V)) == (rows - 1) * cols


class TestFlip:
    def test_swaps_pattern(self):
        b = parse_board("cells 2x2; domino H 0 0")
        t = parse_triangulation(b, "//F")
        assert flip_domino_pattern(t, 0).domino_pattern == (DominoPattern.RISE,)

    def test_involution(self):
        b = parse_board("cells 2x2; domino H 0 0")
        t = parse_triangulation(b, "/\\R")
        assert flip_domino_pattern(flip_domino_pattern(t, 0), 0) == t

    def test_index_checked(self):
        b = parse_board("cells 2x2; domino H 0 0")
        with pytest.raises(IndexError):
            flip_domino_pattern(parse_triangulation(b, "//F"), 1)

    def test_preserves_three_colourability_on_small_board(self):
        b = parse_board("cells 2x2; domino H 0 0")
        for t in enumerate_triangulations(b):
            a = is_k_colourable(triangulate(b, t).graph, 3) is not None
            z = is_k_colourable(triangulate(b, flip_domino_pattern(t, 0)).graph, 3) is not None
            assert a == z


class TestSymmetry:
    def test_identity(self):
        b = parse_board("cells 2x3; domino H 0 1")
        e = triangulate(b, next(enumerate_triangulations(b)))
        assert transform(e, Symmetry.IDENTITY) == e

    def test_rot180_involution(self):
        b = parse_board("cells 2x3; domino H 1 0")
        e = triangulate(b, next(enumerate_triangulations(b)))
        assert transform(transform(e, Symmetry.ROT180), Symmetry.ROT180) == e

    def test_rot90_turns_horizontal_domino_vertical(self):
        b = parse_board("cells 2x3; domino H 0 0")
        nb = transform_board(b, Symmetry.ROT90)
        assert (nb.cell_rows, nb.cell_cols) == (3, 2)
        assert nb.dominoes[0].axis is Axis.V

    @pytest.mark.parametrize("sym", list(Symmetry))
    def test_triangulation_transport_commutes(self, sym):
        specs = ["cells 2x2; domino H 0 0", "cells 3x2; domino V 0 1", "cells 2x3"]
        for spec in specs:
            b = parse_board(spec)
            for t in itertools.islice(enumerate_triangulations(b), 4):
                nb, nt = transform_triangulation(b, t, sym)
                assert triangulate(nb, nt) == transform(triangulate(b, t), sym)

    def test_transforms_preserve_chromatic_number(self):
        b = parse_board("cells 2x2; domino H 1 0")
        t = parse_triangulation(b, "\\\\F")
        chi = chromatic_number(triangulate(b, t).graph)
        for sym in Symmetry:
            nb, nt = transform_triangulation(b, t, sym)
            assert chromatic_number(triangulate(nb, nt).graph) == chi
