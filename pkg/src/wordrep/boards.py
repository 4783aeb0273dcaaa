"""Rectangular cell boards with domino tiles, their triangulations, and grid symmetries.

Vertex coordinates are (row, col) with row 0 at the top; vertices are numbered
row-major.  A horizontal domino at cell (r, c) covers cells (r, c) and
(r, c+1); a vertical one covers (r, c) and (r+1, c).  The edge shared by a
domino's two cells is absent from the vertex graph, so each domino bounds a
chordless hexagon.

Each unit cell is triangulated by one of its two diagonals; each domino
hexagon by one of two three-chord patterns.  For a horizontal domino with top
corners TL, TM, TR and bottom corners BL, BM, BR:

    FALL: TL-BM, TL-BR, TM-BR      RISE: BL-TM, BL-TR, BM-TR

Vertical dominoes use the quarter-turn images of the same two patterns.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, NamedTuple

from .errors import BudgetExceededError
from .graphs import Graph

Coord = tuple[int, int]


class Axis(str, Enum):
    H = "H"
    V = "V"


class Diag(str, Enum):
    SLASH = "/"
    BACKSLASH = "\\"


class DominoPattern(str, Enum):
    FALL = "F"
    RISE = "R"


class Symmetry(str, Enum):
    """The eight symmetries of the square grid."""

    IDENTITY = "identity"
    ROT90 = "rot90"
    ROT180 = "rot180"
    ROT270 = "rot270"
    FLIP_H = "flip_h"  # mirror across a horizontal line (rows reversed)
    FLIP_V = "flip_v"  # mirror across a vertical line (columns reversed)
    FLIP_MAIN = "flip_main"  # transpose
    FLIP_ANTI = "flip_anti"


def _apply_symmetry(s: Symmetry, rc: Coord, max_row: int, max_col: int) -> Coord:
    r, c = rc
    if s is Symmetry.IDENTITY:
        return (r, c)
    if s is Symmetry.ROT90:  # clockwise
        return (c, max_row - r)
    if s is Symmetry.ROT180:
        return (max_row - r, max_col - c)
    if s is Symmetry.ROT270:
        return (max_col - c, r)
    if s is Symmetry.FLIP_H:
        return (max_row - r, c)
    if s is Symmetry.FLIP_V:
        return (r, max_col - c)
    if s is Symmetry.FLIP_MAIN:
        return (c, r)
    if s is Symmetry.FLIP_ANTI:
        return (max_col - c, max_row - r)
    raise ValueError(s)


@dataclass(frozen=True)
class Domino:
    row: int
    col: int
    axis: Axis

    def cells(self) -> tuple[Coord, Coord]:
        if self.axis is Axis.H:
            return ((self.row, self.col), (self.row, self.col + 1))
        return ((self.row, self.col), (self.row + 1, self.col))

    def interior_edge(self) -> tuple[Coord, Coord]:
        """The grid edge shared by the two covered cells (absent from the graph)."""
        if self.axis is Axis.H:
            return ((self.row, self.col + 1), (self.row + 1, self.col + 1))
        return ((self.row + 1, self.col), (self.row + 1, self.col + 1))

    def corners(self) -> tuple[Coord, ...]:
        """The six hexagon corners: top row then bottom row for H, left then right for V."""
        r, c = self.row, self.col
        if self.axis is Axis.H:
            return ((r, c), (r, c + 1), (r, c + 2), (r + 1, c), (r + 1, c + 1), (r + 1, c + 2))
        return ((r, c), (r + 1, c), (r + 2, c), (r, c + 1), (r + 1, c + 1), (r + 2, c + 1))

    def chords(self, pattern: DominoPattern) -> tuple[tuple[Coord, Coord], ...]:
        r, c = self.row, self.col
        if self.axis is Axis.H:
            tl, tm, tr = (r, c), (r, c + 1), (r, c + 2)
            bl, bm, br = (r + 1, c), (r + 1, c + 1), (r + 1, c + 2)
            if pattern is DominoPattern.FALL:
                return ((tl, bm), (tl, br), (tm, br))
            return ((bl, tm), (bl, tr), (bm, tr))
        tl, tr = (r, c), (r, c + 1)
        ml, mr = (r + 1, c), (r + 1, c + 1)
        bl, br = (r + 2, c), (r + 2, c + 1)
        if pattern is DominoPattern.FALL:
            return ((tr, ml), (tr, bl), (mr, bl))
        return ((tl, mr), (tl, br), (ml, br))


@dataclass(frozen=True)
class Board:
    """A cell_rows x cell_cols rectangle of unit cells with disjoint domino tiles.

    At most one domino is accepted unless ``exploratory`` is set; the
    single-domino restriction is the scope of the theorem checks, while
    multi-domino boards exist only for exploration.
    """

    cell_rows: int
    cell_cols: int
    dominoes: tuple[Domino, ...] = ()
    exploratory: bool = False

    def __post_init__(self) -> None:
        if self.cell_rows < 1 or self.cell_cols < 1:
            raise ValueError("board needs at least one cell in each dimension")
        covered: set[Coord] = set()
        for d in self.dominoes:
            for cell in d.cells():
                r, c = cell
                if not (0 <= r < self.cell_rows and 0 <= c < self.cell_cols):
                    raise ValueError(f"domino {d} leaves the board")
                if cell in covered:
                    raise ValueError(f"domino {d} overlaps another domino")
                covered.add(cell)
        if len(self.dominoes) > 1 and not self.exploratory:
            raise ValueError(
                "more than one domino requires exploratory=True; "
                "theorem checks only cover single-domino boards"
            )

    @property
    def vertex_rows(self) -> int:
        return self.cell_rows + 1

    @property
    def vertex_cols(self) -> int:
        return self.cell_cols + 1

    @property
    def vertex_count(self) -> int:
        return self.vertex_rows * self.vertex_cols

    def vertex_id(self, rc: Coord) -> int:
        r, c = rc
        return r * self.vertex_cols + c

    def covered_cells(self) -> frozenset[Coord]:
        return frozenset(cell for d in self.dominoes for cell in d.cells())

    def unit_cells(self) -> tuple[Coord, ...]:
        """Cells not covered by any domino, in row-major order."""
        covered = self.covered_cells()
        return tuple(
            (r, c)
            for r in range(self.cell_rows)
            for c in range(self.cell_cols)
            if (r, c) not in covered
        )

    def spec_string(self) -> str:
        parts = [f"cells {self.cell_rows}x{self.cell_cols}"]
        parts += [f"domino {d.axis.value} {d.row} {d.col}" for d in self.dominoes]
        return "; ".join(parts)


_SPEC_CELLS = re.compile(r"^cells\s+(\d+)x(\d+)$")
_SPEC_DOMINO = re.compile(r"^domino\s+([HV])\s+(\d+)\s+(\d+)$")


def parse_board(spec: str, exploratory: bool = False) -> Board:
    """Parse the board mini-language, e.g. ``cells 2x2; domino H 0 0``."""
    parts = [p.strip() for p in spec.split(";") if p.strip()]
    if not parts:
        raise ValueError("empty board spec")
    m = _SPEC_CELLS.match(parts[0])
    if not m:
        raise ValueError(f"board spec must start with 'cells RxC': {spec!r}")
    rows, cols = int(m.group(1)), int(m.group(2))
    dominoes = []
    for part in parts[1:]:
        dm = _SPEC_DOMINO.match(part)
        if not dm:
            raise ValueError(f"bad domino clause {part!r}")
        dominoes.append(Domino(int(dm.group(2)), int(dm.group(3)), Axis(dm.group(1))))
    return Board(rows, cols, tuple(dominoes), exploratory=exploratory)


class Triangulation(NamedTuple):
    """One diagonal per unit cell (board order) and one pattern per domino."""

    cell_diag: tuple[Diag, ...]
    domino_pattern: tuple[DominoPattern, ...]

    def literal(self) -> str:
        return "".join(d.value for d in self.cell_diag) + "".join(
            p.value for p in self.domino_pattern
        )


def parse_triangulation(board: Board, literal: str) -> Triangulation:
    cells = board.unit_cells()
    expected = len(cells) + len(board.dominoes)
    if len(literal) != expected:
        raise ValueError(
            f"triangulation literal needs {len(cells)} diagonal chars plus "
            f"{len(board.dominoes)} pattern chars, got {literal!r}"
        )
    diags = tuple(Diag(ch) for ch in literal[: len(cells)])
    patterns = tuple(DominoPattern(ch) for ch in literal[len(cells):])
    return Triangulation(diags, patterns)


def flip_domino_pattern(t: Triangulation, which: int) -> Triangulation:
    """Swap FALL/RISE at one domino, leaving everything else unchanged."""
    if not 0 <= which < len(t.domino_pattern):
        raise IndexError(f"no domino at index {which}")
    flipped = (
        DominoPattern.RISE
        if t.domino_pattern[which] is DominoPattern.FALL
        else DominoPattern.FALL
    )
    patterns = t.domino_pattern[:which] + (flipped,) + t.domino_pattern[which + 1:]
    return Triangulation(t.cell_diag, patterns)


@dataclass(frozen=True)
class EmbeddedGraph:
    """A graph together with distinct integer grid coordinates per vertex."""

    graph: Graph
    coords: tuple[Coord, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.graph.n:
            raise ValueError("one coordinate per vertex required")
        if len(set(self.coords)) != len(self.coords):
            raise ValueError("coordinates must be distinct")

    def coord_index(self) -> dict[Coord, int]:
        return {rc: v for v, rc in enumerate(self.coords)}


def _diag_endpoints(cell: Coord, diag: Diag) -> tuple[Coord, Coord]:
    r, c = cell
    if diag is Diag.SLASH:
        return ((r + 1, c), (r, c + 1))
    return ((r, c), (r + 1, c + 1))


def _grid_edges(board: Board) -> list[tuple[Coord, Coord]]:
    skipped = {frozenset(d.interior_edge()) for d in board.dominoes}
    edges = []
    for r in range(board.vertex_rows):
        for c in range(board.vertex_cols):
            if c + 1 < board.vertex_cols:
                e = ((r, c), (r, c + 1))
                if frozenset(e) not in skipped:
                    edges.append(e)
            if r + 1 < board.vertex_rows:
                e = ((r, c), (r + 1, c))
                if frozenset(e) not in skipped:
                    edges.append(e)
    return edges


def _embed(board: Board, coord_edges: list[tuple[Coord, Coord]]) -> EmbeddedGraph:
    coords = tuple(
        (r, c) for r in range(board.vertex_rows) for c in range(board.vertex_cols)
    )
    g = Graph.from_edges(
        board.vertex_count,
        [(board.vertex_id(a), board.vertex_id(b)) for a, b in coord_edges],
    )
    return EmbeddedGraph(g, coords)


def base_graph(board: Board) -> EmbeddedGraph:
    """The untriangulated vertex graph: all unit grid edges except domino interiors."""
    return _embed(board, _grid_edges(board))


def triangulate(board: Board, t: Triangulation) -> EmbeddedGraph:
    cells = board.unit_cells()
    if len(t.cell_diag) != len(cells) or len(t.domino_pattern) != len(board.dominoes):
        raise ValueError("triangulation shape does not match the board")
    edges = _grid_edges(board)
    for cell, diag in zip(cells, t.cell_diag):
        edges.append(_diag_endpoints(cell, diag))
    for domino, pattern in zip(board.dominoes, t.domino_pattern):
        edges.extend(domino.chords(pattern))
    return _embed(board, edges)


def enumerate_triangulations(board: Board) -> Iterator[Triangulation]:
    """All 2^(unit cells + dominoes) triangulations, in choice-vector order."""
    cells = board.unit_cells()
    m = len(cells) + len(board.dominoes)
    if m > 20:
        raise BudgetExceededError(f"{m} binary choices exceed the enumeration budget")
    slots = [(Diag.SLASH, Diag.BACKSLASH)] * len(cells)
    slots += [(DominoPattern.FALL, DominoPattern.RISE)] * len(board.dominoes)
    split = len(cells)
    for combo in product(*slots):
        yield Triangulation(combo[:split], combo[split:])


def domino_placements(cell_rows: int, cell_cols: int, axis: Axis) -> list[Domino]:
    if cell_rows < 1 or cell_cols < 1:
        raise ValueError("dimensions must be at least 1")
    if axis is Axis.H:
        return [
            Domino(r, c, Axis.H)
            for r in range(cell_rows)
            for c in range(cell_cols - 1)
        ]
    return [
        Domino(r, c, Axis.V) for r in range(cell_rows - 1) for c in range(cell_cols)
    ]


def _normalise(coords: list[Coord]) -> list[Coord]:
    min_r = min(r for r, _ in coords)
    min_c = min(c for _, c in coords)
    return [(r - min_r, c - min_c) for r, c in coords]


def transform(e: EmbeddedGraph, s: Symmetry) -> EmbeddedGraph:
    """Apply a grid symmetry, renumbering vertices row-major over the new layout."""
    max_r = max((r for r, _ in e.coords), default=0)
    max_c = max((c for _, c in e.coords), default=0)
    moved = _normalise([_apply_symmetry(s, rc, max_r, max_c) for rc in e.coords])
    order = sorted(range(len(moved)), key=lambda v: moved[v])
    perm = [0] * len(moved)
    for new, old in enumerate(order):
        perm[old] = new
    g = Graph.from_edges(e.graph.n, [(perm[u], perm[v]) for u, v in e.graph.edges])
    return EmbeddedGraph(g, tuple(moved[v] for v in order))


def transform_board(board: Board, s: Symmetry) -> Board:
    """The board occupying the transformed cell layout."""
    max_r, max_c = board.cell_rows - 1, board.cell_cols - 1
    swap = s in (Symmetry.ROT90, Symmetry.ROT270, Symmetry.FLIP_MAIN, Symmetry.FLIP_ANTI)
    dominoes = []
    for d in board.dominoes:
        cells = [_apply_symmetry(s, cell, max_r, max_c) for cell in d.cells()]
        first = min(cells)
        axis = Axis.H if cells[0][0] == cells[1][0] else Axis.V
        dominoes.append(Domino(first[0], first[1], axis))
    rows, cols = (board.cell_cols, board.cell_rows) if swap else (board.cell_rows, board.cell_cols)
    return Board(rows, cols, tuple(sorted(dominoes, key=lambda d: (d.row, d.col, d.axis.value))),
                 exploratory=board.exploratory)


def transform_triangulation(
    board: Board, t: Triangulation, s: Symmetry
) -> tuple[Board, Triangulation]:
    """Carry a triangulation along a board symmetry.

    Diagonals and chords are mapped pointwise and re-identified against the
    transformed board, so no per-symmetry case table is needed.
    """
    new_board = transform_board(board, s)
    max_r, max_c = board.vertex_rows - 1, board.vertex_cols - 1

    def move(p: Coord) -> Coord:
        return _apply_symmetry(s, p, max_r, max_c)

    new_cells = new_board.unit_cells()
    diag_for: dict[Coord, Diag] = {}
    for cell, diag in zip(board.unit_cells(), t.cell_diag):
        a, b = (move(p) for p in _diag_endpoints(cell, diag))
        target = (min(a[0], b[0]), min(a[1], b[1]))
        for candidate in (Diag.SLASH, Diag.BACKSLASH):
            if frozenset(_diag_endpoints(target, candidate)) == frozenset((a, b)):
                diag_for[target] = candidate
                break
        else:
            raise AssertionError("transformed diagonal does not fit its cell")

    # Dominoes were sorted during board transformation; recover the pattern of
    # each by matching transformed chord sets.
    pattern_for: dict[Domino, DominoPattern] = {}
    for domino, pattern in zip(board.dominoes, t.domino_pattern):
        moved_cells = [ _apply_symmetry(s, cell, board.cell_rows - 1, board.cell_cols - 1)
                        for cell in domino.cells() ]
        first = min(moved_cells)
        axis = Axis.H if moved_cells[0][0] == moved_cells[1][0] else Axis.V
        new_domino = Domino(first[0], first[1], axis)
        moved_chords = {frozenset((move(a), move(b))) for a, b in domino.chords(pattern)}
        for candidate in (DominoPattern.FALL, DominoPattern.RISE):
            if {frozenset(ch) for ch in new_domino.chords(candidate)} == moved_chords:
                pattern_for[new_domino] = candidate
                break
        else:
            raise AssertionError("transformed chords match neither pattern")

    new_t = Triangulation(
        tuple(diag_for[cell] for cell in new_cells),
        tuple(pattern_for[d] for d in new_board.dominoes),
    )
    return new_board, new_t
