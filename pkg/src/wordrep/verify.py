"""Exhaustive desk-scale checks of the colourability/representability equivalence.

Every triangulation of a board gets a Classification with three independent
verdicts: proper 3-colourability, word-representability (decided through
semi-transitive orientations, never through the forbidden catalog), and the
presence of a forbidden induced pattern.  Sweeps assert that the first two
verdicts agree and that the third tracks non-3-colourability, and they refuse
to claim exhaustiveness whenever any search ran out of budget.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Iterable, Optional

from .boards import (
    Axis,
    Board,
    EmbeddedGraph,
    Symmetry,
    domino_placements,
    enumerate_triangulations,
    flip_domino_pattern,
    parse_triangulation,
    transform_triangulation,
    triangulate,
)
from .catalog import (
    ClosurePolicy,
    ForbiddenSet,
    find_forbidden,
    forbidden_set,
    minimal_graphs,
)
from .errors import BudgetExceededError
from .graphs import (
    Graph,
    are_isomorphic,
    induced,
    is_k_colourable,
    refinement_hash,
    wheel,
)
from .orientations import (
    exists_semi_transitive,
    is_semi_transitive,
    orientation_from_colouring,
)

YES, NO, BUDGET = "yes", "no", "budget"


@dataclass(frozen=True)
class Classification:
    board: str
    triangulation: str
    three_colourable: bool
    word_representable: str  # yes | no | budget
    forbidden_hit: Optional[str]
    embedded_hit: Optional[str]  # what the translation matcher alone found
    certificate: Optional[dict]

    def to_json_obj(self) -> dict:
        return {
            "board": self.board,
            "triangulation": self.triangulation,
            "three_colourable": self.three_colourable,
            "word_representable": self.word_representable,
            "forbidden_hit": self.forbidden_hit,
            "embedded_hit": self.embedded_hit,
            "certificate": self.certificate,
        }


@dataclass(frozen=True)
class Violation:
    board: str
    triangulation: str
    kind: str
    detail: str

    def to_json_obj(self) -> dict:
        return {
            "board": self.board,
            "triangulation": self.triangulation,
            "kind": self.kind,
            "detail": self.detail,
        }


@dataclass
class SweepReport:
    policy: str
    boards_examined: int = 0
    triangulations_examined: int = 0
    violations: list[Violation] = field(default_factory=list)
    lemma_mismatches: list[Violation] = field(default_factory=list)
    budget_exceeded: int = 0
    embedded_hits: int = 0
    general_only_hits: int = 0
    board_counts: dict[str, int] = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations and self.budget_exceeded == 0

    def exit_code(self) -> int:
        if self.violations:
            return 1
        if self.budget_exceeded:
            return 3
        return 0

    def merge(self, other: "SweepReport") -> None:
        self.boards_examined += other.boards_examined
        self.triangulations_examined += other.triangulations_examined
        self.violations.extend(other.violations)
        self.lemma_mismatches.extend(other.lemma_mismatches)
        self.budget_exceeded += other.budget_exceeded
        self.embedded_hits += other.embedded_hits
        self.general_only_hits += other.general_only_hits
        self.board_counts.update(other.board_counts)
        self.elapsed_seconds += other.elapsed_seconds

    def to_json_obj(self) -> dict:
        # Wall-clock time is deliberately left out so reports stay
        # byte-identical across runs; timing goes to stderr diagnostics.
        return {
            "summary": True,
            "policy": self.policy,
            "boards_examined": self.boards_examined,
            "triangulations_examined": self.triangulations_examined,
            "violations": [v.to_json_obj() for v in self.violations],
            "lemma_mismatches": [v.to_json_obj() for v in self.lemma_mismatches],
            "budget_exceeded": self.budget_exceeded,
            "embedded_hits": self.embedded_hits,
            "general_only_hits": self.general_only_hits,
            "board_counts": self.board_counts,
            "passed": self.passed,
        }


class VerdictCache:
    """Isomorphism-class verdict cache.

    Only isomorphism-invariant facts are stored (representability verdict and
    forbidden-hit presence), so cache reuse can never change report contents,
    only skip redundant exhaustive searches.
    """

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[tuple[Graph, dict]]] = {}

    def lookup(self, g: Graph) -> Optional[dict]:
        for other, verdict in self._buckets.get(refinement_hash(g), ()):
            if are_isomorphic(g, other):
                return verdict
        return None

    def store(self, g: Graph, verdict: dict) -> None:
        self._buckets.setdefault(refinement_hash(g), []).append((g, verdict))


def classify(
    e: EmbeddedGraph,
    s: ForbiddenSet,
    *,
    board_id: str = "",
    triangulation: str = "",
    cache: Optional[VerdictCache] = None,
    edge_budget: Optional[int] = None,
) -> Classification:
    """Fill all three verdicts for one triangulation graph.

    Word-representability goes through the 3-colouring fast path when one
    exists (the certificate orientation is still re-checked) and otherwise
    through the exhaustive orientation search; the forbidden-pattern verdict
    is computed independently of both.
    """
    g = e.graph
    colouring = is_k_colourable(g, 3)
    cached = cache.lookup(g) if cache is not None else None

    certificate: Optional[dict] = None
    if colouring is not None:
        o = orientation_from_colouring(g, colouring)
        if not is_semi_transitive(o):
            raise AssertionError("3-colouring certificate failed self-check")
        wr = YES
        certificate = {"colouring": list(colouring.colours)}
    elif cached is not None and cached["wr"] in (NO, BUDGET):
        wr = cached["wr"]
    else:
        try:
            o = exists_semi_transitive(g, edge_budget)
        except BudgetExceededError:
            wr = BUDGET
        else:
            if o is None:
                wr = NO
            else:
                if not is_semi_transitive(o):
                    raise AssertionError("search certificate failed re-validation")
                wr = YES
                certificate = {"orientation": o.to_json_obj()}

    embedded = find_forbidden(e, s, embedded_only=True)
    if embedded is not None:
        hit_name: Optional[str] = embedded.name
    elif cached is not None and not cached["hit_present"]:
        hit_name = None
    else:
        general = find_forbidden(e, s)
        hit_name = general.name if general is not None else None

    if cache is not None and cached is None:
        cache.store(g, {"wr": wr, "hit_present": hit_name is not None})

    return Classification(
        board=board_id,
        triangulation=triangulation,
        three_colourable=colouring is not None,
        word_representable=wr,
        forbidden_hit=hit_name,
        embedded_hit=embedded.name if embedded is not None else None,
        certificate=certificate,
    )


def _classify_board_range(
    board: Board,
    literals: list[str],
    policy: ClosurePolicy,
    edge_budget: Optional[int],
) -> list[Classification]:
    s = forbidden_set(policy)
    cache = VerdictCache()
    board_id = board.spec_string()
    out = []
    for literal in literals:
        t = parse_triangulation(board, literal)
        out.append(
            classify(
                triangulate(board, t),
                s,
                board_id=board_id,
                triangulation=literal,
                cache=cache,
                edge_budget=edge_budget,
            )
        )
    return out


def _pool_worker(args) -> list[Classification]:
    return _classify_board_range(*args)


def classify_board(
    board: Board,
    policy: ClosurePolicy = ClosurePolicy.EXTENDED,
    jobs: int = 1,
    edge_budget: Optional[int] = None,
) -> list[Classification]:
    """Classify every triangulation of a board, in choice-vector order."""
    literals = [t.literal() for t in enumerate_triangulations(board)]
    if jobs <= 1 or len(literals) < 4:
        return _classify_board_range(board, literals, policy, edge_budget)
    # Few large chunks: the per-chunk isomorphism cache loses its value when
    # the work is sliced too finely.
    chunk = max(1, (len(literals) + jobs - 1) // jobs)
    ranges = [literals[i : i + chunk] for i in range(0, len(literals), chunk)]
    with get_context("fork").Pool(jobs) as pool:
        parts = pool.map(
            _pool_worker,
            [(board, part, policy, edge_budget) for part in ranges],
        )
    return [c for part in parts for c in part]


def verify_theorem(
    board: Board,
    policy: ClosurePolicy = ClosurePolicy.EXTENDED,
    jobs: int = 1,
    edge_budget: Optional[int] = None,
) -> tuple[SweepReport, list[Classification]]:
    """Check 3-colourable <=> word-representable (and the forbidden-set lemma)
    over every triangulation of one board."""
    if len(board.dominoes) > 1:
        raise ValueError("theorem checks cover boards with at most one domino")
    started = time.monotonic()
    report = SweepReport(policy=policy.value, boards_examined=1)
    classifications = classify_board(board, policy, jobs, edge_budget)
    report.triangulations_examined = len(classifications)
    report.board_counts[board.spec_string()] = len(classifications)
    for c in classifications:
        if c.word_representable == BUDGET:
            report.budget_exceeded += 1
        elif c.three_colourable != (c.word_representable == YES):
            report.violations.append(
                Violation(
                    c.board,
                    c.triangulation,
                    "equivalence",
                    f"three_colourable={c.three_colourable} but "
                    f"word_representable={c.word_representable}",
                )
            )
        hit_present = c.forbidden_hit is not None
        if hit_present != (not c.three_colourable):
            v = Violation(
                c.board,
                c.triangulation,
                "forbidden-set",
                f"three_colourable={c.three_colourable} but "
                f"forbidden_hit={c.forbidden_hit}",
            )
            if policy is ClosurePolicy.EXTENDED:
                report.violations.append(v)
            else:
                report.lemma_mismatches.append(v)
        if c.embedded_hit is not None:
            report.embedded_hits += 1
        elif hit_present:
            report.general_only_hits += 1
    report.elapsed_seconds = time.monotonic() - started
    return report, classifications


def verify_domino_flip(board: Board) -> SweepReport:
    """3-colourability must be invariant under swapping a domino's chord pattern."""
    if len(board.dominoes) != 1:
        raise ValueError("the flip check needs exactly one domino")
    started = time.monotonic()
    report = SweepReport(policy="-", boards_examined=1)
    for t in enumerate_triangulations(board):
        flipped = flip_domino_pattern(t, 0)
        a = is_k_colourable(triangulate(board, t).graph, 3) is not None
        b = is_k_colourable(triangulate(board, flipped).graph, 3) is not None
        report.triangulations_examined += 1
        if a != b:
            report.violations.append(
                Violation(
                    board.spec_string(),
                    t.literal(),
                    "domino-flip",
                    f"3-colourable={a} but flipped ({flipped.literal()}) gives {b}",
                )
            )
    report.board_counts[board.spec_string()] = report.triangulations_examined
    report.elapsed_seconds = time.monotonic() - started
    return report


WHEEL_CONTAINMENTS = {
    "A1": 9,
    "A2": 7,
    "A3": 7,
    "A4": 5,
    "A5": 5,
    "A6": 7,
    "A7": 7,
    "A8": 5,
    "B1": 5,
    "B2": 5,
}


def verify_catalog(edge_budget: Optional[int] = None) -> SweepReport:
    """Re-derive every stated fact about the catalog patterns and odd wheels."""
    from .graphs import contains_induced

    started = time.monotonic()
    report = SweepReport(policy="-")

    def fail(name: str, claim: str) -> None:
        report.violations.append(Violation("catalog", name, "catalog", claim))

    patterns = {p.name: p for p in minimal_graphs()}
    for name, p in patterns.items():
        g = p.embedded.graph
        report.triangulations_examined += 1
        if is_k_colourable(g, 3) is not None:
            fail(name, "expected non-3-colourable")
        try:
            if exists_semi_transitive(g, edge_budget) is not None:
                fail(name, "expected no semi-transitive orientation")
        except BudgetExceededError:
            report.budget_exceeded += 1

    # A1 contains a 9-wheel through deleting the leftmost middle-row vertex.
    a1 = patterns["A1"].embedded
    middle_left = a1.coord_index()[(1, 0)]
    rest = [v for v in range(a1.graph.n) if v != middle_left]
    if not are_isomorphic(induced(a1.graph, rest), wheel(9)):
        fail("A1", "deleting the leftmost middle-row vertex should leave a 9-wheel")

    for name, m in WHEEL_CONTAINMENTS.items():
        if contains_induced(patterns[name].embedded.graph, wheel(m)) is None:
            fail(name, f"expected an induced {m}-wheel")

    for m in (5, 7, 9):
        try:
            if exists_semi_transitive(wheel(m), edge_budget) is not None:
                fail(f"W{m}", "odd wheel should admit no semi-transitive orientation")
        except BudgetExceededError:
            report.budget_exceeded += 1

    report.elapsed_seconds = time.monotonic() - started
    return report


def sweep_boards(max_rows: int, max_cols: int) -> list[tuple[int, int]]:
    """Distinct board shapes up to rotation within the given bounds."""
    shapes = []
    for r in range(1, max_rows + 1):
        for c in range(1, max_cols + 1):
            if r > c and c <= max_rows and r <= max_cols:
                continue  # the quarter-turned twin is also in range
            shapes.append((r, c))
    return shapes


def sweep(
    max_rows: int,
    max_cols: int,
    domino_modes: Iterable[int] = (0, 1),
    policy: ClosurePolicy = ClosurePolicy.EXTENDED,
    jobs: int = 1,
    edge_budget: Optional[int] = None,
    check_flip: bool = True,
) -> tuple[SweepReport, list[Classification]]:
    """Drive the theorem check across all boards up to the given cell bounds.

    Mode 0 covers the bare board; mode 1 adds every horizontal-domino
    placement (vertical placements are images of horizontal ones under a
    quarter turn, which the board symmetry tests guard separately).
    """
    modes = set(domino_modes)
    if not modes <= {0, 1}:
        raise ValueError("domino modes are 0 (no domino) and 1 (single domino)")
    report = SweepReport(policy=policy.value)
    classifications: list[Classification] = []
    for rows, cols in sweep_boards(max_rows, max_cols):
        boards: list[Board] = []
        if 0 in modes:
            boards.append(Board(rows, cols))
        if 1 in modes:
            boards.extend(
                Board(rows, cols, (d,)) for d in domino_placements(rows, cols, Axis.H)
            )
        for board in boards:
            sub, cls = verify_theorem(board, policy, jobs, edge_budget)
            report.merge(sub)
            classifications.extend(cls)
            if check_flip and len(board.dominoes) == 1:
                flip_report = verify_domino_flip(board)
                report.violations.extend(flip_report.violations)
                report.elapsed_seconds += flip_report.elapsed_seconds
    # boards_examined counted per verify_theorem call already; flip checks reuse them
    return report, classifications


def verify_rotation_reduction(
    board: Board,
    policy: ClosurePolicy = ClosurePolicy.EXTENDED,
    jobs: int = 1,
    edge_budget: Optional[int] = None,
) -> tuple[SweepReport, SweepReport]:
    """Directly verify a vertical-domino board and its quarter-turned twin.

    Both sweeps must agree triangulation-by-triangulation on all three
    verdicts, validating the reduction that lets sweeps enumerate only
    horizontal placements.
    """
    if len(board.dominoes) != 1 or board.dominoes[0].axis is not Axis.V:
        raise ValueError("rotation-reduction check expects one vertical domino")
    direct, direct_cls = verify_theorem(board, policy, jobs, edge_budget)
    rotated_pairs = [
        transform_triangulation(board, t, Symmetry.ROT90)
        for t in enumerate_triangulations(board)
    ]
    rot_board = rotated_pairs[0][0]
    rotated, rotated_cls_unordered = verify_theorem(rot_board, policy, jobs, edge_budget)
    by_literal = {c.triangulation: c for c in rotated_cls_unordered}
    for c, (nb, nt) in zip(direct_cls, rotated_pairs):
        twin = by_literal[nt.literal()]
        if (
            c.three_colourable != twin.three_colourable
            or c.word_representable != twin.word_representable
            or (c.forbidden_hit is None) != (twin.forbidden_hit is None)
        ):
            direct.violations.append(
                Violation(
                    board.spec_string(),
                    c.triangulation,
                    "rotation-reduction",
                    f"disagrees with rotated twin {nt.literal()} on {nb.spec_string()}",
                )
            )
    return direct, rotated


def write_report(
    stream,
    report: SweepReport,
    classifications: Iterable[Classification] = (),
) -> None:
    """JSON lines: one classification per line, then one summary object."""
    for c in classifications:
        stream.write(json.dumps(c.to_json_obj(), sort_keys=True) + "\n")
    stream.write(json.dumps(report.to_json_obj(), sort_keys=True) + "\n")
