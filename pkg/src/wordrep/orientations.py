"""Semi-transitive orientations: checking, searching, and colour-based construction.

An orientation is semi-transitive when it is acyclic and has no shortcut: a
directed path v1 -> ... -> vk (k >= 4) whose closing arc v1 -> vk is present
while some arc vi -> vj (i < j) is missing.  A graph is word-representable
exactly when it admits a semi-transitive orientation, which is what
``decide_word_representable`` computes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceededError
from .graphs import Colouring, Graph, bits, is_k_colourable

DEFAULT_EDGE_BUDGET = 48
MAX_SEARCH_VERTICES = 20

FORWARD = 1  # arc u -> v for the stored edge (u, v), u < v
BACKWARD = -1

ENV_EDGE_BUDGET = "WORDREP_BUDGET_EDGES"


def edge_budget_from_env(default: int = DEFAULT_EDGE_BUDGET) -> int:
    raw = os.environ.get(ENV_EDGE_BUDGET)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_EDGE_BUDGET} must be an integer, got {raw!r}") from exc


@dataclass(frozen=True)
class Orientation:
    """Per-edge directions over a graph; ``None`` marks an undecided edge."""

    graph: Graph
    directions: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        if len(self.directions) != self.graph.edge_count:
            raise ValueError("one direction slot per edge required")
        for d in self.directions:
            if d not in (FORWARD, BACKWARD, None):
                raise ValueError(f"bad direction value {d!r}")

    @property
    def is_total(self) -> bool:
        return all(d is not None for d in self.directions)

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for (u, v), d in zip(self.graph.edges, self.directions):
            if d == FORWARD:
                out.append((u, v))
            elif d == BACKWARD:
                out.append((v, u))
        return out

    def has_arc(self, tail: int, head: int) -> bool:
        key = (tail, head) if tail < head else (head, tail)
        try:
            i = self.graph.edges.index(key)
        except ValueError:
            return False
        d = self.directions[i]
        if d is None:
            return False
        return (d == FORWARD) == (tail < head)

    def out_masks(self) -> list[int]:
        out = [0] * self.graph.n
        for tail, head in self.arcs():
            out[tail] |= 1 << head
        return out

    def reversed(self) -> Orientation:
        return Orientation(
            self.graph,
            tuple(None if d is None else -d for d in self.directions),
        )

    def to_json_obj(self) -> dict:
        return {
            "edges": [
                [u, v, "uv" if d == FORWARD else "vu"]
                for (u, v), d in zip(self.graph.edges, self.directions)
                if d is not None
            ]
        }


def orientation_from_arcs(g: Graph, arcs: list[tuple[int, int]]) -> Orientation:
    index = {e: i for i, e in enumerate(g.edges)}
    dirs: list[Optional[int]] = [None] * g.edge_count
    for tail, head in arcs:
        key = (tail, head) if tail < head else (head, tail)
        if key not in index:
            raise ValueError(f"arc {tail}->{head} is not an edge of the graph")
        dirs[index[key]] = FORWARD if tail < head else BACKWARD
    return Orientation(g, tuple(dirs))


def _closure(out: list[int], n: int) -> Optional[tuple[list[int], list[int]]]:
    """Descendant and ancestor masks of a DAG, or None if a directed cycle exists."""
    indeg = [0] * n
    for u in range(n):
        m = out[u]
        while m:
            low = m & -m
            indeg[low.bit_length() - 1] += 1
            m ^= low
    order = [v for v in range(n) if indeg[v] == 0]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        m = out[u]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            indeg[v] -= 1
            if indeg[v] == 0:
                order.append(v)
            m ^= low
    if len(order) != n:
        return None
    desc = [0] * n
    for u in reversed(order):
        d = out[u]
        m = out[u]
        while m:
            low = m & -m
            d |= desc[low.bit_length() - 1]
            m ^= low
        desc[u] = d
    anc = [0] * n
    for u in range(n):
        m = desc[u]
        while m:
            low = m & -m
            anc[low.bit_length() - 1] |= 1 << u
            m ^= low
    return desc, anc


def is_acyclic(o: Orientation) -> bool:
    if not o.is_total:
        raise ValueError("acyclicity is only defined for total orientations")
    return _closure(o.out_masks(), o.graph.n) is not None


@dataclass(frozen=True)
class ShortcutWitness:
    """A directed path whose closing arc exists but misses a transitive arc."""

    path: tuple[int, ...]
    missing: tuple[int, int]

    def verify(self, o: Orientation) -> bool:
        p = self.path
        if len(p) < 4 or len(set(p)) != len(p):
            return False
        if not all(o.has_arc(p[i], p[i + 1]) for i in range(len(p) - 1)):
            return False
        if not o.has_arc(p[0], p[-1]):
            return False
        x, y = self.missing
        if x not in p or y not in p or p.index(x) >= p.index(y):
            return False
        return not o.has_arc(x, y)


def _bfs_path(out: list[int], src: int, dst: int) -> list[int]:
    if src == dst:
        return [src]
    parent = {src: -1}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in bits(out[u]):
                if v not in parent:
                    parent[v] = u
                    if v == dst:
                        path = [dst]
                        while path[-1] != src:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    nxt.append(v)
        frontier = nxt
    raise AssertionError("reachability promised a path that BFS cannot find")


def find_shortcut(o: Orientation) -> Optional[ShortcutWitness]:
    """A verifiable shortcut witness of a total acyclic orientation, or None."""
    if not o.is_total:
        raise ValueError("shortcut search needs a total orientation")
    g = o.graph
    out = o.out_masks()
    closed = _closure(out, g.n)
    if closed is None:
        raise ValueError("shortcut search needs an acyclic orientation")
    desc, anc = closed
    for tail, head in o.arcs():
        between = (desc[tail] | 1 << tail) & (anc[head] | 1 << head)
        for x in bits(between):
            bad = desc[x] & between & ~g.adj[x] & ~(1 << x)
            if bad:
                y = (bad & -bad).bit_length() - 1
                path = _bfs_path(out, tail, x)
                path += _bfs_path(out, x, y)[1:]
                path += _bfs_path(out, y, head)[1:]
                return ShortcutWitness(tuple(path), (x, y))
    return None


def is_semi_transitive(o: Orientation) -> bool:
    return is_acyclic(o) and find_shortcut(o) is None


def orientation_from_colouring(g: Graph, c: Colouring) -> Orientation:
    """Orient every edge from the lower colour class to the higher.

    Any directed path then climbs strictly through {1,2,3}, so it has at most
    three vertices and no shortcut can exist; the result is always
    semi-transitive.
    """
    if len(c.colours) != g.n:
        raise ValueError("colouring length does not match the graph")
    if any(col not in (1, 2, 3) for col in c.colours):
        raise ValueError("colour values must lie in {1, 2, 3}")
    if not c.is_proper_for(g):
        raise ValueError("colouring is not proper")
    dirs = tuple(
        FORWARD if c.colours[u] < c.colours[v] else BACKWARD for u, v in g.edges
    )
    return Orientation(g, dirs)


def _has_completed_shortcut(
    g: Graph, out: list[int], n: int, desc: list[int], anc: list[int]
) -> bool:
    """True if the partial orientation already contains a completed shortcut.

    The condition persists under any extension: arcs are only ever added, so
    reachability grows and non-adjacent pairs stay non-adjacent.
    """
    for u in range(n):
        m = out[u]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            between = (desc[u] | 1 << u) & (anc[v] | 1 << v)
            probe = between
            while probe:
                lp = probe & -probe
                x = lp.bit_length() - 1
                probe ^= lp
                if desc[x] & between & ~g.adj[x] & ~(1 << x):
                    return True
    return False


def exists_semi_transitive(
    g: Graph, edge_budget: Optional[int] = None
) -> Optional[Orientation]:
    """Exhaustive search for a semi-transitive orientation.

    Backtracks over edges (most-constrained-first), with incremental cycle
    detection, forced-edge propagation, and pruning as soon as a partial
    orientation already contains a completed shortcut.  Returns the first
    orientation found, None after exhausting the space, and raises
    BudgetExceededError when the graph is beyond the configured budget.
    """
    budget = DEFAULT_EDGE_BUDGET if edge_budget is None else edge_budget
    if g.n > MAX_SEARCH_VERTICES:
        raise BudgetExceededError(
            f"{g.n} vertices exceed the {MAX_SEARCH_VERTICES}-vertex search limit"
        )
    if g.edge_count > budget:
        raise BudgetExceededError(
            f"{g.edge_count} edges exceed the search budget of {budget}"
        )
    m = g.edge_count
    if m == 0:
        return Orientation(g, ())

    order = sorted(
        range(m),
        key=lambda i: (-min(g.degree(g.edges[i][0]), g.degree(g.edges[i][1])), g.edges[i]),
    )
    dirs: list[Optional[int]] = [None] * m
    out = [0] * g.n
    edge_index = {e: i for i, e in enumerate(g.edges)}
    n = g.n

    def apply(i: int, d: int, trail: list[int]) -> None:
        u, v = g.edges[i]
        tail, head = (u, v) if d == FORWARD else (v, u)
        dirs[i] = d
        out[tail] |= 1 << head
        trail.append(i)

    def undo(trail: list[int]) -> None:
        for i in reversed(trail):
            u, v = g.edges[i]
            d = dirs[i]
            tail, head = (u, v) if d == FORWARD else (v, u)
            out[tail] &= ~(1 << head)
            dirs[i] = None

    def propagate(trail: list[int]) -> bool:
        """Run conflict checks and forced-edge propagation to a fixpoint."""
        while True:
            closed = _closure(out, n)
            if closed is None:
                return False  # directed cycle
            desc, anc = closed
            if _has_completed_shortcut(g, out, n, desc, anc):
                return False
            forced: list[tuple[int, int]] = []
            for i in range(m):
                if dirs[i] is not None:
                    continue
                u, v = g.edges[i]
                u_reaches_v = bool(desc[u] >> v & 1)
                v_reaches_u = bool(desc[v] >> u & 1)
                if u_reaches_v and v_reaches_u:
                    return False
                if v_reaches_u:
                    forced.append((i, BACKWARD))  # u -> v would close a cycle
                elif u_reaches_v:
                    forced.append((i, FORWARD))
            if not forced:
                return True
            for i, d in forced:
                if dirs[i] is not None:
                    if dirs[i] != d:
                        return False
                    continue
                apply(i, d, trail)

    def solve(pos: int, first_branch: bool) -> bool:
        while pos < m and dirs[order[pos]] is not None:
            pos += 1
        if pos == m:
            return True
        i = order[pos]
        choices = (FORWARD,) if first_branch else (FORWARD, BACKWARD)
        for d in choices:
            trail: list[int] = []
            apply(i, d, trail)
            if propagate(trail) and solve(pos + 1, False):
                return True
            undo(trail)
        return False

    if solve(0, True):
        return Orientation(g, tuple(dirs))
    return None


def semi_transitive_certificate(
    g: Graph, edge_budget: Optional[int] = None
) -> Optional[Orientation]:
    """A semi-transitive orientation if one exists, else None (search exhausted).

    Fast path: any proper 3-colouring yields a certificate directly; the
    constructed orientation is still re-checked before being returned.
    """
    colouring = is_k_colourable(g, 3)
    if colouring is not None:
        o = orientation_from_colouring(g, colouring)
        if not is_semi_transitive(o):
            raise AssertionError(
                "colour-level orientation failed the semi-transitivity self-check"
            )
        return o
    return exists_semi_transitive(g, edge_budget)


def decide_word_representable(g: Graph, edge_budget: Optional[int] = None) -> bool:
    """True iff the graph admits a semi-transitive orientation.

    Raises BudgetExceededError instead of guessing when the search space is
    over budget.
    """
    return semi_transitive_certificate(g, edge_budget) is not None
