"""Small labeled undirected graphs with bit-set adjacency.

Vertices are 0..n-1 with n capped at 24 so every adjacency row fits in one
machine word.  Graphs are immutable values: safe to hash, share, and send
between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import GraphSizeError

MAX_VERTICES = 24
MAX_PATTERN_VERTICES = 12


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``edges`` is the sorted tuple of pairs (u, v), u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        masks = [0] * self.n
        prev: Optional[tuple[int, int]] = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e!r} is not a sorted in-range pair")
            if prev is not None and e <= prev:
                raise ValueError("edges must be strictly sorted (no duplicates)")
            prev = e
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from any iterable of (u, v) pairs, normalising order."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, tuple(sorted(norm)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    def relabel(self, perm: tuple[int, ...]) -> Graph:
        """Return the graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> Graph:
        return cls.from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]])


@dataclass(frozen=True)
class Colouring:
    """A vertex colouring; colour values are 1-based."""

    colours: tuple[int, ...]

    def is_proper_for(self, g: Graph) -> bool:
        return len(self.colours) == g.n and all(
            self.colours[u] != self.colours[v] for u, v in g.edges
        )

    @property
    def colour_count(self) -> int:
        return max(self.colours, default=0)


def is_k_colourable(g: Graph, k: int) -> Optional[Colouring]:
    """First proper k-colouring in lexicographic order, or None.

    Deterministic: vertices in index order, colours tried ascending, vertex 0
    pinned to colour 1.  Branches that would introduce colour c before all of
    1..c-1 appeared are skipped; this never changes the first witness.
    """
    if k < 0:
        raise ValueError("negative colour count")
    if g.n == 0:
        return Colouring(())
    if k == 0:
        return None
    assigned = [0] * g.n

    def extend(v: int, used: int) -> bool:
        if v == g.n:
            return True
        taken = 0
        m = g.adj[v]
        while m:
            low = m & -m
            taken |= 1 << assigned[low.bit_length() - 1]
            m ^= low
        top = min(k, used + 1)
        for c in range(1, top + 1):
            if taken >> c & 1:
                continue
            assigned[v] = c
            if extend(v + 1, max(used, c)):
                return True
        assigned[v] = 0
        return False

    if extend(0, 0):
        return Colouring(tuple(assigned))
    return None


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if is_k_colourable(g, k) is not None:
            return k
    raise AssertionError("unreachable: every graph is n-colourable")


def induced(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced on ``keep``, relabeled 0..|keep|-1 in ascending vertex order."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph.from_edges(len(kept), edges)


def _nbr_degrees(g: Graph, v: int) -> tuple[int, ...]:
    return tuple(sorted((g.degree(u) for u in bits(g.adj[v])), reverse=True))


def _dominates(host_degs: tuple[int, ...], pat_degs: tuple[int, ...]) -> bool:
    if len(host_degs) < len(pat_degs):
        return False
    return all(h >= p for h, p in zip(host_degs, pat_degs))


def _induced_search(host: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """Backtracking search for an induced embedding of pattern into host.

    The embedding preserves adjacency and non-adjacency.  Search order is
    deterministic: pattern vertices most-constrained-first, host candidates
    in ascending index.
    """
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return ()

    host_nd = [_nbr_degrees(host, h) for h in range(host.n)]
    pat_nd = [_nbr_degrees(pattern, p) for p in range(pattern.n)]
    candidates = [
        [
            h
            for h in range(host.n)
            if host.degree(h) >= pattern.degree(p)
            and _dominates(host_nd[h], pat_nd[p])
        ]
        for p in range(pattern.n)
    ]
    if any(not c for c in candidates):
        return None

    # Pattern vertex order: seed with the most constrained, then grow by
    # connectivity so each new vertex is checked against placed neighbours.
    order: list[int] = []
    placed_mask = 0
    remaining = set(range(pattern.n))
    while remaining:
        best = min(
            remaining,
            key=lambda p: (
                -((pattern.adj[p] & placed_mask).bit_count()),
                len(candidates[p]),
                -pattern.degree(p),
                p,
            ),
        )
        order.append(best)
        placed_mask |= 1 << best
        remaining.discard(best)

    mapping = [-1] * pattern.n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == pattern.n:
            return True
        p = order[i]
        for h in candidates[p]:
            if used >> h & 1:
                continue
            ok = True
            for q in order[:i]:
                if pattern.has_edge(p, q) != host.has_edge(h, mapping[q]):
                    ok = False
                    break
            if ok:
                mapping[p] = h
                used |= 1 << h
                if place(i + 1):
                    return True
                used ^= 1 << h
                mapping[p] = -1
        return False

    if place(0):
        return tuple(mapping)
    return None


def contains_induced(host: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """Injective map m with pattern-edge(u,v) iff host-edge(m(u),m(v)), or None."""
    if host.n > MAX_VERTICES:
        raise GraphSizeError(f"host has {host.n} > {MAX_VERTICES} vertices")
    if pattern.n > MAX_PATTERN_VERTICES:
        raise GraphSizeError(
            f"pattern has {pattern.n} > {MAX_PATTERN_VERTICES} vertices"
        )
    return _induced_search(host, pattern)


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def wheel(m: int) -> Graph:
    """Cycle of length m plus an all-adjacent hub; the hub is vertex m."""
    if m < 3:
        raise ValueError("wheel needs a cycle of length at least 3")
    edges = [(i, (i + 1) % m) for i in range(m)] + [(i, m) for i in range(m)]
    return Graph.from_edges(m + 1, edges)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _refine_colours(g: Graph, rounds: int = 4) -> tuple[int, ...]:
    """Iterated neighbourhood-signature refinement (Weisfeiler-Lehman style)."""
    colours = [g.degree(v) for v in range(g.n)]
    for _ in range(rounds):
        sigs = [
            (colours[v], tuple(sorted(colours[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colours:
            break
        colours = new
    return tuple(colours)


def refinement_hash(g: Graph) -> tuple:
    """Isomorphism-invariant key; collisions resolved by are_isomorphic."""
    return (g.n, g.edge_count, tuple(sorted(_refine_colours(g))))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test via refinement-guided backtracking."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if a.degree_sequence() != b.degree_sequence():
        return False
    ca, cb = _refine_colours(a), _refine_colours(b)
    if sorted(ca) != sorted(cb):
        return False

    order = sorted(range(a.n), key=lambda v: (sorted(ca).count(ca[v]), -a.degree(v), v))
    mapping = [-1] * a.n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == a.n:
            return True
        p = order[i]
        for h in range(b.n):
            if used >> h & 1 or cb[h] != ca[p]:
                continue
            ok = True
            for q in order[:i]:
                if a.has_edge(p, q) != b.has_edge(h, mapping[q]):
                    ok = False
                    break
            if ok:
                mapping[p] = h
                used |= 1 << h
                if place(i + 1):
                    return True
                used ^= 1 << h
                mapping[p] = -1
        return False

    return place(0)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism (n <= 6), in a fixed order."""
    if n > 6:
        raise GraphSizeError("exhaustive enumeration capped at 6 vertices")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    reps: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        key = refinement_hash(g)
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(g, r) for r in bucket):
            bucket.append(g)
            reps.append(g)
    return tuple(reps)
