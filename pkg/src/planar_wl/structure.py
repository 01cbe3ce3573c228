"""Structural predicates: planarity, small connectivity, Euler face counts,
avoid-D reachability, C-distance and locally determined color sets."""

from __future__ import annotations

from collections import deque
from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, connected_components, edge_subgraph
from .planarity import is_planar
from .wl import PairColoring

__all__ = [
    "ComponentStats",
    "avoid_reachable",
    "c_distance",
    "color_edges",
    "component_stats",
    "edge_colors",
    "is_k_connected",
    "is_planar",
    "locally_determined",
]


@dataclass(frozen=True)
class ComponentStats:
    n: int
    m: int

    @property
    def f(self) -> int:
        """Face count by Euler's formula, n - m + f = 2."""
        return self.m - self.n + 2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.m, self.f)


def _component_count(g: Graph, removed: set[int]) -> int:
    return len(connected_components(g, (v for v in range(g.n) if v not in removed)))


def is_k_connected(g: Graph, k: int) -> bool:
    """Connected, and no set of at most k-1 vertices increases the number of
    components when removed.  Exhaustive; k must be 1, 2 or 3."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    if g.n == 0 or _component_count(g, set()) != 1:
        return False
    for size in range(1, k):
        for s in combinations(range(g.n), size):
            if _component_count(g, set(s)) > 1:
                return False
    return True


def component_stats(g: Graph, edge_subset: Iterable[Sequence[int]]) -> list[ComponentStats]:
    """(n_i, m_i, f_i) for each component of the subgraph formed by the edges.

    Components are ordered by their smallest original vertex.
    """
    if not is_planar(g):
        raise GraphError("face counts need a planar host graph")
    sub, _ = edge_subgraph(g, edge_subset)
    out = []
    for comp in connected_components(sub):
        cs = set(comp)
        m = sum(1 for u, _ in sub.edges if u in cs)
        out.append(ComponentStats(len(comp), m))
    return out


# ---------------------------------------------------------------------------
# Color-aware reachability
# ---------------------------------------------------------------------------


def edge_colors(g: Graph, pc: PairColoring) -> set[int]:
    """C_E: colors of pairs (v, w) whose underlying pair is an edge."""
    out = set()
    for u, v in g.undirected_edges:
        out.add(pc(u, v))
        out.add(pc(v, u))
    return out


def color_edges(g: Graph, pc: PairColoring, colors: Collection[int]) -> list[tuple[int, int]]:
    """Undirected edges of G[C]: edges {v, w} with χ(v, w) in C or χ(w, v) in C."""
    cs = set(colors)
    return [(u, v) for u, v in g.undirected_edges if pc(u, v) in cs or pc(v, u) in cs]


def avoid_reachable(g: Graph, pc: PairColoring, D: Collection[int], v: int) -> set[int]:
    """Vertices reachable from v by a path whose internal vertices all have
    vertex colors outside D (v itself included)."""
    ds = set(D)
    seen = {v}
    frontier = deque([v])
    while frontier:
        u = frontier.popleft()
        if u != v and pc(u, u) in ds:
            continue
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def c_distance(g: Graph, pc: PairColoring, C: Collection[int], v: int, w: int) -> int | None:
    """Shortest path length from v to w using only steps (a, b) with
    χ(a, b) in C; None if there is none."""
    cs = set(C)
    if v == w:
        return 0
    dist = {v: 0}
    frontier = deque([v])
    while frontier:
        a = frontier.popleft()
        for b in g.neighbors(a):
            if b not in dist and pc(a, b) in cs:
                dist[b] = dist[a] + 1
                if b == w:
                    return dist[b]
                frontier.append(b)
    return None


def locally_determined(g: Graph, pc: PairColoring, C: Collection[int]) -> bool:
    """Every component of G[C] contains an edge of every color of C."""
    cs = set(C)
    ce = edge_colors(g, pc)
    bad = cs - ce
    if bad:
        raise GraphError(f"not edge colors: {sorted(bad)}")
    sub, orig = edge_subgraph(g, color_edges(g, pc, cs))
    for comp in connected_components(sub):
        vs = {orig[i] for i in comp}
        seen: set[int] = set()
        for u, v in g.undirected_edges:
            if u in vs and v in vs:
                seen.add(pc(u, v))
                seen.add(pc(v, u))
        if not cs <= seen:
            return False
    return True
