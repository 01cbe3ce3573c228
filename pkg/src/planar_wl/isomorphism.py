"""Exact graph isomorphism by individualization and refinement.

Both graphs are refined together inside their disjoint union, so their colors
share one namespace.  A branch is cut as soon as the two sides have different
color histograms; that is sound because refinement commutes with isomorphisms.
Exactness comes from exhaustive backtracking, refinement only prunes.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph, degree_sequence, disjoint_union
from .wl import refine_vertex_coloring


def _strip(g: Graph) -> Graph:
    return Graph(g.n, g.edges, directed=g.directed)


def _is_isomorphism(g: Graph, h: Graph, phi: list[int], colored: bool) -> bool:
    if sorted(phi) != list(range(h.n)):
        return False
    for u, v in g.edges:
        if not h.has_arc(phi[u], phi[v]):
            return False
    if colored:
        for u, v in g.arcs():
            if g.arc_color(u, v) != h.arc_color(phi[u], phi[v]):
                return False
    return True


def check_isomorphism(g: Graph, h: Graph, phi: list[int], respect_colors: bool = True) -> bool:
    """Verify edge by edge that ``phi`` maps ``g`` onto ``h``."""
    if g.n != h.n or g.m != h.m or g.directed != h.directed or len(phi) != g.n:
        return False
    colored = respect_colors and g.arc_colors is not None and h.arc_colors is not None
    return _is_isomorphism(g, h, list(phi), colored)


def isomorphic(g: Graph, h: Graph, respect_colors: bool = True) -> list[int] | None:
    """An isomorphism ``phi`` (g vertex v -> h vertex phi[v]) or None.

    Base arc colors are respected when both graphs carry them.
    """
    if g.n != h.n or g.m != h.m or g.directed != h.directed:
        return None
    if degree_sequence(g) != degree_sequence(h):
        return None
    colored = respect_colors and g.arc_colors is not None and h.arc_colors is not None
    if not colored:
        g, h = _strip(g), _strip(h)
    if g.n == 0:
        return []
    u, off = disjoint_union(g, h)
    loops = [u.arc_color(v, v) for v in range(u.n)]

    def search(pairs: list[tuple[int, int]]) -> list[int] | None:
        init: list[tuple] = [(0, c) for c in loops]
        for i, (a, b) in enumerate(pairs):
            init[a] = init[b] = (1, i)
        col = refine_vertex_coloring(u, init).colors
        left, right = col[:off], col[off:]
        if Counter(left) != Counter(right):
            return None
        counts = Counter(left)
        if all(k == 1 for k in counts.values()):
            where = {c: i for i, c in enumerate(right)}
            phi = [where[c] for c in left]
            return phi if _is_isomorphism(g, h, phi, colored) else None
        target = min((k, c) for c, k in counts.items() if k > 1)[1]
        v = left.index(target)
        for w in range(off, u.n):
            if col[w] == target:
                res = search(pairs + [(v, w)])
                if res is not None:
                    return res
        return None

    return search([])
