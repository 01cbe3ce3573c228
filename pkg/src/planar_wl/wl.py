"""Weisfeiler-Leman refinement: 1-WL, 1-WL over pair colorings, and 2-WL.

All colorings use canonical dense ids: every round sorts the refinement
signatures ``(previous id, sorted multiset)`` globally and numbers them in that
order.  Two runs on the same input therefore agree exactly.  Colors of
different graphs are only comparable inside one run, so cross-graph questions
go through the disjoint union.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, disjoint_union


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]
    round_count: int = 0

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[list[int]]:
        """Color classes ordered by color id."""
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]

    def fixed(self) -> set[int]:
        """Fix: vertices in singleton classes."""
        return {cls[0] for cls in self.classes() if len(cls) == 1}

    def is_discrete(self) -> bool:
        return self.num_colors == len(self.colors)


@dataclass(frozen=True, eq=False)
class PairColoring:
    """A coloring of all ordered pairs, stored as an n x n integer matrix."""

    matrix: np.ndarray
    round_count: int = 0

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairColoring):
            return NotImplemented
        return self.round_count == other.round_count and np.array_equal(self.matrix, other.matrix)

    @property
    def n(self) -> int:
        return int(self.matrix.shape[0])

    def __call__(self, v: int, w: int) -> int:
        return int(self.matrix[v, w])

    @property
    def colors(self) -> dict[tuple[int, int], int]:
        n = self.n
        return {(v, w): int(self.matrix[v, w]) for v in range(n) for w in range(n)}

    @property
    def num_colors(self) -> int:
        return int(len(np.unique(self.matrix)))

    def vertex_color(self, v: int) -> int:
        return int(self.matrix[v, v])

    def vertex_colors(self) -> set[int]:
        """C_V: the diagonal colors."""
        return {int(c) for c in np.diag(self.matrix)}

    def reverse(self, c: int) -> int:
        """The color of (w, v) for any pair (v, w) of color ``c``."""
        idx = np.argwhere(self.matrix == c)
        if len(idx) == 0:
            raise KeyError(c)
        v, w = idx[0]
        return int(self.matrix[w, v])

    def pairs(self, c: int) -> list[tuple[int, int]]:
        return [(int(v), int(w)) for v, w in np.argwhere(self.matrix == c)]


# ---------------------------------------------------------------------------
# Canonical relabeling
# ---------------------------------------------------------------------------


def _rank_rows(rows: np.ndarray) -> np.ndarray:
    """Dense ids of the rows of a 2-D integer array in lexicographic order."""
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    rows = np.ascontiguousarray(rows)
    order = np.lexsort(rows.T[::-1])
    srt = rows[order]
    new = np.ones(len(srt), dtype=bool)
    new[1:] = np.any(srt[1:] != srt[:-1], axis=1)
    ids_sorted = np.cumsum(new) - 1
    ids = np.empty(len(rows), dtype=np.int64)
    ids[order] = ids_sorted
    return ids


def _rank_tuples(keys: Sequence[tuple]) -> list[int]:
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


# ---------------------------------------------------------------------------
# 1-WL on arc-colored graphs
# ---------------------------------------------------------------------------


def refine_vertex_coloring(g: Graph, initial: Sequence[tuple]) -> VertexColoring:
    """Run 1-WL rounds on ``g`` from the initial vertex keys until stable."""
    col = _rank_tuples(list(initial))
    arc = {(u, v): g.arc_color(u, v) for u in range(g.n) for v in g.neighbors(u)}
    rounds = 0
    k = len(set(col))
    while True:
        sigs = []
        for v in range(g.n):
            ms = sorted((col[w], arc[(v, w)], arc[(w, v)]) for w in g.neighbors(v))
            sigs.append((col[v], tuple(ms)))
        new = _rank_tuples(sigs)
        k_new = len(set(new))
        if k_new == k:
            return VertexColoring(tuple(new), rounds)
        col, k = new, k_new
        rounds += 1


def wl1(g: Graph, individualized: Sequence[int] = ()) -> VertexColoring:
    """Stable 1-WL coloring of ``g`` (optionally with individualized vertices).

    The initial color of v is its loop color λ(v, v); each round appends the
    multiset of (χ(w), λ(v, w), λ(w, v)) over the neighbors w.
    """
    pos = _individualization(g.n, individualized)
    init = [(1, pos[v]) if v in pos else (0, g.arc_color(v, v)) for v in range(g.n)]
    return refine_vertex_coloring(g, init)


def _individualization(n: int, vs: Sequence[int]) -> dict[int, int]:
    pos: dict[int, int] = {}
    for i, v in enumerate(vs):
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range")
        if v in pos:
            raise GraphError("individualized vertices must be distinct")
        pos[v] = i
    return pos


# ---------------------------------------------------------------------------
# 1-WL over a pair coloring
# ---------------------------------------------------------------------------


def wl1_pair(g: Graph, pc: PairColoring, individualized: Sequence[int] = ()) -> VertexColoring:
    """1-WL on the complete graph whose pairs carry the colors of ``pc``.

    Individualized vertices start with colors (1, i), all others with
    (0, pc(v, v)).  Each round aggregates (χ(w), pc(v, w), pc(w, v)) over all
    w != v.
    """
    n = pc.n
    if g.n != n:
        raise GraphError("pair coloring does not match the graph")
    pos = _individualization(n, individualized)
    if n == 0:
        return VertexColoring((), 0)
    _, P = np.unique(pc.matrix, return_inverse=True)
    P = P.reshape(n, n).astype(np.int64)
    K = int(P.max()) + 1
    pair_key = P * K + P.T
    diag = np.diag(P)
    init = np.array([(1, pos[v]) if v in pos else (0, diag[v]) for v in range(n)], dtype=np.int64)
    col = _rank_rows(init)
    k = len(np.unique(col))
    eye = np.eye(n, dtype=bool)
    rounds = 0
    while True:
        keys = col[None, :] * (K * K) + pair_key
        keys[eye] = -1
        keys.sort(axis=1)
        rows = np.concatenate([col[:, None], keys], axis=1)
        new = _rank_rows(rows)
        k_new = int(new.max()) + 1
        if k_new == k:
            return VertexColoring(tuple(int(c) for c in new), rounds)
        col, k = new, k_new
        rounds += 1


# ---------------------------------------------------------------------------
# 2-WL
# ---------------------------------------------------------------------------


def initial_pair_colors(g: Graph) -> np.ndarray:
    """Atomic type of every ordered pair, together with the base arc colors."""
    n = g.n
    keys = []
    for v in range(n):
        lv = g.arc_color(v, v)
        for w in range(n):
            if v == w:
                keys.append((1, lv, lv, 0, 0, 0, 0))
            else:
                f, b = g.has_arc(v, w), g.has_arc(w, v)
                keys.append((0, lv, g.arc_color(w, w), int(f), g.arc_color(v, w), int(b), g.arc_color(w, v)))
    return np.array(_rank_tuples(keys), dtype=np.int64).reshape(n, n)


def wl2_round(X: np.ndarray, chunk_bytes: int = 1 << 26) -> np.ndarray:
    """One 2-WL round: new color of (v, w) from X(v, w) and the multiset of
    (X(u, w), X(v, u)) over all u."""
    n = X.shape[0]
    K = int(X.max()) + 1
    rows = np.empty((n * n, n + 1), dtype=np.int64)
    rows[:, 0] = X.reshape(-1)
    step = max(1, chunk_bytes // (8 * n * n))
    XT = X.T
    for a in range(0, n, step):
        b = min(n, a + step)
        # block[i, w, u] = X(u, w) * K + X(v, u) with v = a + i
        block = XT[None, :, :] * K + X[a:b, None, :]
        block.sort(axis=2)
        rows[a * n : b * n, 1:] = block.reshape((b - a) * n, n)
    return _rank_rows(rows).reshape(n, n)


def refine_pairs(X: np.ndarray, max_rounds: int | None = None) -> tuple[np.ndarray, int]:
    """Iterate 2-WL rounds from ``X`` until the partition is stable."""
    n = X.shape[0]
    cap = n * n if max_rounds is None else max_rounds
    X = _rank_rows(X.reshape(-1, 1)).reshape(n, n)
    k = int(X.max()) + 1 if n else 0
    rounds = 0
    while n:
        new = wl2_round(X)
        k_new = int(new.max()) + 1
        if k_new == k:
            return new, rounds
        X, k = new, k_new
        rounds += 1
        if rounds > cap:
            raise RuntimeError("2-WL exceeded its round bound")
    return X, rounds


def wl2(g: Graph) -> PairColoring:
    """The 2-stable coloring WL²(G) on all ordered pairs."""
    X, rounds = refine_pairs(initial_pair_colors(g))
    return PairColoring(X, rounds)


# ---------------------------------------------------------------------------
# Derived notions
# ---------------------------------------------------------------------------


def disc(g: Graph, pc: PairColoring, vs: Sequence[int]) -> set[int]:
    """Disc_G(vs): singleton classes of 1-WL over ``pc`` with ``vs`` individualized."""
    return wl1_pair(g, pc, vs).fixed()


def find_fixing_vertex(g: Graph, pc: PairColoring) -> int | None:
    """Lowest vertex v with disc(g, pc, [v]) = V(g), or None."""
    for v in range(g.n):
        if wl1_pair(g, pc, [v]).is_discrete():
            return v
    return None


def distinguishes(g: Graph, h: Graph, k: int) -> bool:
    """Whether k-WL (k in {1, 2}) tells ``g`` and ``h`` apart."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    if g.directed != h.directed:
        return True
    u, off = disjoint_union(g, h)
    if k == 1:
        col = wl1(u).colors
        return Counter(col[:off]) != Counter(col[off:])
    X = wl2(u).matrix
    return Counter(X[:off, :off].reshape(-1).tolist()) != Counter(X[off:, off:].reshape(-1).tolist())


def refines(finer: np.ndarray, coarser: np.ndarray) -> bool:
    """True iff equal colors in ``finer`` imply equal colors in ``coarser``."""
    pairs = np.unique(np.stack([finer.reshape(-1), coarser.reshape(-1)], axis=1), axis=0)
    return len(pairs) == len(np.unique(finer))


def is_k_stable(g: Graph, pc: PairColoring) -> bool:
    """pc refines WL²(g) and one more 2-WL round does not split it."""
    X = np.asarray(pc.matrix, dtype=np.int64)
    if X.shape != (g.n, g.n):
        return False
    if not refines(X, wl2(g).matrix):
        return False
    if g.n == 0:
        return True
    dense = _rank_rows(X.reshape(-1, 1)).reshape(g.n, g.n)
    return int(wl2_round(dense).max()) == int(dense.max())


def pair_coloring_from_keys(keys: Sequence[Sequence[object]]) -> PairColoring:
    """Canonical pair coloring from an n x n table of sortable keys."""
    n = len(keys)
    flat = [keys[v][w] for v in range(n) for w in range(n)]
    return PairColoring(np.array(_rank_tuples(flat), dtype=np.int64).reshape(n, n), 0)


# ---------------------------------------------------------------------------
# Dumps
# ---------------------------------------------------------------------------


def coloring_to_json(col: VertexColoring | PairColoring) -> dict:
    if isinstance(col, PairColoring):
        n = col.n
        colors = [[v, w, int(col.matrix[v, w])] for v in range(n) for w in range(n)]
        return {"kind": "pair", "rounds": col.round_count, "colors": colors}
    return {"kind": "vertex", "rounds": col.round_count, "colors": [[v, c] for v, c in enumerate(col.colors)]}


def dump_coloring(col: VertexColoring | PairColoring) -> str:
    return json.dumps(coloring_to_json(col))


def color_histogram(values: Iterable[int]) -> dict[int, int]:
    return dict(sorted(Counter(values).items()))
