"""Left-right planarity test (boolean only).

The graph is oriented by a depth-first search that records lowpoints and
nesting depths.  A second search processes outgoing edges in nesting order and
maintains a stack of conflict pairs: return edges that must lie on opposite
sides.  The graph is planar iff no conflict pair ever needs both sides at once.
No embedding is produced.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager

from .graph import Graph, connected_components

Arc = tuple[int, int]


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: Arc | None = None, high: Arc | None = None) -> None:
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)


class _Pair:
    __slots__ = ("left", "right")

    def __init__(self, left: _Interval | None = None, right: _Interval | None = None) -> None:
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


@contextmanager
def _recursion(limit: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


class _LRTest:
    def __init__(self, n: int, adj: list[list[int]]) -> None:
        self.n = n
        self.adj = adj
        self.height: list[int | None] = [None] * n
        self.parent_edge: list[Arc | None] = [None] * n
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.oriented: set[frozenset[int]] = set()
        self.lowpt: dict[Arc, int] = {}
        self.lowpt2: dict[Arc, int] = {}
        self.nesting: dict[Arc, int] = {}
        self.ref: dict[Arc, Arc | None] = {}
        self.lowpt_edge: dict[Arc, Arc] = {}
        self.stack_bottom: dict[Arc, _Pair | None] = {}
        self.S: list[_Pair] = []

    # -- phase 1: orientation ------------------------------------------

    def orient(self, v: int) -> None:
        e = self.parent_edge[v]
        for w in self.adj[v]:
            key = frozenset((v, w))
            if key in self.oriented:
                continue
            self.oriented.add(key)
            vw = (v, w)
            self.out[v].append(w)
            self.lowpt[vw] = self.height[v]
            self.lowpt2[vw] = self.height[v]
            if self.height[w] is None:
                self.parent_edge[w] = vw
                self.height[w] = self.height[v] + 1
                self.orient(w)
            else:
                self.lowpt[vw] = self.height[w]
            self.nesting[vw] = 2 * self.lowpt[vw]
            if self.lowpt2[vw] < self.height[v]:
                self.nesting[vw] += 1
            if e is not None:
                if self.lowpt[vw] < self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                    self.lowpt[e] = self.lowpt[vw]
                elif self.lowpt[vw] > self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
                else:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])

    # -- phase 2: testing ------------------------------------------------

    def _top(self) -> _Pair | None:
        return self.S[-1] if self.S else None

    def _conflicting(self, iv: _Interval, b: Arc) -> bool:
        return not iv.empty() and self.lowpt[iv.high] > self.lowpt[b]

    def _lowest(self, p: _Pair) -> int:
        if p.left.empty():
            return self.lowpt[p.right.low]
        if p.right.empty():
            return self.lowpt[p.left.low]
        return min(self.lowpt[p.left.low], self.lowpt[p.right.low])

    def test(self, v: int) -> bool:
        e = self.parent_edge[v]
        first = True
        for w in self.out[v]:
            ei = (v, w)
            self.stack_bottom[ei] = self._top()
            if ei == self.parent_edge[w]:
                if not self.test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                self.S.append(_Pair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:
                if first:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
            first = False
        if e is not None:
            u = e[0]
            self._trim_back_edges(u)
            if self.lowpt[e] < self.height[u] and self.S:
                top = self.S[-1]
                hl, hr = top.left.high, top.right.high
                if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                    self.ref[e] = hl
                else:
                    self.ref[e] = hr
        return True

    def _add_constraints(self, ei: Arc, e: Arc) -> bool:
        p = _Pair()
        while True:
            q = self.S.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                return False
            if self.lowpt[q.right.low] > self.lowpt[e]:
                if p.right.empty():
                    p.right = q.right.copy()
                else:
                    self.ref[p.right.low] = q.right.high
                p.right.low = q.right.low
            else:
                self.ref[q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        while self.S and (
            self._conflicting(self.S[-1].left, ei) or self._conflicting(self.S[-1].right, ei)
        ):
            q = self.S.pop()
            if self._conflicting(q.right, ei):
                q.swap()
            if self._conflicting(q.right, ei):
                return False
            self.ref[p.right.low] = q.right.high
            if q.right.low is not None:
                p.right.low = q.right.low
            if p.left.empty():
                p.left = q.left.copy()
            else:
                self.ref[p.left.low] = q.left.high
            p.left.low = q.left.low
        if not (p.left.empty() and p.right.empty()):
            self.S.append(p)
        return True

    def _trim_back_edges(self, u: int) -> None:
        while self.S and self._lowest(self.S[-1]) == self.height[u]:
            self.S.pop()
        if not self.S:
            return
        p = self.S.pop()
        while p.left.high is not None and p.left.high[1] == u:
            p.left.high = self.ref.get(p.left.high)
        if p.left.high is None and p.left.low is not None:
            self.ref[p.left.low] = p.right.low
            p.left.low = None
        while p.right.high is not None and p.right.high[1] == u:
            p.right.high = self.ref.get(p.right.high)
        if p.right.high is None and p.right.low is not None:
            self.ref[p.right.low] = p.left.low
            p.right.low = None
        self.S.append(p)


def is_planar(g: Graph) -> bool:
    """Planarity of the underlying undirected graph."""
    n = g.n
    und = g.undirected_edges
    if n >= 3 and len(und) > 3 * n - 6:
        return False
    adj = [list(g.neighbors(v)) for v in range(n)]
    t = _LRTest(n, adj)
    roots = [comp[0] for comp in connected_components(g)]
    with _recursion(4 * n + 200):
        for r in roots:
            t.height[r] = 0
            t.orient(r)
        for v in range(n):
            t.out[v].sort(key=lambda w, v=v: t.nesting[(v, w)])
        for r in roots:
            if not t.test(r):
                return False
    return True
