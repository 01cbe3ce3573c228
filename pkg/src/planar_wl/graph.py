"""Finite simple graphs, basic queries, constructions and file formats.

Vertices are dense integers ``0..n-1``.  Undirected edges are stored as
``(u, v)`` with ``u < v``; directed edges are stored as given.  A graph may
carry a base arc coloring (loops plus both directions of every undirected edge,
or every directed edge) and, for generator outputs, an oriented face list.

Every constructor documents the vertex layout of its output so callers can
address specific vertices.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from functools import cached_property
from typing import IO

Edge = tuple[int, int]
Face = tuple[int, ...]

LOOP_COLOR = 1
ARC_COLOR = 2


class GraphError(ValueError):
    """Raised on malformed graphs or invalid construction arguments."""


# ---------------------------------------------------------------------------
# Graph type
# ---------------------------------------------------------------------------


class Graph:
    """An immutable finite simple graph.

    Attributes:
        n: number of vertices.
        edges: sorted edge tuple (undirected edges as ``(u, v)`` with u < v).
        directed: whether edges are ordered.
        arc_colors: optional base coloring of A(G), total on loops and arcs.
        faces: optional oriented face list (generator outputs only).
    """

    n: int
    edges: tuple[Edge, ...]
    directed: bool
    arc_colors: Mapping[Edge, int] | None
    faces: tuple[Face, ...] | None

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        directed: bool = False,
        arc_colors: Mapping[Edge, int] | None = None,
        faces: Iterable[Sequence[int]] | None = None,
    ) -> None:
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        seen: set[Edge] = set()
        norm: list[Edge] = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        self.n = n
        self.directed = bool(directed)
        self.edges = tuple(sorted(norm))
        if arc_colors is not None:
            colors = {(int(u), int(v)): int(c) for (u, v), c in arc_colors.items()}
            expected = set(self.arcs())
            if set(colors) != expected:
                raise GraphError("arc coloring must be total on the arcs and nothing else")
            self.arc_colors = colors
        else:
            self.arc_colors = None
        if faces is not None:
            fl = tuple(tuple(int(x) for x in f) for f in faces)
            self.faces = fl
            check_faces(self)
        else:
            self.faces = None

    # -- equality ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.directed == other.directed
            and self.edges == other.edges
            and self.arc_colors == other.arc_colors
            and self.faces == other.faces
        )

    def __hash__(self) -> int:
        return hash((self.n, self.directed, self.edges))

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adj(self) -> tuple[tuple[int, ...], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(tuple(sorted(s)) for s in nb)

    @cached_property
    def _out(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            out[u].add(v)
            if not self.directed:
                out[v].add(u)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def undirected_edges(self) -> tuple[Edge, ...]:
        """Edges of the underlying undirected graph, as sorted pairs."""
        return tuple(sorted({(min(u, v), max(u, v)) for u, v in self.edges}))

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in the underlying undirected graph."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_arc(self, u: int, v: int) -> bool:
        """True iff ``(u, v)`` is an arc (either direction of an undirected edge)."""
        return v in self._out[u]

    def adjacent(self, u: int, v: int) -> bool:
        """Adjacency in the underlying undirected graph."""
        return v in self._out[u] or u in self._out[v]

    def arcs(self) -> list[Edge]:
        """A(G): all loops and all arcs."""
        out = [(v, v) for v in range(self.n)]
        for u, v in self.edges:
            out.append((u, v))
            if not self.directed:
                out.append((v, u))
        return out

    def arc_color(self, u: int, v: int) -> int:
        """Base color of arc ``(u, v)``; 0 for non-arcs."""
        if u != v and not self.has_arc(u, v):
            return 0
        if self.arc_colors is not None:
            return self.arc_colors[(u, v)]
        return LOOP_COLOR if u == v else ARC_COLOR

    def underlying(self) -> Graph:
        """The undirected version, without colors or faces."""
        if not self.directed and self.arc_colors is None and self.faces is None:
            return self
        return Graph(self.n, self.undirected_edges)

    def undirected_with_faces(self) -> Graph:
        """The undirected version, keeping faces but dropping colors."""
        if not self.directed and self.arc_colors is None:
            return self
        return Graph(self.n, self.undirected_edges, faces=self.faces)

    def uncolored(self) -> Graph:
        return Graph(self.n, self.edges, directed=self.directed, faces=self.faces)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation")
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        colors = None
        if self.arc_colors is not None:
            colors = {(perm[u], perm[v]): c for (u, v), c in self.arc_colors.items()}
        faces = None
        if self.faces is not None:
            faces = [tuple(perm[x] for x in f) for f in self.faces]
        return Graph(self.n, edges, directed=self.directed, arc_colors=colors, faces=faces)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def neighbors(g: Graph, v: int) -> tuple[int, ...]:
    return g.neighbors(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def connected_components(g: Graph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Components of the underlying undirected graph (restricted to ``vertices``).

    Components are sorted lists, ordered by their smallest vertex.
    """
    allowed = set(range(g.n)) if vertices is None else set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the subgraph and the list of original vertices; new vertex ``i`` is
    ``originals[i]`` (ascending order).
    """
    originals = sorted(set(vertices))
    index = {v: i for i, v in enumerate(originals)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    colors = None
    if g.arc_colors is not None:
        colors = {(index[u], index[v]): c for (u, v), c in g.arc_colors.items() if u in index and v in index}
    return Graph(len(originals), edges, directed=g.directed, arc_colors=colors), originals


def edge_subgraph(g: Graph, edges: Iterable[Sequence[int]]) -> tuple[Graph, list[int]]:
    """Subgraph formed by ``edges`` and their endpoints.

    Edges are interpreted in the underlying undirected graph.  Returns the
    undirected subgraph and the ascending list of original vertices.
    """
    es = {(min(int(u), int(v)), max(int(u), int(v))) for u, v in edges}
    for u, v in es:
        if not g.adjacent(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
    originals = sorted({x for e in es for x in e})
    index = {v: i for i, v in enumerate(originals)}
    return Graph(len(originals), [(index[u], index[v]) for u, v in es]), originals


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degree(v) for v in range(g.n)))


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------


def face_arcs(face: Face) -> list[Edge]:
    return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


def check_faces(g: Graph) -> None:
    """Validate an oriented face list.

    Every arc of the underlying undirected graph must lie on exactly one face,
    the corners at every vertex must form a single rotation cycle, and each
    component must satisfy n - m + f = 2.
    """
    assert g.faces is not None
    und = g.undirected_edges
    wanted = {(u, v) for u, v in und} | {(v, u) for u, v in und}
    owner: dict[Edge, int] = {}
    for i, f in enumerate(g.faces):
        if len(f) < 2:
            raise GraphError("faces need at least two boundary vertices")
        for a in face_arcs(f):
            if a not in wanted:
                raise GraphError(f"face {f} uses non-edge {a}")
            if a in owner:
                raise GraphError(f"arc {a} lies on two faces")
            owner[a] = i
    if set(owner) != wanted:
        raise GraphError("some arc lies on no face")
    rot = rotation_system(g.n, g.faces)
    for v in range(g.n):
        nb = g.neighbors(v)
        if not nb:
            continue
        start, cur, steps = nb[0], rot[v][nb[0]], 1
        while cur != start:
            cur = rot[v][cur]
            steps += 1
        if steps != len(nb):
            raise GraphError(f"corners at vertex {v} do not form a single rotation")
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        cs = set(comp)
        m = sum(1 for u, _ in und if u in cs)
        f = sum(1 for face in g.faces if face[0] in cs)
        if len(comp) - m + f != 2:
            raise GraphError("face list violates Euler's formula")


def rotation_system(n: int, faces: Sequence[Face]) -> list[dict[int, int]]:
    """For each vertex v, map a neighbor t to the neighbor after t around v.

    A face walk ``t -> v -> w`` contributes ``rot[v][t] = w``.
    """
    rot: list[dict[int, int]] = [dict() for _ in range(n)]
    for f in faces:
        k = len(f)
        for i in range(k):
            t, v, w = f[i - 1], f[i], f[(i + 1) % k]
            rot[v][t] = w
    return rot


def _require_faces(g: Graph, faces: Sequence[Face] | None) -> tuple[Face, ...]:
    if faces is not None:
        return tuple(tuple(f) for f in faces)
    if g.faces is None:
        raise GraphError("face lists are required for this construction")
    return g.faces


def _subdivided_faces(g: Graph, faces: Sequence[Face], inner: Mapping[Edge, list[int]]) -> list[Face]:
    """Rewrite faces when edge (p, q) (p < q) is replaced by parallel paths.

    ``inner[(p, q)]`` lists the middle vertices x_1..x_k; an empty list keeps
    the edge.  Arc p->q runs through x_1, arc q->p through x_k, and the k-1
    digons between consecutive paths become 4-faces.
    """
    out: list[Face] = []
    for f in faces:
        walk: list[int] = []
        for u, v in face_arcs(f):
            walk.append(u)
            mids = inner.get((min(u, v), max(u, v)), [])
            if mids:
                walk.append(mids[0] if u < v else mids[-1])
        out.append(tuple(walk))
    for (p, q), mids in inner.items():
        for i in range(len(mids) - 1):
            out.append((q, mids[i], p, mids[i + 1]))
    return out


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> tuple[Graph, int]:
    """Disjoint union; vertices of ``g2`` are shifted by the returned offset.

    Base arc colors keep their values, so equal colors mean the same thing on
    both sides.  If only one side is colored the other side gets the default
    coloring.  Faces are kept when both sides have them.
    """
    if g1.directed != g2.directed:
        raise GraphError("cannot unite a directed and an undirected graph")
    off = g1.n
    edges = list(g1.edges) + [(u + off, v + off) for u, v in g2.edges]
    colors = None
    if g1.arc_colors is not None or g2.arc_colors is not None:
        colors = {(u, v): g1.arc_color(u, v) for u, v in g1.arcs()}
        colors.update({(u + off, v + off): g2.arc_color(u, v) for u, v in g2.arcs()})
    faces = None
    if g1.faces is not None and g2.faces is not None:
        faces = list(g1.faces) + [tuple(x + off for x in f) for f in g2.faces]
    return Graph(g1.n + g2.n, edges, directed=g1.directed, arc_colors=colors, faces=faces), off


def disjoint_copies(g: Graph, count: int) -> Graph:
    if count < 1:
        raise GraphError("need at least one copy")
    out = g
    for _ in range(count - 1):
        out, _ = disjoint_union(out, g)
    return out


def parallel_subdivide(h: Graph, f: Mapping[Sequence[int], int]) -> Graph:
    """Replace each edge e with f(e) > 0 parallel paths of length 2.

    Layout: vertices of ``h`` first; then, for each edge in ``h.edges`` order,
    its f(e) new middle vertices consecutively.
    """
    if h.directed:
        raise GraphError("parallel subdivision needs an undirected graph")
    fn = {(min(int(u), int(v)), max(int(u), int(v))): int(k) for (u, v), k in f.items()}
    if set(fn) != set(h.edges):
        raise GraphError("f must be total on the edges")
    if any(k < 0 for k in fn.values()):
        raise GraphError("f must be nonnegative")
    nxt = h.n
    edges: list[Edge] = []
    inner: dict[Edge, list[int]] = {}
    for u, v in h.edges:
        k = fn[(u, v)]
        if k == 0:
            edges.append((u, v))
            continue
        mids = list(range(nxt, nxt + k))
        nxt += k
        inner[(u, v)] = mids
        for x in mids:
            edges.append((u, x))
            edges.append((v, x))
    faces = _subdivided_faces(h, h.faces, inner) if h.faces is not None else None
    return Graph(nxt, edges, faces=faces)


def s_subdivide(h: Graph, s: int) -> Graph:
    """Replace every edge with ``s`` parallel paths of length 2.

    Layout: vertices of ``h`` first, then vertex ``h.n + j*s + i`` is the i-th
    middle vertex of edge ``h.edges[j]``.
    """
    if s < 1:
        raise GraphError("s must be positive")
    return parallel_subdivide(h, {e: s for e in h.edges})


def truncate(g: Graph, w_set: Iterable[int], faces: Sequence[Face] | None = None) -> Graph:
    """Truncate every vertex of ``w_set``.

    Each truncated vertex w of degree l becomes a cycle w_1..w_l following the
    rotation at w, where w_i takes over the edge to the i-th neighbor.
    Directed inputs are truncated on their underlying undirected graph.

    Layout: untouched vertices first in ascending order; then, for each w in
    ascending order, its copies in rotation order starting at the copy facing
    w's smallest neighbor.
    """
    fl = _require_faces(g, faces)
    ws = sorted(set(w_set))
    for w in ws:
        if not 0 <= w < g.n:
            raise GraphError(f"vertex {w} out of range")
        if g.degree(w) < 3:
            raise GraphError(f"cannot truncate vertex {w} of degree {g.degree(w)}")
    rot = rotation_system(g.n, fl)
    wset = set(ws)
    new_id: dict[int, int] = {}
    for v in range(g.n):
        if v not in wset:
            new_id[v] = len(new_id)
    copy: dict[tuple[int, int], int] = {}
    order: dict[int, list[int]] = {}
    nxt = len(new_id)
    for w in ws:
        start = g.neighbors(w)[0]
        seq = [start]
        while len(seq) < g.degree(w):
            seq.append(rot[w][seq[-1]])
        order[w] = seq
        for x in seq:
            copy[(w, x)] = nxt
            nxt += 1

    def end(v: int, toward: int) -> int:
        return copy[(v, toward)] if v in wset else new_id[v]

    edges = [(end(u, v), end(v, u)) for u, v in g.undirected_edges]
    for w in ws:
        seq = order[w]
        for i in range(len(seq)):
            edges.append((copy[(w, seq[i])], copy[(w, seq[(i + 1) % len(seq)])]))
    new_faces: list[Face] = []
    for f in fl:
        walk: list[int] = []
        k = len(f)
        for i in range(k):
            t, v, w = f[i - 1], f[i], f[(i + 1) % k]
            if v in wset:
                walk.extend((copy[(v, t)], copy[(v, w)]))
            else:
                walk.append(new_id[v])
        new_faces.append(tuple(walk))
    for w in ws:
        new_faces.append(tuple(copy[(w, x)] for x in reversed(order[w])))
    colors = None
    if g.arc_colors is not None and not g.directed:
        colors = {}
        fresh = max(g.arc_colors.values()) + 1
        for v in range(g.n):
            targets = [copy[(v, x)] for x in order[v]] if v in wset else [new_id[v]]
            for t in targets:
                colors[(t, t)] = g.arc_colors[(v, v)]
        for u, v in g.undirected_edges:
            a, b = end(u, v), end(v, u)
            colors[(a, b)] = g.arc_colors[(u, v)]
            colors[(b, a)] = g.arc_colors[(v, u)]
        for w in ws:
            seq = order[w]
            for i in range(len(seq)):
                a, b = copy[(w, seq[i])], copy[(w, seq[(i + 1) % len(seq)])]
                colors[(a, b)] = colors[(b, a)] = fresh
    return Graph(nxt, edges, arc_colors=colors, faces=new_faces)


def c4_subdivide(g: Graph) -> Graph:
    """Replace each edge vw by a 4-cycle (vw,1..4) attached via v(vw,1), w(vw,3).

    Layout: vertices of ``g`` first; edge ``g.edges[j] = (v, w)`` owns
    ``g.n + 4j + i`` for (vw, i+1).
    """
    und = g.undirected_edges
    edges: list[Edge] = []
    base = g.n
    idx: dict[Edge, int] = {}
    for j, (v, w) in enumerate(und):
        a = base + 4 * j
        idx[(v, w)] = a
        edges += [(a, a + 1), (a + 1, a + 2), (a + 2, a + 3), (a + 3, a), (v, a), (w, a + 2)]
    faces = None
    if g.faces is not None:
        faces = []
        for f in g.faces:
            walk: list[int] = []
            for u, v in face_arcs(f):
                walk.append(u)
                a = idx[(min(u, v), max(u, v))]
                walk.extend((a, a + 1, a + 2) if u < v else (a + 2, a + 3, a))
            faces.append(tuple(walk))
        for a in idx.values():
            faces.append((a, a + 3, a + 2, a + 1))
    return Graph(base + 4 * len(und), edges, faces=faces)


def contract_classes(g: Graph, partition: Sequence[Iterable[int]]) -> tuple[Graph, list[int]]:
    """Contract each class of ``partition`` to one vertex.

    Class ``i`` becomes vertex ``i``.  Returns the quotient (without colors or
    faces) and the map from old vertices to classes.
    """
    class_of = [-1] * g.n
    for i, cls in enumerate(partition):
        for v in cls:
            if not 0 <= v < g.n:
                raise GraphError(f"vertex {v} out of range")
            if class_of[v] != -1:
                raise GraphError(f"vertex {v} lies in two classes")
            class_of[v] = i
    if -1 in class_of:
        raise GraphError("partition does not cover every vertex")
    edges: set[Edge] = set()
    for u, v in g.edges:
        a, b = class_of[u], class_of[v]
        if a == b:
            continue
        edges.add((a, b) if g.directed else (min(a, b), max(a, b)))
    return Graph(len(partition), sorted(edges), directed=g.directed), class_of


def apex_augment(g: Graph, faces: Sequence[Face] | None = None) -> Graph:
    """Put a fresh vertex into every face, adjacent to the face's boundary.

    Layout: vertices of ``g`` first, then vertex ``g.n + i`` is the apex of
    face ``i``.  The output carries the triangulated face list.
    """
    fl = _require_faces(g, faces)
    edges = list(g.undirected_edges)
    new_faces: list[Face] = []
    for i, f in enumerate(fl):
        z = g.n + i
        for x in sorted(set(f)):
            edges.append((x, z))
        for u, v in face_arcs(f):
            new_faces.append((u, v, z))
    return Graph(g.n + len(fl), edges, faces=new_faces)


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------


def to_json_dict(g: Graph) -> dict:
    out: dict = {"directed": g.directed, "n": g.n, "edges": [list(e) for e in g.edges]}
    if g.arc_colors is not None:
        out["arc_colors"] = [[u, v, c] for (u, v), c in sorted(g.arc_colors.items())]
    if g.faces is not None:
        out["faces"] = [list(f) for f in g.faces]
    return out


def from_json_dict(data: Mapping) -> Graph:
    try:
        n = int(data["n"])
        directed = bool(data.get("directed", False))
        edges = [(int(u), int(v)) for u, v in data["edges"]]
        colors = None
        if data.get("arc_colors") is not None:
            colors = {(int(u), int(v)): int(c) for u, v, c in data["arc_colors"]}
        faces = data.get("faces")
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    return Graph(n, edges, directed=directed, arc_colors=colors, faces=faces)


def dumps(g: Graph) -> str:
    return json.dumps(to_json_dict(g), separators=(", ", ": "))


def loads(text: str) -> Graph:
    """Parse either graph JSON or the edge-list text format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc
        return from_json_dict(data)
    return parse_edge_list(text)


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: a header ``n m [d|u]`` followed by ``m`` lines ``u v``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0]
    if len(head) not in (2, 3) or (len(head) == 3 and head[2] not in ("d", "u")):
        raise GraphError("edge-list header must be 'n m [d|u]'")
    try:
        n, m = int(head[0]), int(head[1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges, directed=len(head) == 3 and head[2] == "d")


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m} {'d' if g.directed else 'u'}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(fp: IO[str]) -> Graph:
    return loads(fp.read())
