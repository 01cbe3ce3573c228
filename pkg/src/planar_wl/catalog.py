"""Named graph families: identifiers, generators, smoothing of parallel
subdivisions, and matching of a graph against a list of families."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

from . import _polyhedra as P
from .graph import (
    Graph,
    GraphError,
    c4_subdivide,
    degree_sequence,
    disjoint_copies,
    parallel_subdivide,
    s_subdivide,
    truncate,
)
from .isomorphism import isomorphic

# ---------------------------------------------------------------------------
# Identifiers
# ---------------------------------------------------------------------------

# family tag -> (cli name, parameter kinds); "int" parameters and nested "id"s
_FAMILIES: dict[str, tuple[str, tuple[str, ...]]] = {
    "Complete": ("complete", ("int",)),
    "CompleteBipartite": ("complete-bipartite", ("int", "int")),
    "Cycle": ("cycle", ("int",)),
    "Star": ("star", ("int",)),
    "Tetrahedron": ("tetrahedron", ()),
    "Cube": ("cube", ()),
    "Octahedron": ("octahedron", ()),
    "Dodecahedron": ("dodecahedron", ()),
    "Icosahedron": ("icosahedron", ()),
    "Cuboctahedron": ("cuboctahedron", ()),
    "Icosidodecahedron": ("icosidodecahedron", ()),
    "BicoloredCube": ("bicolored-cube", ()),
    "RhombicDodecahedron": ("rhombic-dodecahedron", ()),
    "RhombicTriacontahedron": ("rhombic-triacontahedron", ()),
    "Rhombicuboctahedron": ("rhombicuboctahedron", ()),
    "Rhombicosidodecahedron": ("rhombicosidodecahedron", ()),
    "Prism": ("prism", ("int",)),
    "Antiprism": ("antiprism", ("int",)),
    "Bipyramid": ("bipyramid", ("int",)),
    "Truncated": ("truncated", ("id",)),
    "Chamfered": ("chamfered", ("id",)),
    "SSubdivision": ("s-subdivision", ("id", "int")),
    "C4Subdivision": ("c4-subdivision", ("id",)),
    "CmStar": ("c-star", ("int",)),
    "K2hStar": ("k2h-star", ("int",)),
    "ParallelSubdivision": ("parallel-subdivision", ("id", "f")),
    "DisjointCopies": ("copies", ("id", "int")),
}
_BY_CLI = {cli: tag for tag, (cli, _) in _FAMILIES.items()}

PLATONIC = ("Tetrahedron", "Cube", "Octahedron", "Dodecahedron", "Icosahedron")
# the graphs drawn as edge-transitive with minimum degree 3, unicolored first
EDGE_TRANSITIVE_UNICOLORED = PLATONIC + ("Cuboctahedron", "Icosidodecahedron")
EDGE_TRANSITIVE_BICOLORED = ("BicoloredCube", "RhombicDodecahedron", "RhombicTriacontahedron")


class CatalogError(ValueError):
    """Raised for unknown families or invalid parameters."""


@dataclass(frozen=True)
class CatalogId:
    family: str
    params: tuple = ()

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise CatalogError(f"unknown family {self.family!r}")
        kinds = _FAMILIES[self.family][1]
        if len(kinds) != len(self.params):
            raise CatalogError(f"{self.family} takes {len(kinds)} parameters")
        for kind, p in zip(kinds, self.params):
            if kind == "int" and not isinstance(p, int):
                raise CatalogError(f"{self.family}: expected an integer, got {p!r}")
            if kind == "id" and not isinstance(p, CatalogId):
                raise CatalogError(f"{self.family}: expected a base family, got {p!r}")
        _validate(self)

    @property
    def base(self) -> CatalogId:
        return self.params[0]

    def __str__(self) -> str:
        if not self.params:
            return self.family
        parts = []
        for kind, p in zip(_FAMILIES[self.family][1], self.params):
            parts.append("f" if kind == "f" else str(p))
        return f"{self.family}({', '.join(parts)})"

    @property
    def cli_name(self) -> str:
        """kebab-case name, e.g. ``prism:4`` or ``s-subdivision:cycle:5:2``."""
        cli, kinds = _FAMILIES[self.family]
        if "f" in kinds:
            raise CatalogError("parallel subdivisions have no command-line name")
        parts = [cli]
        for kind, p in zip(kinds, self.params):
            parts.append(p.cli_name if kind == "id" else str(p))
        return ":".join(parts)

    def to_json(self) -> dict:
        out: dict = {"family": self.family}
        params = []
        for kind, p in zip(_FAMILIES[self.family][1], self.params):
            if kind == "id":
                params.append(p.to_json())
            elif kind == "f":
                params.append([[u, v, k] for (u, v), k in p])
            else:
                params.append(p)
        out["params"] = params
        out["name"] = str(self)
        return out


def _validate(cid: CatalogId) -> None:
    fam, p = cid.family, cid.params
    lows = {"Complete": 1, "Cycle": 3, "Star": 1, "Prism": 3, "Antiprism": 3, "Bipyramid": 3, "CmStar": 2, "K2hStar": 3}
    if fam in lows and p[0] < lows[fam]:
        raise CatalogError(f"{fam} needs parameter >= {lows[fam]}")
    if fam == "CompleteBipartite" and min(p) < 1:
        raise CatalogError("CompleteBipartite needs positive sides")
    if fam in ("SSubdivision", "DisjointCopies") and p[1] < 1:
        raise CatalogError(f"{fam} needs a positive count")
    if fam == "Chamfered" and p[0].family not in PLATONIC:
        raise CatalogError("chamfered solids exist for the five Platonic solids")


def parse_name(name: str) -> CatalogId:
    """Parse a kebab-case name such as ``k2h-star:5`` or ``truncated:cube``."""
    tokens = name.strip().split(":")
    cid, rest = _parse(tokens)
    if rest:
        raise CatalogError(f"trailing parameters in {name!r}")
    return cid


def _parse(tokens: list[str]) -> tuple[CatalogId, list[str]]:
    if not tokens or tokens[0] not in _BY_CLI:
        raise CatalogError(f"unknown family {tokens[0] if tokens else ''!r}")
    tag = _BY_CLI[tokens[0]]
    rest = tokens[1:]
    params: list = []
    for kind in _FAMILIES[tag][1]:
        if kind == "f":
            raise CatalogError("parallel subdivisions need an explicit edge map")
        if kind == "id":
            sub, rest = _parse(rest)
            params.append(sub)
        else:
            if not rest:
                raise CatalogError(f"{tokens[0]} is missing a parameter")
            try:
                params.append(int(rest[0]))
            except ValueError:
                raise CatalogError(f"bad integer {rest[0]!r}") from None
            rest = rest[1:]
    return CatalogId(tag, tuple(params)), rest


def C(family: str, *params) -> CatalogId:
    """Shorthand constructor: ``C("Prism", 4)``."""
    return CatalogId(family, tuple(params))


def parallel_id(base: CatalogId, f: Mapping[tuple[int, int], int]) -> CatalogId:
    items = tuple(sorted(((min(u, v), max(u, v)), int(k)) for (u, v), k in f.items()))
    return CatalogId("ParallelSubdivision", (base, items))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

_TETRA_FACES = ((0, 2, 1), (0, 1, 3), (0, 3, 2), (1, 2, 3))
BICOLORED_CUBE_RED = (0, 2, 5, 7)


def _cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], faces=[tuple(range(n)), tuple(reversed(range(n)))])


def _star(h: int) -> Graph:
    walk = []
    for i in range(1, h + 1):
        walk += [0, i]
    return Graph(h + 1, [(0, i) for i in range(1, h + 1)], faces=[tuple(walk)])


def _complete(n: int) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    faces = {1: None, 2: [(0, 1)], 3: [(0, 1, 2), (0, 2, 1)], 4: list(_TETRA_FACES)}.get(n)
    return Graph(n, edges, faces=faces)


def _complete_bipartite(a: int, b: int) -> Graph:
    if a == 1:
        return _star(b)
    if a == 2:
        return s_subdivide(_complete(2), b)
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _prism(m: int) -> Graph:
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    faces = [tuple(range(m)), tuple(m + i for i in reversed(range(m)))]
    faces += [((i + 1) % m, i, m + i, m + (i + 1) % m) for i in range(m)]
    return Graph(2 * m, edges, faces=faces)


def _antiprism(m: int) -> Graph:
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)] + [(m + i, (i + 1) % m) for i in range(m)]
    faces = [tuple(range(m)), tuple(m + i for i in reversed(range(m)))]
    for i in range(m):
        j = (i + 1) % m
        faces += [(j, i, m + i), (m + i, m + j, j)]
    return Graph(2 * m, edges, faces=faces)


def _bipyramid(m: int) -> Graph:
    edges = [(i, (i + 1) % m) for i in range(m)] + [(i, m) for i in range(m)] + [(i, m + 1) for i in range(m)]
    faces = []
    for i in range(m):
        j = (i + 1) % m
        faces += [(i, j, m), (j, i, m + 1)]
    return Graph(m + 2, edges, faces=faces)


def _cm_star(m: int) -> Graph:
    edges = []
    for i in range(m):
        a = 4 * i
        edges += [(a, a + 1), (a + 1, a + 2), (a + 2, a + 3), (a + 3, a)]
        edges.append((a + 2, 4 * ((i + 1) % m)))
    inner = tuple(x for i in range(m) for x in (4 * i, 4 * i + 1, 4 * i + 2))
    outer = tuple(x for i in reversed(range(m)) for x in (4 * i + 2, 4 * i + 3, 4 * i))
    faces = [inner, outer] + [(4 * i, 4 * i + 3, 4 * i + 2, 4 * i + 1) for i in range(m)]
    return Graph(4 * m, edges, faces=faces)


def _k2h_star(h: int) -> Graph:
    edges = []
    for i in range(h):
        a = 2 + 4 * i
        edges += [(a, a + 1), (a + 1, a + 2), (a + 2, a + 3), (a + 3, a), (0, a), (1, a + 2)]
    faces = []
    for i in range(h):
        a, b = 2 + 4 * i, 2 + 4 * ((i + 1) % h)
        faces.append((a, a + 3, a + 2, a + 1))
        faces.append((0, a, a + 1, a + 2, 1, b + 2, b + 3, b))
    return Graph(2 + 4 * h, edges, faces=faces)


def _bicolored_cube() -> Graph:
    red = set(BICOLORED_CUBE_RED)
    edges = [(u, v) if u in red else (v, u) for u, v in P.CUBE_EDGES]
    return Graph(8, edges, directed=True, faces=P.CUBE_FACES)


_FIXED = {
    "Tetrahedron": lambda: _complete(4),
    "Cube": lambda: Graph(8, P.CUBE_EDGES, faces=P.CUBE_FACES),
    "Octahedron": lambda: Graph(6, P.OCTAHEDRON_EDGES, faces=P.OCTAHEDRON_FACES),
    "Dodecahedron": lambda: Graph(20, P.DODECAHEDRON_EDGES, faces=P.DODECAHEDRON_FACES),
    "Icosahedron": lambda: Graph(12, P.ICOSAHEDRON_EDGES, faces=P.ICOSAHEDRON_FACES),
    "Cuboctahedron": lambda: Graph(12, P.CUBOCTAHEDRON_EDGES, faces=P.CUBOCTAHEDRON_FACES),
    "Icosidodecahedron": lambda: Graph(30, P.ICOSIDODECAHEDRON_EDGES, faces=P.ICOSIDODECAHEDRON_FACES),
    "BicoloredCube": _bicolored_cube,
    "RhombicDodecahedron": lambda: Graph(14, P.RHOMBIC_DODECAHEDRON_EDGES, faces=P.RHOMBIC_DODECAHEDRON_FACES),
    "RhombicTriacontahedron": lambda: Graph(
        32, P.RHOMBIC_TRIACONTAHEDRON_EDGES, faces=P.RHOMBIC_TRIACONTAHEDRON_FACES
    ),
    "Rhombicuboctahedron": lambda: Graph(24, P.RHOMBICUBOCTAHEDRON_EDGES, faces=P.RHOMBICUBOCTAHEDRON_FACES),
    "Rhombicosidodecahedron": lambda: Graph(
        60, P.RHOMBICOSIDODECAHEDRON_EDGES, faces=P.RHOMBICOSIDODECAHEDRON_FACES
    ),
}


def _chamfered(base: str) -> Graph:
    # truncate one vertex class of a bicolored edge-transitive solid
    if base == "Tetrahedron":
        return truncate(generate(C("Cube")), BICOLORED_CUBE_RED)
    host = generate(C("RhombicDodecahedron" if base in ("Cube", "Octahedron") else "RhombicTriacontahedron"))
    big = max(host.degree(v) for v in range(host.n))
    want_big = base in ("Cube", "Dodecahedron")
    ws = [v for v in range(host.n) if (host.degree(v) == big) == want_big]
    return truncate(host, ws)


@lru_cache(maxsize=512)
def generate(cid: CatalogId) -> Graph:
    """The graph of ``cid`` with its documented vertex layout.

    Polyhedral outputs carry oriented face lists.  Layouts: cycles, prisms,
    antiprisms and bipyramids number the rim 0..m-1 first; stars put the
    center at 0; C_m* uses 4i + (j - 1) for (i + 1, j); K_{2,h}* uses 0, 1 for
    the hubs and 2 + 4i + (j - 1) for (i + 1, j).
    """
    fam, p = cid.family, cid.params
    if fam in _FIXED:
        return _FIXED[fam]()
    if fam == "Complete":
        return _complete(p[0])
    if fam == "CompleteBipartite":
        return _complete_bipartite(*p)
    if fam == "Cycle":
        return _cycle(p[0])
    if fam == "Star":
        return _star(p[0])
    if fam == "Prism":
        return _prism(p[0])
    if fam == "Antiprism":
        return _antiprism(p[0])
    if fam == "Bipyramid":
        return _bipyramid(p[0])
    if fam == "CmStar":
        return _cm_star(p[0])
    if fam == "K2hStar":
        return _k2h_star(p[0])
    if fam == "Chamfered":
        return _chamfered(p[0].family)
    base = generate(p[0])
    if fam == "Truncated":
        return truncate(base, range(base.n))
    if fam == "SSubdivision":
        return s_subdivide(base.undirected_with_faces(), p[1])
    if fam == "C4Subdivision":
        return c4_subdivide(base.undirected_with_faces())
    if fam == "ParallelSubdivision":
        return parallel_subdivide(base.undirected_with_faces(), dict(p[1]))
    if fam == "DisjointCopies":
        return disjoint_copies(base, p[1])
    raise CatalogError(f"cannot generate {cid}")


# ---------------------------------------------------------------------------
# Smoothing parallel subdivisions
# ---------------------------------------------------------------------------


def normalize_parallel_subdivision(g: Graph) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Undo a parallel subdivision: (base, f) with parallel_subdivide(base, f) ≅ g.

    Every degree-2 vertex is read as the middle of a length-2 path between its
    two neighbors.  Base vertices keep their relative order.  Rejected: 2-regular
    graphs, adjacent degree-2 vertices, and a degree-2 vertex whose neighbors
    are adjacent (a simple base cannot keep and subdivide the same edge).
    """
    g = g.underlying()
    deg = [g.degree(v) for v in range(g.n)]
    if g.n and all(d == 2 for d in deg):
        raise GraphError("2-regular graphs have no unique smoothing")
    mids = [v for v in range(g.n) if deg[v] == 2]
    midset = set(mids)
    count: dict[tuple[int, int], int] = {}
    for x in mids:
        a, b = g.neighbors(x)
        if a in midset or b in midset:
            raise GraphError("adjacent degree-2 vertices")
        if g.adjacent(a, b):
            raise GraphError("a subdivided pair is also joined directly")
        count[(a, b)] = count.get((a, b), 0) + 1
    keep = [v for v in range(g.n) if v not in midset]
    idx = {v: i for i, v in enumerate(keep)}
    f: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        if u in idx and v in idx:
            f[(idx[u], idx[v])] = 0
    for (a, b), k in count.items():
        f[(idx[a], idx[b])] = k
    return Graph(len(keep), list(f)), f


# ---------------------------------------------------------------------------
# Matching against families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A family to search: a tag plus, for nested families, the admissible bases
    and, for subdivisions, the admissible subdivision counts."""

    tag: str
    bases: tuple[CatalogId, ...] = ()
    counts: tuple[int, ...] = ()
    cycle_bases: bool = False


def fixed(*tags: str) -> list[Family]:
    return [Family(t) for t in tags]


def _size(cid: CatalogId) -> tuple[int, int]:
    g = generate(cid)
    return g.n, len(g.undirected_edges)


def _candidates(fam: Family, n: int, m: int) -> Iterable[CatalogId]:
    tag = fam.tag
    if tag in _FIXED:
        yield C(tag)
    elif tag == "Complete":
        if n >= 1 and m == n * (n - 1) // 2:
            yield C(tag, n)
    elif tag == "CompleteBipartite":
        for a in range(1, n // 2 + 1):
            b = n - a
            if a * b == m:
                yield C(tag, a, b)
    elif tag == "Cycle":
        if n >= 3 and m == n:
            yield C(tag, n)
    elif tag == "Star":
        if n >= 2 and m == n - 1:
            yield C(tag, n - 1)
    elif tag in ("Prism", "Antiprism") and n % 2 == 0 and n >= 6:
        yield C(tag, n // 2)
    elif tag == "Bipyramid" and n >= 5:
        yield C(tag, n - 2)
    elif tag == "CmStar" and n % 4 == 0 and n >= 8:
        yield C(tag, n // 4)
    elif tag == "K2hStar" and (n - 2) % 4 == 0 and n >= 14:
        yield C(tag, (n - 2) // 4)
    elif tag in ("Truncated", "Chamfered", "C4Subdivision"):
        yield from (C(tag, b) for b in fam.bases)
    elif tag == "SSubdivision":
        for b in fam.bases:
            nb, mb = _size(b)
            for s in fam.counts:
                if nb + s * mb == n and 2 * s * mb == m:
                    yield C(tag, b, s)
        if fam.cycle_bases:
            # C_l subdivided s times: n = l (1 + s), m = 2 s l
            for s in fam.counts:
                if m % (2 * s) == 0:
                    ell = m // (2 * s)
                    if ell >= 3 and ell * (1 + s) == n:
                        yield C(tag, C("Cycle", ell), s)


def _cheap_match(g: Graph, cid: CatalogId) -> Graph | None:
    try:
        h = generate(cid)
    except (CatalogError, GraphError):
        return None
    if h.directed:
        h = h.underlying()
    if h.n != g.n or h.m != g.m or degree_sequence(h) != degree_sequence(g):
        return None
    return h


def match_catalog(
    g: Graph, families: Sequence[Family], certificate: bool = False
) -> CatalogId | tuple[CatalogId, list[int]] | None:
    """First catalog member (in the order of ``families``) isomorphic to ``g``.

    Parameters are inferred from the vertex and edge counts; only members with
    the same degree sequence reach the isomorphism test.  With ``certificate``
    the isomorphism (catalog vertex -> vertex of ``g``) is returned as well.
    """
    und = g.underlying()
    n, m = und.n, und.m
    for fam in families:
        for cid in _candidates(fam, n, m):
            h = _cheap_match(und, cid)
            if h is None:
                continue
            phi = isomorphic(h, und)
            if phi is not None:
                return (cid, phi) if certificate else cid
    return None


# ---------------------------------------------------------------------------
# Family lists used by the classifiers
# ---------------------------------------------------------------------------


def platonic_ids() -> tuple[CatalogId, ...]:
    return tuple(C(t) for t in PLATONIC)


def edge_transitive_ids() -> tuple[CatalogId, ...]:
    return tuple(C(t) for t in EDGE_TRANSITIVE_UNICOLORED)
