"""Edge-color bookkeeping and the classification pipeline for 3-connected
planar graphs.

Every report ends in one of four outcomes:

* ``FixingVertex``: individualizing one vertex makes 1-WL over the 2-WL
  coloring discrete;
* ``DefinableMatching``: some edge color pairs two vertex classes perfectly,
  and contracting it keeps a 2-stable quotient coloring;
* ``ConnectedSubgraph``: one or two edge colors span a subgraph isomorphic to
  a named catalog graph, with the isomorphism attached;
* ``Unclassified``: nothing certified, with an audit of what was tried.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field

from .catalog import (
    EDGE_TRANSITIVE_BICOLORED,
    EDGE_TRANSITIVE_UNICOLORED,
    PLATONIC,
    C,
    CatalogId,
    Family,
    generate,
    match_catalog,
    normalize_parallel_subdivision,
    parallel_id,
)
from .graph import (
    Graph,
    GraphError,
    connected_components,
    contract_classes,
    edge_subgraph,
    induced_subgraph,
    to_json_dict,
)
from .isomorphism import check_isomorphism, isomorphic
from .structure import ComponentStats, color_edges, edge_colors, is_k_connected, is_planar
from .wl import (
    PairColoring,
    coloring_to_json,
    disc,
    find_fixing_vertex,
    is_k_stable,
    pair_coloring_from_keys,
    wl2,
)

TYPE_ORDER = ("I", "IIa", "IIb", "IIc", "III")

FIXING_VERTEX = "FixingVertex"
DEFINABLE_MATCHING = "DefinableMatching"
CONNECTED_SUBGRAPH = "ConnectedSubgraph"
UNCLASSIFIED = "Unclassified"


class PreconditionError(GraphError):
    """The input violates a documented precondition."""


class ClassificationError(RuntimeError):
    """A classification that is promised to succeed did not."""


# ---------------------------------------------------------------------------
# Edge-color table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeColorInfo:
    """One unordered edge-color class {c, c⁻¹} with c the smaller id."""

    color: int
    reverse: int
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]
    stats: ComponentStats
    type: str
    unicolored: bool
    endpoint_colors: tuple[int, ...]

    @property
    def colors(self) -> frozenset[int]:
        return frozenset((self.color, self.reverse))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for comp in self.components for v in comp)

    def to_json(self) -> dict:
        return {
            "color": self.color,
            "reverse": self.reverse,
            "type": self.type,
            "unicolored": self.unicolored,
            "endpoint_colors": list(self.endpoint_colors),
            "component_count": len(self.components),
            "n": self.stats.n,
            "m": self.stats.m,
            "f": self.stats.f,
            "edges": [list(e) for e in self.edges],
        }


def _edge_type(f: int, unicolored: bool, symmetric: bool, parts: int) -> str:
    if f <= 1:
        return "I"
    if f >= 3:
        return "III"
    if unicolored and not symmetric:
        return "IIc"
    return "IIb" if parts == 1 else "IIa"


def edge_color_table(g: Graph, pc: PairColoring) -> list[EdgeColorInfo]:
    """One record per unordered edge-color class, ordered by color id."""
    if not is_planar(g):
        raise PreconditionError("edge types need a planar graph")
    seen: set[int] = set()
    table = []
    for c in sorted(edge_colors(g, pc)):
        if c in seen:
            continue
        rev = pc.reverse(c)
        seen.update((c, rev))
        edges = tuple(color_edges(g, pc, (c, rev)))
        sub, orig = edge_subgraph(g, edges)
        comps = tuple(tuple(orig[i] for i in comp) for comp in connected_components(sub))
        sizes = set()
        for comp in comps:
            cs = set(comp)
            sizes.add((len(comp), sum(1 for u, _ in edges if u in cs)))
        if len(sizes) != 1:
            raise ClassificationError(f"components of color {c} differ in size: {sorted(sizes)}")
        stats = ComponentStats(*sizes.pop())
        ends = tuple(sorted({pc(v, v) for comp in comps for v in comp}))
        kind = _edge_type(stats.f, len(ends) == 1, c == rev, len(comps))
        table.append(EdgeColorInfo(c, rev, edges, comps, stats, kind, len(ends) == 1, ends))
    return table


def graph_type(table: Sequence[EdgeColorInfo]) -> str:
    """The maximal type of any edge color (I for graphs without edges)."""
    return max((info.type for info in table), key=TYPE_ORDER.index, default="I")


def _record(table: Sequence[EdgeColorInfo], c: int) -> EdgeColorInfo:
    for info in table:
        if c in info.colors:
            return info
    raise GraphError(f"{c} is not an edge color")


# ---------------------------------------------------------------------------
# Definable matchings and quotients
# ---------------------------------------------------------------------------


def defines_matching(g: Graph, pc: PairColoring, c: int) -> bool:
    """Whether every pair (v, w) of color c has χ(v, v) != χ(w, w), v as the
    only c-partner of w and w as the only c-partner of v."""
    if c not in edge_colors(g, pc):
        raise GraphError(f"{c} is not an edge color")
    pairs = pc.pairs(c)
    heads = [w for _, w in pairs]
    tails = [v for v, _ in pairs]
    if len(set(heads)) != len(heads) or len(set(tails)) != len(tails):
        return False
    return all(pc(v, v) != pc(w, w) for v, w in pairs)


def contract_matching(g: Graph, pc: PairColoring, c: int) -> tuple[Graph, PairColoring]:
    """Contract the pairs of color c and build the quotient coloring χ/c.

    The quotient color of (X1, X2) is the sorted multiset of χ over X1 x X2.
    """
    if not defines_matching(g, pc, c):
        raise GraphError(f"color {c} does not define a matching")
    matched = pc.pairs(c)
    covered = {v for p in matched for v in p}
    classes = sorted([sorted(p) for p in matched] + [[v] for v in range(g.n) if v not in covered])
    quotient, _ = contract_classes(g, classes)
    keys = [[tuple(sorted(pc(a, b) for a in x1 for b in x2)) for x2 in classes] for x1 in classes]
    return quotient, pair_coloring_from_keys(keys)


# ---------------------------------------------------------------------------
# Type III
# ---------------------------------------------------------------------------

_FIG2_UNI = tuple(C(t) for t in EDGE_TRANSITIVE_UNICOLORED)
_FIG2_BI = tuple(C(t) for t in EDGE_TRANSITIVE_BICOLORED)
_PLATONIC = tuple(C(t) for t in PLATONIC)


def _type_iii_cases(unicolored: bool, n: int) -> list[tuple[int, list[Family]]]:
    return [
        (1, [Family("CompleteBipartite")] if n >= 5 else []),
        (2, [Family("SSubdivision", counts=(2,), cycle_bases=True)]),
        (3, [] if unicolored else [Family(cid.family) for cid in _FIG2_BI]),
        (4, [Family(cid.family) for cid in _FIG2_UNI] if unicolored else []),
        (5, [Family("SSubdivision", bases=_FIG2_UNI, counts=(1,))]),
        (6, [Family("SSubdivision", bases=_PLATONIC, counts=(2,))]),
    ]


@dataclass(frozen=True)
class TypeIIIResult:
    case: int
    catalog_id: CatalogId
    vertices: tuple[int, ...]
    certificate: tuple[int, ...]


def classify_type_iii(g: Graph, pc: PairColoring, c: int) -> TypeIIIResult:
    """Match G[c] for a Type III color c against the six admissible shapes.

    Assumes g is 3-connected and planar.  The certificate maps catalog vertex
    i to vertex ``certificate[i]`` of g.
    """
    info = _record(edge_color_table(g, pc), c)
    if info.type != "III":
        raise GraphError(f"color {c} has Type {info.type}, not III")
    if len(info.components) != 1:
        raise ClassificationError(f"G[{c}] is not connected")
    sub, orig = edge_subgraph(g, info.edges)
    sub = sub.underlying()
    for case, fams in _type_iii_cases(info.unicolored, sub.n):
        found = match_catalog(sub, fams, certificate=True)
        if found is not None and case == 1 and found[0].params[0] != 2:
            found = None
        if found is not None:
            cid, phi = found
            return TypeIIIResult(case, cid, tuple(sorted(orig)), tuple(orig[x] for x in phi))
    raise ClassificationError(f"G[{c}] ({sub.n} vertices, {sub.m} edges) matches none of the six cases")


# ---------------------------------------------------------------------------
# Type II
# ---------------------------------------------------------------------------


def short_d_connections(g: Graph, pc: PairColoring, c: int, d: int) -> bool:
    """Whether two distinct components of G[c] are at {d, d⁻¹}-distance at most 2."""
    table = edge_color_table(g, pc)
    info = _record(table, c)
    if info.type != "IIa":
        raise GraphError(f"color {c} has Type {info.type}, not IIa")
    D = _record(table, d).colors
    comp_of = {v: i for i, comp in enumerate(info.components) for v in comp}
    for x, ci in comp_of.items():
        frontier = [x]
        seen = {x}
        for _ in range(2):
            nxt = []
            for a in frontier:
                for b in g.neighbors(a):
                    if b in seen or pc(a, b) not in D:
                        continue
                    if comp_of.get(b, ci) != ci:
                        return True
                    seen.add(b)
                    nxt.append(b)
            frontier = nxt
    return False


def _type_iia_families() -> list[Family]:
    return [
        Family("Truncated", bases=_PLATONIC),
        Family("Prism"),
        Family("Cuboctahedron"),
        Family("Rhombicuboctahedron"),
        Family("Rhombicosidodecahedron"),
        Family("C4Subdivision", bases=_PLATONIC),
        Family("CmStar"),
        Family("K2hStar"),
        Family("Chamfered", bases=_PLATONIC),
    ]


# families that also occur parallel-subdivided
_PARALLEL_BASES = ("Truncated", "Prism", "Cuboctahedron", "Rhombicuboctahedron", "Rhombicosidodecahedron", "Chamfered")


def _cm_star_from_cycle(base: Graph, f: dict[tuple[int, int], int]) -> CatalogId | None:
    # smoothing C_m* (with its connectors subdivided k times) leaves C_2m with
    # multiplicities alternating 2 and k
    m2 = base.n
    if m2 < 4 or m2 % 2 or base.m != m2 or any(base.degree(v) != 2 for v in range(m2)):
        return None
    order = [0]
    prev = -1
    while len(order) < m2:
        nxt = [w for w in base.neighbors(order[-1]) if w != prev][0]
        prev = order[-1]
        order.append(nxt)
    seq = [f[tuple(sorted((order[i], order[(i + 1) % m2])))] for i in range(m2)]
    for shift in (0, 1):
        s = seq[shift:] + seq[:shift]
        if all(x == 2 for x in s[0::2]) and len(set(s[1::2])) == 1:
            k = s[1]
            cid = C("CmStar", m2 // 2)
            if k == 0:
                return cid
            h = generate(cid)
            connectors = [e for e in h.edges if e[1] - e[0] != 1 and not (e[0] % 4 == 0 and e[1] == e[0] + 3)]
            return parallel_id(cid, {e: (k if e in connectors else 0) for e in h.edges})
    return None


def match_type_iia_subgraph(sub: Graph) -> CatalogId | None:
    """Match a connected G[c, d] against the families admissible for Type IIa."""
    direct = match_catalog(sub, _type_iia_families())
    if direct is not None:
        return direct
    try:
        base, f = normalize_parallel_subdivision(sub)
    except GraphError:
        return None
    fams = [fam for fam in _type_iia_families() if fam.tag in _PARALLEL_BASES]
    found = match_catalog(base, fams, certificate=True)
    if found is not None:
        cid, phi = found
        h = generate(cid)
        fc = {(a, b): f[tuple(sorted((phi[a], phi[b])))] for a, b in h.undirected_edges}
        return parallel_id(cid, fc) if any(fc.values()) else cid
    return _cm_star_from_cycle(base, f)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class AnalysisReport:
    outcome: str
    graph_type: str
    edge_colors: list[EdgeColorInfo]
    vertex: int | None = None
    color: int | None = None
    contracted: Graph | None = None
    quotient: PairColoring | None = None
    colors: tuple[int, ...] = ()
    catalog_id: CatalogId | None = None
    case: int | None = None
    subgraph_vertices: tuple[int, ...] = ()
    certificate: tuple[int, ...] = ()
    audit: dict = field(default_factory=dict)

    def witness_json(self) -> dict:
        if self.outcome == FIXING_VERTEX:
            return {"vertex": self.vertex}
        if self.outcome == DEFINABLE_MATCHING:
            return {
                "color": self.color,
                "graph": to_json_dict(self.contracted),
                "quotient": coloring_to_json(self.quotient),
            }
        if self.outcome == CONNECTED_SUBGRAPH:
            return {
                "colors": list(self.colors),
                "catalog": self.catalog_id.to_json(),
                "case": self.case,
                "vertices": list(self.subgraph_vertices),
                "certificate": list(self.certificate),
            }
        return {"audit": self.audit}

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "witness": self.witness_json(),
            "edge_colors": [info.to_json() for info in self.edge_colors],
            "graph_type": self.graph_type,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _subgraph_report(
    g: Graph, table: list[EdgeColorInfo], gtype: str, infos: Sequence[EdgeColorInfo], cid: CatalogId,
    case: int | None = None,
) -> AnalysisReport | None:
    edges = [e for info in infos for e in info.edges]
    sub, orig = edge_subgraph(g, edges)
    h = generate(cid).underlying()
    phi = isomorphic(h, sub.underlying())
    if phi is None:
        return None
    colors = tuple(sorted({c for info in infos for c in info.colors}))
    return AnalysisReport(
        CONNECTED_SUBGRAPH, gtype, table, colors=colors, catalog_id=cid, case=case,
        subgraph_vertices=tuple(orig), certificate=tuple(orig[x] for x in phi),
    )


def _try_fixing(g: Graph, pc: PairColoring, table, gtype, audit) -> AnalysisReport | None:
    v = find_fixing_vertex(g, pc)
    audit["fixing_vertex"] = v
    if v is None:
        return None
    return AnalysisReport(FIXING_VERTEX, gtype, table, vertex=v)


def _try_matching(g: Graph, pc: PairColoring, table, gtype, audit) -> AnalysisReport | None:
    for info in table:
        if defines_matching(g, pc, info.color):
            audit["matching_color"] = info.color
            contracted, quotient = contract_matching(g, pc, info.color)
            return AnalysisReport(
                DEFINABLE_MATCHING, gtype, table, color=info.color, contracted=contracted, quotient=quotient,
            )
    audit["matching_color"] = None
    return None


def _unclassified(table, gtype, audit) -> AnalysisReport:
    return AnalysisReport(UNCLASSIFIED, gtype, table, audit=audit)


def _family_rank(cid: CatalogId) -> int:
    if cid.family == "ParallelSubdivision":
        cid = cid.params[0]
    tags = [fam.tag for fam in _type_iia_families()]
    rank = {t: k for k, t in enumerate(tags)}
    # cuboctahedron, rhombicuboctahedron and rhombicosidodecahedron share one item
    rank["Rhombicuboctahedron"] = rank["Rhombicosidodecahedron"] = rank["Cuboctahedron"]
    return rank[cid.family]


def _classify_type_iia_subgraph(g, pc, table, gtype, audit) -> AnalysisReport | None:
    """Try every pair (c, d) with short d-connections; among the matches keep
    the one earliest in the family list, then the smallest subgraph, then the
    lowest (c, d)."""
    tried = audit.setdefault("pairs", [])
    best = None
    for cinfo in table:
        if cinfo.type != "IIa":
            continue
        for dinfo in table:
            if dinfo is cinfo or not short_d_connections(g, pc, cinfo.color, dinfo.color):
                continue
            sub, orig = edge_subgraph(g, cinfo.edges + dinfo.edges)
            comps = connected_components(sub)
            part = {orig[i] for i in comps[0]}
            infos = [_restrict(cinfo, part), _restrict(dinfo, part)]
            first, _ = edge_subgraph(g, infos[0].edges + infos[1].edges)
            cid = match_type_iia_subgraph(first)
            tried.append({"c": cinfo.color, "d": dinfo.color, "components": len(comps), "match": str(cid) if cid else None})
            if cid is None:
                continue
            key = (_family_rank(cid), first.m)
            if best is None or key < best[0]:
                best = (key, cinfo, dinfo, infos, cid)
    if best is None:
        return None
    _, cinfo, dinfo, infos, cid = best
    rep = _subgraph_report(g, table, gtype, infos, cid)
    if rep is not None:
        rep.colors = tuple(sorted(cinfo.colors | dinfo.colors))
    return rep


def _restrict(info: EdgeColorInfo, vs: set[int]) -> EdgeColorInfo:
    edges = tuple(e for e in info.edges if e[0] in vs)
    return EdgeColorInfo(
        info.color, info.reverse, edges, info.components, info.stats, info.type, info.unicolored,
        info.endpoint_colors,
    )


def classify_type_ii(g: Graph, pc: PairColoring, table: list[EdgeColorInfo] | None = None) -> AnalysisReport:
    """Classification for graphs whose maximal edge type is IIa, IIb or IIc."""
    if table is None:
        table = edge_color_table(g, pc)
    gtype = graph_type(table)
    if gtype not in ("IIa", "IIb", "IIc"):
        raise GraphError(f"graph has Type {gtype}, not II")
    audit: dict = {"graph_type": gtype}
    rep = _try_fixing(g, pc, table, gtype, audit)
    if rep is not None:
        return rep
    if gtype == "IIc":
        found = match_catalog(g, [Family("Bipyramid")])
        audit["families"] = ["Bipyramid"]
        if found is not None:
            rep = _subgraph_report(g, table, gtype, table, found)
            if rep is not None:
                return rep
        return _unclassified(table, gtype, audit)
    rep = _try_matching(g, pc, table, gtype, audit)
    if rep is not None:
        return rep
    if gtype == "IIb":
        info = next(i for i in table if i.type == "IIb")
        audit["families"] = ["Cycle"]
        rep = _subgraph_report(g, table, gtype, [info], C("Cycle", info.stats.n))
        return rep if rep is not None else _unclassified(table, gtype, audit)
    audit["families"] = [fam.tag for fam in _type_iia_families()]
    rep = _classify_type_iia_subgraph(g, pc, table, gtype, audit)
    return rep if rep is not None else _unclassified(table, gtype, audit)


# ---------------------------------------------------------------------------
# Top level
# ---------------------------------------------------------------------------


def analyze(g: Graph, pc: PairColoring | None = None) -> AnalysisReport:
    """Run 2-WL on a 3-connected planar graph and certify one of the outcomes."""
    if not is_planar(g):
        raise PreconditionError("graph is not planar")
    if not is_k_connected(g.underlying(), 3):
        raise PreconditionError("graph is not 3-connected")
    if pc is None:
        pc = wl2(g)
    table = edge_color_table(g, pc)
    gtype = graph_type(table)
    if gtype == "III":
        # a unicolored Type III color names an edge-transitive solid directly
        info = min((i for i in table if i.type == "III"), key=lambda i: (not i.unicolored, i.color))
        res = classify_type_iii(g, pc, info.color)
        rep = _subgraph_report(g, table, gtype, [info], res.catalog_id, res.case)
        if rep is None:
            raise ClassificationError(f"no certificate for {res.catalog_id}")
        return rep
    if gtype == "I":
        audit: dict = {"graph_type": gtype}
        rep = _try_fixing(g, pc, table, gtype, audit) or _try_matching(g, pc, table, gtype, audit)
        return rep if rep is not None else _unclassified(table, gtype, audit)
    return classify_type_ii(g, pc, table)


def verify_report(g: Graph, report: AnalysisReport, pc: PairColoring | None = None) -> bool:
    """Re-check the witness of a report from scratch."""
    if pc is None:
        pc = wl2(g)
    if report.outcome == FIXING_VERTEX:
        return disc(g, pc, [report.vertex]) == set(range(g.n))
    if report.outcome == DEFINABLE_MATCHING:
        if not defines_matching(g, pc, report.color):
            return False
        return is_k_stable(report.contracted, report.quotient)
    if report.outcome == CONNECTED_SUBGRAPH:
        cs = set(report.colors)
        vs = set(report.subgraph_vertices)
        edges = [e for e in color_edges(g, pc, cs) if e[0] in vs and e[1] in vs]
        sub, orig = edge_subgraph(g, edges)
        idx = {v: i for i, v in enumerate(orig)}
        h = generate(report.catalog_id).underlying()
        if len(report.certificate) != h.n or any(v not in idx for v in report.certificate):
            return False
        return check_isomorphism(h, sub.underlying(), [idx[v] for v in report.certificate])
    return False


# ---------------------------------------------------------------------------
# Edge-transitive graphs
# ---------------------------------------------------------------------------


def _et_families(n: int, m: int) -> list[Family]:
    counts = tuple(range(1, max(m, 1) + 1))
    return [
        *[Family(cid.family) for cid in _FIG2_UNI],
        Family("RhombicDodecahedron"),
        Family("RhombicTriacontahedron"),
        Family("Cycle"),
        Family("Star"),
        Family("SSubdivision", bases=(C("Complete", 2),), counts=counts),
        Family("SSubdivision", counts=counts, cycle_bases=True),
        Family("SSubdivision", bases=_FIG2_UNI, counts=counts),
    ]


def _classify_connected_et(g: Graph) -> CatalogId:
    if g.directed:
        cube = generate(C("BicoloredCube"))
        if isomorphic(cube, g) is not None:
            return C("BicoloredCube")
    und = g.underlying()
    cid = match_catalog(und, _et_families(und.n, und.m))
    if cid is None:
        raise ClassificationError(f"edge-transitive graph with {und.n} vertices and {und.m} edges not recognized")
    return cid


def classify_edge_transitive(g: Graph, pc: PairColoring | None = None) -> CatalogId:
    """Name a planar graph whose edges form a single 2-WL color class."""
    if not is_planar(g):
        raise PreconditionError("graph is not planar")
    if pc is None:
        pc = wl2(g)
    ce = edge_colors(g, pc)
    if not ce or len({frozenset((c, pc.reverse(c))) for c in ce}) != 1:
        raise PreconditionError("edges do not form a single color class")
    comps = connected_components(g)
    if any(len(comp) == 1 for comp in comps):
        raise PreconditionError("isolated vertices next to edges")
    if len(comps) == 1:
        return _classify_connected_et(g)
    parts = [induced_subgraph(g, comp)[0] for comp in comps]
    first = _classify_connected_et(parts[0])
    h = generate(first)
    for part in parts[1:]:
        same = isomorphic(h, part) if h.directed else isomorphic(h, part.underlying())
        if same is None:
            raise ClassificationError("components are not isomorphic")
    return C("DisjointCopies", first, len(parts))


__all__ = [
    "AnalysisReport",
    "ClassificationError",
    "EdgeColorInfo",
    "PreconditionError",
    "TypeIIIResult",
    "analyze",
    "classify_edge_transitive",
    "classify_type_ii",
    "classify_type_iii",
    "contract_matching",
    "defines_matching",
    "edge_color_table",
    "graph_type",
    "short_d_connections",
    "verify_report",
]
