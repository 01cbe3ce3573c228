from __future__ import annotations

import json
import random

import networkx as nx
import pytest

from corpus import corpus, load_fixture, prism_with_apex
from planar_wl.analyzer import (
    CONNECTED_SUBGRAPH,
    DEFINABLE_MATCHING,
    FIXING_VERTEX,
    TYPE_ORDER,
    PreconditionError,
    analyze,
    classify_edge_transitive,
    classify_type_ii,
    classify_type_iii,
    contract_matching,
    defines_matching,
    edge_color_table,
    graph_type,
    short_d_connections,
    verify_report,
)
from planar_wl.catalog import C, generate, parallel_id
from planar_wl.graph import Graph, GraphError, apex_augment, connected_components, disjoint_copies, edge_subgraph
from planar_wl.structure import is_k_connected
from planar_wl.wl import is_k_stable, wl1_pair, wl2

# two triangles a = 0..2 and b = 3..5 joined by the matching a_i b_i, plus an
# apex z = 6 over the b-triangle
M3_EDGES = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)]


def m3() -> Graph:
    return Graph(7, M3_EDGES)


def m3_double_apex() -> Graph:
    return Graph(8, M3_EDGES + [(0, 7), (1, 7), (2, 7)])


def record_of(table, edge):
    u, v = sorted(edge)
    return next(info for info in table if (u, v) in info.edges)


def small_corpus() -> list[tuple[str, Graph]]:
    return [(k, g) for k, g in corpus().items() if g.n <= 40]


# ---------------------------------------------------------------------------
# Edge-color table
# ---------------------------------------------------------------------------


def test_apex_cube_has_two_records():
    g = apex_augment(generate(C("Cube")))
    table = edge_color_table(g, wl2(g))
    assert len(table) == 2
    cube = record_of(table, generate(C("Cube")).edges[0])
    assert cube.stats.as_tuple() == (8, 12, 6)
    assert cube.type == "III" and cube.unicolored
    assert graph_type(table) == "III"


def test_mixed_type_fixture():
    g, doc = load_fixture("type_iii_example")
    table = edge_color_table(g, wl2(g))
    types = {name: {record_of(table, e).type for e in edges} for name, edges in doc["edge_groups"].items()}
    assert types["black"] == {"III"} and types["green"] == {"III"}
    assert types["yellow"] <= {"IIa", "IIb", "IIc"}
    assert types["pink"] == {"I"}


def test_directed_cycle_is_type_iic():
    g = Graph(5, [(i, (i + 1) % 5) for i in range(5)], directed=True)
    table = edge_color_table(g, wl2(g))
    assert len(table) == 1
    info = table[0]
    assert info.color != info.reverse and len(info.components) == 1 and info.stats.f == 2
    assert info.type == "IIc"


def test_table_errors():
    k5 = generate(C("Complete", 5))
    with pytest.raises(PreconditionError):
        edge_color_table(k5, wl2(k5))


def test_record_json():
    g = generate(C("Prism", 5))
    doc = edge_color_table(g, wl2(g))[0].to_json()
    assert list(doc) == [
        "color", "reverse", "type", "unicolored", "endpoint_colors", "component_count", "n", "m", "f", "edges",
    ]


# ---------------------------------------------------------------------------
# Edge type structure on the corpus
# ---------------------------------------------------------------------------


def _components(g: Graph, edges):
    sub, orig = edge_subgraph(g, edges)
    return [(sub, orig, comp) for comp in connected_components(sub)]


@pytest.mark.parametrize("name", [k for k, _ in small_corpus()])
def test_edge_type_structure(name):
    g = corpus()[name]
    pc = wl2(g)
    table = edge_color_table(g, pc)
    type3 = []
    for info in table:
        comps = _components(g, info.edges)
        assert len(comps) == len(info.components)
        for sub, _, comp in comps:
            cs = set(comp)
            es = [e for e in sub.edges if e[0] in cs]
            if info.type == "I":
                # a star: one vertex meets every edge
                assert any(all(v in e for e in es) for v in cs)
            elif info.type in ("IIa", "IIb", "IIc"):
                assert len(es) == len(cs) == info.stats.n
                assert all(sum(v in e for e in es) == 2 for v in cs)
            if info.type == "IIc":
                assert all(pc(*e) != pc(e[1], e[0]) for e in info.edges)
        if info.type == "III":
            assert len(info.components) == 1
            type3.append({v for e in info.edges for v in e})
    for a in type3:
        for b in type3:
            assert a & b


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------


def test_m3_matching():
    g = m3()
    pc = wl2(g)
    table = edge_color_table(g, pc)
    ab = record_of(table, (0, 3)).color
    assert defines_matching(g, pc, ab)
    assert sum(defines_matching(g, pc, i.color) for i in table) == 1
    q, qc = contract_matching(g, pc, ab)
    assert (q.n, q.m) == (4, 6)
    apex_colors = [qc(v, v) for v in range(4)]
    assert sorted(apex_colors.count(c) for c in set(apex_colors)) == [1, 3]
    assert is_k_stable(q, qc)
    # the quotient has no matching color of its own, and the old color is gone
    assert not any(defines_matching(q, qc, i.color) for i in edge_color_table(q, qc))
    with pytest.raises(GraphError):
        contract_matching(q, qc, ab)


def test_matching_negative_examples():
    cube = generate(C("Cube"))
    pc = wl2(cube)
    assert not defines_matching(cube, pc, pc(*cube.edges[0]))
    for h in (2, 3, 6):
        star = generate(C("Star", h))
        spc = wl2(star)
        assert not defines_matching(star, spc, spc(0, 1))
        assert not defines_matching(star, spc, spc(1, 0))
    with pytest.raises(GraphError):
        defines_matching(cube, pc, pc(0, 0))
    with pytest.raises(GraphError):
        contract_matching(cube, pc, pc(*cube.edges[0]))


def test_matching_quotients_are_stable_on_corpus():
    checked = 0
    graphs = [g for _, g in small_corpus()] + [prism_with_apex(m) for m in range(3, 9)]
    for g in graphs:
        pc = wl2(g)
        for info in edge_color_table(g, pc):
            for c in (info.color, info.reverse):
                if defines_matching(g, pc, c):
                    q, qc = contract_matching(g, pc, c)
                    assert is_k_stable(q, qc)
                    checked += 1
    assert checked >= 6


def test_prism_with_apex_has_a_definable_matching():
    for m in range(3, 9):
        g = prism_with_apex(m)
        rep = analyze(g)
        assert rep.outcome == DEFINABLE_MATCHING and verify_report(g, rep)


# ---------------------------------------------------------------------------
# Type III
# ---------------------------------------------------------------------------


def test_classify_type_iii_examples():
    g = apex_augment(generate(C("Dodecahedron")))
    pc = wl2(g)
    c = record_of(edge_color_table(g, pc), generate(C("Dodecahedron")).edges[0]).color
    res = classify_type_iii(g, pc, c)
    assert (res.case, res.catalog_id) == (4, C("Dodecahedron"))

    base = generate(C("SSubdivision", C("Tetrahedron"), 1))
    g = apex_augment(base)
    pc = wl2(g)
    c = record_of(edge_color_table(g, pc), base.edges[0]).color
    res = classify_type_iii(g, pc, c)
    # subdivision edges and apex edges fall into one bicolored class, which
    # forms a rhombic dodecahedron; the unicolored class left over is a cube
    assert (res.case, res.catalog_id) == (3, C("RhombicDodecahedron"))
    rep = analyze(g)
    assert (rep.case, rep.catalog_id) == (4, C("Cube"))

    base = generate(C("CompleteBipartite", 2, 4))
    g = apex_augment(base)
    pc = wl2(g)
    c = record_of(edge_color_table(g, pc), base.edges[0]).color
    res = classify_type_iii(g, pc, c)
    # the apex graph is the octagonal bipyramid and the class holds all 16 edges
    assert (res.case, res.catalog_id) == (1, C("CompleteBipartite", 2, 8))


def test_classify_type_iii_rejects_other_colors():
    g = generate(C("Prism", 5))
    pc = wl2(g)
    rim = record_of(edge_color_table(g, pc), (0, 1))
    assert rim.type == "IIa"
    with pytest.raises(GraphError):
        classify_type_iii(g, pc, rim.color)


def test_apex_icosahedron():
    rep = analyze(apex_augment(generate(C("Icosahedron"))))
    assert rep.outcome == CONNECTED_SUBGRAPH and rep.catalog_id == C("Icosahedron") and rep.case == 4
    assert len(rep.colors) <= 2


# ---------------------------------------------------------------------------
# Type II
# ---------------------------------------------------------------------------


def test_short_d_connections_on_fixture():
    g, doc = load_fixture("type_iia_example")
    pc = wl2(g)
    table = edge_color_table(g, pc)
    black = record_of(table, doc["edge_groups"]["black"][0])
    green = record_of(table, doc["edge_groups"]["green"][0])
    assert black.type == "IIa"
    assert short_d_connections(g, pc, black.color, green.color)
    cube = generate(C("Cube"))
    cpc = wl2(cube)
    with pytest.raises(GraphError):
        short_d_connections(cube, cpc, cpc(*cube.edges[0]), cpc(*cube.edges[0]))


def test_short_d_connections_negative():
    g = generate(C("Prism", 6))
    pc = wl2(g)
    table = edge_color_table(g, pc)
    rim = record_of(table, (0, 1))
    spoke = record_of(table, (0, 6))
    assert rim.type == "IIa"
    assert short_d_connections(g, pc, rim.color, spoke.color)
    # the rim color never leaves its own cycle
    assert not short_d_connections(g, pc, rim.color, rim.color)


def _short_d_oracle(g: Graph, pc, info, d: int) -> bool:
    D = {d, pc.reverse(d)}
    G = nx.Graph([e for e in g.underlying().edges if pc(*e) in D or pc(e[1], e[0]) in D])
    comp_of = {v: i for i, comp in enumerate(info.components) for v in comp}
    for v, i in comp_of.items():
        if v not in G:
            continue
        near = nx.single_source_shortest_path_length(G, v, cutoff=2)
        if any(comp_of.get(w, i) != i for w in near):
            return True
    return False


def test_short_d_connections_agree_with_brute_force():
    checked = 0
    for _, g in small_corpus():
        pc = wl2(g)
        table = edge_color_table(g, pc)
        for cinfo in table:
            if cinfo.type != "IIa":
                continue
            for dinfo in table:
                for d in (dinfo.color, dinfo.reverse):
                    assert short_d_connections(g, pc, cinfo.color, d) == _short_d_oracle(g, pc, cinfo, d)
                    checked += 1
    assert checked > 0


def test_classify_type_ii_fixtures():
    g, doc = load_fixture("type_iic_example")
    rep = classify_type_ii(g, wl2(g))
    assert rep.graph_type == "IIc"
    assert rep.outcome == FIXING_VERTEX and rep.vertex in doc["vertex_groups"]["red"]

    g, doc = load_fixture("type_iib_example")
    pc = wl2(g)
    rep = classify_type_ii(g, pc)
    black = record_of(rep.edge_colors, doc["edge_groups"]["black"][0])
    assert black.type == "IIb"
    assert rep.outcome == CONNECTED_SUBGRAPH and rep.catalog_id == C("Cycle", 8)
    assert set(rep.colors) == {black.color, black.reverse}

    g, doc = load_fixture("type_iia_example")
    pc = wl2(g)
    rep = classify_type_ii(g, pc)
    table = rep.edge_colors
    black = record_of(table, doc["edge_groups"]["black"][0])
    green = record_of(table, doc["edge_groups"]["green"][0])
    assert rep.outcome == CONNECTED_SUBGRAPH
    assert set(rep.colors) == black.colors | green.colors
    assert rep.catalog_id.family == "ParallelSubdivision"
    assert rep.catalog_id.params[0] == C("Truncated", C("Tetrahedron"))
    assert verify_report(g, rep, pc)


def test_classify_type_ii_rejects_other_types():
    g = generate(C("Cube"))
    with pytest.raises(GraphError):
        classify_type_ii(g, wl2(g))


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def test_analyze_examples():
    g, doc = load_fixture("type_i_example")
    rep = analyze(g)
    assert rep.outcome == FIXING_VERTEX and rep.vertex in doc["vertex_groups"]["blue"]
    assert verify_report(g, rep)

    rep = analyze(m3())
    assert rep.outcome == DEFINABLE_MATCHING and verify_report(m3(), rep)

    g = m3_double_apex()
    assert is_k_connected(g, 3)
    rep = analyze(g)
    # the a-b color joins equal vertex colors here, and individualizing one
    # vertex leaves a reflection, so the prism itself is the witness
    assert rep.outcome == CONNECTED_SUBGRAPH and rep.catalog_id == C("Prism", 3)
    assert verify_report(g, rep)


def test_analyze_preconditions():
    with pytest.raises(PreconditionError):
        analyze(generate(C("Complete", 5)))
    with pytest.raises(PreconditionError):
        analyze(generate(C("Cycle", 6)))


def test_report_json_field_order():
    rep = analyze(generate(C("Cube")))
    doc = json.loads(rep.dumps())
    assert list(doc) == ["outcome", "witness", "edge_colors", "graph_type"]
    assert doc["witness"]["catalog"]["name"] == "Cube"
    assert list(doc["witness"]) == ["colors", "catalog", "case", "vertices", "certificate"]
    assert doc["graph_type"] in TYPE_ORDER


def test_verify_report_rejects_tampering():
    g = generate(C("Cube"))
    rep = analyze(g)
    assert verify_report(g, rep)
    cert = list(rep.certificate)
    cert[0], cert[1] = cert[1], cert[0]
    rep.certificate = tuple(cert)
    assert not verify_report(g, rep)
    rep = analyze(m3())
    rep.vertex, rep.outcome = 0, FIXING_VERTEX
    assert not verify_report(m3(), rep)


def test_analyze_is_invariant_under_relabeling():
    rng = random.Random(2)
    for name in ("Truncated(Tetrahedron)", "Antiprism(6)", "type_iia_example", "Bipyramid(5)"):
        g = corpus()[name]
        base = analyze(g)
        perm = list(range(g.n))
        rng.shuffle(perm)
        rep = analyze(g.relabel(perm))
        assert (rep.outcome, rep.catalog_id, rep.graph_type) == (base.outcome, base.catalog_id, base.graph_type)


def test_cycle_plus_vertex_is_discrete():
    rng = random.Random(4)
    for name, g in small_corpus()[::3]:
        pc = wl2(g)
        G = nx.Graph(list(g.underlying().edges))
        for cyc in nx.minimum_cycle_basis(G)[:3]:
            sub = G.subgraph(cyc)
            if sub.number_of_edges() != len(cyc):
                continue  # only induced cycles
            walk = [u for u, _ in nx.find_cycle(sub)]
            extra = rng.choice([v for v in range(g.n) if v not in cyc])
            assert wl1_pair(g, pc, walk + [extra]).is_discrete(), name


# ---------------------------------------------------------------------------
# Edge-transitive graphs
# ---------------------------------------------------------------------------


def test_classify_edge_transitive_examples():
    assert classify_edge_transitive(generate(C("Cuboctahedron"))) == C("Cuboctahedron")
    assert classify_edge_transitive(generate(C("CompleteBipartite", 2, 7))) == C("SSubdivision", C("Complete", 2), 7)
    triangles = disjoint_copies(generate(C("Cycle", 3)), 3)
    assert classify_edge_transitive(triangles) == C("DisjointCopies", C("Cycle", 3), 3)
    assert classify_edge_transitive(generate(C("BicoloredCube"))) == C("BicoloredCube")
    assert classify_edge_transitive(generate(C("Star", 4))) == C("Star", 4)


def test_classify_edge_transitive_preconditions():
    with pytest.raises(PreconditionError):
        classify_edge_transitive(generate(C("Prism", 5)))
    with pytest.raises(PreconditionError):
        classify_edge_transitive(Graph(4, [(0, 1), (1, 2), (2, 0)]))
    with pytest.raises(PreconditionError):
        classify_edge_transitive(generate(C("Complete", 5)))


def test_parallel_id_of_fixture_matches_generator():
    g, _ = load_fixture("type_iia_example")
    rep = analyze(g)
    cid = rep.catalog_id
    assert cid == parallel_id(cid.params[0], dict(cid.params[1]))
    assert generate(cid).n == len(rep.subgraph_vertices)
