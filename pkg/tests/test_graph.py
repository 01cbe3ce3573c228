from __future__ import annotations

import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planar_wl.catalog import C, generate
from planar_wl.graph import (
    Graph,
    GraphError,
    apex_augment,
    c4_subdivide,
    connected_components,
    contract_classes,
    degree_sequence,
    disjoint_copies,
    disjoint_union,
    dumps,
    edge_subgraph,
    format_edge_list,
    induced_subgraph,
    loads,
    parallel_subdivide,
    parse_edge_list,
    s_subdivide,
    truncate,
)


@st.composite
def graphs(draw, max_n: int = 9, directed: bool | None = None):
    n = draw(st.integers(0, max_n))
    d = draw(st.booleans()) if directed is None else directed
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and (d or u < v)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges, directed=d)


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------


def test_undirected_edges_are_normalized_and_sorted():
    g = Graph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.neighbors(1) == (0, 2)


@pytest.mark.parametrize(
    "n, edges, directed",
    [
        (2, [(0, 2)], False),
        (2, [(1, 1)], False),
        (2, [(0, 1), (1, 0)], False),
        (2, [(0, 1), (0, 1)], True),
        (-1, [], False),
    ],
)
def test_invalid_graphs_are_rejected(n, edges, directed):
    with pytest.raises(GraphError):
        Graph(n, edges, directed=directed)


def test_directed_antiparallel_arcs_are_allowed():
    g = Graph(2, [(0, 1), (1, 0)], directed=True)
    assert g.m == 2 and g.has_arc(1, 0)
    assert g.underlying().edges == ((0, 1),)


def test_arc_colors_default_and_explicit():
    g = Graph(2, [(0, 1)])
    assert (g.arc_color(0, 0), g.arc_color(0, 1), g.arc_color(1, 0)) == (1, 2, 2)
    h = Graph(2, [(0, 1)], directed=True, arc_colors={(0, 0): 5, (1, 1): 5, (0, 1): 7})
    assert h.arc_color(0, 1) == 7 and h.arc_color(1, 0) == 0
    with pytest.raises(GraphError):
        Graph(2, [(0, 1)], arc_colors={(0, 1): 3})


def test_faces_are_validated():
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 2), (0, 2)], faces=[(0, 1, 2), (0, 1, 2)])
    assert Graph(3, [(0, 1), (1, 2), (0, 2)], faces=[(0, 1, 2), (0, 2, 1)]).faces is not None


@given(graphs())
def test_relabel_preserves_structure(g):
    perm = list(reversed(range(g.n)))
    h = g.relabel(perm)
    assert h.m == g.m
    assert sorted(degree_sequence(h)) == sorted(degree_sequence(g))
    assert all(h.has_arc(perm[u], perm[v]) for u, v in g.edges)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def test_components_and_subgraphs():
    g = Graph(6, [(0, 1), (1, 2), (3, 4)])
    assert connected_components(g) == [[0, 1, 2], [3, 4], [5]]
    sub, orig = induced_subgraph(g, [1, 2, 3])
    assert orig == [1, 2, 3] and sub.edges == ((0, 1),)
    esub, eorig = edge_subgraph(g, [(3, 4), (0, 1)])
    assert eorig == [0, 1, 3, 4] and esub.edges == ((0, 1), (2, 3))


@given(graphs(max_n=8, directed=False))
def test_components_match_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    expected = sorted(sorted(c) for c in nx.connected_components(G))
    assert sorted(connected_components(g)) == expected


def test_disjoint_union_offsets_and_colors():
    a = Graph(2, [(0, 1)])
    b = Graph(3, [(0, 1), (1, 2)], arc_colors={(0, 0): 1, (1, 1): 1, (2, 2): 1, (0, 1): 4, (1, 0): 4, (1, 2): 4, (2, 1): 4})
    u, off = disjoint_union(a, b)
    assert off == 2 and u.n == 5
    assert u.edges == ((0, 1), (2, 3), (3, 4))
    assert u.arc_color(0, 1) == 2 and u.arc_color(2, 3) == 4
    assert disjoint_copies(a, 3).edges == ((0, 1), (2, 3), (4, 5))


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def test_parallel_subdivision_layout():
    tri = generate(C("Cycle", 3))
    g = parallel_subdivide(tri, {(0, 1): 2, (1, 2): 0, (0, 2): 1})
    assert g.n == 6
    assert set(g.edges) == {(1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (0, 5), (2, 5)}
    assert g.faces is not None
    with pytest.raises(GraphError):
        parallel_subdivide(tri, {(0, 1): 1})


def test_s_subdivision_counts():
    k4 = generate(C("Tetrahedron"))
    for s in (1, 2, 3):
        g = s_subdivide(k4, s)
        assert (g.n, g.m) == (4 + 6 * s, 12 * s)
    assert s_subdivide(generate(C("Complete", 2)), 3).m == 6
    with pytest.raises(GraphError):
        s_subdivide(k4, 0)


def test_truncation_of_tetrahedron():
    g = truncate(generate(C("Tetrahedron")), range(4))
    assert (g.n, g.m) == (12, 18)
    assert all(g.degree(v) == 3 for v in range(g.n))
    sizes = sorted(len(f) for f in g.faces)
    assert sizes == [3, 3, 3, 3, 6, 6, 6, 6]


def test_truncation_needs_faces_and_degree_three():
    with pytest.raises(GraphError):
        truncate(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), [0])
    with pytest.raises(GraphError):
        truncate(generate(C("Cycle", 4)), [0])


def test_c4_subdivision_counts():
    g = c4_subdivide(generate(C("Cube")))
    assert (g.n, g.m) == (8 + 4 * 12, 6 * 12)
    assert len(g.faces) == 6 + 12


def test_contract_classes():
    g = generate(C("Cycle", 6))
    q, class_of = contract_classes(g, [[0, 1], [2, 3], [4, 5]])
    assert q.edges == ((0, 1), (0, 2), (1, 2))
    assert class_of == [0, 0, 1, 1, 2, 2]
    with pytest.raises(GraphError):
        contract_classes(g, [[0, 1], [1, 2], [3, 4, 5]])
    with pytest.raises(GraphError):
        contract_classes(g, [[0, 1]])


def test_apex_augmentation_of_cube():
    g = apex_augment(generate(C("Cube")))
    assert (g.n, g.m) == (14, 12 + 24)
    assert sorted(g.degree(v) for v in range(8, 14)) == [4] * 6
    assert len(g.faces) == 24


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------


@given(graphs())
@settings(max_examples=60)
def test_json_round_trip(g):
    assert loads(dumps(g)) == g
    assert loads(format_edge_list(g)) == g


def test_json_round_trip_keeps_colors_and_faces():
    g = generate(C("Dodecahedron"))
    assert loads(dumps(g)) == g
    h = generate(C("BicoloredCube"))
    assert loads(dumps(h)) == h


def test_edge_list_parsing():
    g = parse_edge_list("# a path\n3 2 u\n0 1\n1 2\n")
    assert g.edges == ((0, 1), (1, 2)) and not g.directed
    assert parse_edge_list("2 1 d\n1 0\n").directed
    for bad in ("", "3\n", "2 2\n0 1\n", "2 1 x\n0 1\n", "2 1\n0 a\n"):
        with pytest.raises(GraphError):
            parse_edge_list(bad)


def test_malformed_json_is_reported():
    for bad in ('{"n": 2', '{"edges": []}', '{"n": 2, "edges": [[0]]}'):
        with pytest.raises(GraphError):
            loads(bad)
    assert json.loads(dumps(Graph(1))) == {"directed": False, "n": 1, "edges": []}
