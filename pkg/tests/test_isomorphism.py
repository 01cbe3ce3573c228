from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from planar_wl.catalog import C, generate
from planar_wl.graph import Graph, disjoint_copies
from planar_wl.isomorphism import check_isomorphism, isomorphic


def nx_digraph(g: Graph) -> nx.DiGraph:
    """Arc-colored digraph; an undirected edge becomes two arcs."""
    G = nx.DiGraph()
    for v in range(g.n):
        G.add_node(v, color=g.arc_color(v, v))
    for u, v in g.arcs():
        G.add_edge(u, v, color=g.arc_color(u, v))
    return G


def nx_isomorphic(g: Graph, h: Graph) -> bool:
    same = lambda a, b: a["color"] == b["color"]  # noqa: E731
    return nx.is_isomorphic(nx_digraph(g), nx_digraph(h), node_match=same, edge_match=same)


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_examples():
    phi = isomorphic(generate(C("Prism", 4)), generate(C("Cube")))
    assert phi is not None and check_isomorphism(generate(C("Prism", 4)), generate(C("Cube")), phi)
    assert isomorphic(generate(C("Cycle", 6)), disjoint_copies(generate(C("Cycle", 3)), 2)) is None
    assert isomorphic(Graph(0), Graph(0)) == []


def test_relabeled_solids_are_isomorphic():
    rng = random.Random(3)
    for name in ("Icosahedron", "Rhombicuboctahedron", "RhombicTriacontahedron", "BicoloredCube"):
        g = generate(C(name))
        h = shuffled(g, rng)
        phi = isomorphic(g, h)
        assert phi is not None and check_isomorphism(g, h, phi)


def test_bicolored_cube_orientation_matters():
    g = generate(C("BicoloredCube"))
    reversed_all = Graph(8, [(v, u) for u, v in g.edges], directed=True)
    assert isomorphic(g, reversed_all) is not None
    (a, b), rest = g.edges[0], g.edges[1:]
    one_flipped = Graph(8, [(b, a), *rest], directed=True)
    assert isomorphic(g, one_flipped) is None
    assert isomorphic(g, g.underlying()) is None


def test_hard_pairs_are_separated():
    # the prism over a triangle and K_{3,3} share n, m and the degree sequence
    assert isomorphic(generate(C("Prism", 3)), generate(C("CompleteBipartite", 3, 3))) is None
    # the 4-dim hypercube and the Rook graph 4x4 share n, m and degrees but are not isomorphic
    Q = nx.convert_node_labels_to_integers(nx.hypercube_graph(4))
    R = nx.convert_node_labels_to_integers(nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4)))
    q, r = Graph(16, list(Q.edges)), Graph(16, list(R.edges))
    assert isomorphic(q, r) is None
    # the Shrikhande graph is 2-WL equivalent to the rook graph
    shrikhande = nx.Graph()
    for a in range(4):
        for b in range(4):
            for da, db in ((0, 1), (1, 0), (1, 1)):
                shrikhande.add_edge((a, b), ((a + da) % 4, (b + db) % 4))
    s = nx.convert_node_labels_to_integers(shrikhande)
    assert isomorphic(Graph(16, list(s.edges)), r) is None


def test_atlas_pairs_agree_with_networkx():
    by_size: dict[tuple[int, int], list[nx.Graph]] = {}
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= 6:
            by_size.setdefault((G.number_of_nodes(), G.number_of_edges()), []).append(G)
    rng = random.Random(11)
    for group in by_size.values():
        for G, H in combinations(group[:12], 2):
            g = Graph(G.number_of_nodes(), list(G.edges))
            h = shuffled(Graph(H.number_of_nodes(), list(H.edges)), rng)
            phi = isomorphic(g, h)
            assert (phi is not None) == nx.is_isomorphic(G, H)
            assert isomorphic(g, shuffled(g, rng)) is not None


@given(st.integers(0, 100_000), st.integers(2, 8), st.booleans())
@settings(max_examples=80, deadline=None)
def test_colored_graphs_agree_with_networkx(seed, n, directed):
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and (directed or u < v)]
    edges = [e for e in pairs if rng.random() < 0.4]

    def colors(es):
        out = {(v, v): rng.randint(1, 2) for v in range(n)}
        for u, v in es:
            out[(u, v)] = rng.randint(3, 4)
            if not directed:
                out[(v, u)] = rng.randint(3, 4)
        return out

    g = Graph(n, edges, directed=directed, arc_colors=colors(edges))
    h = shuffled(g, rng)
    assert isomorphic(g, h) is not None
    other = Graph(n, edges, directed=directed, arc_colors=colors(edges))
    phi = isomorphic(g, other)
    assert (phi is not None) == nx_isomorphic(g, other)
    if phi is not None:
        assert check_isomorphism(g, other, phi)
    assert isomorphic(g, other, respect_colors=False) is not None
