import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from hgmorph.composed import (
    edge_dilate,
    edge_dilate_local,
    edge_erode,
    edge_erode_local,
    hg_dilate,
    hg_erode,
    iterate,
    vertex_dilate,
    vertex_dilate_local,
    vertex_erode,
    vertex_erode_local,
)
from hgmorph.hypergraph import Hypergraph, is_subhypergraph

from .conftest import edge_sets, es, hypergraphs, subhypergraphs, vertex_sets, vs


def test_vertex_dilate(H0, H1):
    assert vertex_dilate(vs(H0, 0)) == vs(H0, 0, 1)
    assert vertex_dilate(H0.vertices()) == H0.vertices()
    assert vertex_dilate(vs(H1, 2)) == H1.vertices()


def test_vertex_erode(H0, H1):
    assert vertex_erode(vs(H0, 0, 1, 2, 3)) == vs(H0, 0, 1, 2)
    assert vertex_erode(H0.all_vertices()) == H0.all_vertices()
    # isolated vertex survives erosion of the empty set
    assert vertex_erode(H1.vertices()) == vs(H1, 2)


def test_edge_dilate(H0):
    assert edge_dilate(es(H0, "e0")) == es(H0, "e0", "e1")
    assert edge_dilate(H0.edges()) == H0.edges()
    assert edge_dilate(es(H0, "e2")) == es(H0, "e1", "e2")


def test_edge_erode(H0):
    assert edge_erode(es(H0, "e0", "e1")) == es(H0, "e0")
    assert edge_erode(H0.all_edges()) == H0.all_edges()
    assert edge_erode(es(H0, "e1")) == H0.edges()


def test_hg_dilate(H0):
    assert hg_dilate(H0.subhypergraph(["1"], [])) == H0.subhypergraph(["0", "1", "2", "3"], [])
    assert hg_dilate(H0.empty()) == H0.empty()
    assert hg_dilate(H0.subhypergraph(["0", "1"], ["e0"])) == H0.subhypergraph(["0", "1", "2", "3"], ["e0", "e1"])


def test_hg_erode(H0):
    assert hg_erode(H0.whole()) == H0.whole()
    assert hg_erode(H0.subhypergraph(["0", "1", "2", "3"], ["e0", "e1"])) == H0.subhypergraph(["0", "1", "2"], ["e0"])
    assert hg_erode(H0.subhypergraph(["0", "1"], ["e0"])) == H0.subhypergraph(["0"], [])


def test_iterate(H0):
    x = H0.subhypergraph(["0", "1"], ["e0"])
    assert iterate(hg_dilate, 0)(x) == x
    assert iterate(vertex_dilate, 2)(vs(H0, 0)) == vs(H0, 0, 1, 2, 3)
    assert iterate(edge_dilate, 2)(es(H0, "e0")) == H0.all_edges()


@given(hypergraphs(), st.data(), st.integers(0, 5))
def test_iterate_early_exit_is_exact(h, data, k):
    x = data.draw(vertex_sets(h))
    y = x
    for _ in range(k):
        y = vertex_dilate(y)
    assert iterate(vertex_dilate, k)(x) == y


@settings(max_examples=150)
@given(hypergraphs(), st.data())
def test_adjunction_and_duality(h, data):
    xv, yv = data.draw(vertex_sets(h)), data.draw(vertex_sets(h))
    xe, ye = data.draw(edge_sets(h)), data.draw(edge_sets(h))
    assert (vertex_dilate(xv) <= yv) == (xv <= vertex_erode(yv))
    assert (edge_dilate(xe) <= ye) == (xe <= edge_erode(ye))
    assert vertex_erode(xv) == ~vertex_dilate(~xv)
    assert edge_erode(xe) == ~edge_dilate(~xe)


@settings(max_examples=150)
@given(hypergraphs(allow_empty_edges=False), st.data())
def test_pointwise_forms_match_compositions(h, data):
    xv, xe = data.draw(vertex_sets(h)), data.draw(edge_sets(h))
    assert vertex_dilate(xv) == vertex_dilate_local(xv)
    assert vertex_erode(xv) == vertex_erode_local(xv)
    assert edge_dilate(xe) == edge_dilate_local(xe)
    assert edge_erode(xe) == edge_erode_local(xe)


def test_empty_edge_is_always_eroded_in():
    # the composition keeps an empty non-member edge; the member-restricted
    # pointwise form cannot, so the two part ways only here
    h = Hypergraph.from_index_lists(2, [[0, 1], []])
    assert edge_erode(h.edges()) == es(h, "e1")
    assert edge_erode_local(h.edges()) == h.edges()


@settings(max_examples=150)
@given(hypergraphs(max_vertices=6, max_edges=5), st.data())
def test_hg_closedness_and_adjunction(h, data):
    x, y = data.draw(subhypergraphs(h)), data.draw(subhypergraphs(h))
    for z in (hg_dilate(x), hg_erode(x)):
        assert is_subhypergraph(z.vset, z.eset)
    assert (hg_dilate(x) <= y) == (x <= hg_erode(y))


def _graph_dilation(g: nx.Graph, xs: set) -> set:
    """Adjacency-based dilation: covered members of X plus their neighbours."""
    out = set()
    for x in xs:
        if g.degree(x) > 0:
            out.add(x)
            out.update(g.neighbors(x))
    return out


def test_plain_graph_dilation_matches_adjacency():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 9)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        edges = rng.sample(pairs, rng.randint(0, len(pairs)))
        h = Hypergraph.from_index_lists(n, [list(e) for e in edges])
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        for _ in range(10):
            xs = {v for v in range(n) if rng.random() < 0.4}
            assert set(vertex_dilate(h.vertices(xs))) == _graph_dilation(g, xs)
