import pytest
from hypothesis import strategies as st

from hgmorph.hypergraph import Hypergraph
from hgmorph.instances import h0, h1, h2


@pytest.fixture
def H0():
    return h0()


@pytest.fixture
def H1():
    return h1()


@pytest.fixture
def H2():
    return h2()


def vs(h, *labels):
    return h.vertices_by_label(str(x) for x in labels)


def es(h, *ids):
    return h.edges_by_id(ids)


@st.composite
def hypergraphs(draw, max_vertices=8, max_edges=6, allow_empty_edges=True):
    """Small hypergraphs; duplicate and (optionally) empty edges included."""
    n = draw(st.integers(0, max_vertices))
    min_size = 0 if allow_empty_edges else 1
    if n == 0:
        edges = draw(st.lists(st.just([]), max_size=2)) if allow_empty_edges else []
    else:
        edge = st.lists(st.integers(0, n - 1), min_size=min_size, max_size=n, unique=True)
        edges = draw(st.lists(edge, max_size=max_edges))
    return Hypergraph.from_index_lists(n, edges)


@st.composite
def vertex_sets(draw, hg):
    return hg.vertices(draw(st.sets(st.integers(0, hg.n_vertices - 1)))) if hg.n_vertices else hg.vertices()


@st.composite
def edge_sets(draw, hg):
    return hg.edges(draw(st.sets(st.integers(0, hg.n_edges - 1)))) if hg.n_edges else hg.edges()


@st.composite
def subhypergraphs(draw, hg):
    """Induced by a random edge set, plus random extra vertices."""
    from hgmorph.hypergraph import SubHypergraph
    from hgmorph.kernels import union_of_edges

    e = draw(edge_sets(hg))
    v = draw(vertex_sets(hg))
    return SubHypergraph(hg.vertices() | v | type(v)(hg, union_of_edges(hg, e.bits)), e)
