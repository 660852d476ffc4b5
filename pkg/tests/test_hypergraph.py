import pickle

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hgmorph import kernels
from hgmorph.hypergraph import (
    BindingError,
    CoverError,
    EdgeSet,
    Hypergraph,
    HypergraphError,
    SubHypergraph,
    VertexSet,
    build,
    complement_edges,
    complement_vertices,
    induced_by_edges,
    induced_by_vertices,
    is_subhypergraph,
    iter_bits,
)
from hgmorph.instances import canonical
from hgmorph.oracle import enumerate_subhypergraphs, enumerate_vertex_subsets, enumerate_edge_subsets

from .conftest import es, hypergraphs, vs


def test_build_h0(H0):
    assert (H0.n_vertices, H0.n_edges) == (5, 3)
    assert H0.edge_vertices(1) == (1, 2, 3)
    assert H0.incidence(3) == (1, 2)
    assert H0.n_incidences == 7


def test_build_empty():
    h = build([], [])
    assert (h.n_vertices, h.n_edges) == (0, 0)
    assert h.whole() == h.empty()


def test_isolated_vertex(H1):
    assert H1.incidence(2) == ()
    assert H1.isolated_vertices == (2,)


@pytest.mark.parametrize(
    "labels, edges, match",
    [
        ([0, 1], [[0, 2]], "unknown vertex '2'"),
        ([0, 0], [], "duplicate vertex label"),
        ([0, 1], [[0, 0]], "twice"),
        (["a b"], [], "invalid vertex label"),
    ],
)
def test_build_errors(labels, edges, match):
    with pytest.raises(HypergraphError, match=match):
        build(labels, edges)


def test_duplicate_edges_are_distinct():
    h = build("ab", [["a", "b"], ["a", "b"]])
    assert h.n_edges == 2
    assert es(h, "e0") != es(h, "e1")


def test_empty_edges_flagged():
    h = build("ab", [["a"], []])
    assert h.empty_edges == (1,)
    # vacuously inside every vertex set, never meeting one
    assert 1 in induced_by_vertices(h.vertices()).eset


def test_immutable(H0):
    with pytest.raises(ValueError):
        H0.edge_idx[0] = 3


def test_pickle_roundtrip(H0):
    assert pickle.loads(pickle.dumps(H0)) == H0


def test_induced_by_vertices(H0):
    x = induced_by_vertices(vs(H0, 0, 1, 2, 3))
    assert x.vset == vs(H0, 0, 1, 2, 3) and x.eset == es(H0, "e0", "e1")
    assert induced_by_vertices(H0.vertices()) == H0.empty()
    assert induced_by_vertices(H0.all_vertices()) == H0.whole()


def test_induced_by_edges(H0, H1):
    x = induced_by_edges(es(H0, "e0", "e2"))
    assert x.vset == vs(H0, 0, 1, 3, 4)
    assert induced_by_edges(H0.edges()) == H0.empty()
    assert induced_by_edges(es(H1, "e0")).vset == vs(H1, 0, 1)


def test_is_subhypergraph(H0, H1):
    assert is_subhypergraph(vs(H0, 0, 1), es(H0, "e0"))
    assert not is_subhypergraph(vs(H0, 0), es(H0, "e0"))
    assert is_subhypergraph(H0.vertices(), H0.edges())
    with pytest.raises(BindingError):
        is_subhypergraph(vs(H0, 0, 1), es(H1, "e0"))


def test_subhypergraph_rejects_uncovered(H0):
    with pytest.raises(CoverError, match="e0"):
        SubHypergraph(vs(H0, 0), es(H0, "e0"))


def test_complements(H0):
    assert complement_vertices(vs(H0, 0, 1)) == vs(H0, 2, 3, 4)
    assert complement_vertices(H0.vertices()) == H0.all_vertices()
    assert complement_edges(es(H0, "e1")) == es(H0, "e0", "e2")


def test_mixing_hypergraphs_raises(H0, H1):
    with pytest.raises(BindingError):
        vs(H0, 0) | vs(H1, 0)
    with pytest.raises(TypeError):
        vs(H0, 0) | es(H0, "e0")


def test_bit_iteration_large():
    bits = (1 << 5000) | (1 << 7) | 1
    assert list(iter_bits(bits)) == [0, 7, 5000]


@given(hypergraphs())
def test_transpose_consistency(h):
    for x in range(h.n_vertices):
        for i in range(h.n_edges):
            assert (i in h.incidence(x)) == (x in h.edge_vertices(i))


@given(hypergraphs(max_vertices=6, max_edges=4), st.data())
def test_complement_involutive_and_order_reversing(h, data):
    xs = list(enumerate_vertex_subsets(h))
    a, b = data.draw(st.sampled_from(xs)), data.draw(st.sampled_from(xs))
    assert ~~a == a
    if a <= b:
        assert ~b <= ~a


@pytest.mark.parametrize("name", ["H0", "H1", "H2"])
def test_induced_extremality_exhaustive(name):
    h = canonical()[name]
    subs = list(enumerate_subhypergraphs(h))
    for v in enumerate_vertex_subsets(h):
        same = [s for s in subs if s.vset == v]
        top = induced_by_vertices(v)
        assert top in same and all(s <= top for s in same)
    for e in enumerate_edge_subsets(h):
        same = [s for s in subs if s.eset == e]
        bottom = induced_by_edges(e)
        assert bottom in same and all(bottom <= s for s in same)


@settings(max_examples=200)
@given(hypergraphs(max_vertices=12, max_edges=10), st.data())
def test_kernel_paths_agree(h, data):
    v = data.draw(st.integers(0, h.full_vertex_bits))
    e = data.draw(st.integers(0, h.full_edge_bits))
    assert kernels.union_of_edges(h, e) == kernels.union_of_edges(h, e, force_csr=True)
    assert kernels.edges_within(h, v) == kernels.edges_within(h, v, force_csr=True)
    assert kernels.edges_meeting(h, v) == kernels.edges_meeting(h, v, force_csr=True)


def test_array_roundtrip(H0):
    x = vs(H0, 0, 3)
    assert x.to_array().tolist() == [True, False, False, True, False]
    assert VertexSet.from_array(H0, x.to_array()) == x
    assert EdgeSet.from_array(H0, np.ones(3, bool)) == H0.all_edges()


def test_from_index_lists_validates():
    with pytest.raises(HypergraphError):
        Hypergraph.from_index_lists(2, [[0, 5]])
