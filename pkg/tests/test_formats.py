import pytest
from hypothesis import given

from hgmorph.formats import FormatError, parse_hypergraph, parse_subset, serialize_hypergraph, serialize_subset
from hgmorph.hypergraph import SubHypergraph
from hgmorph.instances import canonical

from .conftest import es, hypergraphs, vs

H0_TEXT = """hg v1
vertex 0
vertex 1
vertex 2
vertex 3
vertex 4
edge e0 0 1
edge e1 1 2 3
edge e2 3 4
"""


def test_serialize_h0(H0):
    assert serialize_hypergraph(H0) == H0_TEXT


@pytest.mark.parametrize("name", ["H0", "H1", "H2"])
def test_roundtrip_canonical(name):
    h = canonical()[name]
    text = serialize_hypergraph(h)
    assert parse_hypergraph(text) == h
    assert serialize_hypergraph(parse_hypergraph(text)) == text


@given(hypergraphs())
def test_roundtrip_random(h):
    assert parse_hypergraph(serialize_hypergraph(h)) == h


def test_comments_and_blank_lines(H0):
    text = "# H0\n\n" + H0_TEXT.replace("vertex 2\n", "vertex 2\n\n   # note\n")
    assert parse_hypergraph(text) == H0


def test_empty_document():
    h = parse_hypergraph("hg v1\n")
    assert (h.n_vertices, h.n_edges) == (0, 0)


def test_empty_edge_roundtrip():
    text = "hg v1\nvertex a\nedge e0\n"
    h = parse_hypergraph(text)
    assert h.empty_edges == (0,)
    assert serialize_hypergraph(h) == text


@pytest.mark.parametrize(
    "text, line, match",
    [
        ("hg v1\nvertex a\nedge e0 a b\n", 3, "unknown vertex 'b'"),
        ("hg v1\nvertex a\nvertex a\n", 3, "duplicate vertex label"),
        ("hg v1\nvertex a\nedge e0 a\nedge e0 a\n", 4, "duplicate edge id"),
        ("hg v2\n", 1, "expected header"),
        ("hg v1\nvertex a b\n", 2, "exactly one label"),
        ("hg v1\nvertex a\nedge e0 a\nvertex b\n", 4, "precede"),
        ("hg v1\nnode a\n", 2, "unknown record"),
        ("hg v1\nvertex a\nedge e0 a a\n", 3, "twice"),
    ],
)
def test_parse_errors(text, line, match):
    with pytest.raises(FormatError, match=match) as info:
        parse_hypergraph(text)
    assert info.value.line == line


def test_missing_header():
    with pytest.raises(FormatError, match="missing header"):
        parse_hypergraph("# nothing\n")


def test_subsets(H0):
    assert parse_subset("vset 0 3\n", H0) == vs(H0, 0, 3)
    assert parse_subset("eset e1\n", H0) == es(H0, "e1")
    assert parse_subset("vset\n", H0) == H0.vertices()
    x = parse_subset("vset 0 1\neset e0\n", H0)
    assert isinstance(x, SubHypergraph) and x == H0.subhypergraph(["0", "1"], ["e0"])
    for y in (vs(H0, 2, 4), es(H0, "e0", "e2"), x):
        assert parse_subset(serialize_subset(y), H0) == y
    assert serialize_subset(x) == "vset 0 1\neset e0\n"


@pytest.mark.parametrize(
    "text, match",
    [
        ("vset 9\n", "9"),
        ("eset e7\n", "e7"),
        ("vset 0\neset e0\n", "e0"),
        ("", "empty"),
        ("eset e0\nvset 0 1\n", "first"),
        ("bits 0\n", "unknown record"),
    ],
)
def test_subset_errors(H0, text, match):
    with pytest.raises(FormatError, match=match):
        parse_subset(text, H0)
