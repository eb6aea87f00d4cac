from __future__ import annotations

import pytest

from totalcolor9.embedding import (
    AsymmetricAdjacency,
    Disconnected,
    LoopOrMultiEdge,
    NonPlanarEmbedding,
    ParseError,
    UnknownVertex,
    build_embedding,
    degree_stats,
    remove_edges,
    trace_faces,
)
from totalcolor9.formats import parse_embedding, serialize_embedding
from totalcolor9.graphs import NAMED, complete, cube, icosahedron, path, star, wheel


def euler(g):
    return g.n - len(g.edges) + len(g.faces)


@pytest.mark.parametrize("name", sorted(NAMED))
def test_named_graphs_pass_euler(name):
    g = NAMED[name]()
    assert euler(g) == 2
    assert sum(f.length for f in g.faces) == 2 * len(g.edges)


def test_face_counts():
    assert [f.length for f in complete(3).faces] == [3, 3]
    assert sorted(f.length for f in cube().faces) == [4] * 6
    assert sorted(f.length for f in icosahedron().faces) == [3] * 20
    assert [f.length for f in path(3).faces] == [4]


def test_bridge_counts_twice_and_walk_repeats():
    g = star(3)
    (f,) = g.faces
    assert f.length == 6
    assert not f.is_simple()
    st = degree_stats(g, 0)
    assert st.m_k(6) == 3          # the single face meets the centre three times


def test_degree_stats_wheel():
    g = wheel(5)
    hub = max(g.vertices, key=g.degree)
    st = degree_stats(g, hub)
    assert st.degree == 5 and st.m_k(3) == 5 and st.n_k(3) == 5


def test_every_dart_on_one_face():
    g = icosahedron()
    darts = [d for f in g.faces for d in f.darts]
    assert len(darts) == len(set(darts)) == 2 * len(g.edges)


def test_trace_faces_on_rows_matches_embedding():
    g = cube()
    assert [f.darts for f in trace_faces(g.rotation)] == [f.darts for f in g.faces]


@pytest.mark.parametrize("rows, exc", [
    ([[1], []], AsymmetricAdjacency),
    ([[0]], LoopOrMultiEdge),
    ([[1, 1], [0, 0]], LoopOrMultiEdge),
    ([[1], [0], []], Disconnected),
    ([[5], [0]], UnknownVertex),
])
def test_build_rejects(rows, exc):
    with pytest.raises(exc):
        build_embedding(rows)


def test_nonplanar_rotation_rejected():
    # K4 with one rotation reversed is a torus embedding
    rows = [list(r) for r in complete(4).rotation]
    rows[0].reverse()
    with pytest.raises(NonPlanarEmbedding):
        build_embedding(rows)


def test_remove_edges_keeps_faces_consistent():
    g = remove_edges(icosahedron(), [icosahedron().edges[0]])
    assert euler(g) == 2
    assert sorted(f.length for f in g.faces).count(4) == 1


@pytest.mark.parametrize("name", ["k3", "cube", "icosahedron", "star3"])
def test_format_round_trip(name):
    g = NAMED[name]()
    text = serialize_embedding(g)
    assert serialize_embedding(parse_embedding(text)) == text
    assert parse_embedding(text) == g


def test_k3_file_identity():
    text = "3 3\n0: 1 2\n1: 2 0\n2: 0 1\n"
    assert serialize_embedding(parse_embedding(text)) == text


def test_parse_asymmetric_reports_line():
    with pytest.raises(ParseError) as ei:
        parse_embedding("3 2\n0: 1\n1: 0 2\n2:\n")
    assert ei.value.kind == "AsymmetricAdjacency"
    assert ei.value.line == 3


@pytest.mark.parametrize("text, kind", [
    ("", "Empty"),
    ("x y\n", "BadHeader"),
    ("2 1\n0 1\n1: 0\n", "BadLine"),
    ("2 1\n0: 1\n0: 1\n", "DuplicateId"),
    ("3 1\n0: 1\n1: 0\n", "CountMismatch"),
])
def test_parse_errors(text, kind):
    with pytest.raises(ParseError) as ei:
        parse_embedding(text)
    assert ei.value.kind == kind


def test_crlf_and_comments_accepted():
    g = parse_embedding("# triangle\r\n3 3\r\n0: 1 2\r\n1: 2 0\r\n2: 0 1\r\n")
    assert g == complete(3)
