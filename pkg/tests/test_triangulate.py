import pytest

from tvlink.triangulate import (TET_FACES, Triangulation, TriangulationError,
                                load_fixture, parse_triangulation)


def test_fixture_s3():
    tri = load_fixture("s3")
    assert tri.name == "s3"
    assert tri.num_vertices == 4
    assert tri.num_edges == 6
    assert len(tri.faces) == 4
    assert len(tri.tetrahedra) == 2
    assert tri.euler_characteristic() == 0
    assert tri.edge_valences() == [2] * 6


def test_fixture_fig8():
    tri = load_fixture("fig8")
    assert tri.num_vertices == 0          # ideal triangulation
    assert tri.num_edges == 2
    assert len(tri.faces) == 4
    assert len(tri.tetrahedra) == 2
    assert tri.euler_characteristic() == 0
    assert sorted(tri.edge_valences()) == [6, 6]


def test_roundtrip():
    tri = load_fixture("fig8")
    again = parse_triangulation(tri.serialize())
    assert again == tri


def test_parse_comments_and_blank_lines():
    text = """tvtri 1
# a comment
name  demo demo

vertices 0
edges 1
face 0 0 0   # trailing comment
tet 0 0 0 0 0 0
"""
    tri = parse_triangulation(text)
    assert tri.name == "demo demo"
    assert tri.faces == ((0, 0, 0),)


@pytest.mark.parametrize("text", [
    "name x\nvertices 0\nedges 1\nface 0 0 0\ntet 0 0 0 0 0 0",  # no header
    "tvtri 2\nname x\nvertices 0\nedges 1",                       # bad version
    "tvtri 1\nvertices 0\nface 0 0 0\ntet 0 0 0 0 0 0",           # missing edges
    "tvtri 1\nvertices 0\nedges 1\nface 0 0\ntet 0 0 0 0 0 0",    # short face
    "tvtri 1\nvertices 0\nedges 1\nface 0 0 0\ntet 0 0 0 0 0",    # short tet
    "tvtri 1\nvertices 0\nedges 1\nface 0 0 zero\ntet 0 0 0 0 0 0",
    "tvtri 1\nvertices 0\nedges 1\nwidget 3",                     # unknown key
])
def test_parse_errors(text):
    with pytest.raises(TriangulationError):
        parse_triangulation(text)


def test_validation_errors():
    with pytest.raises(TriangulationError):
        Triangulation("bad", 0, 1, ((0, 0, 0),), ())      # no tetrahedra
    with pytest.raises(TriangulationError):
        Triangulation("bad", 0, 1, ((0, 0, 1),),          # face edge out of range
                      ((0, 0, 0, 0, 0, 0),))
    with pytest.raises(TriangulationError):
        # tetrahedron face not in the face list
        Triangulation("bad", 0, 2, ((0, 0, 0),), ((0, 0, 0, 1, 1, 1),))


def test_tet_faces_convention():
    # the four faces pick each of the six edge slots exactly twice
    slots = [s for f in TET_FACES for s in f]
    assert sorted(slots) == [0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5]
    tri = load_fixture("s3")
    assert tri.tetra_edge_labels(0) == (0, 1, 2, 3, 4, 5)
    assert tri.face_edge_incidence()[0] == (0, 1, 2)
