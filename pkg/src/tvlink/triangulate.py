#
# triangulate.py
#
# Edge-class-level data model for closed and ideal triangulations, plus
# the line-based tvtri v1 file format.  The state sum only needs edge,
# face and tetrahedron incidences with multiplicity, so tetrahedra are
# stored as 6-tuples of edge indices in the order
# (e12, e13, e23, e34, e24, e14) and faces as explicit edge triples
# (distinct faces may share the same unordered triple).

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources


class TriangulationError(ValueError):
    pass


# The four faces of a tetrahedron, as positions into the (e12, e13, e23,
# e34, e24, e14) tuple: (123), (234), (124), (134).
TET_FACES = ((0, 1, 2), (2, 3, 4), (0, 4, 5), (1, 3, 5))


@dataclass(frozen=True)
class Triangulation:
    name: str
    num_vertices: int          # interior vertices; 0 for ideal triangulations
    num_edges: int
    faces: tuple = field(default_factory=tuple)        # triples of edge indices
    tetrahedra: tuple = field(default_factory=tuple)   # 6-tuples of edge indices

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.num_vertices < 0 or self.num_edges < 1:
            raise TriangulationError("need num_vertices >= 0 and num_edges >= 1")
        if not self.tetrahedra:
            raise TriangulationError("triangulation has no tetrahedra")
        for fi, f in enumerate(self.faces):
            if len(f) != 3 or any(not 0 <= e < self.num_edges for e in f):
                raise TriangulationError("face %d references a nonexistent edge" % fi)
        face_multiset = Counter(tuple(sorted(f)) for f in self.faces)
        for ti, tet in enumerate(self.tetrahedra):
            if len(tet) != 6 or any(not 0 <= e < self.num_edges for e in tet):
                raise TriangulationError("tetrahedron %d references a nonexistent edge" % ti)
            for pos in TET_FACES:
                triple = tuple(sorted(tet[p] for p in pos))
                if triple not in face_multiset:
                    raise TriangulationError(
                        "tetrahedron %d has face %s not present in the face list"
                        % (ti, triple))

    def edge_valences(self):
        """Number of tetrahedron edge slots incident to each edge class."""
        val = [0] * self.num_edges
        for tet in self.tetrahedra:
            for e in tet:
                val[e] += 1
        return val

    def euler_characteristic(self):
        return (self.num_vertices - self.num_edges
                + len(self.faces) - len(self.tetrahedra))

    def face_edge_incidence(self):
        """Map face index -> its (e, e, e) edge triple."""
        return dict(enumerate(self.faces))

    def tetra_edge_labels(self, ti):
        """The (e12, e13, e23, e34, e24, e14) tuple of tetrahedron ti."""
        return self.tetrahedra[ti]

    def serialize(self):
        lines = ["tvtri 1", "name %s" % self.name,
                 "vertices %d" % self.num_vertices, "edges %d" % self.num_edges]
        lines += ["face %d %d %d" % f for f in self.faces]
        lines += ["tet %d %d %d %d %d %d" % t for t in self.tetrahedra]
        return "\n".join(lines) + "\n"


def parse_triangulation(text):
    """Parse the tvtri v1 text format into a validated Triangulation."""
    name = None
    vertices = None
    edges = None
    faces = []
    tets = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if not saw_header:
                if parts != ["tvtri", "1"]:
                    raise TriangulationError("expected 'tvtri 1' header")
                saw_header = True
            elif parts[0] == "name":
                name = " ".join(parts[1:])
            elif parts[0] == "vertices":
                vertices = int(parts[1])
            elif parts[0] == "edges":
                edges = int(parts[1])
            elif parts[0] == "face":
                if len(parts) != 4:
                    raise TriangulationError("face line needs 3 edge indices")
                faces.append(tuple(int(p) for p in parts[1:]))
            elif parts[0] == "tet":
                if len(parts) != 7:
                    raise TriangulationError("tet line needs 6 edge indices")
                tets.append(tuple(int(p) for p in parts[1:]))
            else:
                raise TriangulationError("unknown keyword %r" % parts[0])
        except (ValueError, IndexError) as exc:
            if isinstance(exc, TriangulationError):
                raise TriangulationError("line %d: %s" % (lineno, exc)) from None
            raise TriangulationError("line %d: malformed line %r" % (lineno, raw)) from None
    if not saw_header:
        raise TriangulationError("missing 'tvtri 1' header")
    if vertices is None or edges is None:
        raise TriangulationError("missing 'vertices' or 'edges' line")
    return Triangulation(name or "unnamed", vertices, edges,
                         tuple(faces), tuple(tets))


def load_fixture(name):
    """Load one of the shipped fixtures, e.g. 'fig8' or 's3'."""
    text = (resources.files("tvlink") / "fixtures" / (name + ".tvtri")).read_text()
    return parse_triangulation(text)
