# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
Combinatorial polyhedra: labelled vertices and oriented face cycles.

Every face cycle lists its vertices counter-clockwise seen from outside, so
each edge is traversed once in each direction by the two faces that contain
it. Vertices are plain ints; faces are addressed by string labels.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import io
import itertools
import logging
import math

import cairo
import networkx as nx
import numpy as np
import scipy.linalg

from .errors import GeometryError, InputError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

# Label prefix of a face by its number of sides, in face-creation order.
_FACE_PREFIX = {3: "t", 4: "s", 5: "p", 6: "h", 10: "d"}


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Face:
    label: str
    cycle: Tuple[int, ...]

    def __len__(self):
        return len(self.cycle)

    def directed_edges(self) -> List[Edge]:
        n = len(self.cycle)
        return [(self.cycle[i], self.cycle[(i + 1) % n]) for i in range(n)]

    def position(self, vertex: int) -> int:
        try:
            return self.cycle.index(vertex)
        except ValueError:
            raise InputError(f"vertex {vertex} is not on face {self.label}") from None


@dataclass(frozen=True, eq=False)
class CombinatorialPolyhedron:
    name: str
    faces: Tuple[Face, ...]
    # Optional display labels, face label -> text, used by schlegel_marks.
    display: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        labels = [f.label for f in self.faces]
        if len(set(labels)) != len(labels):
            raise InputError(f"{self.name}: duplicate face labels")
        object.__setattr__(self, "_by_label", {f.label: f for f in self.faces})
        edge_faces: Dict[Edge, List[str]] = {}
        for f in self.faces:
            for a, b in f.directed_edges():
                edge_faces.setdefault(edge_key(a, b), []).append(f.label)
        object.__setattr__(self, "_edge_faces", edge_faces)

    @staticmethod
    def from_cycles(name: str, cycles: Mapping[str, Sequence[int]]) -> "CombinatorialPolyhedron":
        return CombinatorialPolyhedron(
            name, tuple(Face(label, tuple(int(v) for v in cycle))
                        for label, cycle in cycles.items()))

    def face(self, label: str) -> Face:
        try:
            return self._by_label[label]
        except KeyError:
            raise InputError(f"{self.name} has no face {label!r}") from None

    @property
    def face_labels(self) -> List[str]:
        return [f.label for f in self.faces]

    @property
    def vertices(self) -> List[int]:
        return sorted({v for f in self.faces for v in f.cycle})

    @property
    def edges(self) -> List[Edge]:
        return sorted(self._edge_faces)

    def edge_faces(self, a: int, b: int) -> List[str]:
        return list(self._edge_faces.get(edge_key(a, b), ()))

    def vertex_degree(self, v: int) -> int:
        return sum(1 for e in self._edge_faces if v in e)

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "vertices": self.vertices,
            "faces": [{"id": f.label, "cycle": list(f.cycle)} for f in self.faces],
            "labels": dict(self.display),
        }

    @staticmethod
    def from_json(doc: Mapping) -> "CombinatorialPolyhedron":
        try:
            faces = doc["faces"]
            if isinstance(faces, Mapping):
                faces = [{"id": k, "cycle": v} for k, v in faces.items()]
            poly = CombinatorialPolyhedron(
                doc.get("name", "polyhedron"),
                tuple(Face(str(f["id"]), tuple(int(v) for v in f["cycle"])) for f in faces),
                dict(doc.get("labels", {})))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed polyhedron document: {e}") from e
        declared = doc.get("vertices")
        if declared is not None and sorted(int(v) for v in declared) != poly.vertices:
            raise InputError(f"{poly.name}: declared vertices do not match the face cycles")
        return poly


def name_faces(cycles: Iterable[Sequence[int]]) -> Dict[str, Tuple[int, ...]]:
    """Labels cycles by side count (t3, s4, p5, h6, d10) in creation order."""
    counters: Dict[str, int] = {}
    named: Dict[str, Tuple[int, ...]] = {}
    for cycle in cycles:
        prefix = _FACE_PREFIX.get(len(cycle), f"f{len(cycle)}_")
        index = counters.get(prefix, 0)
        counters[prefix] = index + 1
        named[f"{prefix}{index}"] = tuple(cycle)
    return named


def truncate(parent: CombinatorialPolyhedron, name: Optional[str] = None) -> CombinatorialPolyhedron:
    """Cuts off every vertex of `parent`.

    The new vertices are the directed edges (u, v) of the parent, numbered in
    sorted order; (u, v) is the cut point on edge uv next to u. Parent faces
    come first with doubled cycles, then one face per parent vertex.
    """
    directed = sorted((a, b) for f in parent.faces for a, b in f.directed_edges())
    index = {e: i for i, e in enumerate(directed)}
    cycles: List[List[int]] = []
    for f in parent.faces:
        cycle: List[int] = []
        for a, b in f.directed_edges():
            cycle += [index[(a, b)], index[(b, a)]]
        cycles.append(cycle)
    # Around parent vertex u the new face continues from (u, b) to (u, a)
    # whenever a -> u -> b is part of a parent face.
    following: Dict[int, int] = {}
    for f in parent.faces:
        n = len(f.cycle)
        for i, u in enumerate(f.cycle):
            a, b = f.cycle[i - 1], f.cycle[(i + 1) % n]
            following[index[(u, b)]] = index[(u, a)]
    for u in parent.vertices:
        start = min(i for (s, _), i in index.items() if s == u)
        cycle = [start]
        while following[cycle[-1]] != start:
            cycle.append(following[cycle[-1]])
        cycles.append(cycle)
    return CombinatorialPolyhedron.from_cycles(name or f"truncated_{parent.name}",
                                               name_faces(cycles))


def _octahedron() -> CombinatorialPolyhedron:
    # Vertices 0..5 are +x, -x, +y, -y, +z, -z.
    cycles = []
    for sx, sy, sz in itertools.product((1, -1), repeat=3):
        x, y, z = (0 if sx > 0 else 1), (2 if sy > 0 else 3), (4 if sz > 0 else 5)
        cycles.append([x, y, z] if sx * sy * sz > 0 else [x, z, y])
    return CombinatorialPolyhedron.from_cycles("octahedron", name_faces(cycles))


def _icosahedron_coordinates() -> np.ndarray:
    phi = (1 + math.sqrt(5)) / 2
    points = []
    for k in range(3):
        for s1 in (1, -1):
            for s2 in (1, -1):
                c = [0.0, 0.0, 0.0]
                c[(k + 1) % 3] = s1
                c[(k + 2) % 3] = s2 * phi
                points.append(c)
    return np.array(points)


def _icosahedron() -> CombinatorialPolyhedron:
    coords = _icosahedron_coordinates()
    cycles = []
    for i, j, l in itertools.combinations(range(len(coords)), 3):
        if all(abs(np.sum((coords[a] - coords[b])**2) - 4.0) < 1e-9
               for a, b in ((i, j), (j, l), (i, l))):
            det = np.linalg.det(coords[[i, j, l]])
            cycles.append([i, j, l] if det > 0 else [i, l, j])
    return CombinatorialPolyhedron.from_cycles("icosahedron", name_faces(cycles))


def _cube() -> CombinatorialPolyhedron:
    # Vertex i sits at (bit2, bit1, bit0) of i with 0 -> -1 and 1 -> +1.
    cycles = [[4, 6, 7, 5], [0, 1, 3, 2], [2, 3, 7, 6],
              [0, 4, 5, 1], [1, 5, 7, 3], [0, 2, 6, 4]]
    return CombinatorialPolyhedron.from_cycles("cube", name_faces(cycles))


def _dual(parent: CombinatorialPolyhedron, name: str) -> CombinatorialPolyhedron:
    """Vertices of the dual are parent face indices, faces are parent vertices."""
    position = {f.label: i for i, f in enumerate(parent.faces)}
    # Maps (v, a) to the face in which v is directly followed by a.
    after: Dict[Edge, str] = {}
    for f in parent.faces:
        for a, b in f.directed_edges():
            after[(a, b)] = f.label
    cycles = []
    for v in parent.vertices:
        start = min(position[f.label] for f in parent.faces if v in f.cycle)
        cycle = [start]
        while True:
            f = parent.faces[cycle[-1]]
            n = len(f.cycle)
            # The face containing v -> b where b precedes v in the current face.
            prev = f.cycle[(f.position(v) - 1) % n]
            nxt = position[after[(v, prev)]]
            if nxt == start:
                break
            cycle.append(nxt)
        cycles.append(cycle)
    return CombinatorialPolyhedron.from_cycles(name, name_faces(cycles))


def catalog(name: str) -> CombinatorialPolyhedron:
    """One of the built-in Archimedean and Platonic solids."""
    if name == "cube":
        return _cube()
    if name == "octahedron":
        return _octahedron()
    if name == "icosahedron":
        return _icosahedron()
    if name == "dodecahedron":
        return _dual(_icosahedron(), "dodecahedron")
    if name == "truncated_octahedron":
        return truncate(_octahedron(), "truncated_octahedron")
    if name == "truncated_icosahedron":
        return truncate(_icosahedron(), "truncated_icosahedron")
    raise InputError(f"unknown polyhedron {name!r}; known: {', '.join(CATALOG_NAMES)}")


CATALOG_NAMES = ("cube", "dodecahedron", "truncated_octahedron",
                 "truncated_icosahedron", "octahedron", "icosahedron")


def _check_cobweb_parameter(z) -> None:
    if not isinstance(z, int) or isinstance(z, bool) or z < 3 or z % 2 == 0:
        raise InputError(
            f"cobweb solids are defined for odd z >= 3 (u = v = w = 2z), got {z!r}")


def cobweb_vertex(kind: str, k: int, z: int) -> int:
    """Vertex id of t_k, r_k, q_k or b_k (k taken mod 4z) on the cobweb solid."""
    n = 4 * z
    return "trqb".index(kind) * n + k % n


def cobweb_solid(z: int) -> CombinatorialPolyhedron:
    """The cobweb solid of parameter z.

    Two 4z-gon bases T and B, 4z deltoids DT_k hanging from T, 4z deltoids
    DB_k standing on B and 2z hexagons H_j in the middle belt. Consecutive
    hexagons meet along the arrow edges r_{2j} q_{2j}, whose 4z endpoints
    have degree 4; every other vertex has degree 3.
    """
    _check_cobweb_parameter(z)
    n = 4 * z
    t, r, q, b = (lambda k, c=c: cobweb_vertex(c, k, z) for c in "trqb")
    cycles: Dict[str, List[int]] = {
        "T": [t(k) for k in range(n)],
        "B": [b(0)] + [b(n - 1 - k) for k in range(n - 1)],
    }
    for k in range(n):
        cycles[f"DT{k}"] = [t(k + 1), t(k), r(k), r(k + 1)]
        cycles[f"DB{k}"] = [b(k), b(k + 1), q(k + 1), q(k)]
    for j in range(2 * z):
        a = 2 * j
        cycles[f"H{j}"] = [q(a), q(a + 1), q(a + 2), r(a + 2), r(a + 1), r(a)]
    return CombinatorialPolyhedron.from_cycles(f"cobweb:{z}", cycles)


def cobweb_arrow_edges(z: int) -> List[Edge]:
    """The 2z edges shared by consecutive hexagons; they form one edge class."""
    _check_cobweb_parameter(z)
    return [edge_key(cobweb_vertex("r", 2 * j, z), cobweb_vertex("q", 2 * j, z))
            for j in range(2 * z)]


def _aligned_edge(poly: CombinatorialPolyhedron, source: str, target: str,
                  alignment: int) -> Tuple[List[int], List[int]]:
    """src_edge/dst_edge of the orientation-reversing map c[i] -> d[a - i]."""
    c, d = poly.face(source).cycle, poly.face(target).cycle
    n = len(c)
    return [c[0], c[1]], [d[alignment % n], d[(alignment - 1) % n]]


def cobweb_pairing(z: int) -> List[dict]:
    """The complete face pairing of the cobweb solid, 5z + 1 generators.

    Entries follow the pairing document schema (name, source, target,
    src_edge, dst_edge). The hexagon screws s_1..s_z, the base pairing s and
    four deltoid families x_i, y_i, w_i, v_i (i < z) are laid out around the
    solid with a z-fold rotational symmetry; p is the first
    multiple of 4 with p + 1 divisible by z.
    """
    _check_cobweb_parameter(z)
    poly = cobweb_solid(z)
    n = 4 * z
    p = next(v for v in range(0, n, 4) if (v + 1) % z == 0)
    entries: List[dict] = []

    def add(name, source, target, alignment):
        src, dst = _aligned_edge(poly, source, target, alignment)
        entries.append({"name": name, "source": source, "target": target,
                        "src_edge": src, "dst_edge": dst})

    for i in range(z):
        add(f"s{i + 1}", f"H{2 * i}", f"H{2 * i + 1}", 5)
    add("s", "T", "B", 2 * p % n)
    for i in range(z):
        add(f"x{i}", f"DT{4 * i}", f"DT{(4 * i + p + 2) % n}", 0)
        add(f"y{i}", f"DT{4 * i + 1}", f"DB{(4 * i + 2 - p) % n}", 2)
        add(f"w{i}", f"DT{4 * i + 3}", f"DB{(4 * i + 4 + p) % n}", 2)
        add(f"v{i}", f"DB{4 * i + 1}", f"DB{(4 * i + p + 3) % n}", 0)
    return entries


# The x0 and y0 seeds are named a1 and b2.
_COBWEB_SEED_NAMES = {"x0": "a1", "y0": "b2"}


def cobweb_seeds(z: int) -> List[dict]:
    """The z + 3 seed pairings s_1..s_z, s, a1, b2 that generate the rest."""
    seeds = []
    for entry in cobweb_pairing(z):
        name = entry["name"]
        if name.startswith("s") or name in _COBWEB_SEED_NAMES:
            seeds.append(dict(entry, name=_COBWEB_SEED_NAMES.get(name, name)))
    return seeds


def resolve_polyhedron(ref) -> CombinatorialPolyhedron:
    """A catalog name, "cobweb:<z>", or an inline polyhedron document."""
    if isinstance(ref, Mapping):
        return CombinatorialPolyhedron.from_json(ref)
    if not isinstance(ref, str):
        raise InputError(f"cannot interpret polyhedron reference {ref!r}")
    if ref.startswith("cobweb:"):
        try:
            z = int(ref.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad cobweb reference {ref!r}") from None
        return cobweb_solid(z)
    return catalog(ref)


@dataclass
class ValidationReport:
    name: str
    vertices: int
    edges: int
    faces: int
    # Number of vertices of each degree.
    degrees: Dict[int, int] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "V": self.vertices,
                "E": self.edges, "F": self.faces, "euler": self.euler,
                "degrees": {str(d): n for d, n in sorted(self.degrees.items())},
                "violations": list(self.violations)}


def validate(poly: CombinatorialPolyhedron,
             degree: Optional[int] = None) -> ValidationReport:
    """Checks that `poly` is the boundary of a ball with oriented faces.

    With `degree`, every vertex must also have exactly that many edges.
    """
    graph = poly.graph()
    report = ValidationReport(poly.name, len(poly.vertices), len(poly.edges),
                              len(poly.faces),
                              dict(sorted(Counter(d for _, d in graph.degree()).items())))
    directed: Dict[Edge, str] = {}
    for f in poly.faces:
        if len(f.cycle) < 3:
            report.violations.append(f"face {f.label} has fewer than 3 vertices")
        if len(set(f.cycle)) != len(f.cycle):
            report.violations.append(f"face {f.label} repeats a vertex")
        for e in f.directed_edges():
            if e in directed:
                report.violations.append(
                    f"orientability: edge {e[0]}->{e[1]} is traversed in the same "
                    f"direction by {directed[e]} and {f.label}")
            else:
                directed[e] = f.label
    for a, b in poly.edges:
        owners = poly.edge_faces(a, b)
        if len(owners) > 2:
            report.violations.append(
                f"non-manifold edge {a}-{b} lies in faces {', '.join(owners)}")
        elif len(owners) < 2:
            report.violations.append(f"open edge {a}-{b} lies only in {owners[0]}")
    if report.vertices and not nx.is_connected(graph):
        report.violations.append("the edge graph is not connected")
    if degree is not None and set(report.degrees) != {degree}:
        odd = {d: n for d, n in report.degrees.items() if d != degree}
        report.violations.append(f"vertex degrees {odd} besides {degree}")
    if report.euler != 2:
        report.violations.append(f"Euler characteristic is {report.euler}, not 2")
    for v in report.violations:
        logger.debug("%s: %s", poly.name, v)
    return report


@dataclass(frozen=True)
class SchlegelLayout:
    outer: str
    positions: Dict[int, Tuple[float, float]]


def schlegel_layout(poly: CombinatorialPolyhedron, outer: str,
                    tol: float = 1e-10) -> SchlegelLayout:
    """Tutte's barycentric embedding with `outer` on the unit circle."""
    boundary = poly.face(outer).cycle
    m = len(boundary)
    positions: Dict[int, Tuple[float, float]] = {}
    for k, v in enumerate(boundary):
        # Clockwise, since the outer face is seen from inside the solid.
        theta = math.pi / 2 - 2 * math.pi * k / m
        positions[v] = (math.cos(theta), math.sin(theta))
    graph = poly.graph()
    inner = [v for v in poly.vertices if v not in positions]
    index = {v: i for i, v in enumerate(inner)}
    lap = np.zeros((len(inner), len(inner)))
    rhs = np.zeros((len(inner), 2))
    for v in inner:
        i = index[v]
        lap[i, i] = graph.degree(v)
        for w in graph.neighbors(v):
            if w in index:
                lap[i, index[w]] -= 1.0
            else:
                rhs[i] += positions[w]
    try:
        solved = scipy.linalg.solve(lap, rhs) if inner else rhs
    except np.linalg.LinAlgError as e:
        raise GeometryError(f"singular Schlegel layout system for {poly.name}: {e}") from e
    residual = float(np.max(np.abs(lap @ solved - rhs))) if inner else 0.0
    if not np.all(np.isfinite(solved)) or residual > tol:
        raise GeometryError(
            f"Schlegel layout of {poly.name} did not solve (residual {residual:.3g})")
    for v in inner:
        positions[v] = (float(solved[index[v], 0]), float(solved[index[v], 1]))
    return SchlegelLayout(outer, positions)


def _segments_cross(p1, p2, p3, p4, eps=1e-12) -> bool:
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    d1, d2 = orient(p3, p4, p1), orient(p3, p4, p2)
    d3, d4 = orient(p1, p2, p3), orient(p1, p2, p4)
    return d1 * d2 < -eps and d3 * d4 < -eps


def crossing_edges(poly: CombinatorialPolyhedron,
                   layout: SchlegelLayout) -> List[Tuple[Edge, Edge]]:
    """Pairs of edges, without a common vertex, whose drawn segments cross."""
    pos = layout.positions
    crossings = []
    for e, f in itertools.combinations(poly.edges, 2):
        if set(e) & set(f):
            continue
        if _segments_cross(pos[e[0]], pos[e[1]], pos[f[0]], pos[f[1]]):
            crossings.append((e, f))
    return crossings


_SVG_SIZE = 1000.0
_SVG_RADIUS = 450.0
# Where the label of the outer face goes.
_OUTER_LABEL_AT = (60.0, 40.0)


def _svg_point(xy: Tuple[float, float]) -> Tuple[float, float]:
    return (_SVG_SIZE / 2 + _SVG_RADIUS * xy[0],
            _SVG_SIZE / 2 - _SVG_RADIUS * xy[1])


class Mark(NamedTuple):
    """One item of a Schlegel drawing, in page coordinates."""
    kind: str  # "edge", "vertex", "face" or "class"
    points: Tuple[Tuple[float, float], ...]
    text: str = ""


def schlegel_marks(poly: CombinatorialPolyhedron, layout: SchlegelLayout,
                   labels: Optional[Mapping[str, str]] = None,
                   edge_classes: Optional[Mapping[Edge, int]] = None) -> List[Mark]:
    """What a Schlegel drawing shows, in drawing order.

    Edges, then vertices, then face labels, then edge-class numbers at edge
    midpoints; each group in edge, vertex or face order of `poly`.
    """
    labels = {**{f.label: f.label for f in poly.faces}, **poly.display, **(labels or {})}
    pos = {v: _svg_point(layout.positions[v]) for v in poly.vertices}
    marks = [Mark("edge", (pos[a], pos[b])) for a, b in poly.edges]
    marks += [Mark("vertex", (pos[v],)) for v in poly.vertices]
    for f in poly.faces:
        if f.label == layout.outer:
            at = _OUTER_LABEL_AT
        else:
            at = tuple(np.array([pos[v] for v in f.cycle]).mean(axis=0))
        marks.append(Mark("face", (at,), labels[f.label]))
    for a, b in poly.edges:
        cls = (edge_classes or {}).get((a, b))
        if cls is not None:
            mid = ((pos[a][0] + pos[b][0]) / 2, (pos[a][1] + pos[b][1]) / 2)
            marks.append(Mark("class", (mid,), str(cls)))
    return marks


# Colour and font size of each kind of text mark.
_TEXT_STYLE = {"face": ((0.0, 0.0, 1.0), 14.0), "class": ((1.0, 0.0, 0.0), 11.0)}


def _show_centered(ctx: cairo.Context, text: str, x: float, y: float):
    extents = ctx.text_extents(text)
    ctx.move_to(x - extents.width / 2 - extents.x_bearing,
                y - extents.height / 2 - extents.y_bearing)
    ctx.show_text(text)


def render_svg(poly: CombinatorialPolyhedron, layout: SchlegelLayout,
               labels: Optional[Mapping[str, str]] = None,
               edge_classes: Optional[Mapping[Edge, int]] = None) -> str:
    """SVG 1.1 drawing of a Schlegel layout.

    Face labels default to the face ids (or `poly.display`); edge-class numbers
    are drawn at edge midpoints when `edge_classes` is given. See
    `schlegel_marks` for the drawing order.
    """
    buffer = io.BytesIO()
    surface = cairo.SVGSurface(buffer, _SVG_SIZE, _SVG_SIZE)
    surface.restrict_to_version(cairo.SVG_VERSION_1_1)
    ctx = cairo.Context(surface)
    ctx.set_source_rgb(1, 1, 1)
    ctx.paint()
    ctx.select_font_face("sans-serif", cairo.FONT_SLANT_NORMAL, cairo.FONT_WEIGHT_NORMAL)
    ctx.set_line_width(2.0)
    for mark in schlegel_marks(poly, layout, labels, edge_classes):
        if mark.kind == "edge":
            ctx.set_source_rgb(0, 0, 0)
            ctx.move_to(*mark.points[0])
            ctx.line_to(*mark.points[1])
            ctx.stroke()
        elif mark.kind == "vertex":
            ctx.set_source_rgb(0, 0, 0)
            ctx.arc(*mark.points[0], 3.0, 0, 2 * math.pi)
            ctx.fill()
        else:
            colour, size = _TEXT_STYLE[mark.kind]
            ctx.set_source_rgb(*colour)
            ctx.set_font_size(size)
            _show_centered(ctx, mark.text, *mark.points[0])
    surface.finish()
    return buffer.getvalue().decode("utf-8")
