# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
Orthoschemes, their reflection groups and the Archimedean cells built on them.

All isometries are matrices acting on column vectors of point coordinates.
Spherical and hyperbolic orthoschemes use the vertex-basis coordinates of
`spaceform.projmetric`, so the simplex vertex A_i is the unit vector e_i and the
face plane b^j is the form e_j. Euclidean orthoschemes are realized affinely
in homogeneous coordinates (x, 1); their face planes are the forms (-n, h) of
the half-spaces n.x <= h.

Forms transform contragrediently, so a matrix M is an isometry exactly when
M^-1 F M^-T = F for the inner product F of forms: the Gram matrix in the
projective models and diag(1, ..., 1, 0) in the affine one.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import logging
import math

import numpy as np
import scipy.optimize

from .errors import GeometryError, InputError
from .gram import (DEFAULT_TOL, GeometryClass, GeometryKind, GramMatrix,
                   SPHENOID, SchlafliSymbol, build_gram, classify_geometry)
from .polytope import CombinatorialPolyhedron, Edge, edge_key, name_faces
from .projmetric import (AngleReport, ElementKind, PointVector, SpaceContext,
                         classify_element, distance, normalize_point, plane,
                         reflection_matrix)

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10000
# Entrywise tolerance when comparing group elements.
MATRIX_TOL = 1e-8
# Matrices and points are bucketed by their entries rounded to this many
# decimals before comparison.
_KEY_DECIMALS = 5


def preserves_forms(m: np.ndarray, form_metric: np.ndarray,
                    tol: float = MATRIX_TOL) -> bool:
    try:
        inv = np.linalg.inv(m)
    except np.linalg.LinAlgError:
        return False
    return bool(np.max(np.abs(inv @ form_metric @ inv.T - form_metric)) < tol)


@dataclass(frozen=True, eq=False)
class Orthoscheme:
    gram: GramMatrix
    geometry: GeometryClass
    # None for affine (Euclidean) realizations.
    ctx: Optional[SpaceContext]
    # Rows are the vertices A_0..A_{n-1} in point coordinates.
    vertices: np.ndarray
    # Rows are the face forms b^0..b^{n-1}, oriented so that interior points x
    # have x . b^j > 0.
    planes: np.ndarray
    form_metric: np.ndarray
    # A proper point fixing the sheet of hyperbolic point vectors.
    reference: np.ndarray

    @property
    def order(self) -> int:
        return self.gram.order

    @property
    def is_euclidean(self) -> bool:
        return self.ctx is None

    @property
    def is_hyperbolic(self) -> bool:
        return self.geometry.kind.is_hyperbolic

    def normalize(self, x: np.ndarray) -> np.ndarray:
        """Canonical representative of the point x."""
        if self.is_euclidean:
            if abs(x[-1]) < DEFAULT_TOL:
                raise GeometryError("point at infinity in an affine realization")
            return x / x[-1]
        return normalize_point(PointVector(x), self.ctx, PointVector(self.reference)).coords

    def contains(self, x: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
        """x . b^j >= 0 for each j, on the sheet of the simplex."""
        return bool(np.all(self.planes @ self.normalize(x) >= -tol))

    def interior_point(self) -> np.ndarray:
        if self.is_euclidean:
            return self.vertices.mean(axis=0)
        return self.normalize(self.reference)

    def distance(self, x: np.ndarray, y: np.ndarray) -> float:
        if self.is_euclidean:
            return float(np.linalg.norm(self.normalize(x)[:-1] - self.normalize(y)[:-1]))
        return distance(PointVector(x), PointVector(y), self.ctx)

    def form_product(self, u: np.ndarray, v: np.ndarray) -> float:
        return float(u @ self.form_metric @ v)

    def plane_angle(self, u: np.ndarray, v: np.ndarray) -> AngleReport:
        uu, vv, uv = self.form_product(u, u), self.form_product(v, v), self.form_product(u, v)
        if uu <= 0 or vv <= 0:
            raise GeometryError("angle needs proper planes (<u,u> > 0)")
        # The stored forms point inwards; outward normals give the same raw angle.
        raw = math.acos(max(-1.0, min(1.0, uv / math.sqrt(uu * vv))))
        return AngleReport(raw=raw, interior=math.pi - raw,
                           proper_intersection=uu * vv - uv * uv > 0)

    def dihedral(self, i: int, j: int) -> float:
        return self.plane_angle(self.planes[i], self.planes[j]).interior

    def reflection(self, u: np.ndarray) -> np.ndarray:
        if self.ctx is not None:
            return reflection_matrix(plane(u), self.ctx)
        uu = self.form_product(u, u)
        if uu <= DEFAULT_TOL:
            raise GeometryError("cannot reflect in a degenerate plane")
        return np.eye(len(u)) - 2.0 / uu * np.outer(self.form_metric @ u, u)

    def mirror(self, i: int) -> np.ndarray:
        """The reflection m_i in the face plane b^i."""
        return self.reflection(self.planes[i])

    def off_face_point(self, u: np.ndarray, base: Optional[np.ndarray] = None) -> np.ndarray:
        """A point at unit distance-like offset from plane u on its inner side.

        Projective models use the normalized pole of u, which every isometry
        carries along with u; the affine model offsets `base` (a point on the
        plane) by the unit inward normal.
        """
        direction = self.form_metric @ u / math.sqrt(self.form_product(u, u))
        if self.is_euclidean:
            if base is None:
                raise InputError("affine off-face points need a base point on the plane")
            return self.normalize(base) + direction
        return direction

    def to_json(self) -> dict:
        return {
            "geometry": self.geometry.kind.value,
            "vertices": self.vertices.tolist(),
            "planes": self.planes.tolist(),
            "dihedral_angles": {f"{i}{j}": self.dihedral(i, j)
                                for i in range(self.order)
                                for j in range(i + 1, self.order)},
        }


def _sheet_reference(ctx: SpaceContext) -> np.ndarray:
    candidates = [np.ones(ctx.order)] + [np.eye(ctx.order)[i] for i in range(ctx.order)]
    for x in candidates:
        if ctx.point_product(x, x) < -DEFAULT_TOL:
            return x
    raise GeometryError("the orthoscheme has no proper point to fix the sheet")


def _realize_affine(gram: GramMatrix, geometry: GeometryClass,
                    tol: float) -> Orthoscheme:
    n = gram.order
    eigenvalues, vectors = np.linalg.eigh(gram.entries)
    keep = eigenvalues > tol
    if int(np.sum(keep)) != n - 1:
        raise GeometryError("a Euclidean Gram matrix must have exactly one null direction")
    # Rows are outward unit normals n_i with n_i . n_j = b^{ij}.
    normals = vectors[:, keep] * np.sqrt(eigenvalues[keep])
    offsets = np.zeros(n)
    offsets[n - 1] = 1.0
    vertices = np.zeros((n, n))
    for i in range(n):
        others = [j for j in range(n) if j != i]
        vertices[i, :-1] = np.linalg.solve(normals[others], offsets[others])
        vertices[i, -1] = 1.0
    planes = np.hstack([-normals, offsets[:, None]])
    form_metric = np.diag([1.0] * (n - 1) + [0.0])
    scheme = Orthoscheme(gram, geometry, None, vertices, planes, form_metric,
                         reference=vertices.mean(axis=0))
    if not np.all(planes @ scheme.interior_point() > tol):
        raise GeometryError("affine realization does not bound a simplex")
    return scheme


def realize(gram: GramMatrix, tol: float = DEFAULT_TOL) -> Orthoscheme:
    """Places the orthoscheme of `gram` in its model space."""
    if gram.order not in (3, 4):
        raise InputError(f"Gram matrix of order {gram.order}; orthoschemes here have order 3 or 4")
    geometry = classify_geometry(gram, tol)
    if geometry.kind == GeometryKind.EUCLIDEAN:
        return _realize_affine(gram, geometry, tol)
    ctx = SpaceContext.from_gram(gram, tol=tol)
    n = gram.order
    reference = _sheet_reference(ctx) if ctx.is_hyperbolic else np.ones(n)
    rows = []
    for i in range(n):
        e = np.eye(n)[i]
        if ctx.is_hyperbolic and classify_element(PointVector(e), ctx) != ElementKind.PROPER:
            rows.append(e)
        else:
            rows.append(normalize_point(PointVector(e), ctx, PointVector(reference)).coords)
    return Orthoscheme(gram, geometry, ctx, np.array(rows), np.eye(n),
                       gram.entries, reference)


def realize_symbol(symbol: SchlafliSymbol, tol: float = DEFAULT_TOL) -> Orthoscheme:
    return realize(build_gram(symbol), tol)


def mirror_matrices(scheme: Orthoscheme) -> List[np.ndarray]:
    return [scheme.mirror(i) for i in range(scheme.order)]


def _key(values: np.ndarray) -> bytes:
    return (np.round(values, _KEY_DECIMALS) + 0.0).tobytes()


def _projective_sign(m: np.ndarray) -> np.ndarray:
    flat = m.ravel()
    lead = flat[np.argmax(np.abs(flat) > 1e-3)]
    return -m if lead < 0 else m


@dataclass(frozen=True, eq=False)
class GroupClosure:
    generators: Tuple[np.ndarray, ...]
    elements: Tuple[np.ndarray, ...]
    # words[k] lists generator indices; elements[k] is the product of the
    # generators in written order.
    words: Tuple[str, ...]
    projective: bool = False
    _index: Dict[bytes, int] = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, m: np.ndarray, tol: float = MATRIX_TOL) -> Optional[int]:
        k = self._index.get(_key(_projective_sign(m) if self.projective else m))
        if k is None:
            return None
        e = self.elements[k]
        if np.max(np.abs(e - m)) < tol or (self.projective and np.max(np.abs(e + m)) < tol):
            return k
        return None

    def word_of(self, m: np.ndarray) -> Optional[str]:
        k = self.index(m)
        return None if k is None else self.words[k]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "elements": [e.ravel().tolist() for e in self.elements],
            "words": list(self.words),
        }


def group_closure(generators: Sequence[np.ndarray], form_metric: np.ndarray,
                  cap: int = DEFAULT_CAP, tol: float = MATRIX_TOL,
                  projective: bool = False) -> GroupClosure:
    """Breadth-first closure of the group generated by `generators`.

    With `projective`, matrices equal up to sign are one element; this is
    what hyperbolic point vectors need. Spherical groups may contain -I and
    must be closed without it.
    """
    generators = tuple(np.asarray(g, dtype=float) for g in generators)
    for k, g in enumerate(generators):
        if not preserves_forms(g, form_metric, tol):
            raise GeometryError(f"generator {k} is not an isometry")
    n = form_metric.shape[0]
    elements: List[np.ndarray] = [np.eye(n)]
    words: List[str] = [""]
    index: Dict[bytes, int] = {}

    def normal(m):
        return _projective_sign(m) if projective else m

    index[_key(normal(elements[0]))] = 0
    head = 0
    while head < len(elements):
        current, word = elements[head], words[head]
        head += 1
        for k, g in enumerate(generators):
            product = current @ g
            key = _key(normal(product))
            if key in index:
                continue
            if len(elements) >= cap:
                raise GeometryError(
                    f"group closure exceeded {cap} elements; the group is probably infinite")
            index[key] = len(elements)
            elements.append(product)
            words.append(word + str(k))
    logger.debug("closed %d generators to a group of order %d", len(generators), len(elements))
    return GroupClosure(generators, tuple(elements), tuple(words), projective, index)


def stabilizer(scheme: Orthoscheme, mirrors: Iterable[int],
               cap: int = DEFAULT_CAP) -> GroupClosure:
    """The group generated by the given mirrors m_i of `scheme`."""
    return group_closure([scheme.mirror(i) for i in mirrors], scheme.form_metric,
                         cap=cap, projective=scheme.is_hyperbolic)


def orbit_point(x: np.ndarray, group: GroupClosure, scheme: Orthoscheme) -> List[np.ndarray]:
    """Distinct images of x in the order the group elements were found."""
    orbit: List[np.ndarray] = []
    for g in group.elements:
        image = scheme.normalize(g @ x)
        if not any(np.max(np.abs(image - y)) < MATRIX_TOL for y in orbit):
            orbit.append(image)
    if group.order % len(orbit):
        raise GeometryError(
            f"orbit of size {len(orbit)} does not divide the group order {group.order}")
    return orbit


@dataclass(frozen=True, eq=False)
class MetricPolyhedron:
    combinatorics: CombinatorialPolyhedron
    scheme: Orthoscheme
    group: GroupClosure
    # Row v holds the normalized coordinates of vertex v.
    coords: np.ndarray
    # Inward face forms by face label.
    planes: Dict[str, np.ndarray]
    edge_dihedrals: Dict[Edge, float]
    edge_lengths: Dict[Edge, float]
    # Dihedral angle of the edges between the small face and a hexagon.
    alpha: float
    # Dihedral angle of the hexagon-hexagon edges.
    beta: float
    notes: Dict[str, float] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.combinatorics.name

    def center(self) -> np.ndarray:
        return self.scheme.normalize(self.scheme.vertices[-1])

    def vertex_index(self, x: np.ndarray, tol: float = 1e-7) -> Optional[int]:
        y = self.scheme.normalize(x)
        errors = np.max(np.abs(self.coords - y), axis=1)
        k = int(np.argmin(errors))
        return k if errors[k] < tol else None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "vertices": self.coords.tolist(),
            "faces": {f.label: list(f.cycle) for f in self.combinatorics.faces},
            "alpha": self.alpha,
            "beta": self.beta,
            "edge_lengths": sorted(set(round(v, 12) for v in self.edge_lengths.values())),
            "notes": dict(self.notes),
        }


def _fit_plane(points: np.ndarray, inside: np.ndarray, tol: float) -> np.ndarray:
    _, s, vt = np.linalg.svd(points)
    u = vt[-1]
    residual = float(np.max(np.abs(points @ u)))
    if residual > tol * max(1.0, float(np.max(np.abs(points)))):
        raise GeometryError(f"face vertices are not coplanar (residual {residual:.3g})")
    return u if u @ inside > 0 else -u


def _order_cycle(members: Sequence[int], edges: set) -> List[int]:
    cycle = [min(members)]
    remaining = set(members) - {cycle[0]}
    while remaining:
        nxt = sorted(v for v in remaining if edge_key(cycle[-1], v) in edges)
        if not nxt:
            raise GeometryError("face vertices do not form a cycle")
        cycle.append(nxt[0])
        remaining.discard(nxt[0])
    return cycle


def _orbit_polyhedron(name: str, scheme: Orthoscheme, point: np.ndarray,
                      face_mirrors: Sequence[Tuple[int, int]],
                      tol: float = 1e-9) -> MetricPolyhedron:
    group = stabilizer(scheme, range(scheme.order - 1))
    orbit = orbit_point(point, group, scheme)
    coords = np.array(orbit)

    def vertex_of(x):
        errors = np.max(np.abs(coords - scheme.normalize(x)), axis=1)
        k = int(np.argmin(errors))
        if errors[k] > 1e-7:
            raise GeometryError("a face corner left the vertex orbit")
        return k

    faces: List[frozenset] = []
    for pair in face_mirrors:
        local = orbit_point(point, stabilizer(scheme, pair), scheme)
        for g in group.elements:
            members = frozenset(vertex_of(g @ x) for x in local)
            if members not in faces:
                faces.append(members)
    counts: Dict[Tuple[int, int], int] = {}
    for members in faces:
        ordered = sorted(members)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                counts[(a, b)] = counts.get((a, b), 0) + 1
    edges = {e for e, c in counts.items() if c >= 2}

    center = scheme.normalize(scheme.vertices[-1])
    cycles = []
    for members in faces:
        cycle = _order_cycle(sorted(members), edges)
        det = np.linalg.det(np.array([center] + [coords[v] for v in cycle[:3]]))
        # Counter-clockwise seen from outside in the affine chart.
        if det > 0:
            cycle = [cycle[0]] + cycle[1:][::-1]
        cycles.append(cycle)
    combinatorics = CombinatorialPolyhedron.from_cycles(name, name_faces(cycles))

    planes = {f.label: _fit_plane(coords[list(f.cycle)], center, tol)
              for f in combinatorics.faces}
    dihedrals: Dict[Edge, float] = {}
    lengths: Dict[Edge, float] = {}
    by_sizes: Dict[Tuple[int, int], List[float]] = {}
    for a, b in combinatorics.edges:
        f, g = combinatorics.edge_faces(a, b)
        angle = scheme.plane_angle(planes[f], planes[g]).interior
        dihedrals[(a, b)] = angle
        lengths[(a, b)] = scheme.distance(coords[a], coords[b])
        sizes = tuple(sorted((len(combinatorics.face(f)), len(combinatorics.face(g)))))
        by_sizes.setdefault(sizes, []).append(angle)
    hexagonal = by_sizes.get((6, 6), [])
    mixed = [v for k, vs in by_sizes.items() if k != (6, 6) for v in vs]
    if not hexagonal or not mixed:
        raise GeometryError(f"{name}: expected two edge types, found {sorted(by_sizes)}")
    for values in (hexagonal, mixed):
        if max(values) - min(values) > 1e-9:
            raise GeometryError(f"{name}: edges of one type have different dihedral angles")
    logger.info("%s: %d vertices, %d faces, alpha=%.12f beta=%.12f", name,
                len(coords), len(cycles), mixed[0], hexagonal[0])
    return MetricPolyhedron(combinatorics, scheme, group, coords, planes,
                            dihedrals, lengths, alpha=mixed[0], beta=hexagonal[0])


def truncated_octahedron_cell() -> MetricPolyhedron:
    """The Euclidean {4,6,6}: the sphenoid centroid under the stabilizer of A_3."""
    scheme = realize_symbol(SPHENOID)
    point = scheme.vertices.mean(axis=0)
    return _orbit_polyhedron("truncated_octahedron", scheme, point,
                             [(0, 2), (0, 1), (1, 2)])


def football_vertex(scheme: Orthoscheme, xtol: float = 1e-12) -> Tuple[np.ndarray, float]:
    """The point of b^0 on segment A_2 A_1 whose two edge types are equally long.

    Returns the point and its parameter t along A_2 -> A_1.
    """
    a1, a2 = scheme.vertices[1], scheme.vertices[2]
    m1, m2 = scheme.mirror(1), scheme.mirror(2)

    def point_at(t):
        return scheme.normalize((1 - t) * a2 + t * a1)

    def imbalance(t):
        p = point_at(t)
        return scheme.distance(p, m1 @ p) - scheme.distance(p, m2 @ p)

    try:
        t = scipy.optimize.brentq(imbalance, 1e-9, 1 - 1e-9, xtol=xtol)
    except (ValueError, RuntimeError) as e:
        raise GeometryError(f"vertex-point solve failed to converge: {e}") from e
    return point_at(t), t


def football_metric() -> MetricPolyhedron:
    """The hyperbolic {5,6,6} around A_3 of the (5,3,5) orthoscheme."""
    scheme = realize_symbol(SchlafliSymbol.parse("5,3,5"))
    point, t = football_vertex(scheme)
    halving = scheme.normalize(scheme.vertices[1] + scheme.vertices[2])
    poly = _orbit_polyhedron("truncated_icosahedron", scheme, point, [(0, 1), (1, 2)])
    poly.notes.update({"parameter": t,
                       "halving_point_discrepancy": scheme.distance(point, halving),
                       "edge_length": min(poly.edge_lengths.values())})
    logger.debug("football vertex at t=%.15f, %.3g away from the halving point",
                 t, poly.notes["halving_point_discrepancy"])
    return poly


ARCHIMEDEAN_KINDS = {"4,6,6": truncated_octahedron_cell, "5,6,6": football_metric}


def archimedean_realize(kind: str) -> MetricPolyhedron:
    kind = kind.strip().strip("{}").replace(" ", "")
    try:
        return ARCHIMEDEAN_KINDS[kind]()
    except KeyError:
        raise InputError(f"unknown Archimedean cell {{{kind}}}; "
                         f"known: {', '.join(ARCHIMEDEAN_KINDS)}") from None


Flag = Tuple[int, int, str]


def _walk(poly: MetricPolyhedron, flag: Flag) -> List[int]:
    v, w, label = flag
    cycle = list(poly.combinatorics.face(label).cycle)
    n = len(cycle)
    i = poly.combinatorics.face(label).position(v)
    if cycle[(i + 1) % n] == w:
        return [cycle[(i + k) % n] for k in range(n)]
    if cycle[(i - 1) % n] == w:
        return [cycle[(i - k) % n] for k in range(n)]
    raise InputError(f"({v}, {w}) is not an edge of face {label}")


def isometry_from_flags(src: Flag, dst: Flag, poly: MetricPolyhedron,
                        across: bool = False, tol: float = 1e-7) -> np.ndarray:
    """The isometry taking flag `src` = (vertex, edge end, face) to `dst`.

    By default the solid stays on the same side of the face (a symmetry);
    with `across` the image of the solid lies beyond the target face, as for
    a face pairing.
    """
    scheme = poly.scheme
    source, target = _walk(poly, src), _walk(poly, dst)
    if len(source) != len(target):
        raise GeometryError(f"faces {src[2]} and {dst[2]} have different sizes")
    u, w = poly.planes[src[2]], poly.planes[dst[2]]
    off_src = scheme.off_face_point(u, poly.coords[source[0]])
    off_dst = scheme.off_face_point(-w if across else w, poly.coords[target[0]])
    x = np.column_stack([poly.coords[v] for v in source[:3]] + [off_src])
    y = np.column_stack([poly.coords[v] for v in target[:3]] + [off_dst])
    try:
        m = y @ np.linalg.inv(x)
    except np.linalg.LinAlgError as e:
        raise GeometryError(f"flag {src} does not span the space: {e}") from e
    if not preserves_forms(m, scheme.form_metric, tol):
        raise GeometryError(f"no isometry takes flag {src} to flag {dst}")
    for a, b in zip(source, target):
        if np.max(np.abs(scheme.normalize(m @ poly.coords[a]) - poly.coords[b])) > tol:
            raise GeometryError(
                f"flag {src} -> {dst}: vertex {a} does not land on vertex {b}")
    return m


def pairing_isometry(poly: MetricPolyhedron, source: str, target: str,
                     vertex_map: Mapping[int, int]) -> np.ndarray:
    """The face-pairing isometry source -> target inducing `vertex_map`."""
    a, b = poly.combinatorics.face(source).cycle[:2]
    return isometry_from_flags((a, b, source), (vertex_map[a], vertex_map[b], target),
                               poly, across=True)


def face_pairing_of(m: np.ndarray, poly: MetricPolyhedron
                    ) -> Optional[Tuple[str, str, Dict[int, int]]]:
    """The face S with m(S) a face T of `poly`, if m is a face pairing."""
    comb = poly.combinatorics
    by_members = {frozenset(f.cycle): f.label for f in comb.faces}
    for f in comb.faces:
        images = {}
        for v in f.cycle:
            k = poly.vertex_index(m @ poly.coords[v])
            if k is None:
                break
            images[v] = k
        else:
            target = by_members.get(frozenset(images.values()))
            if target is not None and target != f.label:
                return f.label, target, images
    return None


@dataclass(frozen=True)
class IsometryClass:
    kind: str
    angle: float = 0.0
    translation: float = 0.0

    def to_json(self) -> dict:
        return {"kind": self.kind, "angle": self.angle, "translation": self.translation}


def _rotation_kind(angle: float, tol: float) -> str:
    return "half-turn" if abs(angle - math.pi) < tol else "rotation"


def classify_isometry(m: np.ndarray, scheme: Orthoscheme,
                      tol: float = 1e-7) -> IsometryClass:
    """Identity, reflection, rotation, half-turn, screw or other.

    Screws report the rotation angle about and the translation length along
    their axis; a pure translation is a screw with angle 0.
    """
    if not preserves_forms(m, scheme.form_metric, tol):
        raise GeometryError("classify_isometry needs an isometry")
    n = m.shape[0]
    if np.max(np.abs(m - np.eye(n))) < tol:
        return IsometryClass("identity")
    if scheme.is_euclidean:
        linear, shift = m[:-1, :-1], m[:-1, -1]
        if np.linalg.det(linear) < 0:
            return IsometryClass("reflection" if np.allclose(m @ m, np.eye(n), atol=tol) else "other")
        angle = math.acos(max(-1.0, min(1.0, (np.trace(linear) - 1) / 2)))
        if angle < tol:
            return IsometryClass("screw", 0.0, float(np.linalg.norm(shift)))
        values, vectors = np.linalg.eig(linear)
        axis = np.real(vectors[:, int(np.argmin(np.abs(values - 1)))])
        along = abs(float(shift @ axis / np.linalg.norm(axis)))
        if along < tol:
            return IsometryClass(_rotation_kind(angle, tol), angle)
        return IsometryClass("screw", angle, along)
    if np.linalg.det(m) < 0:
        return IsometryClass("reflection" if np.allclose(m @ m, np.eye(n), atol=tol) else "other")
    values = np.linalg.eigvals(m)
    moduli = np.abs(values)
    args = np.abs(np.angle(values))
    if scheme.is_hyperbolic and moduli.max() > 1 + tol:
        unimodular = np.abs(moduli - 1) < 1e-6
        angle = float(args[unimodular].max()) if unimodular.any() else 0.0
        return IsometryClass("screw", angle, scheme.ctx.k * math.log(float(moduli.max())))
    rotating = args > tol
    if not rotating.any():
        return IsometryClass("other")
    turns = sorted(set(np.round(args[rotating], 9)))
    if len(turns) > 1:
        return IsometryClass("other", float(max(turns)))
    return IsometryClass(_rotation_kind(float(turns[0]), tol), float(turns[0]))


def evaluate_word(word: Iterable[Tuple[str, int]],
                  matrices: Mapping[str, np.ndarray]) -> np.ndarray:
    """Matrix of a group word in written order; its last letter acts first."""
    result = None
    for name, exponent in word:
        try:
            step = matrices[name]
        except KeyError:
            raise InputError(f"no matrix for generator {name!r}") from None
        if exponent < 0:
            step = np.linalg.inv(step)
        result = step if result is None else result @ step
    if result is None:
        size = next(iter(matrices.values())).shape[0] if matrices else 4
        return np.eye(size)
    return result


@dataclass(frozen=True, eq=False)
class TruncatedOrthoscheme:
    base: Orthoscheme
    # Inward forms of the truncating polar planes, by outer vertex index.
    polars: Dict[int, np.ndarray]
    # Labelled compact vertices: "A<i>" for kept vertices, "P<i><j>" for the
    # cut of edge A_i A_j by the polar of A_i.
    vertices: Dict[str, np.ndarray]
    # Interior angle between polar(A_i) and b^j for each outer i and j != i.
    orthogonality: Dict[Tuple[int, int], float]


def truncate(scheme: Orthoscheme, tol: float = DEFAULT_TOL) -> TruncatedOrthoscheme:
    """Cuts each outer vertex of a hyperbolic orthoscheme off by its polar plane."""
    if not scheme.is_hyperbolic:
        raise GeometryError("only hyperbolic orthoschemes have outer vertices")
    ctx = scheme.ctx
    n = scheme.order
    a = ctx.vertex_matrix.entries
    kinds = [classify_element(PointVector(np.eye(n)[i]), ctx, tol) for i in range(n)]
    outer = [i for i, k in enumerate(kinds) if k == ElementKind.OUTER]
    if not outer:
        raise GeometryError("no outer vertex: nothing to truncate")
    for i, k in enumerate(kinds):
        if k == ElementKind.BOUNDARY:
            raise GeometryError(f"vertex A{i} is an end; polar truncation does not apply")
    # Each polar is oriented towards a proper vertex, which the cut keeps.
    kept = next((scheme.vertices[i] for i, k in enumerate(kinds) if k == ElementKind.PROPER),
                scheme.reference)
    polars = {i: a[:, i] if a[:, i] @ kept > 0 else -a[:, i] for i in outer}
    orthogonality = {(i, j): scheme.plane_angle(polars[i], scheme.planes[j]).interior
                     for i in outer for j in range(n) if j != i}
    vertices: Dict[str, np.ndarray] = {}
    for i in range(n):
        if i not in polars:
            vertices[f"A{i}"] = scheme.normalize(np.eye(n)[i])
            continue
        for j in range(n):
            if j == i:
                continue
            cut = a[i, j] * np.eye(n)[i] - a[i, i] * np.eye(n)[j]
            if classify_element(PointVector(cut), ctx, tol) != ElementKind.PROPER:
                raise GeometryError(f"polar of A{i} misses edge A{i}A{j} inside the space")
            cut = scheme.normalize(cut)
            for k, polar in polars.items():
                if k != i and polar @ cut < -tol:
                    raise GeometryError(f"polars of A{i} and A{k} cross inside the simplex")
            vertices[f"P{i}{j}"] = cut
    logger.debug("truncated A%s: %d compact vertices", ",A".join(map(str, outer)), len(vertices))
    return TruncatedOrthoscheme(scheme, polars, vertices, orthogonality)


def cobweb_arrow_dihedral(z: int, tol: float = DEFAULT_TOL) -> float:
    """Dihedral angle of the cobweb solid at its arrow edges.

    The cobweb with z-fold symmetry is assembled from copies of the
    (2z, 2z, 2z) orthoscheme cut at A_0 and A_3 by their polar planes. Its
    arrow edges run along the cut edge A_0 A_3, where the copies on the two
    sides of the mirror b^1 meet; the angle there is twice the angle
    between b^1 and b^2.
    """
    if z < 3:
        raise InputError(f"cobweb symmetry must be at least 3, got {z}")
    scheme = realize_symbol(SchlafliSymbol.parse(f"{2 * z},{2 * z},{2 * z}"), tol)
    cut = truncate(scheme, tol)
    if not {"P03", "P30"} <= set(cut.vertices):
        raise GeometryError(f"edge A0A3 of ({2 * z},{2 * z},{2 * z}) does not survive truncation")
    angle = 2 * scheme.dihedral(1, 2)
    logger.debug("cobweb z=%d: arrow dihedral %.12f", z, angle)
    return angle


@dataclass(frozen=True, eq=False)
class FootballCell:
    polyhedron: MetricPolyhedron
    mirrors: Tuple[np.ndarray, ...]
    # The half-turn r reversing the vertex basis, A_i <-> A_{3-i}.
    half_turn: np.ndarray
    # Midpoint of A_1 A_2, on the axis of r.
    halving_point: np.ndarray


def football_cell() -> FootballCell:
    poly = football_metric()
    scheme = poly.scheme
    r = np.eye(4)[::-1].copy()
    if not preserves_forms(r, scheme.form_metric):
        raise GeometryError("basis reversal is not an isometry of the (5,3,5) orthoscheme")
    return FootballCell(poly, tuple(mirror_matrices(scheme)), r,
                        scheme.normalize(scheme.vertices[1] + scheme.vertices[2]))


def mirror_product(cell: FootballCell, word: str) -> np.ndarray:
    """Product in written order of m0..m3 ("0".."3") and the half-turn ("r")."""
    result = np.eye(4)
    for letter in word:
        result = result @ (cell.half_turn if letter == "r" else cell.mirrors[int(letter)])
    return result


# Mirror words, in matrix order, of b and of the inverse of a.
FOOTBALL_B = "302101"
FOOTBALL_A_INVERSE = "r0121"


@dataclass
class SupergroupReport:
    # Faces paired by the realized generators.
    a_faces: Optional[Tuple[str, str]]
    b_faces: Optional[Tuple[str, str]]
    # max |b - m3 m0 m2 m1 m0 m1| over the entries.
    b_deviation: float
    # max |a^-1 - r m0 m1 m2 m1|; a holds only up to the stabilizer of A_3.
    a_inverse_deviation: float
    # Word in m0, m1, m2 of a^-1 (r m0 m1 m2 m1)^-1, or None if that
    # product leaves A_3 moved.
    coset_witness: Optional[str]
    tol: float = MATRIX_TOL

    @property
    def b_literal(self) -> bool:
        return self.b_deviation < self.tol

    @property
    def a_literal(self) -> bool:
        return self.a_inverse_deviation < self.tol

    @property
    def holds(self) -> bool:
        return (self.a_faces is not None and self.b_faces is not None
                and self.b_literal and self.coset_witness is not None)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "b": {"word": "m3 m0 m2 m1 m0 m1", "faces": self.b_faces,
                  "deviation": self.b_deviation, "literal": self.b_literal},
            "a": {"inverse_word": "r m0 m1 m2 m1", "faces": self.a_faces,
                  "deviation": self.a_inverse_deviation, "literal": self.a_literal},
            "a_coset_witness": self.coset_witness,
        }


def supergroup_check(a: np.ndarray, b: np.ndarray, cell: Optional[FootballCell] = None,
                     tol: float = MATRIX_TOL) -> SupergroupReport:
    """Compares realized football generators a, b with their mirror words.

    b should equal m3 m0 m2 m1 m0 m1. The inverse of a equals r m0 m1 m2 m1
    only up to a right factor fixing A_3; that factor is looked up in the
    group generated by m0, m1, m2.
    """
    cell = cell or football_cell()
    poly = cell.polyhedron

    def faces(m):
        pairing = face_pairing_of(m, poly)
        return None if pairing is None else pairing[:2]

    a_inverse = np.linalg.inv(a)
    literal_b = mirror_product(cell, FOOTBALL_B)
    literal_a_inverse = mirror_product(cell, FOOTBALL_A_INVERSE)
    witness = poly.group.word_of(a_inverse @ np.linalg.inv(literal_a_inverse))
    report = SupergroupReport(
        faces(a), faces(b),
        float(np.max(np.abs(b - literal_b))),
        float(np.max(np.abs(a_inverse - literal_a_inverse))),
        witness, tol)
    logger.debug("supergroup check: %s", report.to_json())
    return report
