# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
The projective metric model of spherical and hyperbolic space.

Points are vectors x given by coordinates over the vertex basis a_j, planes are
forms u given by coordinates over the form basis b^i, and a_j . b^i is the
Kronecker delta. The Gram matrix (b^{ij}) is the inner product of forms and its
inverse (a_{ij}) the inner product of vectors. Both kinds of element are
homogeneous: proportional coordinate lists describe the same element.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

import logging
import math

import numpy as np

from .errors import GeometryError, SingularGramError
from .gram import (DEFAULT_TOL, GeometryClass, GeometryKind, GramMatrix,
                   SchlafliSymbol, VertexMatrix, build_gram, classify_geometry,
                   invert_gram)

logger = logging.getLogger(__name__)

# Arguments of arccosh in [1 - ACOSH_CLAMP, 1) are treated as coincident points.
ACOSH_CLAMP = 1e-12


class ElementKind(Enum):
    # Inside hyperbolic space (points) / meeting it (planes).
    PROPER = "Proper"
    # On the absolute: an end (point) or a plane tangent to it.
    BOUNDARY = "Boundary"
    # Beyond the absolute.
    OUTER = "Outer"


@dataclass(frozen=True, eq=False)
class PointVector:
    coords: np.ndarray

    def __post_init__(self):
        if not np.any(self.coords):
            raise GeometryError("a point vector cannot be zero")


@dataclass(frozen=True, eq=False)
class PlaneForm:
    coords: np.ndarray

    def __post_init__(self):
        if not np.any(self.coords):
            raise GeometryError("a plane form cannot be zero")


Element = Union[PointVector, PlaneForm]


def point(coords: Sequence[float]) -> PointVector:
    return PointVector(np.asarray(coords, dtype=float))


def plane(coords: Sequence[float]) -> PlaneForm:
    return PlaneForm(np.asarray(coords, dtype=float))


@dataclass(frozen=True, eq=False)
class SpaceContext:
    gram: GramMatrix
    vertex_matrix: VertexMatrix
    geometry: GeometryClass
    # Metric constant of hyperbolic contexts; curvature is -1/k^2.
    k: float = 1.0
    # Sphere radius of spherical contexts.
    radius: float = 1.0

    @staticmethod
    def from_gram(gram: GramMatrix, k: float = 1.0, radius: float = 1.0,
                  tol: float = DEFAULT_TOL) -> "SpaceContext":
        geometry = classify_geometry(gram, tol)
        if geometry.kind == GeometryKind.EUCLIDEAN:
            raise SingularGramError(
                "Euclidean Gram matrices have no projective metric context; "
                "realize the orthoscheme affinely with spaceform.orthoscheme.realize")
        return SpaceContext(gram=gram, vertex_matrix=invert_gram(gram),
                            geometry=geometry, k=k, radius=radius)

    @staticmethod
    def from_symbol(symbol: SchlafliSymbol, **kwargs) -> "SpaceContext":
        return SpaceContext.from_gram(build_gram(symbol), **kwargs)

    @property
    def order(self) -> int:
        return self.gram.order

    @property
    def is_hyperbolic(self) -> bool:
        return self.geometry.kind.is_hyperbolic

    @property
    def curvature(self) -> float:
        if self.is_hyperbolic:
            return -1.0 / self.k**2
        return 1.0 / self.radius**2

    @property
    def metric(self) -> np.ndarray:
        """The inner product of point vectors, (a_{ij})."""
        return self.vertex_matrix.entries

    def point_product(self, x: np.ndarray, y: np.ndarray) -> float:
        return float(x @ self.vertex_matrix.entries @ y)

    def form_product(self, u: np.ndarray, v: np.ndarray) -> float:
        return float(u @ self.gram.entries @ v)

    def vertex(self, i: int) -> PointVector:
        """The simplex vertex A_i, i.e. a_i."""
        return PointVector(np.eye(self.order)[i])

    def face(self, i: int) -> PlaneForm:
        """The simplex face plane b^i, opposite to A_i."""
        return PlaneForm(np.eye(self.order)[i])

    def interior_point(self) -> PointVector:
        return PointVector(np.ones(self.order))


def _product(e: Element, f: Element, ctx: SpaceContext) -> float:
    if isinstance(e, PointVector):
        return ctx.point_product(e.coords, f.coords)
    return ctx.form_product(e.coords, f.coords)


def classify_element(e: Element, ctx: SpaceContext,
                     tol: float = DEFAULT_TOL) -> ElementKind:
    if not ctx.is_hyperbolic:
        raise GeometryError(
            "proper/boundary/outer classification is only defined in "
            f"hyperbolic contexts, this one is {ctx.geometry.kind.value}")
    q = _product(e, e, ctx)
    scale = tol * float(e.coords @ e.coords)
    if abs(q) <= scale:
        return ElementKind.BOUNDARY
    if isinstance(e, PointVector):
        return ElementKind.PROPER if q < 0 else ElementKind.OUTER
    return ElementKind.PROPER if q > 0 else ElementKind.OUTER


def normalize_point(x: PointVector, ctx: SpaceContext,
                    reference: Optional[PointVector] = None) -> PointVector:
    """Scales a proper hyperbolic point to <x,x> = -1.

    The sign puts x on the sheet of `reference` (default: the simplex
    interior), i.e. <x, reference> < 0. Spherical points are scaled to unit
    length with the same sign convention reversed.
    """
    if reference is None:
        reference = ctx.interior_point()
    q = ctx.point_product(x.coords, x.coords)
    side = ctx.point_product(x.coords, reference.coords)
    if ctx.is_hyperbolic:
        if q >= 0:
            raise GeometryError(f"cannot normalize non-proper point (<x,x>={q:.3g})")
        scale = 1.0 / math.sqrt(-q)
        if side > 0:
            scale = -scale
    else:
        scale = 1.0 / math.sqrt(q)
        if side < 0:
            scale = -scale
    return PointVector(x.coords * scale)


def distance(x: PointVector, y: PointVector, ctx: SpaceContext) -> float:
    xx = ctx.point_product(x.coords, x.coords)
    yy = ctx.point_product(y.coords, y.coords)
    xy = ctx.point_product(x.coords, y.coords)
    if not ctx.is_hyperbolic:
        c = xy / math.sqrt(xx * yy)
        return ctx.radius * math.acos(max(-1.0, min(1.0, c)))
    for name, e in (("x", x), ("y", y)):
        if classify_element(e, ctx) != ElementKind.PROPER:
            raise GeometryError(f"distance needs proper points, {name} is not")
    # Proportional vectors describe the same point, so the sheet is irrelevant.
    c = abs(xy) / math.sqrt(xx * yy)
    if c < 1.0:
        if c < 1.0 - ACOSH_CLAMP:
            raise GeometryError(f"arccosh argument {c!r} is below 1")
        c = 1.0
    return ctx.k * math.acosh(c)


@dataclass(frozen=True)
class AngleReport:
    # arccos(<u,v> / sqrt(<u,u><v,v>)) for outward oriented forms.
    raw: float
    # The dihedral angle inside the simplex, pi - raw.
    interior: float
    # Whether the two planes meet in a proper straight line.
    proper_intersection: bool


def angle(u: PlaneForm, v: PlaneForm, ctx: SpaceContext) -> AngleReport:
    uu = ctx.form_product(u.coords, u.coords)
    vv = ctx.form_product(v.coords, v.coords)
    uv = ctx.form_product(u.coords, v.coords)
    if uu <= 0 or vv <= 0:
        raise GeometryError("angle needs proper planes (<u,u> > 0)")
    raw = math.acos(max(-1.0, min(1.0, uv / math.sqrt(uu * vv))))
    return AngleReport(raw=raw, interior=math.pi - raw,
                       proper_intersection=uu * vv - uv * uv > 0)


def pole_polar(e: Element, ctx: SpaceContext) -> Element:
    """Pole of a plane (u_i b^{ij}) or polar of a point (a_{ij} x^j)."""
    if isinstance(e, PlaneForm):
        return PointVector(ctx.gram.entries @ e.coords)
    return PlaneForm(ctx.vertex_matrix.entries @ e.coords)


def _mirror_norm(mirror: PlaneForm, ctx: SpaceContext, tol: float) -> float:
    uu = ctx.form_product(mirror.coords, mirror.coords)
    if abs(uu) <= tol * float(mirror.coords @ mirror.coords):
        raise GeometryError("cannot reflect in a boundary plane (<u,u> = 0)")
    return uu


def reflect(e: Element, mirror: PlaneForm, ctx: SpaceContext,
            tol: float = DEFAULT_TOL) -> Element:
    uu = _mirror_norm(mirror, ctx, tol)
    u = mirror.coords
    if isinstance(e, PointVector):
        pole = ctx.gram.entries @ u
        return PointVector(e.coords - 2 * float(e.coords @ u) / uu * pole)
    return PlaneForm(e.coords - 2 * ctx.form_product(e.coords, u) / uu * u)


def reflection_matrix(mirror: PlaneForm, ctx: SpaceContext,
                      tol: float = DEFAULT_TOL) -> np.ndarray:
    """The reflection in `mirror` as a matrix acting on point coordinates."""
    uu = _mirror_norm(mirror, ctx, tol)
    u = mirror.coords
    return np.eye(ctx.order) - 2.0 / uu * np.outer(ctx.gram.entries @ u, u)


def is_isometry(m: np.ndarray, metric: np.ndarray, tol: float = 1e-8) -> bool:
    """Whether `m` preserves the inner product `metric` of point vectors."""
    return bool(np.max(np.abs(m.T @ metric @ m - metric)) < tol)
