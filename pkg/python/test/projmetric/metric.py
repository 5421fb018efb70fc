# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import math

import numpy as np

from framework import run_test
from spaceform.errors import SingularGramError
from spaceform.gram import SchlafliSymbol
from spaceform.projmetric import (ElementKind, SpaceContext, angle, classify_element,
                                  distance, is_isometry, normalize_point, plane, point,
                                  pole_polar, reflect, reflection_matrix)

H = SpaceContext.from_symbol(SchlafliSymbol.parse("5,3,5"))
S = SpaceContext.from_symbol(SchlafliSymbol.parse("4,3"))


# CHECK: PASS - vertices_of_a_compact_simplex_are_proper
@run_test
def vertices_of_a_compact_simplex_are_proper():
    for i in range(4):
        assert classify_element(H.vertex(i), H) == ElementKind.PROPER
        assert classify_element(H.face(i), H) == ElementKind.PROPER


# CHECK: PASS - outer_vertices
@run_test
def outer_vertices():
    ctx = SpaceContext.from_symbol(SchlafliSymbol.parse("6,6,6"))
    kinds = [classify_element(ctx.vertex(i), ctx) for i in range(4)]
    assert kinds == [ElementKind.OUTER, ElementKind.PROPER,
                     ElementKind.PROPER, ElementKind.OUTER], kinds


# CHECK: PASS - normalization
@run_test
def normalization():
    x = normalize_point(point([3.0, 1.0, 2.0, 5.0]), H)
    assert abs(H.point_product(x.coords, x.coords) + 1) < 1e-12
    assert H.point_product(x.coords, H.interior_point().coords) < 0


# CHECK: PASS - distance_is_projective
@run_test
def distance_is_projective():
    x, y = H.vertex(0), H.vertex(3)
    d = distance(x, y, H)
    assert d > 0
    assert abs(distance(point(-2.5 * x.coords), y, H) - d) < 1e-12
    assert distance(x, x, H) == 0.0


# CHECK: PASS - spherical_arc
@run_test
def spherical_arc():
    # A_0 A_1 of the cube orthoscheme, seen from the cube center.
    expected = math.acos(2 / math.sqrt(6))
    assert abs(distance(S.vertex(0), S.vertex(1), S) - expected) < 1e-12


# CHECK: PASS - face_angles
@run_test
def face_angles():
    report = angle(H.face(0), H.face(1), H)
    assert abs(report.interior - math.pi / 5) < 1e-12
    assert report.proper_intersection
    assert abs(angle(H.face(0), H.face(2), H).interior - math.pi / 2) < 1e-12


# CHECK: PASS - pole_and_polar_are_inverse
@run_test
def pole_and_polar_are_inverse():
    u = plane([0.3, -1.0, 0.5, 2.0])
    back = pole_polar(pole_polar(u, H), H)
    assert np.allclose(back.coords, u.coords)


# CHECK: PASS - reflections_are_isometric_involutions
@run_test
def reflections_are_isometric_involutions():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        u = plane(rng.normal(size=4))
        if abs(H.form_product(u.coords, u.coords)) < 0.1 * (u.coords @ u.coords):
            continue
        m = reflection_matrix(u, H)
        assert is_isometry(m, H.metric, 1e-10)
        assert np.max(np.abs(m @ m - np.eye(4))) < 1e-10
        x = point(rng.normal(size=4))
        assert np.allclose(reflect(x, u, H).coords, m @ x.coords, atol=1e-10)


# CHECK: PASS - mirror_fixes_its_plane
@run_test
def mirror_fixes_its_plane():
    m = reflection_matrix(H.face(0), H)
    for i in (1, 2, 3):
        assert np.allclose(m @ H.vertex(i).coords, H.vertex(i).coords)
    assert not np.allclose(m @ H.vertex(0).coords, H.vertex(0).coords)


# CHECK: PASS - euclidean_context_is_rejected
@run_test
def euclidean_context_is_rejected():
    try:
        SpaceContext.from_symbol(SchlafliSymbol.parse("4,3,4"))
    except SingularGramError:
        return
    raise AssertionError("Euclidean symbol accepted")


# CHECK: FAIL - classify_in_spherical_space
# CHECK: only defined in hyperbolic contexts
@run_test
def classify_in_spherical_space():
    classify_element(S.vertex(0), S)
