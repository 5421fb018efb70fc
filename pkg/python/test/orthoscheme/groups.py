# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import math

import numpy as np

from framework import run_test
from spaceform.errors import GeometryError, InputError
from spaceform.gram import SPHENOID, SchlafliSymbol, build_gram
from spaceform.orthoscheme import (cobweb_arrow_dihedral, group_closure,
                                   mirror_matrices, orbit_point, preserves_forms,
                                   realize, realize_symbol, stabilizer, truncate)

SCHEME_535 = realize_symbol(SchlafliSymbol.parse("5,3,5"))


# CHECK: dihedral 10
# CHECK: stabilizer of A3 120
# CHECK: sphenoid stabilizer 24
# CHECK: cube group 48
print("dihedral", stabilizer(SCHEME_535, [0, 1]).order)
print("stabilizer of A3", stabilizer(SCHEME_535, [0, 1, 2]).order)
print("sphenoid stabilizer", stabilizer(realize_symbol(SPHENOID), [0, 1, 2]).order)
print("cube group", stabilizer(realize_symbol(SchlafliSymbol.parse("4,3")), [0, 1, 2]).order)


# CHECK: PASS - mirrors_are_involutive_isometries
@run_test
def mirrors_are_involutive_isometries():
    for symbol in ["5,3,5", "4,3,4", "4,3"]:
        scheme = realize_symbol(SchlafliSymbol.parse(symbol))
        for m in mirror_matrices(scheme):
            assert preserves_forms(m, scheme.form_metric, 1e-10)
            assert np.allclose(m @ m, np.eye(scheme.order), atol=1e-10)


# CHECK: PASS - realized_dihedral_angles
@run_test
def realized_dihedral_angles():
    for symbol in [SchlafliSymbol.parse("5,3,5"), SchlafliSymbol.parse("4,3,4"), SPHENOID]:
        scheme = realize(build_gram(symbol))
        gram = scheme.gram
        for i in range(4):
            for j in range(i + 1, 4):
                assert abs(scheme.dihedral(i, j) - gram.dihedral(i, j)) < 1e-9


# CHECK: PASS - simplex_contains_its_vertices
@run_test
def simplex_contains_its_vertices():
    for symbol in ["5,3,5", "4,3,4"]:
        scheme = realize_symbol(SchlafliSymbol.parse(symbol))
        assert scheme.contains(scheme.interior_point())
        for v in scheme.vertices:
            assert scheme.contains(v)


# CHECK: PASS - words_reproduce_elements
@run_test
def words_reproduce_elements():
    group = stabilizer(SCHEME_535, [0, 1, 2])
    mirrors = mirror_matrices(SCHEME_535)
    for element, word in zip(group.elements[::7], group.words[::7]):
        product = np.eye(4)
        for letter in word:
            product = product @ mirrors[int(letter)]
        assert np.allclose(product, element, atol=1e-8)
        assert group.index(element) is not None


# CHECK: PASS - dodecahedron_vertex_orbit
@run_test
def dodecahedron_vertex_orbit():
    group = stabilizer(SCHEME_535, [0, 1, 2])
    # A_0 is a corner of the dodecahedral cell around A_3.
    orbit = orbit_point(SCHEME_535.vertices[0], group, SCHEME_535)
    assert len(orbit) == 20


# CHECK: FAIL - infinite_group_hits_the_cap
# CHECK: exceeded 500 elements
@run_test
def infinite_group_hits_the_cap():
    stabilizer(SCHEME_535, [0, 1, 2, 3], cap=500)


# CHECK: PASS - truncated_666
@run_test
def truncated_666():
    cut = truncate(realize_symbol(SchlafliSymbol.parse("6,6,6")))
    assert sorted(cut.polars) == [0, 3]
    assert sorted(cut.vertices) == ["A1", "A2", "P01", "P02", "P03", "P30", "P31", "P32"]
    for value in cut.orthogonality.values():
        assert abs(value - math.pi / 2) < 1e-9
    ctx = cut.base.ctx
    for x in cut.vertices.values():
        assert ctx.point_product(x, x) < 0


# CHECK: PASS - cobweb_arrow_angles_close_up
@run_test
def cobweb_arrow_angles_close_up():
    for z in (3, 5, 7, 9):
        angle = cobweb_arrow_dihedral(z)
        assert abs(angle - math.pi / z) < 1e-12, (z, angle)
        assert abs(2 * z * angle - 2 * math.pi) < 1e-9
    try:
        cobweb_arrow_dihedral(2)
    except InputError:
        return
    raise AssertionError("a cobweb needs at least threefold symmetry")


# CHECK: PASS - compact_simplices_are_not_truncated
@run_test
def compact_simplices_are_not_truncated():
    try:
        truncate(SCHEME_535)
    except GeometryError:
        return
    raise AssertionError("(5,3,5) has no outer vertex")



QUARTER_TURN = np.array([[0.0, -1.0], [1.0, 0.0]])


# CHECK: PASS - quarter_turn_closure
@run_test
def quarter_turn_closure():
    group = group_closure([QUARTER_TURN], np.eye(2))
    assert group.order == 4
    assert list(group.words) == ["", "0", "00", "000"]
    assert group.index(-np.eye(2)) == 2
    # Up to sign only the identity and the turn remain.
    assert group_closure([QUARTER_TURN], np.eye(2), projective=True).order == 2


# CHECK: FAIL - shear_is_not_an_isometry
# CHECK: generator 0 is not an isometry
@run_test
def shear_is_not_an_isometry():
    group_closure([np.array([[1.0, 1.0], [0.0, 1.0]])], np.eye(2))
