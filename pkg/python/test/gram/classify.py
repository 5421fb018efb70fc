# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import math
from fractions import Fraction

import numpy as np

from framework import run_test
from spaceform.errors import InputError, SingularGramError
from spaceform.gram import (SPHENOID, GeometryKind, SchlafliSymbol, build_gram,
                            classify_geometry, cobweb_admissible, dihedral_angles,
                            invert_gram, square_decomposition, triangle_defect)


def classify(text):
    return classify_geometry(build_gram(SchlafliSymbol.parse(text)))


# CHECK: 3,4 Spherical
# CHECK: 4,3 Spherical
# CHECK: 3,5 Spherical
# CHECK: 5,3 Spherical
# CHECK: 3,6 Euclidean
# CHECK: 6,3 Euclidean
# CHECK: 4,4 Euclidean
# CHECK: 3,7 HyperbolicCompact
# CHECK: 7,3 HyperbolicCompact
# CHECK: 4,5 HyperbolicCompact
# CHECK: 5,4 HyperbolicCompact
# CHECK: 4,3,4 Euclidean
# CHECK: 5,3,5 HyperbolicCompact
# CHECK: 6,6,6 HyperbolicOther
for text in ["3,4", "4,3", "3,5", "5,3", "3,6", "6,3", "4,4", "3,7", "7,3",
             "4,5", "5,4", "4,3,4", "5,3,5", "6,6,6"]:
    print(text, classify(text).kind.value)


# CHECK: PASS - polygon_determinants
@run_test
def polygon_determinants():
    assert abs(classify("4,3").determinant - 0.25) < 1e-12
    assert abs(classify("5,3").determinant - (3 - math.sqrt(5)) / 8) < 1e-9
    assert abs(classify("3,6").determinant) < 1e-12


# CHECK: PASS - signatures
@run_test
def signatures():
    assert classify("4,3,4").signature == (3, 0, 1)
    g = classify("5,3,5")
    assert g.signature == (3, 1, 0)
    assert g.determinant < 0
    assert all(m > 0 for m in g.minors[:-1])
    assert g.failing_minors == ()


# CHECK: PASS - completing_squares
@run_test
def completing_squares():
    rng = np.random.default_rng(0)
    for text, expected in [("4,3,4", (3, 0, 1)), ("5,3,5", (3, 1, 0))]:
        gram = build_gram(SchlafliSymbol.parse(text))
        squares = square_decomposition(gram)
        assert squares.signature() == expected, squares.signature()
        for _ in range(1000):
            x = rng.normal(size=4)
            assert abs(squares.evaluate(x) - x @ gram.entries @ x) < 1e-9


# CHECK: PASS - defects
@run_test
def defects():
    assert abs(triangle_defect(3, 7) - math.pi / 42) < 1e-12
    assert abs(triangle_defect(4, 3) + math.pi / 12) < 1e-12
    assert abs(triangle_defect(4, 4)) < 1e-12


# CHECK: PASS - sphenoid_is_euclidean
@run_test
def sphenoid_is_euclidean():
    gram = build_gram(SPHENOID)
    assert classify_geometry(gram).kind == GeometryKind.EUCLIDEAN
    angles = dihedral_angles(gram)
    assert abs(angles[(0, 1)] - math.pi / 3) < 1e-12
    assert abs(angles[(0, 2)] - math.pi / 2) < 1e-12


# CHECK: PASS - singular_inverse
@run_test
def singular_inverse():
    try:
        invert_gram(build_gram(SchlafliSymbol.parse("4,3,4")))
    except SingularGramError:
        return
    raise AssertionError("inverting a Euclidean Gram matrix must fail")


# CHECK: PASS - branch_matrix_json
@run_test
def branch_matrix_json():
    symbol = SchlafliSymbol.from_json({"order": 3, "branches": [
        {"i": 0, "j": 1, "num": 1, "den": 4}, {"i": 1, "j": 2, "num": 1, "den": 3}]})
    assert symbol.branch_ratios()[(0, 2)] == Fraction(1, 2)
    assert np.allclose(build_gram(symbol).entries,
                       build_gram(SchlafliSymbol.parse("4,3")).entries)


# CHECK: FAIL - bad_entry
# CHECK: entries must be integers >= 2
@run_test
def bad_entry():
    SchlafliSymbol.parse("1,3")


# CHECK: PASS - bad_symbols_are_input_errors
@run_test
def bad_symbols_are_input_errors():
    for text in ["1,3", "4", "4,3,4,3", "a,b"]:
        try:
            SchlafliSymbol.parse(text)
        except InputError:
            continue
        raise AssertionError(f"{text} parsed")


# CHECK: PASS - cobweb_admissibility
@run_test
def cobweb_admissibility():
    assert cobweb_admissible(6, 6, 6).admissible
    assert not cobweb_admissible(4, 4, 4).admissible
