# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import math
import random
from itertools import combinations

import sympy

from framework import run_test
from spaceform.errors import InputError
from spaceform.homology import (GroupPresentation, HomologyGroup, abelianize,
                                first_homology, homology_from_matrix,
                                row_lattice_contains, same_row_lattice,
                                smith_normal_form)
from spaceform.pairing import GroupWord


def diagonal(matrix):
    _, d, _ = smith_normal_form(matrix)
    return [d[i][i] for i in range(min(len(d), len(d[0])))]


def check_decomposition(m):
    u, d, v = smith_normal_form(m)
    assert sympy.Matrix(u) * sympy.Matrix(m) * sympy.Matrix(v) == sympy.Matrix(d)
    assert abs(sympy.Matrix(u).det()) == 1
    assert abs(sympy.Matrix(v).det()) == 1
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            assert i == j or x == 0
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) or (a != 0 and b % a == 0), diag
    return diag


# CHECK: [1, 14]
# CHECK: [4, 4]
# CHECK: [1, 0]
# CHECK: [0, 0]
print(diagonal([[8, -7], [-6, 7]]))
print(diagonal([[0, 4], [4, 0]]))
print(diagonal([[2, 3], [4, 6]]))
print(diagonal([[0, 0], [0, 0]]))


# CHECK: 0
# CHECK: Z_14
# CHECK: Z_4 ⊕ Z_4
# CHECK: Z^3
# CHECK: Z ⊕ Z_2
print(HomologyGroup(0))
print(homology_from_matrix([[8, -7], [2, 0]], 2))
print(homology_from_matrix([[0, -4], [-4, 0]], 2))
print(homology_from_matrix([], 3))
print(homology_from_matrix([[0, 2]], 2))


# CHECK: PASS - decompositions
@run_test
def decompositions():
    for m in ([[8, -7], [-6, 7]], [[0, 4], [4, 0]], [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
              [[1, 2, 3]], [[3], [6], [9]]):
        check_decomposition(m)


# CHECK: PASS - randomized_invariance
@run_test
def randomized_invariance():
    rng = random.Random(14)
    for _ in range(100):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        diag = check_decomposition(m)
        # The product of the first k invariant factors is the gcd of the k x k minors.
        s = sympy.Matrix(m)
        product = 1
        for k in range(1, min(rows, cols) + 1):
            product *= diag[k - 1]
            minors = [s.extract(list(r), list(c)).det()
                      for r in combinations(range(rows), k)
                      for c in combinations(range(cols), k)]
            assert abs(math.gcd(*[int(x) for x in minors])) == product, (m, diag)


# CHECK: PASS - presentations
@run_test
def presentations():
    p = GroupPresentation(("a", "b"), (GroupWord.parse("a^8 b^-7"), GroupWord.parse("a^2")))
    assert abelianize(p) == [[8, -7], [2, 0]]
    h = first_homology(p)
    assert h.is_finite and h.order == 14
    assert first_homology(GroupPresentation(("x",))).order == 0
    assert p.to_json() == {"generators": ["a", "b"], "relators": ["a^8 b^-7", "a^2"]}


# CHECK: PASS - lattices
@run_test
def lattices():
    m = [[8, -7], [2, 0]]
    assert row_lattice_contains(m, [-6, 7])
    assert row_lattice_contains(m, [0, 0])
    assert not row_lattice_contains(m, [1, 0])
    assert not row_lattice_contains([], [1, 0])
    assert same_row_lattice(m, [[8, -7], [-6, 7]])
    assert not same_row_lattice(m, [[8, -7], [4, 0]])


# CHECK: FAIL - unknown_generator
# CHECK: which is not a generator
@run_test
def unknown_generator():
    abelianize(GroupPresentation(("a",), (GroupWord.parse("a b"),)))


# CHECK: PASS - ragged_matrix
@run_test
def ragged_matrix():
    try:
        smith_normal_form([[1, 2], [3]])
    except InputError:
        return
    raise AssertionError("ragged matrix accepted")
