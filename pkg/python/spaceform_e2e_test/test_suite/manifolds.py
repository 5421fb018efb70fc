# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

import numpy as np

from spaceform_e2e_test.framework import ManifoldProgram, TestUtils
from spaceform_e2e_test.registry import register_test_case

# ==============================================================================


class TruncatedOctahedronManifold(ManifoldProgram):
    """The Euclidean manifold glued from one truncated octahedron.

    Every pairing maps a face to the opposite one; the four hexagon pairs
    come from the seeds u and v.
    """
    pairing = "truncated_octahedron"

    def counts(self):
        return {"pairings": 7, "derived": 5, "classes": 12, "vertex_classes": 6}

    def derived(self):
        return ["c", "d", "e", "f", "g"]

    def class_sizes(self):
        return {3: 12}

    def vertex_class_sizes(self):
        return {4: 6}

    def class_size_at(self, index):
        return 3

    def euler(self):
        return 0

    def defining_exponents(self):
        return [[0, 4], [4, 0]]

    def homology(self):
        return "Z_4 ⊕ Z_4"

    def passed(self):
        return True

    def angle_sums(self):
        return np.full(12, 2.0)


@register_test_case(program_factory=lambda: TruncatedOctahedronManifold())
def TruncatedOctahedronManifold_basic(program, tu: TestUtils):
    program.counts()
    program.derived()
    program.class_sizes()
    program.vertex_class_sizes()
    program.class_size_at(tu.randint(0, 12))
    program.euler()
    program.defining_exponents()
    program.homology()
    program.passed()


@register_test_case(program_factory=lambda: TruncatedOctahedronManifold())
def TruncatedOctahedronManifold_metric(program, tu: TestUtils):
    program.angle_sums()
    program.passed()


# ==============================================================================


class FootballManifold(ManifoldProgram):
    """The hyperbolic manifold glued from one {5,6,6} football.

    Two screws a and b generate the fourteen derived pairings.
    """
    pairing = "football"

    def counts(self):
        return {"pairings": 16, "derived": 14, "classes": 30, "vertex_classes": 15}

    def derived(self):
        return list("cdefghijklmnop")

    def class_sizes(self):
        return {3: 30}

    def vertex_class_sizes(self):
        return {4: 15}

    def mean_class_size(self):
        return 3.0

    def relation_kinds(self):
        return {
            "trivial": list(range(1, 24)) + [25, 26],
            "defining": [24, 27],
            "consequence": [28, 29, 30],
        }

    def defining_exponents(self):
        # (-6, 7) and (8, -7), each up to inversion.
        return [[6, -7], [8, -7]]

    def homology(self):
        return "Z_14"

    def euler(self):
        return 0

    def passed(self):
        return True

    def angle_sums(self):
        return np.full(30, 2.0)

    def screw_kinds(self):
        return {"a": "screw", "b": "screw"}

    def supergroup_holds(self):
        return True

    def a_coset_witness(self):
        return "12"

    def literal_holds(self):
        # b is m3 m0 m2 m1 m0 m1 on the nose; a^-1 is r m0 m1 m2 m1 only up
        # to the stabilizer of A_3.
        return {"a": False, "b": True}


@register_test_case(program_factory=lambda: FootballManifold())
def FootballManifold_basic(program, tu: TestUtils):
    program.counts()
    program.derived()
    program.class_sizes()
    program.vertex_class_sizes()
    program.mean_class_size()
    program.relation_kinds()
    program.defining_exponents()
    program.homology()
    program.euler()
    program.passed()


@register_test_case(program_factory=lambda: FootballManifold())
def FootballManifold_metric(program, tu: TestUtils):
    program.angle_sums()
    program.screw_kinds()
    program.passed()


@register_test_case(program_factory=lambda: FootballManifold())
def FootballManifold_supergroup(program, tu: TestUtils):
    program.supergroup_holds()
    program.a_coset_witness()


@register_test_case(program_factory=lambda: FootballManifold())
def FootballManifold_literalWords(program, tu: TestUtils):
    program.literal_holds()
    program.a_coset_witness()


# ==============================================================================


class CubeTorusManifold(ManifoldProgram):
    """The 3-torus: opposite cube faces glued by translations."""
    pairing = "cube_torus"

    def __init__(self, cells_per_edge=None):
        self.cells_per_edge = cells_per_edge

    def counts(self):
        return {"pairings": 3, "derived": 0, "classes": 3, "vertex_classes": 1}

    def class_sizes(self):
        return {4: 3}

    def vertex_class_sizes(self):
        return {8: 1}

    def class_size_at(self, index):
        return 4

    def relation_kinds(self):
        return {"trivial": [], "defining": [1, 2, 3], "consequence": []}

    def defining_exponents(self):
        return [[0, 0, 0], [0, 0, 0], [0, 0, 0]]

    def exponent_matrix(self):
        return np.zeros((3, 3), dtype=np.int64)

    def homology(self):
        return "Z^3"

    def euler(self):
        return 0

    def passed(self):
        return True


@register_test_case(program_factory=lambda: CubeTorusManifold())
def CubeTorusManifold_basic(program, tu: TestUtils):
    program.counts()
    program.class_sizes()
    program.vertex_class_sizes()
    program.class_size_at(tu.randint(0, 3))
    program.relation_kinds()
    program.defining_exponents()
    program.exponent_matrix()
    program.homology()
    program.euler()
    program.passed()


# Three cubes cannot fill the space around an edge of the 3-torus.
@register_test_case(program_factory=lambda: CubeTorusManifold(cells_per_edge=3))
def CubeTorusManifold_threeCellsPerEdge(program, tu: TestUtils):
    program.passed()
