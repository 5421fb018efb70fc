# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

import numpy as np

from spaceform.polytope import cobweb_arrow_edges, cobweb_seeds

from spaceform_e2e_test.framework import ManifoldProgram, TestUtils
from spaceform_e2e_test.registry import register_test_case


def cobweb_document(z: int) -> dict:
    """A pairing document for the cobweb solid with z-fold symmetry."""
    return {
        "name": f"cobweb_z{z}",
        "polyhedron": f"cobweb:{z}",
        "cells_per_edge": 3,
        "special_classes": [{
            "size": 2 * z,
            "angle": f"1/{z}",
            "edge_hints": [list(e) for e in cobweb_arrow_edges(z)],
        }],
        "seeds": cobweb_seeds(z),
        "metric": {"cell": f"cobweb:{z}"},
    }


class CobwebManifold(ManifoldProgram):
    """Cobweb manifolds: one 2z-edge class around the hexagon ring,
    every other edge class of size 3."""

    def __init__(self, z: int):
        self.z = z
        self.pairing = cobweb_document(z)

    def counts(self):
        z = self.z
        return {"pairings": 5 * z + 1, "derived": 4 * z - 2,
                "classes": 8 * z + 1, "vertex_classes": 3 * z + 1}

    def class_sizes(self):
        return {3: 8 * self.z, 2 * self.z: 1}

    def vertex_class_sizes(self):
        return {4: 3 * self.z, 4 * self.z: 1}

    def mean_class_size(self):
        return 26 * self.z / (8 * self.z + 1)

    def euler(self):
        return 0

    def angle_sums(self):
        # Only the arrow class has a computed angle: 2z edges of pi/z.
        return np.array([2.0])

    def passed(self):
        return True


@register_test_case(program_factory=lambda: CobwebManifold(3))
def CobwebManifold_z3(program, tu: TestUtils):
    program.counts()
    program.class_sizes()
    program.vertex_class_sizes()
    program.mean_class_size()
    program.euler()
    program.passed()


@register_test_case(program_factory=lambda: CobwebManifold(5))
def CobwebManifold_z5(program, tu: TestUtils):
    program.counts()
    program.class_sizes()
    program.vertex_class_sizes()
    program.euler()
    program.passed()


@register_test_case(program_factory=lambda: CobwebManifold(7))
def CobwebManifold_z7(program, tu: TestUtils):
    program.counts()
    program.class_sizes()
    program.euler()
    program.passed()


@register_test_case(program_factory=lambda: CobwebManifold(3))
def CobwebManifold_z3_arrowAngles(program, tu: TestUtils):
    program.angle_sums()
    program.passed()
