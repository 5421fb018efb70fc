# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

from spaceform_e2e_test.framework import ManifoldProgram, run_tests, TestUtils
from spaceform_e2e_test.reporting import report_results
from spaceform_e2e_test.registry import register_test_case, GLOBAL_TEST_REGISTRY
from spaceform_e2e_test.configs import CombinatorialTestConfig


class ThreeCubesPerEdge(ManifoldProgram):
    pairing = "cube_torus"
    # Opposite faces glued by translations put four cubes around every edge.
    cells_per_edge = 3

    def homology(self):
        return "Z^3"


# CHECK: FAIL - "ThreeCubesPerEdge_basic"
# CHECK:     Pairing did not compile:
# CHECK:     ContradictionError
# CHECK:     closes after 4 edges (4 distinct), expected 3
# CHECK:     Error can be reproduced with:
@register_test_case(program_factory=lambda: ThreeCubesPerEdge())
def ThreeCubesPerEdge_basic(program, tu: TestUtils):
    program.homology()


def main():
    config = CombinatorialTestConfig()
    results = run_tests(GLOBAL_TEST_REGISTRY, config)
    report_results(results, set(), verbose=True)


if __name__ == '__main__':
    main()
