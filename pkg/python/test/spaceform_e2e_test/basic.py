# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

from spaceform_e2e_test.framework import ManifoldProgram, run_tests, TestUtils
from spaceform_e2e_test.reporting import report_results
from spaceform_e2e_test.registry import register_test_case, GLOBAL_TEST_REGISTRY
from spaceform_e2e_test.configs import CombinatorialTestConfig


class CubeTorus(ManifoldProgram):
    pairing = "cube_torus"

    def homology(self):
        return "Z^3"

    def class_size_at(self, index):
        return 4


class TruncatedOctahedron(ManifoldProgram):
    pairing = "truncated_octahedron"

    def homology(self):
        return "Z_4 ⊕ Z_4"

    def euler(self):
        return 0


# CHECK: PASS - "CubeTorus_basic"
@register_test_case(program_factory=lambda: CubeTorus())
def CubeTorus_basic(program, tu: TestUtils):
    program.homology()
    program.class_size_at(tu.randint(0, 3))


# CHECK: PASS - "TruncatedOctahedron_basic"
@register_test_case(program_factory=lambda: TruncatedOctahedron())
def TruncatedOctahedron_basic(program, tu: TestUtils):
    program.homology()
    program.euler()


def main():
    config = CombinatorialTestConfig()
    results = run_tests(GLOBAL_TEST_REGISTRY, config)
    report_results(results, set(), verbose=True)


if __name__ == '__main__':
    main()
