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

    def __init__(self, homology):
        self._homology = homology

    def homology(self):
        return self._homology


# CHECK: XPASS - "CubeTorus_expectedToFail"
@register_test_case(program_factory=lambda: CubeTorus("Z^3"))
def CubeTorus_expectedToFail(program, tu: TestUtils):
    program.homology()


# CHECK: XFAIL - "CubeTorus_wrongHomology"
@register_test_case(program_factory=lambda: CubeTorus("Z_2"))
def CubeTorus_wrongHomology(program, tu: TestUtils):
    program.homology()


# CHECK: Unexpected outcome summary:
# CHECK: ****** Unexpectedly Passed tests - 1 tests
# CHECK-NEXT:     XPASS - "CubeTorus_expectedToFail"
# CHECK: Summary:
# CHECK-NEXT: Expectedly Failed: 1
# CHECK-NEXT: Unexpectedly Passed: 1
def main():
    config = CombinatorialTestConfig()
    results = run_tests(GLOBAL_TEST_REGISTRY, config, sequential=True)
    report_results(results,
                   {"CubeTorus_expectedToFail", "CubeTorus_wrongHomology"},
                   verbose=True)


if __name__ == '__main__':
    main()
