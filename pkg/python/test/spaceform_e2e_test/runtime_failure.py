# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import numpy as np

from spaceform_e2e_test.framework import ManifoldProgram, run_tests, TestUtils
from spaceform_e2e_test.reporting import report_results
from spaceform_e2e_test.registry import register_test_case, GLOBAL_TEST_REGISTRY
from spaceform_e2e_test.configs import CombinatorialTestConfig


class CubeTorus(ManifoldProgram):
    pairing = "cube_torus"

    def angle_sums(self):
        return np.full(3, 2.0)


# CHECK: FAIL - "CubeTorus_angleSums"
# CHECK:     Query raised:
# CHECK:     VerificationError: angle_sums needs a metric realization of cube_torus
@register_test_case(program_factory=lambda: CubeTorus())
def CubeTorus_angleSums(program, tu: TestUtils):
    program.angle_sums()


def main():
    config = CombinatorialTestConfig()
    results = run_tests(GLOBAL_TEST_REGISTRY, config)
    report_results(results, set(), verbose=True)


if __name__ == '__main__':
    main()
