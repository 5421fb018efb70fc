# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import numpy as np

from spaceform_e2e_test.framework import ManifoldProgram, run_tests, TestUtils
from spaceform_e2e_test.reporting import report_results
from spaceform_e2e_test.registry import register_test_case, GLOBAL_TEST_REGISTRY
from spaceform_e2e_test.configs import MetricTestConfig


class Football(ManifoldProgram):
    pairing = "football"

    def angle_sums(self):
        return np.full(30, 2.0)

    def screw_kinds(self):
        return {"a": "screw", "b": "screw"}

    def homology(self):
        return "Z_14"


# CHECK: PASS - "Football_metric"
@register_test_case(program_factory=lambda: Football())
def Football_metric(program, tu: TestUtils):
    program.angle_sums()
    program.screw_kinds()
    program.homology()


# CHECK: Summary:
# CHECK-NEXT: Passed: 1
def main():
    config = MetricTestConfig()
    results = run_tests(GLOBAL_TEST_REGISTRY, config, sequential=True)
    report_results(results, set(), verbose=True)


if __name__ == '__main__':
    main()
