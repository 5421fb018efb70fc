# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import numpy as np

from spaceform_e2e_test.framework import ManifoldProgram, run_tests, TestUtils
from spaceform_e2e_test.reporting import report_results
from spaceform_e2e_test.registry import register_test_case, GLOBAL_TEST_REGISTRY
from spaceform_e2e_test.configs import CombinatorialTestConfig

# CHECK: Unexpected outcome summary:
# CHECK: FAIL - "WrongOracle_basic"


# Every answer below is wrong for the 3-torus, in a different way.
class WrongOracle(ManifoldProgram):
    pairing = "cube_torus"

    # CHECK-NEXT: first homology (query #0 "homology"):
    # CHECK-NEXT: computed 'Z^3', oracle expects 'Z^2'
    def homology(self):
        return "Z^2"

    # CHECK-NEXT: mean edge class size (query #1 "mean_class_size"):
    # CHECK-NEXT: computed 4.0, oracle expects about 3.0
    def mean_class_size(self):
        return 3.0

    # CHECK-NEXT: edge classes by size (query #2 "class_sizes"):
    # CHECK-NEXT: [4]: computed 3, oracle expects 2
    def class_sizes(self):
        return {4: 2}

    # CHECK-NEXT: vertex classes by size (query #3 "vertex_class_sizes"):
    # CHECK-NEXT: computed keys [8], oracle expects [4]
    def vertex_class_sizes(self):
        return {4: 2}

    # CHECK-NEXT: relation census (query #4 "relation_kinds"):
    # CHECK-NEXT: ['defining'][2]: computed 3, oracle expects 4
    def relation_kinds(self):
        return {"trivial": [], "defining": [1, 2, 4], "consequence": []}

    # CHECK-NEXT: defining relators (query #5 "defining_exponents"):
    # CHECK-NEXT: computed 3 entries, oracle expects 2
    def defining_exponents(self):
        return [[0, 0, 0], [0, 0, 0]]

    # CHECK-NEXT: verification verdict (query #6 "passed"):
    # CHECK-NEXT: engine answered with bool, oracle expects str
    def passed(self):
        return "yes"

    # CHECK-NEXT: quotient Euler characteristic (query #7 "euler"):
    # CHECK-NEXT: engine answered with int, oracle expects bool
    def euler(self):
        return False

    # CHECK-NEXT: exponent-sum matrix (query #8 "exponent_matrix"):
    # CHECK-NEXT: computed [3, 3] array in [+0, +0], oracle expects [3, 3] array in [+1, +1]; 9 entries differ, first at [0, 0]
    def exponent_matrix(self):
        return np.ones((3, 3))

    # CHECK-NEXT: pairing and class counts (query #9 "counts"):
    # CHECK-NEXT: engine answered with dict, oracle expects tuple
    def counts(self):
        return (3, 0, 3, 1)

    # CHECK-NEXT: derived pairing names (query #10 "derived"):
    # CHECK-NEXT: computed 0 entries, oracle expects 1
    def derived(self):
        return ["c"]


@register_test_case(program_factory=lambda: WrongOracle())
def WrongOracle_basic(program, tu: TestUtils):
    program.homology()
    program.mean_class_size()
    program.class_sizes()
    program.vertex_class_sizes()
    program.relation_kinds()
    program.defining_exponents()
    program.passed()
    program.euler()
    program.exponent_matrix()
    program.counts()
    program.derived()


def main():
    config = CombinatorialTestConfig()
    results = run_tests(GLOBAL_TEST_REGISTRY, config)
    report_results(results, set(), verbose=True)


if __name__ == '__main__':
    main()
