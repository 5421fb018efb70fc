# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

import argparse
import logging
import re
import sys

from spaceform_e2e_test.framework import run_tests
from spaceform_e2e_test.reporting import report_results
from spaceform_e2e_test.registry import GLOBAL_TEST_REGISTRY
from spaceform_e2e_test.configs import CombinatorialTestConfig, MetricTestConfig

from .xfail_sets import COMBINATORIAL_XFAIL_SET, METRIC_PASS_SET

# Side-effecting import: registers the manifold tests.
from spaceform_e2e_test.test_suite import register_all_tests
register_all_tests()


def _expected_failures(config_name: str):
    if config_name == "metric":
        return {t.unique_name for t in GLOBAL_TEST_REGISTRY} - METRIC_PASS_SET
    return COMBINATORIAL_XFAIL_SET


CONFIGS = {
    "combinatorial": (CombinatorialTestConfig,
                      "propagate the face pairing and check class sizes, the "
                      "relation census, the quotient Euler characteristic and "
                      "first homology"),
    "metric": (MetricTestConfig,
               "also realize the pairings as isometries of the metric cell the "
               "document names and check angle sums and generator identities"),
}


def _get_argparse():
    parser = argparse.ArgumentParser(
        description="Check space forms built from face-pairing documents "
        "against independently known answers.")
    parser.add_argument("-c", "--config", choices=sorted(CONFIGS),
                        default="combinatorial",
                        help="; ".join(f'"{k}": {v[1]}' for k, v in CONFIGS.items()))
    parser.add_argument("-f", "--filter", default=".*",
                        help="regular expression selecting tests by name")
    parser.add_argument("-l", "--list", action="store_true",
                        help="print the selected test names and exit")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="print the disagreeing answers of failing tests")
    parser.add_argument("-s", "--sequential", action="store_true",
                        help="run in this process instead of forked workers")
    return parser


def main():
    args = _get_argparse().parse_args()
    logging.basicConfig(level=logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    pattern = re.compile(args.filter)
    tests = [t for t in GLOBAL_TEST_REGISTRY if pattern.match(t.unique_name)]
    if args.list or not tests:
        if not tests:
            print(f"ERROR: no test matches {args.filter!r}; the tests are:")
        for test in (tests or GLOBAL_TEST_REGISTRY):
            print(test.unique_name)
        sys.exit(0 if tests else 1)

    config_class, _ = CONFIGS[args.config]
    results = run_tests(tests, config_class(), sequential=args.sequential)
    unexpected = report_results(results, _expected_failures(args.config),
                                args.verbose)
    sys.exit(1 if unexpected else 0)


if __name__ == "__main__":
    main()
