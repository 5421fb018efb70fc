# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: true

import sys


def run_test(test):
    """Runs `test` when the module is loaded and prints its outcome.

    A raised exception prints `FAIL - <name>` and then the exception type
    and message on the next line, so FileCheck can match the diagnostic.
    Output is flushed per test to keep it ordered with logs on stderr.
    """
    try:
        test()
        print(f"PASS - {test.__name__}")
    except Exception as e:
        print(f"FAIL - {test.__name__}")
        print(f"Errors: {type(e).__name__}: {e}")
    print()
    sys.stdout.flush()
    return test
