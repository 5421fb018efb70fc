# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
