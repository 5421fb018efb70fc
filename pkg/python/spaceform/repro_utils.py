# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

import json
import os
import re
import tempfile

from .errors import ContradictionError
from .pairing import PairingResult, PairingSpec, propagate_spec


def get_spec_name_for_debug_dump(spec: PairingSpec) -> str:
    """Gets a file name stem for a debug dump.

    The name is not guaranteed to be unique.
    """
    name = re.sub(r"[^A-Za-z0-9_.-]", "_", spec.name or "")
    return name or "UnnamedPairing"


def run_with_repro_report(spec: PairingSpec, description: str) -> PairingResult:
    """Propagates `spec`, with a nice repro report if it fails."""
    try:
        return propagate_spec(spec)
    except ContradictionError as e:
        # TODO: Dumps of concurrent e2e runs of the same pairing overwrite
        # each other; include the process id once that matters.
        filename = os.path.join(tempfile.gettempdir(),
                                get_spec_name_for_debug_dump(spec) + ".json")
        with open(filename, "w", encoding="utf-8") as f:
            json.dump(spec.to_json(), f, indent=2, sort_keys=True)
        steps = "\n".join(f"  {step}" for step in e.trace)
        raise ContradictionError(f"""
{description} failed with the following diagnostics:
{e.args[0]}
{steps}

Error can be reproduced with:
$ python -m spaceform manifold {filename}
Add '-v' to log every derivation and closed edge class.
""") from None
