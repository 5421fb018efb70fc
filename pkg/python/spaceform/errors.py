# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

from typing import List, Optional


class SpaceFormError(Exception):
    """Root of all errors raised by `spaceform`."""


class InputError(SpaceFormError, ValueError):
    """Malformed user input: symbols, JSON documents, names, parameters."""


class SingularGramError(InputError):
    """A Euclidean (singular) Gram matrix was sent down the projective path.

    Euclidean orthoschemes are realized affinely by
    `spaceform.orthoscheme.realize`, which never inverts the Gram matrix.
    """


class GeometryError(SpaceFormError):
    """A numeric construction failed: non-isometry, non-proper element,
    a solve that did not converge, or a group closure that exceeded its cap.
    """


class ContradictionError(SpaceFormError):
    """Face-pairing propagation hit an edge cycle that cannot close.

    `trace` lists the propagation steps that led to the contradiction, most
    recent last.
    """

    def __init__(self, message: str, trace: Optional[List[str]] = None):
        super().__init__(message)
        self.trace = list(trace or [])

    def __str__(self):
        if not self.trace:
            return super().__str__()
        steps = "\n".join(f"  {step}" for step in self.trace)
        return f"{super().__str__()}\nPropagation trace:\n{steps}"


class VerificationError(SpaceFormError):
    """A space-form verification check failed."""
