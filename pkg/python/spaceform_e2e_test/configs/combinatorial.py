# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

from spaceform import OutputType

from ..framework import ManifoldProgram, TestConfig, Trace
from .utils import CompiledManifold, compile_program, run_trace


class CombinatorialTestConfig(TestConfig):
    """TestConfig that propagates the face pairing and checks it combinatorially.

    Queries about the metric realization raise `VerificationError`.
    """
    def __init__(self):
        super().__init__()

    def compile(self, program: ManifoldProgram) -> CompiledManifold:
        return compile_program(program, OutputType.COMBINATORIAL)

    def run(self, artifact: CompiledManifold, trace: Trace) -> Trace:
        return run_trace(artifact, trace)
