# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

from spaceform import OutputType

from ..framework import ManifoldProgram, TestConfig, Trace
from .utils import CompiledManifold, compile_program, run_trace


class MetricTestConfig(TestConfig):
    """TestConfig that also realizes the pairings as isometries of a metric cell.

    Pairings whose document names no metric cell fail to compile.
    """
    def __init__(self):
        super().__init__()

    def compile(self, program: ManifoldProgram) -> CompiledManifold:
        return compile_program(program, OutputType.METRIC)

    def run(self, artifact: CompiledManifold, trace: Trace) -> Trace:
        return run_trace(artifact, trace)
