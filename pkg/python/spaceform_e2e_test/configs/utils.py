# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

from collections import Counter
from typing import Dict, List, Optional

import math

import numpy as np

from spaceform import ManifoldReport, OutputType, compile
from spaceform.errors import VerificationError
from spaceform.homology import abelianize
from spaceform.pairing import RelationKind, presentation

from ..framework import ManifoldProgram, Trace


def _normalized(exponents: List[int]) -> List[int]:
    # A relator and its inverse give the same relation.
    for x in exponents:
        if x:
            return exponents if x > 0 else [-y for y in exponents]
    return exponents


class CompiledManifold:
    """Answers the queries of a `ManifoldProgram` from a `ManifoldReport`.

    Edge classes are numbered from 1 in the order propagation closes them.
    """

    def __init__(self, report: ManifoldReport):
        self.report = report
        self.result = report.result
        self.verification = report.verification

    def _require_metric(self, query: str):
        if not self.verification.angle_sums:
            raise VerificationError(
                f"{query} needs a metric realization of {self.report.spec.name}")

    def homology(self) -> str:
        return str(self.report.homology)

    def passed(self) -> bool:
        return self.report.passed

    def euler(self) -> int:
        return self.verification.euler

    def failed_checks(self) -> List[str]:
        return [c.name for c in self.verification.failures()]

    def counts(self) -> Dict[str, int]:
        return {
            "pairings": len(self.result.pairings),
            "derived": len(self.result.derived),
            "classes": len(self.result.classes),
            "vertex_classes": len(self.result.vertex_classes),
        }

    def derived(self) -> List[str]:
        return [p.name for p in self.result.derived]

    def class_sizes(self) -> Dict[int, int]:
        return dict(Counter(c.size for c in self.result.classes))

    def vertex_class_sizes(self) -> Dict[int, int]:
        return dict(Counter(len(v.vertices) for v in self.result.vertex_classes))

    def class_size_at(self, index: int) -> int:
        return self.result.classes[index].size

    def mean_class_size(self) -> float:
        return len(self.result.polyhedron.edges) / len(self.result.classes)

    def relation_kinds(self) -> Dict[str, List[int]]:
        return {kind.value: [c.id for c in self.result.relations(kind)]
                for kind in RelationKind}

    def defining_exponents(self) -> List[List[int]]:
        """Exponent sums of the defining relators, each up to inversion."""
        return sorted(
            _normalized(c.word.exponent_sums(self.result.generators))
            for c in self.result.relations(RelationKind.DEFINING))

    def exponent_matrix(self) -> np.ndarray:
        rows = abelianize(presentation(self.result))
        return np.array(rows, dtype=np.int64).reshape(len(rows), len(self.result.generators))

    def angle_sums(self) -> np.ndarray:
        """Dihedral angle sums of the edge classes, in units of pi."""
        self._require_metric("angle_sums")
        return np.array([total / math.pi
                         for _, total in sorted(self.verification.angle_sums.items())])

    def screw_kinds(self) -> Dict[str, str]:
        self._require_metric("screw_kinds")
        return {name: screw["kind"] for name, screw in self.verification.screws.items()}

    def supergroup_holds(self) -> bool:
        self._require_metric("supergroup_holds")
        return self._supergroup()["holds"]

    def a_coset_witness(self) -> Optional[str]:
        self._require_metric("a_coset_witness")
        return self._supergroup()["a_coset_witness"]

    def literal_holds(self) -> Dict[str, bool]:
        """Whether each generator equals its mirror word exactly."""
        self._require_metric("literal_holds")
        supergroup = self._supergroup()
        return {name: supergroup[name]["literal"] for name in ("a", "b")}

    def _supergroup(self) -> dict:
        if self.report.supergroup is None:
            raise VerificationError(
                f"{self.report.spec.name} has no anchored generators to express "
                "through the reflection supergroup")
        return self.report.supergroup


def compile_program(program: ManifoldProgram, output_type: OutputType) -> CompiledManifold:
    return CompiledManifold(
        compile(program.pairing, output_type, cells_per_edge=program.cells_per_edge))


def run_trace(artifact: CompiledManifold, trace: Trace) -> Trace:
    return [query._replace(answer=getattr(artifact, query.name)(*query.args))
            for query in trace]
