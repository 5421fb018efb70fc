# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import logging

from .errors import InputError
from .homology import HomologyGroup, first_homology
from .pairing import (PairingResult, PairingSpec, VerificationReport,
                      load_pairing, metric_realization, presentation,
                      special_dihedrals, verify_space_form)
from .repro_utils import run_with_repro_report

logger = logging.getLogger(__name__)


class OutputType(Enum):
    """How much of a space form `spaceform.compile` builds.

    Both kinds run the face-pairing propagation and report edge classes,
    relations, vertex classes, the presentation and first homology.
    """
    # Combinatorial conditions only: class sizes, partitions, quotient Euler
    # characteristic, relations in the abelianization.
    COMBINATORIAL = 0
    # Additionally realizes every pairing as an isometry of the metric cell
    # named by the pairing data, checks the cycle words and derived words as
    # matrices and the dihedral angle sums of every edge class. A cobweb cell
    # has only the angle of its special class computed.
    METRIC = 1


@dataclass(frozen=True, eq=False)
class ManifoldReport:
    spec: PairingSpec
    result: PairingResult
    verification: VerificationReport
    homology: HomologyGroup
    supergroup: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.verification.passed

    def to_json(self) -> dict:
        doc = {
            "pairing": self.spec.name,
            "result": self.result.to_json(),
            "verification": self.verification.to_json(),
            "homology": self.homology.to_json(),
            "passed": self.passed,
        }
        if self.supergroup is not None:
            doc["supergroup"] = self.supergroup
        return doc


def compile(pairing: Union[str, Path, Mapping, PairingSpec],
            output_type: OutputType = OutputType.COMBINATORIAL,
            cells_per_edge: Optional[int] = None,
            tol: float = 1e-7) -> ManifoldReport:
    """Build and verify the space form described by a face-pairing document.

    Args:
        pairing: A pairing file, a fixture name, a parsed pairing document
            or a `PairingSpec`.
        output_type: The checks to run. See `OutputType` for more details.
        cells_per_edge: Overrides the document's number of cells around
            ordinary edges.
        tol: Tolerance of the matrix identities in metric verification.

    Returns:
        A `ManifoldReport`; its `passed` property says whether every
        verification check held.
    """
    if isinstance(pairing, PairingSpec):
        spec = pairing
    elif isinstance(pairing, Mapping):
        spec = PairingSpec.from_json(pairing)
    else:
        spec = load_pairing(pairing)
    if cells_per_edge is not None:
        spec = spec.with_cells_per_edge(cells_per_edge)

    result = run_with_repro_report(spec, f"Propagating the face pairing of {spec.name}")

    metric, anchors, dihedrals = None, {}, {}
    if output_type == OutputType.METRIC:
        metric, anchors = metric_realization(spec)
        dihedrals = special_dihedrals(spec)
    else:
        assert output_type == OutputType.COMBINATORIAL
    verification = verify_space_form(result, metric, anchors, tol=tol,
                                      special_dihedrals=dihedrals)
    homology = first_homology(presentation(result))

    supergroup = None
    if metric is not None and anchors and {"a", "b"} <= set(verification.isometries):
        from .orthoscheme import supergroup_check
        report = supergroup_check(verification.isometries["a"], verification.isometries["b"])
        verification.check("supergroup identities", report.holds,
                           f"b deviation {report.b_deviation:.3g}, "
                           f"a coset witness {report.coset_witness}")
        supergroup = report.to_json()
    logger.info("%s: H1 = %s, %s", spec.name, homology,
                "verified" if verification.passed else "verification failed")
    return ManifoldReport(spec, result, verification, homology, supergroup)


__all__ = ["InputError", "ManifoldReport", "OutputType", "compile"]
