# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import math
from dataclasses import replace

import numpy as np

from framework import run_test
from spaceform.errors import ContradictionError, InputError
from spaceform.homology import first_homology
from spaceform.orthoscheme import (FOOTBALL_A_INVERSE, FOOTBALL_B, football_cell,
                                   mirror_product)
from spaceform.pairing import (isometry_seed, isomorphisms, load_pairing,
                               metric_realization, presentation, propagate,
                               propagate_spec, verify_space_form)
from spaceform.polytope import catalog

FOOTBALL_SPEC = load_pairing("football")
FOOTBALL = propagate_spec(FOOTBALL_SPEC)


# CHECK: PASS - football_is_hyperbolic_space_form
@run_test
def football_is_hyperbolic_space_form():
    metric, anchors = metric_realization(FOOTBALL_SPEC)
    assert sorted(anchors) == ["b"]
    report = verify_space_form(FOOTBALL, metric, anchors)
    assert report.passed, report.failures()
    assert report.max_relation_deviation < 1e-7
    assert len(report.angle_sums) == 30
    for total in report.angle_sums.values():
        assert abs(total - 2 * math.pi) < 1e-9
    for name in ("a", "b"):
        assert report.screws[name]["kind"] == "screw", report.screws[name]


# CHECK: PASS - truncated_octahedron_is_euclidean_space_form
@run_test
def truncated_octahedron_is_euclidean_space_form():
    spec = load_pairing("truncated_octahedron")
    metric, anchors = metric_realization(spec)
    assert anchors == {}
    report = verify_space_form(propagate_spec(spec), metric)
    assert report.passed, report.failures()
    assert sorted(report.screws) == ["u", "v"]


# CHECK: PASS - wrong_cell_is_reported
@run_test
def wrong_cell_is_reported():
    metric, _ = metric_realization(load_pairing("truncated_octahedron"))
    report = verify_space_form(FOOTBALL, metric)
    assert not report.passed
    assert [c.name for c in report.failures()] == ["metric realization"]


# CHECK: PASS - isomorphisms_of_the_cube
@run_test
def isomorphisms_of_the_cube():
    cube = catalog("cube")
    found = list(isomorphisms(cube, cube))
    assert len(found) == 48
    vmap, fmap = found[0]
    assert vmap == {v: v for v in cube.vertices}
    assert sorted(fmap.values()) == sorted(cube.face_labels)
    for vmap, _ in found:
        assert len(set(vmap.values())) == 8


# CHECK: PASS - metric_words_agree
@run_test
def metric_words_agree():
    metric, anchors = metric_realization(FOOTBALL_SPEC)
    report = verify_space_form(FOOTBALL, metric, anchors)
    by_name = {c.name: c for c in report.checks}
    assert by_name["derived words"].passed
    assert by_name["metric relations"].passed
    assert "anchors" not in by_name
    assert np.isfinite(report.max_relation_deviation)


# CHECK: PASS - realized_generators_rebuild_the_manifold
@run_test
def realized_generators_rebuild_the_manifold():
    metric, anchors = metric_realization(FOOTBALL_SPEC)
    report = verify_space_form(FOOTBALL, metric, anchors)
    seeds = [isometry_seed(name, report.isometries[name], metric) for name in ("a", "b")]
    result = propagate(metric.combinatorics, seeds, 3)
    assert len(result.classes) == 30 and len(result.derived) == 14
    assert str(first_homology(presentation(result))) == "Z_14"


# CHECK: PASS - literal_mirror_words_do_not_close
@run_test
def literal_mirror_words_do_not_close():
    # a^-1 = r m0 m1 m2 m1 taken literally, next to b = m3 m0 m2 m1 m0 m1.
    cell = football_cell()
    a = np.linalg.inv(mirror_product(cell, FOOTBALL_A_INVERSE))
    b = mirror_product(cell, FOOTBALL_B)
    seeds = [isometry_seed("a", a, cell.polyhedron), isometry_seed("b", b, cell.polyhedron)]
    try:
        propagate(cell.polyhedron.combinatorics, seeds, 3)
    except ContradictionError:
        return
    raise AssertionError("the literal words close up to a space form")


# CHECK: FAIL - anchors_need_the_football_cell
# CHECK: anchors are given as mirror words of the {5,6,6} cell only
@run_test
def anchors_need_the_football_cell():
    spec = load_pairing("truncated_octahedron")
    metric_realization(replace(spec, metric={"cell": "4,6,6", "anchors": {"u": "0123"}}))


# CHECK: PASS - no_metric_declared
@run_test
def no_metric_declared():
    try:
        metric_realization(load_pairing("cube_torus"))
    except InputError:
        return
    raise AssertionError("cube_torus declares no metric cell")
