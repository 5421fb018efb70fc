# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

import math

from framework import run_test
from spaceform.errors import InputError
from spaceform.polytope import (CATALOG_NAMES, CombinatorialPolyhedron, catalog,
                                cobweb_arrow_edges, cobweb_pairing, cobweb_seeds,
                                cobweb_solid, crossing_edges, render_svg,
                                resolve_polyhedron, schlegel_layout, schlegel_marks,
                                validate)


# The duals of the simple solids, kept for their symmetry groups.
NOT_SIMPLE = {"octahedron": 4, "icosahedron": 5}

# CHECK: cube V=8 E=12 F=6 {3: 8} ok
# CHECK: dodecahedron V=20 E=30 F=12 {3: 20} ok
# CHECK: truncated_octahedron V=24 E=36 F=14 {3: 24} ok
# CHECK: truncated_icosahedron V=60 E=90 F=32 {3: 60} ok
# CHECK: octahedron V=6 E=12 F=8 {4: 6} ok
# CHECK: icosahedron V=12 E=30 F=20 {5: 12} ok
for name in CATALOG_NAMES:
    report = validate(catalog(name), degree=NOT_SIMPLE.get(name, 3))
    print(name, f"V={report.vertices} E={report.edges} F={report.faces}",
          report.degrees, "ok" if report.ok else report.violations)


# r_k and q_k with k even lie on an arrow edge and meet four edges each.
# CHECK: cobweb:3 V=48 E=78 F=32 {3: 36, 4: 12} ok
# CHECK: cobweb:5 V=80 E=130 F=52 {3: 60, 4: 20} ok
# CHECK: cobweb:7 V=112 E=182 F=72 {3: 84, 4: 28} ok
# CHECK: cobweb:9 V=144 E=234 F=92 {3: 108, 4: 36} ok
for z in (3, 5, 7, 9):
    report = validate(cobweb_solid(z))
    assert report.degrees == {3: 12 * z, 4: 4 * z}, report.degrees
    print(report.name, f"V={report.vertices} E={report.edges} F={report.faces}",
          report.degrees, "ok" if report.ok else report.violations)


# CHECK: PASS - cobweb_is_not_simple
@run_test
def cobweb_is_not_simple():
    report = validate(cobweb_solid(3), degree=3)
    assert report.violations == ["vertex degrees {4: 12} besides 3"], report.violations
    assert report.to_json()["degrees"] == {"3": 36, "4": 12}


# CHECK: PASS - face_labels_follow_side_counts
@run_test
def face_labels_follow_side_counts():
    football = catalog("truncated_icosahedron")
    assert football.face_labels[:20] == [f"h{k}" for k in range(20)]
    assert football.face_labels[20:] == [f"p{k}" for k in range(12)]
    octa = catalog("truncated_octahedron")
    assert sorted(len(f) for f in octa.faces) == [4] * 6 + [6] * 8


# CHECK: PASS - cobweb_pairing_counts
@run_test
def cobweb_pairing_counts():
    for z in (3, 5, 7, 9):
        poly = cobweb_solid(z)
        entries = cobweb_pairing(z)
        assert len(entries) == 5 * z + 1
        faces = [e["source"] for e in entries] + [e["target"] for e in entries]
        assert sorted(faces) == sorted(poly.face_labels)
        assert len(cobweb_seeds(z)) == z + 3
        arrows = cobweb_arrow_edges(z)
        assert len(arrows) == 2 * z
        for a, b in arrows:
            assert all(label.startswith("H") for label in poly.edge_faces(a, b))


# CHECK: PASS - cobweb_seed_names
@run_test
def cobweb_seed_names():
    names = [entry["name"] for entry in cobweb_seeds(3)]
    assert names == ["s1", "s2", "s3", "s", "a1", "b2"], names


# CHECK: PASS - references
@run_test
def references():
    assert resolve_polyhedron("cobweb:5").name == "cobweb:5"
    assert resolve_polyhedron("cube").name == "cube"
    inline = catalog("cube").to_json()
    assert resolve_polyhedron(inline).face_labels == catalog("cube").face_labels


# CHECK: PASS - bad_references
@run_test
def bad_references():
    for ref in ("cobweb:4", "cobweb:x", "tetrahedron", 7):
        try:
            resolve_polyhedron(ref)
        except InputError:
            continue
        raise AssertionError(f"{ref!r} resolved")


# CHECK: PASS - validation_finds_orientation_faults
@run_test
def validation_finds_orientation_faults():
    doc = catalog("cube").to_json()
    doc["faces"][0]["cycle"] = doc["faces"][0]["cycle"][::-1]
    report = validate(CombinatorialPolyhedron.from_json(doc))
    assert not report.ok
    assert any(v.startswith("orientability") for v in report.violations)


# CHECK: FAIL - declared_vertices_must_match
# CHECK: declared vertices do not match the face cycles
@run_test
def declared_vertices_must_match():
    doc = catalog("cube").to_json()
    doc["vertices"] = list(range(9))
    CombinatorialPolyhedron.from_json(doc)


# CHECK: PASS - schlegel_diagram_is_planar
@run_test
def schlegel_diagram_is_planar():
    for name, outer in (("truncated_icosahedron", "h19"),
                        ("truncated_octahedron", "h0"), ("cobweb:3", "T")):
        poly = resolve_polyhedron(name)
        layout = schlegel_layout(poly, outer)
        assert len(layout.positions) == len(poly.vertices)
        assert crossing_edges(poly, layout) == [], name


# CHECK: PASS - rendering_is_deterministic
@run_test
def rendering_is_deterministic():
    poly = catalog("truncated_icosahedron")
    layout = schlegel_layout(poly, "h19")
    classes = {e: k % 7 + 1 for k, e in enumerate(poly.edges)}
    first = render_svg(poly, layout, edge_classes=classes)
    assert first == render_svg(poly, schlegel_layout(poly, "h19"), edge_classes=classes)
    assert first.startswith('<?xml version="1.0"')
    assert "<svg" in first
    assert first != render_svg(poly, layout)


# CHECK: PASS - marks_come_in_drawing_order
@run_test
def marks_come_in_drawing_order():
    poly = catalog("truncated_icosahedron")
    layout = schlegel_layout(poly, "h19")
    classes = {e: k % 7 + 1 for k, e in enumerate(poly.edges) if k % 2 == 0}
    marks = schlegel_marks(poly, layout, labels={"p0": "north"}, edge_classes=classes)
    kinds = [m.kind for m in marks]
    assert kinds == ["edge"] * 90 + ["vertex"] * 60 + ["face"] * 32 + ["class"] * 45
    faces = [m.text for m in marks if m.kind == "face"]
    assert faces[:20] == [f"h{k}" for k in range(20)]
    assert faces[20] == "north" and faces[31] == "p11"
    assert [m.text for m in marks if m.kind == "class"][:3] == ["1", "3", "5"]
    # The outer face is labelled in the corner; every other label sits inside the disc.
    for m, f in zip(marks[150:182], poly.faces):
        x, y = m.points[0]
        if f.label == "h19":
            assert (x, y) == (60.0, 40.0)
        else:
            assert math.hypot(x - 500, y - 500) < 450, (f.label, x, y)
