# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""The `spaceform` command line: classify, manifold and render.

Exit codes: 0 success, 1 failed derivation or verification, 2 bad usage or
input. Reports are JSON on stdout with sorted keys; logs go to stderr.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import argparse
import json
import logging
import sys

from . import OutputType, compile
from .errors import ContradictionError, GeometryError, InputError
from .gram import (DEFAULT_TOL, SchlafliSymbol, build_gram, classify_geometry,
                   dihedral_angles, square_decomposition, triangle_defect)
from .pairing import find_fixture, relation_table
from .polytope import crossing_edges, render_svg, resolve_polyhedron, schlegel_layout

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any] = field(default_factory=dict)
    status: int = EXIT_OK

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs,
                "results": self.results, "status": self.status}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False)


def _parse_symbol(text: str) -> SchlafliSymbol:
    if text.lstrip().startswith("{"):
        try:
            return SchlafliSymbol.from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise InputError(f"bad branch matrix JSON: {e}") from e
    return SchlafliSymbol.parse(text)


def cmd_classify(args) -> RunReport:
    symbol = _parse_symbol(args.symbol)
    gram = build_gram(symbol)
    geometry = classify_geometry(gram, args.tol)
    squares = square_decomposition(gram)
    results = {
        "symbol": str(symbol),
        "gram": gram.entries.tolist(),
        "classification": geometry.to_json(),
        "dihedral_angles": {f"{i}{j}": a for (i, j), a in dihedral_angles(gram).items()},
        "square_signature": list(squares.signature(args.tol)),
    }
    if symbol.branches is None and len(symbol.entries) == 2:
        results["triangle_defect"] = triangle_defect(*symbol.entries)
    return RunReport("classify", {"symbol": args.symbol, "tol": args.tol}, results)


def cmd_manifold(args) -> RunReport:
    output_type = OutputType.METRIC if args.metric else OutputType.COMBINATORIAL
    report = compile(args.pairing, output_type, cells_per_edge=args.cells_per_edge,
                     tol=args.tol)
    if args.table:
        print(relation_table(report.result), file=sys.stderr)
    run = RunReport("manifold",
                    {"pairing": str(args.pairing), "metric": args.metric,
                     "cells_per_edge": args.cells_per_edge, "tol": args.tol},
                    report.to_json(),
                    EXIT_OK if report.passed else EXIT_FAILED)
    if args.out:
        Path(args.out).write_text(run.dumps() + "\n", encoding="utf-8")
    return run


def _load_render_input(ref: str):
    path = Path(ref)
    if path.suffix == ".json" or path.is_file():
        if not path.is_file():
            path = find_fixture(ref)
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise InputError(f"{path}: invalid JSON: {e}") from e
        # A pairing document names its polyhedron.
        return resolve_polyhedron(doc["polyhedron"] if "seeds" in doc else doc)
    return resolve_polyhedron(ref)


def _load_edge_classes(path: str) -> Dict[tuple, int]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON: {e}") from e
    # Accept a bare pairing result or a full manifold report.
    for key in ("results", "result"):
        if isinstance(doc, dict) and key in doc:
            doc = doc[key]
    try:
        return {tuple(sorted(edge)): c["id"] for c in doc["classes"] for edge in c["edges"]}
    except (KeyError, TypeError) as e:
        raise InputError(f"{path}: no edge classes found ({e})") from e


def cmd_render(args) -> RunReport:
    poly = _load_render_input(args.polyhedron)
    outer = args.outer or max(poly.faces, key=len).label
    poly.face(outer)
    layout = schlegel_layout(poly, outer)
    crossings = crossing_edges(poly, layout)
    if crossings:
        logger.warning("%d edge crossings in the drawing of %s", len(crossings), poly.name)
    classes = _load_edge_classes(args.classes) if args.classes else None
    svg = render_svg(poly, layout, edge_classes=classes)
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return RunReport("render", {"polyhedron": args.polyhedron, "outer": outer,
                                "classes": args.classes, "out": args.out},
                     {"crossings": len(crossings), "faces": len(poly.faces),
                      "edge_classes": len(set(classes.values())) if classes else 0,
                      "numbered_edges": sum(e in classes for e in poly.edges) if classes else 0})


def _get_argparse() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spaceform",
        description="Orthoschemes, face pairings and space forms.")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log derivations and intermediate results to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", help="classify a Schläfli symbol")
    classify.add_argument("symbol", help='"p,q", "p,q,r" or a branch matrix JSON object')
    classify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    classify.set_defaults(func=cmd_classify)

    manifold = commands.add_parser("manifold", help="propagate and verify a face pairing")
    manifold.add_argument("pairing", help="pairing JSON file or fixture name")
    manifold.add_argument("--metric", action="store_true",
                          help="also verify on the metric cell of the pairing file")
    manifold.add_argument("--cells-per-edge", type=int, default=None,
                          help="override the cells around an ordinary edge")
    manifold.add_argument("--tol", type=float, default=1e-7)
    manifold.add_argument("--table", action="store_true",
                          help="print the relation table to stderr")
    manifold.add_argument("--out", default=None, help="also write the report here")
    manifold.set_defaults(func=cmd_manifold)

    render = commands.add_parser("render", help="draw a Schlegel diagram as SVG")
    render.add_argument("polyhedron", help='catalog name, "cobweb:<z>" or JSON file')
    render.add_argument("--outer", default=None, help="face drawn as the outer boundary")
    render.add_argument("--classes", default=None,
                        help="pairing result JSON whose edge classes are drawn")
    render.add_argument("--out", default=None, help="SVG file (default: stdout)")
    render.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _get_argparse().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        run = args.func(args)
    except ContradictionError as e:
        print(f"spaceform: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (InputError, OSError) as e:
        print(f"spaceform: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as e:
        print(f"spaceform: {e}", file=sys.stderr)
        return EXIT_FAILED
    if run.command != "render" or args.out:
        print(run.dumps())
    return run.status
