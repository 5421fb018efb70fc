# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
Face pairings of a fundamental polyhedron.

Starting from a few seed pairings, `propagate` walks around the edges of the
polyhedron. An edge cycle that closes yields a relation; a cycle that has
the declared length but is missing one pairing determines that pairing,
which becomes a new generator expressed as a word in the seeds.
"""

from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import (Dict, Iterable, Iterator, List, Mapping, Optional,
                    Sequence, Tuple, Union)

import json
import logging
import math
import os

import networkx as nx
import numpy as np

from .errors import ContradictionError, GeometryError, InputError
from .homology import GroupPresentation, abelianize, row_lattice_contains
from .polytope import (CombinatorialPolyhedron, Edge, Face, edge_key,
                       resolve_polyhedron)

logger = logging.getLogger(__name__)

Letter = Tuple[str, int]

# Bounds of the rewriting search deciding whether a relation is a consequence.
REWRITE_DEPTH = 20
REWRITE_CAP = 20000
REWRITE_BEAM = 200

RELATION_TOL = 1e-7
ANGLE_TOL = 1e-9

FIXTURE_DIR_ENV = "SPACEFORM_FIXTURE_DIR"
_REPO_FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"

_DERIVED_NAMES = "cdefghijklmnopqrstuvwxyz"


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for name, exponent in letters:
        if out and out[-1][0] == name and out[-1][1] == -exponent:
            out.pop()
        else:
            out.append((name, exponent))
    return tuple(out)


def _cyclically_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    w = _reduce(letters)
    while len(w) > 1 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return w


def _inverse(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    return tuple((name, -exponent) for name, exponent in reversed(letters))


def _canonical(letters: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
    """Least rotation of the word or its inverse."""
    best = letters
    for w in (letters, _inverse(letters)):
        for i in range(len(w)):
            rotation = w[i:] + w[:i]
            if rotation < best:
                best = rotation
    return best


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word; letters are (generator, +1 or -1).

    As a product of isometries words read in matrix order: in `u v` the
    isometry v acts first.
    """
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for name, exponent in self.letters:
            if exponent not in (1, -1):
                raise InputError(f"letter {name}^{exponent} of a word must have exponent +-1")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @staticmethod
    def generator(name: str) -> "GroupWord":
        return GroupWord(((name, 1),))

    @staticmethod
    def parse(text: str) -> "GroupWord":
        """Reads words like "a^3 b^-1 c"; "1" or "" is the identity."""
        letters: List[Letter] = []
        for token in text.split():
            if token == "1":
                continue
            name, _, power = token.partition("^")
            try:
                k = int(power) if power else 1
            except ValueError:
                raise InputError(f"bad exponent in word token {token!r}") from None
            if not name:
                raise InputError(f"bad word token {token!r}")
            letters.extend([(name, 1 if k > 0 else -1)] * abs(k))
        return GroupWord(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "GroupWord":
        return GroupWord(_inverse(self.letters))

    def cyclically_reduced(self) -> "GroupWord":
        return GroupWord(_cyclically_reduce(self.letters))

    def canonical(self) -> Tuple[Letter, ...]:
        return _canonical(_cyclically_reduce(self.letters))

    def exponent_sum(self, name: str) -> int:
        return sum(e for g, e in self.letters if g == name)

    def exponent_sums(self, names: Sequence[str]) -> List[int]:
        return [self.exponent_sum(g) for g in names]

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        i = 0
        while i < len(self.letters):
            j = i
            while j < len(self.letters) and self.letters[j] == self.letters[i]:
                j += 1
            name, sign = self.letters[i]
            power = (j - i) * sign
            parts.append(name if power == 1 else f"{name}^{power}")
            i = j
        return " ".join(parts)


# ---------------------------------------------------------------------------
# Input data
# ---------------------------------------------------------------------------

def _reversing_map(source: Face, target: Face, src_edge: Sequence[int],
                   dst_edge: Sequence[int]) -> Optional[Dict[int, int]]:
    """The map c[j] -> d[a - j] sending src_edge onto dst_edge, if any."""
    c, d = source.cycle, target.cycle
    m = len(c)
    p, q = src_edge
    for a in range(m):
        vmap = {c[j]: d[(a - j) % m] for j in range(m)}
        if vmap.get(p) == dst_edge[0] and vmap.get(q) == dst_edge[1]:
            return vmap
    return None


@dataclass(frozen=True)
class FacePairingSeed:
    name: str
    source: str
    target: str
    src_edge: Tuple[int, int]
    dst_edge: Tuple[int, int]

    @staticmethod
    def from_json(doc: Mapping) -> "FacePairingSeed":
        try:
            return FacePairingSeed(str(doc["name"]), str(doc["source"]), str(doc["target"]),
                                   tuple(int(v) for v in doc["src_edge"]),
                                   tuple(int(v) for v in doc["dst_edge"]))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed seed {doc!r}: {e}") from e

    def vertex_map(self, poly: CombinatorialPolyhedron) -> Dict[int, int]:
        source, target = poly.face(self.source), poly.face(self.target)
        if self.source == self.target:
            raise InputError(f"seed {self.name} pairs face {self.source} with itself")
        if len(source) != len(target):
            raise InputError(f"seed {self.name}: faces {self.source} and {self.target} "
                             "have different sizes")
        if len(self.src_edge) != 2 or len(self.dst_edge) != 2:
            raise InputError(f"seed {self.name}: edges must have two vertices")
        vmap = _reversing_map(source, target, self.src_edge, self.dst_edge)
        if vmap is None:
            raise InputError(
                f"seed {self.name}: no orientation-reversing map of {self.source} onto "
                f"{self.target} takes {list(self.src_edge)} to {list(self.dst_edge)}")
        return vmap

    def to_json(self) -> dict:
        return {"name": self.name, "source": self.source, "target": self.target,
                "src_edge": list(self.src_edge), "dst_edge": list(self.dst_edge)}


def _parse_angle(value) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad angle {value!r}; give a fraction of pi like \"1/3\"") from None


@dataclass(frozen=True)
class SpecialClass:
    """An edge class of non-default size, recognized by any of its edges."""
    size: int
    edges: frozenset
    # Declared dihedral angle of the class edges, as a fraction of pi.
    angle: Optional[Fraction] = None

    @staticmethod
    def from_json(doc: Mapping) -> "SpecialClass":
        try:
            size = int(doc["size"])
            edges = frozenset(edge_key(int(a), int(b)) for a, b in doc["edge_hints"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed special class {doc!r}: {e}") from e
        if size < 1:
            raise InputError(f"special class size must be positive, got {size}")
        angle = doc.get("angle")
        return SpecialClass(size, edges, None if angle is None else _parse_angle(angle))

    def to_json(self) -> dict:
        doc = {"size": self.size, "edge_hints": [list(e) for e in sorted(self.edges)]}
        if self.angle is not None:
            doc["angle"] = str(self.angle)
        return doc


def _parse_edge_order(doc) -> Tuple[Edge, ...]:
    try:
        return tuple(edge_key(int(a), int(b)) for a, b in doc)
    except (TypeError, ValueError) as e:
        raise InputError(f"edge_order must list vertex pairs: {e}") from e


@dataclass(frozen=True)
class PairingSpec:
    name: str
    polyhedron: CombinatorialPolyhedron
    cells_per_edge: int
    seeds: Tuple[FacePairingSeed, ...]
    special: Tuple[SpecialClass, ...] = ()
    # Optional metric realization: {"cell": "5,6,6", "anchors": {name: mirror word}}.
    metric: Optional[Mapping] = None
    # Edges to visit before the label scan, in order; fixes class numbering.
    edge_order: Tuple[Edge, ...] = ()

    @staticmethod
    def from_json(doc: Mapping, name: str = "pairing") -> "PairingSpec":
        if not isinstance(doc, Mapping):
            raise InputError("a pairing document must be a JSON object")
        for key in ("polyhedron", "cells_per_edge", "seeds"):
            if key not in doc:
                raise InputError(f"pairing document is missing {key!r}")
        try:
            cells_per_edge = int(doc["cells_per_edge"])
        except (TypeError, ValueError):
            raise InputError(f"cells_per_edge must be an integer, got "
                             f"{doc['cells_per_edge']!r}") from None
        return PairingSpec(
            name=str(doc.get("name", name)),
            polyhedron=resolve_polyhedron(doc["polyhedron"]),
            cells_per_edge=cells_per_edge,
            seeds=tuple(FacePairingSeed.from_json(s) for s in doc["seeds"]),
            special=tuple(SpecialClass.from_json(s) for s in doc.get("special_classes", ())),
            metric=doc.get("metric"),
            edge_order=_parse_edge_order(doc.get("edge_order", ())))

    def with_cells_per_edge(self, cells_per_edge: int) -> "PairingSpec":
        return replace(self, cells_per_edge=cells_per_edge)

    def to_json(self) -> dict:
        doc = {
            "name": self.name,
            "polyhedron": self.polyhedron.to_json(),
            "cells_per_edge": self.cells_per_edge,
            "special_classes": [s.to_json() for s in self.special],
            "seeds": [s.to_json() for s in self.seeds],
        }
        if self.metric is not None:
            doc["metric"] = dict(self.metric)
        if self.edge_order:
            doc["edge_order"] = [list(e) for e in self.edge_order]
        return doc


def fixture_search_path() -> List[Path]:
    dirs = []
    override = os.environ.get(FIXTURE_DIR_ENV)
    if override:
        dirs.append(Path(override))
    dirs.extend([Path.cwd() / "fixtures", _REPO_FIXTURES])
    return dirs


def find_fixture(name: Union[str, Path]) -> Path:
    """Resolves a pairing file; bare names are looked up in the fixture directories."""
    path = Path(name)
    if path.parent == Path("."):
        candidates = [path.name] if path.suffix else [path.name, path.name + ".json"]
        for directory in fixture_search_path():
            for candidate in candidates:
                if (directory / candidate).is_file():
                    return directory / candidate
    if path.is_file():
        return path
    raise FileNotFoundError(f"no pairing file {str(name)!r} (searched "
                            f"{', '.join(str(d) for d in fixture_search_path())})")


def load_pairing(name: Union[str, Path]) -> PairingSpec:
    path = find_fixture(name)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON: {e}") from e
    logger.debug("loaded pairing %s from %s", path.stem, path)
    return PairingSpec.from_json(doc, name=path.stem)


# ---------------------------------------------------------------------------
# Propagation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Pairing:
    name: str
    source: str
    target: str
    vertex_map: Mapping[int, int]
    word: GroupWord
    derived: bool = False

    def inverse(self) -> "Pairing":
        return Pairing(f"{self.name}^-1", self.target, self.source,
                       {w: v for v, w in self.vertex_map.items()},
                       self.word.inverse(), self.derived)

    def image(self, edge: Edge) -> Edge:
        return edge_key(self.vertex_map[edge[0]], self.vertex_map[edge[1]])

    def to_json(self) -> dict:
        return {"name": self.name, "source": self.source, "target": self.target,
                "word": str(self.word), "derived": self.derived,
                "vertex_map": {str(v): w for v, w in sorted(self.vertex_map.items())}}


class RelationKind(Enum):
    TRIVIAL = "trivial"
    DEFINING = "defining"
    CONSEQUENCE = "consequence"


@dataclass(frozen=True)
class EdgeClass:
    id: int
    # Edges in the order the cycle visits them, with the face each is left from.
    edges: Tuple[Edge, ...]
    faces: Tuple[str, ...]
    word: GroupWord
    kind: Optional[RelationKind] = None

    @property
    def size(self) -> int:
        return len(self.edges)

    def to_json(self, generators: Sequence[str] = ()) -> dict:
        return {
            "id": self.id,
            "size": self.size,
            "edges": [list(e) for e in self.edges],
            "word": str(self.word),
            "kind": self.kind.value if self.kind else None,
            "exponents": self.word.exponent_sums(generators),
        }


@dataclass(frozen=True)
class VertexClass:
    id: int
    vertices: Tuple[int, ...]
    # Edge class id -> number of edge ends at vertices of this class.
    incidence: Mapping[int, int]

    @property
    def edge_classes(self) -> List[int]:
        return sorted(self.incidence)

    def to_json(self) -> dict:
        return {"id": self.id, "vertices": list(self.vertices),
                "edge_classes": self.edge_classes,
                "incidence": {str(k): v for k, v in sorted(self.incidence.items())}}


@dataclass(frozen=True, eq=False)
class PairingResult:
    polyhedron: CombinatorialPolyhedron
    cells_per_edge: int
    special: Tuple[SpecialClass, ...]
    generators: Tuple[str, ...]
    # Seeds first, then derived pairings in derivation order.
    pairings: Tuple[Pairing, ...]
    classes: Tuple[EdgeClass, ...]
    vertex_classes: Tuple[VertexClass, ...]
    trace: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def derived(self) -> List[Pairing]:
        return [p for p in self.pairings if p.derived]

    def pairing(self, name: str) -> Pairing:
        for p in self.pairings:
            if p.name == name:
                return p
        raise InputError(f"no pairing named {name!r}")

    def face_pairing(self, face: str) -> Pairing:
        for p in self.pairings:
            if p.source == face:
                return p
            if p.target == face:
                return p.inverse()
        raise InputError(f"face {face} is not paired")

    def expected_size(self, edges: Iterable[Edge]) -> int:
        return _expected_size(edges, self.special, self.cells_per_edge)

    def relations(self, kind: RelationKind) -> List[EdgeClass]:
        return [c for c in self.classes if c.kind == kind]

    def class_of(self, edge: Edge) -> int:
        edge = edge_key(*edge)
        for c in self.classes:
            if edge in c.edges:
                return c.id
        raise InputError(f"{edge} is not an edge of {self.polyhedron.name}")

    def to_json(self) -> dict:
        return {
            "polyhedron": self.polyhedron.name,
            "cells_per_edge": self.cells_per_edge,
            "generators": list(self.generators),
            "pairings": [p.to_json() for p in self.pairings],
            "classes": [c.to_json(self.generators) for c in self.classes],
            "vertex_classes": [v.to_json() for v in self.vertex_classes],
            "presentation": presentation(self).to_json(),
        }


def _expected_size(edges: Iterable[Edge], special: Sequence[SpecialClass],
                   cells_per_edge: int) -> int:
    edges = list(edges)
    for sc in special:
        if any(e in sc.edges for e in edges):
            return sc.size
    return cells_per_edge


def _derived_names(taken: Iterable[str]) -> Iterator[str]:
    taken = set(taken)
    for name in _DERIVED_NAMES:
        if name not in taken:
            yield name
    k = 1
    while True:
        if f"g{k}" not in taken:
            yield f"g{k}"
        k += 1


def _edge_text(edge: Edge) -> str:
    return f"{edge[0]}-{edge[1]}"


class _Propagation:
    """Mutable state of one propagation run."""

    def __init__(self, poly: CombinatorialPolyhedron, cells_per_edge: int,
                 special: Sequence[SpecialClass]):
        self.poly = poly
        self.cells_per_edge = cells_per_edge
        self.special = tuple(special)
        # Face -> the pairing leaving it.
        self.by_face: Dict[str, Pairing] = {}
        self.pairings: List[Pairing] = []
        self.classified: Dict[Edge, int] = {}
        self.classes: List[EdgeClass] = []
        self.trace: List[str] = []
        self.limit = 2 * len(poly.edges) + 4

    def contradiction(self, message: str) -> ContradictionError:
        return ContradictionError(message, self.trace[-25:])

    def add(self, pairing: Pairing):
        for face in (pairing.source, pairing.target):
            if face in self.by_face:
                raise InputError(f"face {face} is paired twice "
                                 f"({self.by_face[face].name} and {pairing.name})")
        self.by_face[pairing.source] = pairing
        self.by_face[pairing.target] = pairing.inverse()
        self.pairings.append(pairing)

    def other_face(self, edge: Edge, face: str) -> str:
        owners = self.poly.edge_faces(*edge)
        return owners[1] if owners[0] == face else owners[0]

    def forward(self, edge: Edge, face: str):
        """Walks from (edge, face) applying known pairings.

        Returns the visited steps, the image of edge[0] and whether the walk
        came back to its start.
        """
        steps = [(edge, face)]
        tracked = edge[0]
        while True:
            e, x = steps[-1]
            p = self.by_face.get(x)
            if p is None:
                return steps, tracked, False
            image = p.image(e)
            tracked = p.vertex_map[tracked]
            step = (image, self.other_face(image, p.target))
            if step == (edge, face):
                return steps, tracked, True
            steps.append(step)
            if len(steps) > self.limit:
                raise self.contradiction(f"edge cycle of {_edge_text(edge)} does not close")

    def backward(self, edge: Edge, face: str):
        """Walks back from (edge, face); returns the steps and the unpaired face."""
        steps = []
        e, x = edge, face
        while True:
            h = self.other_face(e, x)
            p = self.by_face.get(h)
            if p is None:
                return steps, h
            e, x = p.image(e), p.target
            steps.insert(0, (e, x))
            if len(steps) > self.limit:
                raise self.contradiction(f"edge cycle of {_edge_text(edge)} does not close")

    def word_of(self, steps) -> GroupWord:
        # The first pairing of the walk acts first, so it is written last.
        letters: List[Letter] = []
        for _, x in reversed(steps):
            letters.extend(self.by_face[x].word.letters)
        return GroupWord(tuple(letters))

    def close(self, edge: Edge, steps, tracked):
        edges = [e for e, _ in steps]
        n = _expected_size(edges, self.special, self.cells_per_edge)
        if len(edges) != n or len(set(edges)) != n or tracked != edge[0]:
            raise self.contradiction(
                f"edge class of {_edge_text(edge)} closes after {len(edges)} edges "
                f"({len(set(edges))} distinct), expected {n}")
        c = EdgeClass(len(self.classes) + 1, tuple(edges), tuple(x for _, x in steps),
                      self.word_of(steps).cyclically_reduced())
        self.classes.append(c)
        for e in edges:
            self.classified[e] = c.id
        self.trace.append(f"class {c.id}: {' '.join(map(_edge_text, edges))}  {c.word} = 1")
        logger.debug("edge class %d of size %d: %s", c.id, c.size, c.word)

    def derive(self, edge: Edge, chain, h: str, names: Iterator[str]) -> bool:
        """Derives the pairing closing `chain`; False if the chain is still short."""
        edges = [e for e, _ in chain]
        n = _expected_size(edges, self.special, self.cells_per_edge)
        if len(edges) > n:
            raise self.contradiction(
                f"edge chain through {_edge_text(edge)} has {len(edges)} edges, "
                f"more than {n}")
        if len(edges) < n:
            return False
        g = chain[-1][1]
        if g == h or len(self.poly.face(g)) != len(self.poly.face(h)):
            raise self.contradiction(
                f"closing the cycle of {_edge_text(edge)} needs a pairing {g} -> {h}")
        p, q = chain[0][0]
        pp, qq = p, q
        for _, x in chain[:-1]:
            m = self.by_face[x].vertex_map
            pp, qq = m[pp], m[qq]
        vmap = _reversing_map(self.poly.face(g), self.poly.face(h), (pp, qq), (p, q))
        if vmap is None:
            raise self.contradiction(
                f"no orientation-reversing map {g} -> {h} closes the cycle of {_edge_text(edge)}")
        word = self.word_of(chain[:-1]).inverse()
        name = next(names)
        self.add(Pairing(name, g, h, vmap, word, derived=True))
        self.trace.append(f"derive {name}: {g} -> {h} = {word} (from edge {_edge_text(edge)})")
        logger.debug("derived %s: %s -> %s = %s", name, g, h, word)
        return True

    def visit(self, e: Edge, f: str, names: Iterator[str]) -> bool:
        steps, tracked, closed = self.forward(e, f)
        if closed:
            self.close(e, steps, tracked)
            return True
        back, h = self.backward(e, f)
        return self.derive(e, back + steps, h, names)

    def step(self, names: Iterator[str], labels: Sequence[str],
             edge_order: Sequence[Edge] = ()) -> bool:
        """Makes one derivation or closes one class; False when stuck."""
        for e in edge_order:
            if e in self.classified:
                continue
            f = next((x for x in self.poly.edge_faces(*e) if x in self.by_face), None)
            if f is not None and self.visit(e, f, names):
                return True
        for f in labels:
            if f not in self.by_face:
                continue
            for a, b in self.poly.face(f).directed_edges():
                e = edge_key(a, b)
                if e not in self.classified and self.visit(e, f, names):
                    return True
        return False


def propagate(poly: CombinatorialPolyhedron, seeds: Sequence[FacePairingSeed],
              cells_per_edge: int,
              special_classes: Sequence[SpecialClass] = (),
              edge_order: Sequence[Edge] = ()) -> PairingResult:
    """Derives all face pairings, edge classes and relations from `seeds`.

    The edges of `edge_order` are visited first, in order. After them faces
    are scanned in label order and the edges of a face in cycle order. After
    every derivation or closed class the scan starts over. The visiting
    order decides class numbers and derived names, never the final
    structure.
    """
    if cells_per_edge < 3:
        raise InputError(f"cells_per_edge must be at least 3, got {cells_per_edge}")
    if not seeds:
        raise InputError("propagation needs at least one seed pairing")
    names = [s.name for s in seeds]
    if len(set(names)) != len(names):
        raise InputError(f"duplicate seed names in {names}")
    state = _Propagation(poly, cells_per_edge, special_classes)
    for seed in seeds:
        state.add(Pairing(seed.name, seed.source, seed.target, seed.vertex_map(poly),
                          GroupWord.generator(seed.name)))
        state.trace.append(f"seed {seed.name}: {seed.source} -> {seed.target}")
    derived_names = _derived_names(names)
    labels = sorted(poly.face_labels)
    order = [edge_key(*e) for e in edge_order]
    missing = [e for e in order if not poly.edge_faces(*e)]
    if missing:
        raise InputError(f"edge_order names non-edges {missing} of {poly.name}")
    while state.step(derived_names, labels, order):
        pass

    unpaired = [f for f in labels if f not in state.by_face]
    unclassified = [e for e in poly.edges if e not in state.classified]
    if unpaired or unclassified:
        raise state.contradiction(
            f"propagation is stuck: unpaired faces {unpaired}, "
            f"{len(unclassified)} unclassified edges; no derivation path reaches them")

    kinds = census(c.word for c in state.classes)
    classes = tuple(replace(c, kind=k) for c, k in zip(state.classes, kinds))
    logger.info("%s: %d derived pairings, %d edge classes, %d defining relations",
                poly.name, len(state.pairings) - len(seeds), len(classes),
                kinds.count(RelationKind.DEFINING))
    vertex_table = _vertex_classes(poly, state.pairings, state.classified)
    return PairingResult(poly, cells_per_edge, tuple(special_classes), tuple(names),
                         tuple(state.pairings), classes, vertex_table, tuple(state.trace))


def propagate_spec(spec: PairingSpec) -> PairingResult:
    return propagate(spec.polyhedron, spec.seeds, spec.cells_per_edge, spec.special,
                     spec.edge_order)


def _vertex_classes(poly: CombinatorialPolyhedron, pairings: Sequence[Pairing],
                    classified: Mapping[Edge, int]) -> Tuple[VertexClass, ...]:
    g = nx.Graph()
    g.add_nodes_from(poly.vertices)
    for p in pairings:
        g.add_edges_from(p.vertex_map.items())
    components = sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0])
    table = []
    for i, members in enumerate(components, start=1):
        incidence = Counter(classified[e] for e in poly.edges
                            for v in members if v in e)
        table.append(VertexClass(i, tuple(members), dict(incidence)))
    return tuple(table)


def vertex_classes(result: PairingResult) -> Tuple[VertexClass, ...]:
    return result.vertex_classes


# ---------------------------------------------------------------------------
# Relations
# ---------------------------------------------------------------------------

def _rotations_and_inverses(r: Tuple[Letter, ...]) -> List[Tuple[Letter, ...]]:
    out = []
    for w in (r, _inverse(r)):
        out.extend(w[i:] + w[:i] for i in range(len(w)))
    return out


def is_consequence(word: Union[GroupWord, Sequence[Letter]],
                   relators: Sequence[Union[GroupWord, Sequence[Letter]]],
                   depth: int = REWRITE_DEPTH, cap: int = REWRITE_CAP,
                   beam: int = REWRITE_BEAM) -> bool:
    """Bounded search for a rewriting of `word` to 1 by the relators.

    A step replaces a piece of a cyclic rotation that matches at least half
    of a relator (or its inverse, cyclically rotated) by the inverse of the
    rest of that relator. False means "not found", not "independent".
    """
    variants = [v for r in relators for v in _rotations_and_inverses(tuple(r))]
    start = _cyclically_reduce(tuple(word))
    frontier = [start]
    seen = {_canonical(start)}
    nodes = 0
    for _ in range(depth):
        following = []
        for u in frontier:
            if not u:
                return True
            for i in range(len(u)):
                rotation = u[i:] + u[:i]
                for r in variants:
                    k = 0
                    while k < len(rotation) and k < len(r) and rotation[k] == r[k]:
                        k += 1
                    if k == 0 or 2 * k < len(r):
                        continue
                    w = _cyclically_reduce(_inverse(r[k:]) + rotation[k:])
                    if not w:
                        return True
                    c = _canonical(w)
                    if c in seen:
                        continue
                    seen.add(c)
                    following.append(w)
                    nodes += 1
                    if nodes > cap:
                        return False
        following.sort(key=len)
        frontier = following[:beam]
        if not frontier:
            break
    return False


def census(words: Iterable[GroupWord]) -> List[RelationKind]:
    """Tags the cycle relations in order as trivial, defining or consequence."""
    kinds = []
    used: List[Tuple[Letter, ...]] = []
    seen = set()
    for word in words:
        w = _cyclically_reduce(word.letters)
        if not w:
            kind = RelationKind.TRIVIAL
        elif _canonical(w) in seen:
            kind = RelationKind.CONSEQUENCE
        elif used and is_consequence(w, used):
            kind = RelationKind.CONSEQUENCE
        else:
            kind = RelationKind.DEFINING
        if w:
            seen.add(_canonical(w))
            used.append(w)
        kinds.append(kind)
    logger.debug("relation census: %s", " ".join(k.value[0] for k in kinds))
    return kinds


def presentation(result: PairingResult) -> GroupPresentation:
    return GroupPresentation(result.generators,
                             tuple(c.word for c in result.relations(RelationKind.DEFINING)))


def relation_table(result: PairingResult) -> str:
    """One row per edge class: number, edges, cycle relation and its kind."""
    rows = []
    width = max(len(" ".join(map(_edge_text, c.edges))) for c in result.classes)
    for c in result.classes:
        edges = " ".join(map(_edge_text, c.edges))
        rows.append(f"{c.id:>3}  {edges:<{width}}  {str(c.word) + ' = 1':<40}  {c.kind.value}")
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    checks: List[Check] = field(default_factory=list)
    euler: Optional[int] = None
    # Per generator, the isometry type of its metric realization.
    screws: Dict[str, dict] = field(default_factory=dict)
    # Per edge class, the dihedral angle sum in radians.
    angle_sums: Dict[int, float] = field(default_factory=dict)
    max_relation_deviation: Optional[float] = None
    # Per pairing, its realized matrix under the chosen equivalence.
    isometries: Dict[str, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(Check(name, bool(passed), detail))
        if not passed:
            logger.info("check %s failed: %s", name, detail)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        doc = {"passed": self.passed, "euler": self.euler,
               "checks": [c.to_json() for c in self.checks]}
        if self.screws:
            doc["screws"] = self.screws
        if self.angle_sums:
            doc["angle_sums"] = {str(k): v for k, v in sorted(self.angle_sums.items())}
        if self.max_relation_deviation is not None:
            doc["max_relation_deviation"] = self.max_relation_deviation
        return doc


def _reversed_cycles(poly: CombinatorialPolyhedron) -> CombinatorialPolyhedron:
    return CombinatorialPolyhedron(
        poly.name, tuple(Face(f.label, (f.cycle[0],) + tuple(reversed(f.cycle[1:])))
                         for f in poly.faces))


def _extend_isomorphism(a: CombinatorialPolyhedron, b: CombinatorialPolyhedron,
                        f: str, i: int, g: str, j: int):
    vmap: Dict[int, int] = {}
    fmap: Dict[str, str] = {}
    pending = [(f, i, g, j)]
    while pending:
        f, i, g, j = pending.pop()
        fa, gb = a.face(f).cycle, b.face(g).cycle
        n = len(fa)
        if len(gb) != n:
            return None
        if f in fmap:
            if fmap[f] != g or vmap.get(fa[i]) != gb[j]:
                return None
            continue
        fmap[f] = g
        for k in range(n):
            x, y = fa[(i + k) % n], gb[(j + k) % n]
            if vmap.setdefault(x, y) != y:
                return None
        for k in range(n):
            x, x2 = fa[(i + k) % n], fa[(i + k + 1) % n]
            y, y2 = gb[(j + k) % n], gb[(j + k + 1) % n]
            fa2 = [h for h in a.edge_faces(x, x2) if h != f][0]
            gb2 = [h for h in b.edge_faces(y, y2) if h != g][0]
            pending.append((fa2, a.face(fa2).position(x2), gb2, b.face(gb2).position(y2)))
    if len(fmap) != len(a.faces) or len(set(vmap.values())) != len(vmap):
        return None
    return vmap, fmap


def isomorphisms(a: CombinatorialPolyhedron, b: CombinatorialPolyhedron
                 ) -> Iterator[Tuple[Dict[int, int], Dict[str, str]]]:
    """All combinatorial isomorphisms a -> b, orientation reversing ones last.

    Each is a pair (vertex map, face map).
    """
    if len(a.faces) != len(b.faces) or len(a.vertices) != len(b.vertices):
        return
    first = a.faces[0]
    for target in (b, _reversed_cycles(b)):
        for g in target.faces:
            if len(g) != len(first):
                continue
            for j in range(len(g)):
                found = _extend_isomorphism(a, target, first.label, 0, g.label, j)
                if found is not None:
                    yield found


def _metric_matrices(result: PairingResult, metric, vmap, fmap) -> Dict[str, np.ndarray]:
    from .orthoscheme import pairing_isometry

    matrices = {}
    for p in result.pairings:
        images = {vmap[v]: vmap[w] for v, w in p.vertex_map.items()}
        matrices[p.name] = pairing_isometry(metric, fmap[p.source], fmap[p.target], images)
    return matrices


def _anchored(matrices: Mapping[str, np.ndarray], anchors: Mapping[str, np.ndarray],
              tol: float) -> bool:
    return all(np.max(np.abs(matrices[name] - m)) < tol for name, m in anchors.items())


def metric_realization(spec: PairingSpec):
    """The metric cell and anchor matrices named in the "metric" entry of the pairing document."""
    from .orthoscheme import archimedean_realize, football_cell, mirror_product

    if not spec.metric:
        raise InputError(f"{spec.name} declares no metric realization")
    cell = str(spec.metric.get("cell", ""))
    if cell.startswith("cobweb:"):
        # Only the special dihedral angles are realized; see special_dihedrals.
        return None, {}
    words = dict(spec.metric.get("anchors", {}))
    if not words:
        return archimedean_realize(cell), {}
    if cell.replace(" ", "") != "5,6,6":
        raise InputError("anchors are given as mirror words of the {5,6,6} cell only")
    football = football_cell()
    anchors = {name: mirror_product(football, word) for name, word in words.items()}
    return football.polyhedron, anchors


def isometry_seed(name: str, m: np.ndarray, metric) -> FacePairingSeed:
    """The seed of the face pairing that the isometry m performs on `metric`."""
    from .orthoscheme import face_pairing_of

    found = face_pairing_of(m, metric)
    if found is None:
        raise GeometryError(f"{name} takes no face of {metric.combinatorics.name} "
                            "onto another")
    source, target, images = found
    p, q = metric.combinatorics.face(source).cycle[:2]
    return FacePairingSeed(name, source, target, (p, q), (images[p], images[q]))


def special_dihedrals(spec: PairingSpec) -> Dict[int, float]:
    """Computed dihedral angles of the special classes, by position in `spec.special`.

    Only documents whose metric cell is a cobweb ("cobweb:<z>") have them;
    every special class of a cobweb is the class of its arrow edges.
    """
    from .orthoscheme import cobweb_arrow_dihedral

    cell = str((spec.metric or {}).get("cell", ""))
    if not cell.startswith("cobweb:"):
        return {}
    try:
        z = int(cell.split(":", 1)[1])
    except ValueError:
        raise InputError(f"bad cobweb cell {cell!r}; expected cobweb:<z>") from None
    angle = cobweb_arrow_dihedral(z)
    return {k: angle for k in range(len(spec.special))}


def _check_metric(report: VerificationReport, result: PairingResult, metric,
                  anchors: Mapping[str, np.ndarray], tol: float, angle_tol: float):
    from .orthoscheme import classify_isometry, evaluate_word

    unknown = set(anchors) - set(result.generators)
    if unknown:
        raise InputError(f"anchors for unknown generators {sorted(unknown)}")
    chosen = None
    for vmap, fmap in isomorphisms(result.polyhedron, metric.combinatorics):
        try:
            matrices = _metric_matrices(result, metric, vmap, fmap)
        except GeometryError as e:
            logger.debug("candidate isomorphism rejected: %s", e)
            continue
        if chosen is None:
            chosen = (vmap, matrices)
        if _anchored(matrices, anchors, tol):
            chosen = (vmap, matrices)
            break
    else:
        if anchors:
            report.check("anchors", False, "no isomorphism realizes the anchored generators")
    if chosen is None:
        report.check("metric realization", False,
                     f"{result.polyhedron.name} is not combinatorially {metric.name}")
        return
    vmap, matrices = chosen
    report.isometries = dict(matrices)
    seeds = {g: matrices[g] for g in result.generators}

    deviation = 0.0
    for c in result.classes:
        m = evaluate_word(c.word, seeds)
        deviation = max(deviation, float(np.max(np.abs(m - np.eye(m.shape[0])))))
    report.max_relation_deviation = deviation
    report.check("metric relations", deviation < tol,
                 f"max |word - I| = {deviation:.3g}")

    worst = 0.0
    for p in result.derived:
        worst = max(worst, float(np.max(np.abs(matrices[p.name] - evaluate_word(p.word, seeds)))))
    report.check("derived words", worst < tol, f"max |pairing - word| = {worst:.3g}")

    bad = []
    for c in result.classes:
        total = sum(metric.edge_dihedrals[edge_key(vmap[a], vmap[b])] for a, b in c.edges)
        report.angle_sums[c.id] = total
        if abs(total - 2 * math.pi) > angle_tol:
            bad.append(c.id)
    report.check("angle sums", not bad,
                 f"classes {bad} do not sum to 2pi" if bad else "every class sums to 2pi")
    for g in result.generators:
        report.screws[g] = classify_isometry(matrices[g], metric.scheme).to_json()


def _check_special_angles(report: VerificationReport, result: PairingResult,
                          sc: SpecialClass, angle: float, angle_tol: float):
    members = [c for c in result.classes if any(e in sc.edges for e in c.edges)]
    bad = []
    for c in members:
        report.angle_sums[c.id] = c.size * angle
        if abs(c.size * angle - 2 * math.pi) > angle_tol:
            bad.append(c.id)
    if sc.angle is not None and abs(angle - sc.angle * math.pi) > angle_tol:
        report.check("special angle sums", False,
                     f"computed dihedral {angle:.12g} differs from declared {sc.angle} pi")
        return
    report.check("special angle sums", bool(members) and not bad,
                 f"classes {bad} of {sc.size} edges of angle {angle:.12g} miss 2pi" if bad
                 else f"{len(members)} classes of {sc.size} x {angle:.12g}")


def verify_space_form(result: PairingResult, metric=None,
                      anchors: Optional[Mapping[str, np.ndarray]] = None,
                      tol: float = RELATION_TOL,
                      angle_tol: float = ANGLE_TOL,
                      special_dihedrals: Optional[Mapping[int, float]] = None
                      ) -> VerificationReport:
    """Checks the conditions making the face-paired polyhedron a space form.

    `metric` is an optional MetricPolyhedron combinatorially equivalent to
    the result's polyhedron; `anchors` pins generators to given matrices
    when choosing the equivalence. `special_dihedrals` gives computed
    dihedral angles (radians) of the edges of special classes, keyed by
    position in `result.special`.
    """
    report = VerificationReport()
    poly = result.polyhedron

    wrong = [c.id for c in result.classes if c.size != result.expected_size(c.edges)]
    report.check("class sizes", not wrong,
                 f"classes {wrong} have the wrong size" if wrong else
                 f"{len(result.classes)} classes")
    paired = {f for p in result.pairings for f in (p.source, p.target)}
    report.check("faces paired", paired == set(poly.face_labels) and
                 2 * len(result.pairings) == len(poly.faces))
    report.check("edge partition", sum(c.size for c in result.classes) == len(poly.edges))
    report.check("vertex partition",
                 sum(len(v.vertices) for v in result.vertex_classes) == len(poly.vertices))

    report.euler = (len(result.vertex_classes) - len(result.classes)
                    + len(result.pairings) - 1)
    report.check("quotient euler", report.euler == 0,
                 f"{len(result.vertex_classes)} - {len(result.classes)} + "
                 f"{len(result.pairings)} - 1 = {report.euler}")

    relators = abelianize(presentation(result))
    loose = [c.id for c in result.classes
             if not row_lattice_contains(relators, c.word.exponent_sums(result.generators))]
    report.check("abelian relations", not loose,
                 f"classes {loose} escape the relator lattice" if loose else "")

    for sc in result.special:
        if sc.angle is not None:
            report.check(f"declared angle consistency ({sc.size} x {sc.angle} pi)",
                         sc.size * sc.angle == 2)
    for k, angle in sorted((special_dihedrals or {}).items()):
        _check_special_angles(report, result, result.special[k], angle, angle_tol)

    if metric is not None:
        _check_metric(report, result, metric, anchors or {}, tol, angle_tol)
    logger.debug("verification of %s: %s", poly.name,
                 "passed" if report.passed else [c.name for c in report.failures()])
    return report
