# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
Coxeter-Schläfli matrices.

A Gram matrix holds the inner products b^{ij} = cos(pi - beta^{ij}) of the
unit normals of a simplex's bounding planes. Its signature decides whether the
simplex lives in spherical, Euclidean or hyperbolic space.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

import logging
import math

import numpy as np
import scipy.linalg

from .errors import GeometryError, InputError, SingularGramError

logger = logging.getLogger(__name__)

# Eigenvalues with absolute value below this are treated as zero.
DEFAULT_TOL = 1e-9


class GeometryKind(Enum):
    """The geometry a Gram matrix defines."""
    # Positive definite.
    SPHERICAL = "Spherical"
    # Positive semidefinite with a null direction.
    EUCLIDEAN = "Euclidean"
    # Signature (+,...,+,-) and every proper principal minor positive, so all
    # vertices of the simplex are proper points of hyperbolic space.
    HYPERBOLIC_COMPACT = "HyperbolicCompact"
    # Any other indefinite form, e.g. simplices with ideal or outer vertices.
    HYPERBOLIC_OTHER = "HyperbolicOther"

    @property
    def is_hyperbolic(self) -> bool:
        return self in (GeometryKind.HYPERBOLIC_COMPACT,
                        GeometryKind.HYPERBOLIC_OTHER)


@dataclass(frozen=True)
class SchlafliSymbol:
    """A linear Schläfli symbol (p,q) / (p,q,r), or an explicit branch matrix.

    `branches` maps index pairs (i, j), i < j, to beta^{ij} / pi. Pairs left out
    of an explicit branch matrix are orthogonal (beta = pi/2).
    """
    entries: Tuple[int, ...] = ()
    branches: Optional[Tuple[Tuple[int, int, Fraction], ...]] = None
    explicit_order: Optional[int] = None

    def __post_init__(self):
        if self.branches is None:
            if len(self.entries) not in (2, 3):
                raise InputError(
                    f"Schläfli symbol must have 2 or 3 entries, got {self.entries!r}")
            for entry in self.entries:
                if not isinstance(entry, int) or entry < 2:
                    raise InputError(
                        f"Schläfli symbol entries must be integers >= 2, got {self.entries!r}")
            return
        n = self.explicit_order
        if n not in (3, 4):
            raise InputError(f"branch matrix order must be 3 or 4, got {n!r}")
        seen: Dict[Tuple[int, int], Fraction] = {}
        for i, j, ratio in self.branches:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise InputError(f"invalid branch indices ({i}, {j}) for order {n}")
            if not (0 < ratio <= Fraction(1, 2)):
                raise InputError(
                    f"branch angle pi*{ratio} at ({i}, {j}) is outside (0, pi/2]")
            key = (min(i, j), max(i, j))
            if key in seen and seen[key] != ratio:
                raise InputError(
                    f"asymmetric explicit branch matrix: beta{key} given as "
                    f"pi*{seen[key]} and pi*{ratio}")
            seen[key] = ratio

    @property
    def order(self) -> int:
        if self.branches is None:
            return len(self.entries) + 1
        return self.explicit_order

    def branch_ratios(self) -> Dict[Tuple[int, int], Fraction]:
        """beta^{ij} / pi for every i < j."""
        n = self.order
        ratios = {(i, j): Fraction(1, 2) for i, j in combinations(range(n), 2)}
        if self.branches is None:
            for i, entry in enumerate(self.entries):
                ratios[(i, i + 1)] = Fraction(1, entry)
        else:
            for i, j, ratio in self.branches:
                ratios[(min(i, j), max(i, j))] = ratio
        return ratios

    @staticmethod
    def parse(text: str) -> "SchlafliSymbol":
        """Parses "p,q" or "p,q,r"."""
        try:
            entries = tuple(int(part) for part in text.replace(" ", "").split(","))
        except ValueError:
            raise InputError(f"cannot parse Schläfli symbol {text!r}") from None
        return SchlafliSymbol(entries=entries)

    @staticmethod
    def from_json(obj: Dict[str, Any]) -> "SchlafliSymbol":
        """Parses {order, branches: [{i, j, num, den}]}, beta^{ij} = pi*num/den."""
        try:
            order = int(obj["order"])
            branches = tuple(
                (int(b["i"]), int(b["j"]), Fraction(int(b["num"]), int(b["den"])))
                for b in obj["branches"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise InputError(f"malformed branch matrix object: {e}") from None
        return SchlafliSymbol(branches=branches, explicit_order=order)

    def __str__(self):
        if self.branches is None:
            return ",".join(str(e) for e in self.entries)
        parts = [f"{i}{j}:{r}" for (i, j), r in sorted(self.branch_ratios().items())]
        return "{" + " ".join(parts) + "}"


SPHENOID = SchlafliSymbol(
    branches=((0, 1, Fraction(1, 3)), (1, 2, Fraction(1, 3)),
              (2, 3, Fraction(1, 3)), (0, 3, Fraction(1, 3)),
              (0, 2, Fraction(1, 2)), (1, 3, Fraction(1, 2))),
    explicit_order=4)


def _neg_cos_pi(ratio: Fraction) -> float:
    # Exact values for the angles that occur most.
    if ratio == Fraction(1, 2):
        return 0.0
    if ratio == Fraction(1, 3):
        return -0.5
    return -math.cos(math.pi * ratio)


@dataclass(frozen=True, eq=False)
class GramMatrix:
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def dihedral(self, i: int, j: int) -> float:
        """The interior dihedral angle beta^{ij}."""
        return math.pi - math.acos(max(-1.0, min(1.0, self.entries[i, j])))


@dataclass(frozen=True, eq=False)
class VertexMatrix:
    """The inverse (a_{ij}) of a nonsingular Gram matrix."""
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)


@dataclass(frozen=True)
class GeometryClass:
    kind: GeometryKind
    determinant: float
    # Leading principal minors, 1x1 up to the full determinant.
    minors: Tuple[float, ...]
    # (n_plus, n_minus, n_zero)
    signature: Tuple[int, int, int]
    # Index sets of proper principal minors that are not positive.
    failing_minors: Tuple[Tuple[int, ...], ...] = ()

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "determinant": self.determinant,
            "minors": list(self.minors),
            "signature": list(self.signature),
            "failing_minors": [list(m) for m in self.failing_minors],
        }


@dataclass(frozen=True, eq=False)
class SquareDecomposition:
    """x^T G x = sum_k coefficients[k] * (forms[k] . x)^2."""
    coefficients: np.ndarray
    forms: np.ndarray

    def evaluate(self, x: np.ndarray) -> float:
        return float(np.sum(self.coefficients * (self.forms @ x)**2))

    def signature(self, tol: float = DEFAULT_TOL) -> Tuple[int, int, int]:
        c = self.coefficients
        return (int(np.sum(c > tol)), int(np.sum(c < -tol)),
                int(np.sum(np.abs(c) <= tol)))


def build_gram(symbol: SchlafliSymbol) -> GramMatrix:
    n = symbol.order
    b = np.eye(n)
    for (i, j), ratio in symbol.branch_ratios().items():
        b[i, j] = b[j, i] = _neg_cos_pi(ratio)
    return GramMatrix(b)


def _principal_minor(b: np.ndarray, indices: Tuple[int, ...]) -> float:
    return float(np.linalg.det(b[np.ix_(indices, indices)]))


def classify_geometry(gram: GramMatrix, tol: float = DEFAULT_TOL) -> GeometryClass:
    b = gram.entries
    n = gram.order
    determinant = float(np.linalg.det(b))
    minors = tuple(_principal_minor(b, tuple(range(k))) for k in range(1, n + 1))
    eigenvalues = np.linalg.eigvalsh(b)
    signature = (int(np.sum(eigenvalues > tol)), int(np.sum(eigenvalues < -tol)),
                 int(np.sum(np.abs(eigenvalues) <= tol)))
    n_plus, n_minus, n_zero = signature

    failing = tuple(
        indices for k in range(1, n) for indices in combinations(range(n), k)
        if _principal_minor(b, indices) <= tol)

    if n_minus == 0 and n_zero == 0:
        kind = GeometryKind.SPHERICAL
    elif n_minus == 0:
        kind = GeometryKind.EUCLIDEAN
    elif n_minus == 1 and n_zero == 0 and not failing and determinant < 0:
        kind = GeometryKind.HYPERBOLIC_COMPACT
    else:
        kind = GeometryKind.HYPERBOLIC_OTHER
    logger.debug("classified order-%d Gram matrix: %s, det=%.6g, signature=%s",
                 n, kind.value, determinant, signature)
    return GeometryClass(kind=kind, determinant=determinant, minors=minors,
                         signature=signature, failing_minors=failing)


def invert_gram(gram: GramMatrix, tol: float = 1e-12) -> VertexMatrix:
    b = gram.entries
    determinant = np.linalg.det(b)
    if abs(determinant) <= tol:
        raise SingularGramError(
            f"Gram matrix is singular (det={determinant:.3g}); the simplex is "
            "Euclidean. Use spaceform.orthoscheme.realize for the affine "
            "realization instead of inverting.")
    a = np.linalg.inv(b)
    a = (a + a.T) / 2
    residual = np.max(np.abs(b @ a - np.eye(gram.order)))
    if residual >= 1e-10:
        raise GeometryError(
            f"Gram inverse residual {residual:.3g} exceeds 1e-10")
    return VertexMatrix(a)


def dihedral_angles(gram: GramMatrix) -> Dict[Tuple[int, int], float]:
    return {(i, j): gram.dihedral(i, j)
            for i, j in combinations(range(gram.order), 2)}


def square_decomposition(gram: GramMatrix) -> SquareDecomposition:
    """Completes squares in the quadratic form of `gram`.

    Uses the symmetric LDL^T factorization with Bunch-Kaufman pivoting. 2x2
    pivot blocks are split further by their eigenvectors so that every term
    is a single weighted square.
    """
    lu, d, _ = scipy.linalg.ldl(gram.entries, lower=True)
    n = gram.order
    coefficients: List[float] = []
    forms: List[np.ndarray] = []
    i = 0
    while i < n:
        if i + 1 < n and d[i + 1, i] != 0.0:
            w, q = np.linalg.eigh(d[i:i + 2, i:i + 2])
            for k in range(2):
                coefficients.append(w[k])
                forms.append(lu[:, i:i + 2] @ q[:, k])
            i += 2
        else:
            coefficients.append(d[i, i])
            forms.append(lu[:, i].copy())
            i += 1
    return SquareDecomposition(np.array(coefficients), np.array(forms))


def triangle_defect(p: int, q: int) -> float:
    """pi - (pi/2 + pi/p + pi/q), the defect of the (p,q) characteristic triangle.

    Positive for hyperbolic, zero for Euclidean and negative (an excess) for
    spherical tilings.
    """
    if p < 2 or q < 2:
        raise InputError(f"triangle_defect needs p, q >= 2, got ({p}, {q})")
    return math.pi - (math.pi / 2 + math.pi / p + math.pi / q)


@dataclass(frozen=True)
class AdmissibilityReport:
    u: int
    v: int
    w: int
    # pi/u + pi/v < pi/2
    angle_condition: bool
    # sin(pi/u) sin(pi/w) - cos(pi/v)
    form_value: float
    form_condition: bool

    @property
    def admissible(self) -> bool:
        return self.angle_condition and self.form_condition

    def to_json(self) -> Dict[str, Any]:
        return {
            "u": self.u, "v": self.v, "w": self.w,
            "angle_condition": self.angle_condition,
            "form_value": self.form_value,
            "form_condition": self.form_condition,
            "admissible": self.admissible,
        }


def cobweb_admissible(u: int, v: int, w: int) -> AdmissibilityReport:
    if min(u, v, w) < 3:
        raise InputError(f"cobweb parameters must be >= 3, got ({u}, {v}, {w})")
    angle_condition = Fraction(1, u) + Fraction(1, v) < Fraction(1, 2)
    value = math.sin(math.pi / u) * math.sin(math.pi / w) - math.cos(math.pi / v)
    return AdmissibilityReport(u=u, v=v, w=w, angle_condition=angle_condition,
                               form_value=value, form_condition=value < 0)
