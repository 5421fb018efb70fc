# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
First homology of a finitely presented group.

H1 is the abelianization of the fundamental group: the relator exponent
matrix is brought to Smith normal form over the integers and read off as
Z^free (+) Z_d1 (+) ... (+) Z_dk with d1 | d2 | ... | dk.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import logging

from .errors import InputError, VerificationError

logger = logging.getLogger(__name__)

IntegerMatrix = List[List[int]]


@dataclass(frozen=True)
class GroupPresentation:
    """Generators and relators of a group.

    Relators are words, i.e. iterables of (generator, exponent) letters.
    """
    generators: Tuple[str, ...]
    relators: Tuple = ()

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [str(r) for r in self.relators],
        }


def abelianize(presentation: GroupPresentation) -> IntegerMatrix:
    """One row per relator, one column per generator: the exponent sums."""
    column = {name: j for j, name in enumerate(presentation.generators)}
    rows = []
    for relator in presentation.relators:
        row = [0] * len(column)
        for name, exponent in relator:
            if name not in column:
                raise InputError(
                    f"relator {relator} uses {name!r}, which is not a generator "
                    f"of {list(presentation.generators)}")
            row[column[name]] += exponent
        rows.append(row)
    return rows


def _identity(n: int) -> IntegerMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _swap_rows(m: IntegerMatrix, i: int, j: int):
    m[i], m[j] = m[j], m[i]


def _swap_columns(m: IntegerMatrix, i: int, j: int):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: IntegerMatrix, target: int, source: int, factor: int):
    # row[target] += factor * row[source]
    m[target] = [a + factor * b for a, b in zip(m[target], m[source])]


def _add_column(m: IntegerMatrix, target: int, source: int, factor: int):
    for row in m:
        row[target] += factor * row[source]


def _smallest_entry(d: IntegerMatrix, t: int):
    best = None
    for i in range(t, len(d)):
        for j in range(t, len(d[0])):
            if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(matrix: Sequence[Sequence[int]]
                      ) -> Tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Returns (U, D, V) with U M V = D, U and V unimodular.

    D is diagonal with non-negative entries, each dividing the next, zeros
    last. All arithmetic is on Python integers.
    """
    d = [[int(x) for x in row] for row in matrix]
    rows = len(d)
    cols = len(d[0]) if rows else 0
    if any(len(row) != cols for row in d):
        raise InputError("smith_normal_form needs a rectangular matrix")
    u = _identity(rows)
    v = _identity(cols)
    for t in range(min(rows, cols)):
        while True:
            pivot = _smallest_entry(d, t)
            if pivot is None:
                return u, d, v
            i, j = pivot
            if i != t:
                _swap_rows(d, i, t)
                _swap_rows(u, i, t)
            if j != t:
                _swap_columns(d, j, t)
                _swap_columns(v, j, t)
            p = d[t][t]
            for i in range(t + 1, rows):
                q = d[i][t] // p
                if q:
                    _add_row(d, i, t, -q)
                    _add_row(u, i, t, -q)
            for j in range(t + 1, cols):
                q = d[t][j] // p
                if q:
                    _add_column(d, j, t, -q)
                    _add_column(v, j, t, -q)
            if any(d[i][t] for i in range(t + 1, rows)) or \
                    any(d[t][j] for j in range(t + 1, cols)):
                # A remainder is now the smallest entry; pivot again.
                continue
            offender = next(((i, j) for i in range(t + 1, rows)
                             for j in range(t + 1, cols) if d[i][j] % p),
                            None)
            if offender is None:
                break
            _add_row(d, t, offender[0], 1)
            _add_row(u, t, offender[0], 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v


def _matmul(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        """The group order, 0 for infinite groups."""
        if self.free_rank:
            return 0
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self):
        return format_homology(self)

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "text": str(self),
        }


def format_homology(group: HomologyGroup) -> str:
    """E.g. "Z^3", "Z_4 ⊕ Z_4", "Z ⊕ Z_2"; the trivial group is "0"."""
    parts = []
    if group.free_rank == 1:
        parts.append("Z")
    elif group.free_rank > 1:
        parts.append(f"Z^{group.free_rank}")
    parts.extend(f"Z_{d}" for d in group.torsion)
    return " ⊕ ".join(parts) if parts else "0"


def homology_from_matrix(matrix: IntegerMatrix, generators: int) -> HomologyGroup:
    if not matrix:
        return HomologyGroup(free_rank=generators)
    _, d, _ = smith_normal_form(matrix)
    diagonal = [d[i][i] for i in range(min(len(d), generators))]
    rank = sum(1 for x in diagonal if x)
    torsion = tuple(x for x in diagonal if x > 1)
    return HomologyGroup(free_rank=generators - rank, torsion=torsion)


def first_homology(presentation: GroupPresentation,
                   cross_check: bool = True) -> HomologyGroup:
    matrix = abelianize(presentation)
    group = homology_from_matrix(matrix, len(presentation.generators))
    logger.debug("H1 of <%s | %d relators> = %s",
                 ", ".join(presentation.generators), len(matrix), group)
    if cross_check and matrix:
        expected = sympy_invariant_factors(matrix)
        if expected != group.torsion:
            raise VerificationError(
                f"Smith normal form torsion {group.torsion} disagrees with "
                f"sympy's invariant factors {expected}")
    return group


def sympy_invariant_factors(matrix: IntegerMatrix) -> Tuple[int, ...]:
    """The torsion coefficients (> 1) according to sympy."""
    from sympy.polys.domains import ZZ
    from sympy.polys.matrices import DomainMatrix
    from sympy.polys.matrices.normalforms import invariant_factors

    rows, cols = len(matrix), len(matrix[0])
    m = DomainMatrix([[ZZ(x) for x in row] for row in matrix], (rows, cols), ZZ)
    return tuple(abs(int(x)) for x in invariant_factors(m) if abs(int(x)) > 1)


def row_lattice_contains(matrix: IntegerMatrix, vector: Iterable[int]) -> bool:
    """Whether `vector` is an integer combination of the rows of `matrix`."""
    vector = [int(x) for x in vector]
    if not any(vector):
        return True
    if not matrix:
        return False
    # x M = y  <=>  (x U^-1) D = y V, solved coordinatewise on the diagonal.
    _, d, v = smith_normal_form(matrix)
    target = _matmul([vector], v)[0]
    for j, y in enumerate(target):
        pivot = d[j][j] if j < len(d) else 0
        if pivot == 0:
            if y:
                return False
        elif y % pivot:
            return False
    return True


def same_row_lattice(a: IntegerMatrix, b: IntegerMatrix) -> bool:
    return all(row_lattice_contains(a, row) for row in b) and \
        all(row_lattice_contains(b, row) for row in a)
