# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
Reports which answers about a space form disagree with the oracle.

Outcomes use lit's PASS/FAIL/XFAIL/XPASS vocabulary. A failing test lists
each disagreeing query under what it asks about ("edge classes by size",
"defining relators", ...) together with the place inside the answer where
the engine and the oracle part ways.
"""

from enum import Enum
from functools import singledispatch
from typing import Iterator, List, NamedTuple, Set, Tuple

import collections
import math
import textwrap

import numpy as np

from .framework import Query, TestResult

# What each query asks about, as shown in failure reports.
SUBJECTS = {
    "homology": "first homology",
    "counts": "pairing and class counts",
    "derived": "derived pairing names",
    "class_sizes": "edge classes by size",
    "vertex_class_sizes": "vertex classes by size",
    "class_size_at": "size of one edge class",
    "mean_class_size": "mean edge class size",
    "relation_kinds": "relation census",
    "defining_exponents": "defining relators",
    "exponent_matrix": "exponent-sum matrix",
    "euler": "quotient Euler characteristic",
    "passed": "verification verdict",
    "failed_checks": "failed verification checks",
    "angle_sums": "edge class angle sums",
    "screw_kinds": "pairing isometry kinds",
    "supergroup_holds": "reflection supergroup identities",
    "a_coset_witness": "stabilizer coset of a",
    "literal_holds": "literal generator identities",
}


class Mismatch(NamedTuple):
    # Keys and indices leading from the top of an answer to the difference.
    where: Tuple[str, ...]
    message: str

    def render(self) -> str:
        return "".join(self.where) + (": " if self.where else "") + self.message


def _summary(a: np.ndarray) -> str:
    a = np.asarray(a, dtype=np.float64)
    if not a.size:
        return f"empty {list(a.shape)} array"
    return f"{list(a.shape)} array in [{a.min():+.4g}, {a.max():+.4g}]"


def _wrong_type(computed, wanted: str) -> str:
    return f"engine answered with {type(computed).__name__}, oracle expects {wanted}"


def _differs(computed, expected) -> str:
    return f"computed {computed!r}, oracle expects {expected!r}"


@singledispatch
def _diff(expected, computed, where) -> Iterator[Mismatch]:
    yield Mismatch(where, f"oracle answered with an unsupported {type(expected).__name__}")


@_diff.register(type(None))
def _(expected, computed, where):
    if computed is not None:
        yield Mismatch(where, _differs(computed, None))


@_diff.register(bool)
def _(expected, computed, where):
    if not isinstance(computed, bool):
        yield Mismatch(where, _wrong_type(computed, "bool"))
    elif computed != expected:
        yield Mismatch(where, _differs(computed, expected))


@_diff.register(int)
def _(expected, computed, where):
    if isinstance(computed, bool) or not isinstance(computed, (int, np.integer)):
        yield Mismatch(where, _wrong_type(computed, "int"))
    elif computed != expected:
        yield Mismatch(where, _differs(int(computed), expected))


@_diff.register(str)
def _(expected, computed, where):
    if not isinstance(computed, str):
        yield Mismatch(where, _wrong_type(computed, "str"))
    elif computed != expected:
        yield Mismatch(where, _differs(computed, expected))


@_diff.register(float)
def _(expected, computed, where):
    if isinstance(computed, bool) or not isinstance(computed, (int, float)):
        yield Mismatch(where, _wrong_type(computed, "number"))
    elif not math.isclose(computed, expected, rel_tol=1e-4, abs_tol=1e-9):
        yield Mismatch(where, f"computed {computed!r}, oracle expects about {expected!r}")


@_diff.register(list)
@_diff.register(tuple)
def _(expected, computed, where):
    if type(computed) is not type(expected):
        yield Mismatch(where, _wrong_type(computed, type(expected).__name__))
    elif len(computed) != len(expected):
        yield Mismatch(where, f"computed {len(computed)} entries, oracle expects {len(expected)}")
    else:
        for i, (c, e) in enumerate(zip(computed, expected)):
            yield from _diff(e, c, where + (f"[{i}]",))


@_diff.register(dict)
def _(expected, computed, where):
    if not isinstance(computed, dict):
        yield Mismatch(where, _wrong_type(computed, "dict"))
        return
    missing = sorted(set(expected) - set(computed), key=repr)
    extra = sorted(set(computed) - set(expected), key=repr)
    if missing or extra:
        yield Mismatch(where, f"computed keys {sorted(computed, key=repr)!r}, "
                       f"oracle expects {sorted(expected, key=repr)!r}")
        return
    for key in sorted(expected, key=repr):
        yield from _diff(expected[key], computed[key], where + (f"[{key!r}]",))


@_diff.register(np.ndarray)
def _(expected, computed, where):
    if not isinstance(computed, np.ndarray):
        yield Mismatch(where, _wrong_type(computed, "array"))
    elif computed.shape != expected.shape:
        yield Mismatch(where, f"computed shape {list(computed.shape)}, "
                       f"oracle expects {list(expected.shape)}")
    elif not np.allclose(computed, expected, rtol=1e-3, atol=1e-7, equal_nan=True):
        bad = np.argwhere(~np.isclose(computed, expected, rtol=1e-3, atol=1e-7,
                                      equal_nan=True))
        yield Mismatch(where, f"computed {_summary(computed)}, oracle expects "
                       f"{_summary(expected)}; {len(bad)} entries differ, "
                       f"first at {bad[0].tolist()}")


def query_mismatches(index: int, computed: Query, expected: Query) -> List[str]:
    """Rendered differences between the engine's and the oracle's answer."""
    if computed.name != expected.name:
        return [f"query #{index}: engine answered {computed.name!r} "
                f"instead of {expected.name!r}"]
    found = list(_diff(expected.args, computed.args, ("args",)))
    found += _diff(expected.answer, computed.answer, ())
    if not found:
        return []
    subject = SUBJECTS.get(expected.name, expected.name)
    lines = [f'{subject} (query #{index} "{expected.name}"):']
    lines += [textwrap.indent(m.render(), "    ") for m in found]
    return lines


def explain(result: TestResult) -> List[str]:
    """Why a test failed; empty when the engine agrees with the oracle."""
    if result.compile_error is not None:
        return ["Pairing did not compile:", result.compile_error.rstrip("\n")]
    if result.query_error is not None:
        return ["Query raised:", result.query_error.rstrip("\n")]
    lines = []
    for i, (computed, expected) in enumerate(zip(result.answers, result.oracle)):
        lines += query_mismatches(i, computed, expected)
    return lines


class Outcome(Enum):
    PASS = "Passed"
    FAIL = "Failed"
    XFAIL = "Expectedly Failed"
    XPASS = "Unexpectedly Passed"

    @property
    def unexpected(self) -> bool:
        return self in (Outcome.FAIL, Outcome.XPASS)


def outcome_of(failed: bool, expected_to_fail: bool) -> Outcome:
    if expected_to_fail:
        return Outcome.XFAIL if failed else Outcome.XPASS
    return Outcome.FAIL if failed else Outcome.PASS


def report_results(results: List[TestResult],
                   expected_failures: Set[str],
                   verbose: bool = False) -> bool:
    """Print one line per test, the unexpected outcomes, and a summary.

    With `verbose`, failing tests also print their disagreeing answers or
    errors. Returns True if any test failed unexpectedly or passed although
    listed in `expected_failures`.
    """
    by_outcome = collections.defaultdict(list)
    for result in results:
        reasons = explain(result)
        outcome = outcome_of(bool(reasons), result.unique_name in expected_failures)
        print(f'{outcome.name} - "{result.unique_name}"')
        by_outcome[outcome].append((result.unique_name, reasons))

    unexpected = [o for o in Outcome if o.unexpected and by_outcome[o]]
    if unexpected:
        print('\nUnexpected outcome summary:')
    for outcome in unexpected:
        entries = by_outcome[outcome]
        print(f'\n****** {outcome.value} tests - {len(entries)} tests')
        for name, reasons in entries:
            print(f'    {outcome.name} - "{name}"')
            if verbose and outcome is Outcome.FAIL:
                print(textwrap.indent("\n".join(reasons), ' ' * 8))

    print('\nSummary:')
    for outcome in Outcome:
        if by_outcome[outcome]:
            print(f'    {outcome.value}: {len(by_outcome[outcome])}')
    return bool(unexpected)
