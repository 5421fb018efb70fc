# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
"""
# End-to-end checks of space forms against independent answers.

One end is a face-pairing document; the other is the space form the engine
builds from it: edge classes, the relation census, the quotient Euler
characteristic and the first homology.

A `ManifoldProgram` names a pairing document and answers questions about its
space form (`homology()`, `class_sizes()`, ...) from knowledge that does not
go through the engine: hand enumeration, symmetry counts, published tables.
A test is a function that asks a program some of those questions. Asking
the program itself records the oracle answers; a `TestConfig` compiles the
document and answers the same questions from the engine's report, and the
two answer lists are compared by `spaceform_e2e_test.reporting`.
"""

import abc
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from typing import (Any, Callable, Dict, List, Mapping, NamedTuple, Optional,
                    Tuple, TypeVar, Union)

import multiprocessing as mp
import traceback

import numpy as np

Answer = Union[None, bool, int, float, str, List['Answer'],
               Tuple['Answer', ...], Dict['Answer', 'Answer'], np.ndarray]


class Query(NamedTuple):
    """One question put to a program, e.g. `class_size_at(4)`."""
    name: str
    args: List[Answer]
    # The oracle's answer when recorded from a program, the engine's answer
    # when produced by a config; ignored on input to `TestConfig.run`.
    answer: Answer


Trace = List[Query]


def freeze(v: Answer) -> Answer:
    """A deep copy of an answer, so later mutation cannot rewrite history."""
    if isinstance(v, np.ndarray):
        return v.copy()
    if isinstance(v, (tuple, list)):
        return type(v)(freeze(item) for item in v)
    if isinstance(v, dict):
        return {freeze(key): freeze(val) for key, val in v.items()}
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    raise TypeError(f"queries cannot answer with a {type(v).__name__}")


class ManifoldProgram:
    """A pairing document together with oracle answers about its space form.

    Subclasses set `pairing` (a fixture name, a file or a parsed document)
    and implement the queries they know the answers to. The query names are
    those of `spaceform_e2e_test.configs.CompiledManifold`.
    """
    pairing: Union[str, Mapping] = ""
    # Overrides the document's number of cells around an ordinary edge.
    cells_per_edge: Optional[int] = None


CompiledArtifact = TypeVar('CompiledArtifact')


class TestConfig(abc.ABC):
    """A way of building a space form and answering queries about it."""

    @abc.abstractmethod
    def compile(self, program: ManifoldProgram) -> CompiledArtifact:
        """Build the space form of `program`'s pairing document."""

    @abc.abstractmethod
    def run(self, artifact: CompiledArtifact, trace: Trace) -> Trace:
        """Answer each query of `trace` from `artifact`.

        Returns a trace with the same queries and the engine's answers. The
        artifact may be shared between workers and must not be mutated.
        """


class TestUtils:
    """Helpers handed to every test; each instance starts from seed 0."""

    def __init__(self):
        self.rng = np.random.default_rng(0)

    def randint(self, low: int, high: int) -> int:
        """A random int in [low, high)."""
        return int(self.rng.integers(low, high))


class Test(NamedTuple):
    # Stable name, also the key of the expected-failure tables.
    unique_name: str
    program_factory: Callable[[], ManifoldProgram]
    # Asks its first argument (a program, or a recorder wrapping one) the
    # test's questions.
    program_invoker: Callable[[Any, TestUtils], None]


class TestResult(NamedTuple):
    unique_name: str
    # Traceback of a failure to build the space form, e.g. a contradiction
    # during propagation.
    compile_error: Optional[str]
    # Traceback of a query the engine could not answer.
    query_error: Optional[str]
    # Engine answers; None when either error is set.
    answers: Optional[Trace]
    # Oracle answers; None when either error is set.
    oracle: Optional[Trace]


class _Recorder:
    """Forwards query calls to a program and logs each question and answer."""

    def __init__(self, program, trace: Trace, name: str = ""):
        self.__program__ = program
        self.__trace__ = trace
        self.__name__ = name

    def __getattr__(self, name):
        attr = getattr(self.__program__, name)
        return _Recorder(attr, self.__trace__,
                         f"{self.__name__}.{name}" if self.__name__ else name)

    def __call__(self, *args):
        answer = self.__program__(*args)
        self.__trace__.append(
            Query(name=self.__name__, args=[freeze(a) for a in args], answer=answer))
        return answer


def oracle_trace(test: Test) -> Trace:
    """Ask the program itself; its answers are the ones to match."""
    trace: Trace = []
    test.program_invoker(_Recorder(test.program_factory(), trace), TestUtils())
    return trace


def _traceback(e: BaseException) -> str:
    return "".join(traceback.format_exception(type(e), e, e.__traceback__))


def check_manifold(test: Test, config: TestConfig) -> TestResult:
    """Compile one test's pairing document and answer its queries."""
    failed = lambda **error: TestResult(
        test.unique_name, error.get("compile"), error.get("query"), None, None)
    try:
        oracle = oracle_trace(test)
        artifact = config.compile(test.program_factory())
    except Exception as e:
        return failed(compile=_traceback(e))
    try:
        answers = config.run(artifact, oracle)
    except Exception as e:
        return failed(query=_traceback(e))
    return TestResult(test.unique_name, None, None,
                      [q._replace(answer=freeze(q.answer)) for q in answers],
                      oracle)


# Fork-inherited by the pool workers, which receive only test names.
_FORKED: Dict[str, Any] = {}


def _check_by_name(name: str) -> TestResult:
    return check_manifold(_FORKED["tests"][name], _FORKED["config"])


def run_tests(tests: List[Test], config: TestConfig,
              sequential: bool = False) -> List[TestResult]:
    """Check every test under `config`, sorted by name.

    Tests run in forked workers unless `sequential` is set, there is only
    one test, or the platform cannot fork.
    """
    if sequential or len(tests) < 2 or "fork" not in mp.get_all_start_methods():
        results = [check_manifold(test, config) for test in tests]
        return sorted(results, key=lambda r: r.unique_name)

    _FORKED.update(tests={t.unique_name: t for t in tests}, config=config)
    ctx = mp.get_context("fork")
    results = []
    with ProcessPoolExecutor(max_workers=min(ctx.cpu_count(), len(tests)),
                             mp_context=ctx) as pool:
        futures = {t.unique_name: pool.submit(_check_by_name, t.unique_name)
                   for t in tests}
        for name, future in futures.items():
            try:
                results.append(future.result())
            except BrokenProcessPool:
                results.append(TestResult(
                    name, None,
                    "worker process died while compiling or running the test\n",
                    None, None))
    _FORKED.clear()
    return sorted(results, key=lambda r: r.unique_name)
