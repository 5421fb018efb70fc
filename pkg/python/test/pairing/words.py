# Part of the Spaceform Project, under the Apache License v2.0 with LLVM Exceptions.
# See https://llvm.org/LICENSE.txt for license information.
# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

# RUN: %PYTHON %s | FileCheck %s

from framework import run_test
from spaceform.pairing import GroupWord, RelationKind, census, is_consequence

W = GroupWord.parse


# CHECK: a^3 b^-1
# CHECK: 1
# CHECK: b a^-1 b^-1 a^-1
print(W("a a a b^-1"))
print(W("a b b^-1 a^-1"))
print(W("a b a^-1 b^-1 a^-2").cyclically_reduced())


# CHECK: PASS - free_reduction
@run_test
def free_reduction():
    w = W("a^2 b^-1")
    assert (w * w.inverse()).is_identity
    assert len(W("a b^-1 b c")) == 2
    assert W("1").is_identity and W("").is_identity


# CHECK: PASS - exponent_sums
@run_test
def exponent_sums():
    w = W("v^2 u v^2 u^-1")
    assert w.exponent_sums(["u", "v"]) == [0, 4]
    assert W("a^8 b^-7").exponent_sum("b") == -7


# CHECK: PASS - canonical_form_ignores_rotation_and_inversion
@run_test
def canonical_form_ignores_rotation_and_inversion():
    r = W("a b a^-1 b^-1")
    assert W("b a^-1 b^-1 a").canonical() == r.canonical()
    assert r.inverse().canonical() == r.canonical()
    assert W("c a b a^-1 b^-1 c^-1").canonical() == r.canonical()
    assert W("a b").canonical() != W("a b^-1").canonical()


# CHECK: PASS - rewriting_by_relators
@run_test
def rewriting_by_relators():
    commutator = W("a b a^-1 b^-1")
    assert is_consequence(W("b a^-1 b^-1 a"), [commutator])
    assert is_consequence(W("a^4"), [W("a^2")])
    assert not is_consequence(W("a"), [W("a^2")])
    assert not is_consequence(W("a b"), [commutator])


# CHECK: PASS - relation_census
@run_test
def relation_census():
    kinds = census([W("a b a^-1 b^-1"), W("b a b^-1 a^-1"), W("c c^-1"),
                    W("a^2"), W("a^4"), W("b^3")])
    assert kinds == [RelationKind.DEFINING, RelationKind.CONSEQUENCE,
                     RelationKind.TRIVIAL, RelationKind.DEFINING,
                     RelationKind.CONSEQUENCE, RelationKind.DEFINING], kinds


# CHECK: FAIL - bad_exponent
# CHECK: bad exponent in word token 'a^x'
@run_test
def bad_exponent():
    W("a^x")
