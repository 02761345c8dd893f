"""Attractor classes, canonical forms, word equality."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from srw.hecke import classify_rule, hecke_system
from srw.seminormal import (
    Inexact,
    NotOneClass,
    attractor,
    attractor_loop_steps,
    canon,
    is_seminormal,
    words_equal,
)
from srw.words import Rule, SrsSystem

from oracles import congruence_closure, tiny_system


def _h3():
    return hecke_system(3, "rdoubleprime")


def test_attractor_frozen_examples():
    sys = _h3()
    a = attractor((1, 1, 3, 1), sys)
    assert a.members == frozenset({(1, 3), (3, 1)})
    assert a.canon == (1, 3)
    assert attractor((1, 1, 1), sys).members == frozenset({(1,)})
    assert attractor((2, 1, 2), sys).members == frozenset({(1, 2, 1)})
    assert canon((1, 1, 3, 1), sys) == (1, 3)
    assert canon((), sys) == ()


def test_is_seminormal():
    sys = _h3()
    assert is_seminormal((1, 3), sys)
    assert is_seminormal((3, 1), sys)
    assert is_seminormal((1, 2, 1), sys)
    assert not is_seminormal((1, 1), sys)
    assert not is_seminormal((2, 1, 2), sys)
    assert is_seminormal((), sys)


def test_seminormal_members_all_seminormal():
    sys = _h3()
    for w in [(1, 1, 3, 1), (3, 2, 1, 3), (2, 1, 2, 2)]:
        for m in attractor(w, sys).members:
            assert is_seminormal(m, sys)
            assert attractor(m, sys).members == attractor(w, sys).members


def test_not_one_class():
    sys = SrsSystem(
        n=3, rules=(Rule("r2", (1,), (2,)), Rule("r3", (1,), (3,)))
    )
    with pytest.raises(NotOneClass):
        attractor((1,), sys)


def test_inexact_on_truncated_graph():
    grow = SrsSystem(n=1, rules=(Rule("g", (1,), (1, 1)),))
    with pytest.raises(ValueError):
        attractor((1,), grow)
    with pytest.raises(Inexact):
        attractor((1,), grow, max_words=5)


def test_words_equal_frozen():
    sys = _h3()
    assert words_equal((2, 1, 2), (1, 2, 1), sys)
    assert words_equal((1, 3), (3, 1), sys)
    assert not words_equal((1, 3), (1, 2), sys)
    assert words_equal((), (), sys)


def test_attractor_loop_steps_commutations_only():
    sys = _h3()
    steps = attractor_loop_steps((1, 1, 3, 1), sys)
    assert steps
    assert all(classify_rule(s.rule)[0] in ("cf", "ci") for s in steps)
    assert {s.source for s in steps} == {(1, 3), (3, 1)}


def test_words_equal_matches_congruence_oracle():
    sys = hecke_system(2, "rdoubleprime")
    max_len = 5
    uf = congruence_closure(sys, max_len)
    words = [
        w
        for length in range(max_len + 1)
        for w in itertools.product((1, 2), repeat=length)
    ]
    for u in words:
        for v in words:
            assert words_equal(u, v, sys) == uf.same(u, v)


@given(st.lists(st.integers(1, 3), max_size=6), st.lists(st.integers(1, 3), max_size=6))
@settings(max_examples=150, deadline=None)
def test_canon_is_a_class_invariant(a, b):
    sys = _h3()
    u, v = tuple(a), tuple(b)
    if words_equal(u, v, sys):
        assert canon(u, sys) == canon(v, sys)
    else:
        assert canon(u, sys) != canon(v, sys)
