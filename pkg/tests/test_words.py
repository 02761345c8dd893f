"""Words, rules, instances, paths, zigzags, systems, reachability."""

import pytest
from hypothesis import given, settings, strategies as st

from srw.words import (
    BACKWARD,
    FORWARD,
    BoundExceeded,
    Path,
    Rule,
    RuleInstance,
    SourceMismatch,
    SrsSystem,
    Zigzag,
    apply_instance,
    find_redexes,
    reach,
    word_from_str,
    word_to_str,
)

from oracles import fixpoint_reach, naive_redexes, tiny_system


def test_word_str_digits():
    assert word_to_str((1, 2, 3), 3) == "123"
    assert word_to_str((), 3) == "-"
    assert word_from_str("123", 3) == (1, 2, 3)
    assert word_from_str("-", 3) == ()
    assert word_from_str("", 3) == ()


def test_word_str_wide_alphabet():
    assert word_to_str((10, 2), 12) == "10.2"
    assert word_from_str("10.2", 12) == (10, 2)
    assert word_from_str("-", 12) == ()


@given(st.lists(st.integers(1, 3), max_size=8))
def test_word_str_roundtrip_small(letters):
    w = tuple(letters)
    assert word_from_str(word_to_str(w, 3), 3) == w


@given(st.lists(st.integers(1, 14), max_size=8))
def test_word_str_roundtrip_wide(letters):
    w = tuple(letters)
    assert word_from_str(word_to_str(w, 14), 14) == w


def test_rule_validation():
    with pytest.raises(ValueError):
        Rule("empty", (), (1,))
    assert Rule("dbl", (1, 1), (1,)).shortens()
    assert not Rule("swp", (2, 1), (1, 2)).shortens()


def test_instance_endpoints_and_whisker():
    r = Rule("swp", (2, 1), (1, 2))
    inst = RuleInstance((1,), r, (2, 2))
    assert inst.source == (1, 2, 1, 2, 2)
    assert inst.target == (1, 1, 2, 2, 2)
    w = inst.whisker((2,), ())
    assert w.source == (2,) + inst.source
    assert inst.render(2) == "1:swp:22"
    assert RuleInstance((), r, ()).render(2) == "-:swp:-"


def test_apply_instance_checks_source():
    r = Rule("dbl", (1, 1), (1,))
    inst = RuleInstance((), r, ())
    assert apply_instance((1, 1), inst) == (1,)
    with pytest.raises(SourceMismatch):
        apply_instance((1, 2), inst)


def test_path_validates_chaining():
    sys = tiny_system()
    dbl = sys.rule("dbl")
    s1 = RuleInstance((), dbl, (1,))  # 111 -> 11
    s2 = RuleInstance((), dbl, ())  # 11 -> 1
    p = Path((1, 1, 1), (s1, s2))
    assert p.end == (1,)
    assert len(p) == 2
    assert p.words() == [(1, 1, 1), (1, 1), (1,)]
    with pytest.raises(SourceMismatch):
        Path((1, 1, 1), (s2,))
    with pytest.raises(SourceMismatch):
        Path((1, 1, 1), (s1, s1))


def test_path_whisker_and_concat():
    sys = tiny_system()
    dbl = sys.rule("dbl")
    p = Path((1, 1), (RuleInstance((), dbl, ()),))
    q = p.whisker((2,), (2,))
    assert q.start == (2, 1, 1, 2) and q.end == (2, 1, 2)
    joined = Path((1, 1, 1), (RuleInstance((), dbl, (1,)),)).concat(p)
    assert joined.start == (1, 1, 1) and joined.end == (1,)
    assert p.render(2) == "-:dbl:-"
    assert Path((1, 2)).render(2) == "-"


def test_zigzag_validation():
    sys = tiny_system()
    dbl = sys.rule("dbl")
    step = RuleInstance((), dbl, ())  # 11 -> 1
    z = Zigzag((1, 1), ((FORWARD, step), (BACKWARD, step)))
    assert z.end == (1, 1)
    assert len(z) == 2
    with pytest.raises(SourceMismatch):
        Zigzag((1,), ((FORWARD, step),))
    with pytest.raises(ValueError):
        Zigzag((1, 1), (("x", step),))


def test_system_validation():
    with pytest.raises(ValueError):
        SrsSystem(n=2, rules=(Rule("r", (1, 1), (1,)), Rule("r", (2, 2), (2,))))
    with pytest.raises(ValueError):
        SrsSystem(n=1, rules=(Rule("r", (1, 2), (1,)),))
    sys = tiny_system()
    assert sys.rule("dbl").lhs == (1, 1)
    with pytest.raises(KeyError):
        sys.rule("nope")
    assert sys.length_nonincreasing()


def test_find_redexes_ordered():
    sys = tiny_system()
    insts = find_redexes((1, 1, 2, 1), sys)
    assert [i.render(2) for i in insts] == ["-:dbl:21", "11:swp:-"]


@given(st.lists(st.integers(1, 2), max_size=7))
@settings(max_examples=200)
def test_find_redexes_matches_oracle(letters):
    sys = tiny_system()
    w = tuple(letters)
    assert set(find_redexes(w, sys)) == naive_redexes(w, sys)


def test_reach_frozen_example():
    sys = tiny_system()
    res = reach((2, 1, 1), sys)
    assert res.complete
    assert res.words == fixpoint_reach((2, 1, 1), sys)


@given(st.lists(st.integers(1, 2), max_size=7))
@settings(max_examples=100)
def test_reach_matches_fixpoint_oracle(letters):
    sys = tiny_system()
    w = tuple(letters)
    res = reach(w, sys)
    assert res.complete
    assert res.words == fixpoint_reach(w, sys)


def test_reach_lengthening_needs_bound():
    grow = SrsSystem(n=1, rules=(Rule("g", (1,), (1, 1)),))
    with pytest.raises(ValueError):
        reach((1,), grow)
    res = reach((1,), grow, max_words=5)
    assert not res.complete
    assert len(res.words) == 5
    with pytest.raises(BoundExceeded):
        reach((1,), grow, max_words=5, require_exact=True)
