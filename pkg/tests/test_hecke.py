"""Hecke systems, curated diagrams, cell family, translation, enumeration."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from srw.critical import CriticalPair, enumerate_critical_pairs
from srw.diagrams import PathVerdict, paths_equivalent_mod_cells
from srw.hecke import (
    CapExceeded,
    InvalidRank,
    UnclassifiedPair,
    c_sort_path,
    cells_P,
    chosen_critical_ed,
    chosen_critical_ed_tagged,
    classify_rule,
    enumerate_monoid,
    hecke_canon,
    hecke_system,
    is_c_path,
    length_vector,
    translate_to_basic,
    verify_suite,
)
from srw.hecke import NotCSortable
from srw.order import is_decreasing_ed
from srw.seminormal import canon as generic_canon
from srw.words import Path, Rule, RuleInstance, find_redexes


def test_system_rule_names():
    assert sorted(r.name for r in hecke_system(3, "rprime").rules) == [
        "a1", "a2", "a3", "b2", "b3", "c31",
    ]
    assert sorted(r.name for r in hecke_system(3, "rdoubleprime").rules) == [
        "a1", "a2", "a3", "b2", "b3", "c13", "c31",
    ]
    assert sorted(r.name for r in hecke_system(3, "rfull").rules) == [
        "a1", "a2", "a3", "b21", "b31", "b32", "c13", "c31",
    ]
    assert len(hecke_system(4, "rfull").rules) == 16
    assert sorted(r.name for r in hecke_system(1, "rfull").rules) == ["a1"]


def test_system_rule_shapes():
    sys = hecke_system(3, "rfull")
    assert sys.rule("b31").lhs == (3, 2, 1, 3)
    assert sys.rule("b31").rhs == (2, 3, 2, 1)
    assert sys.rule("b32").lhs == (3, 2, 3)
    assert sys.rule("b32").rhs == (2, 3, 2)
    assert sys.rule("c31").lhs == (3, 1) and sys.rule("c31").rhs == (1, 3)
    assert sys.rule("c13").lhs == (1, 3) and sys.rule("c13").rhs == (3, 1)
    assert hecke_system(3, "rdoubleprime").rule("b3").lhs == (3, 2, 3)


def test_wide_rank_naming():
    sys = hecke_system(10, "rfull")
    names = {r.name for r in sys.rules}
    assert "a10" in names and "b10_9" in names and "c3_1" in names
    assert sys.rule("b10_1").lhs == (10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 10)


def test_invalid_rank_and_variant():
    with pytest.raises(InvalidRank):
        hecke_system(0, "rfull")
    with pytest.raises(InvalidRank):
        hecke_system(-2, "rprime")
    with pytest.raises(ValueError):
        hecke_system(3, "nope")


def test_classify_rule():
    sys = hecke_system(4, "rfull")
    assert classify_rule(sys.rule("a2")) == ("a", 2)
    assert classify_rule(sys.rule("b42")) == ("b", 4, 2)
    assert classify_rule(sys.rule("c41")) == ("cf", 4, 1)
    assert classify_rule(sys.rule("c14")) == ("ci", 1, 4)
    with pytest.raises(ValueError):
        classify_rule(Rule("weird", (1, 2), (2, 2)))
    with pytest.raises(ValueError):
        classify_rule(Rule("weird", (1, 2, 1), (1,)))


def test_redexes_frozen():
    sys2 = hecke_system(2, "rfull")
    assert [i.render(2) for i in find_redexes((2, 1, 2), sys2)] == ["-:b21:-"]
    sys3 = hecke_system(3, "rfull")
    assert [i.render(3) for i in find_redexes((1, 1, 2, 1), sys3)] == ["-:a1:21"]
    assert [i.render(3) for i in find_redexes((3, 2, 1, 3), sys3)] == [
        "-:b31:-",
        "32:c13:-",
    ]


def test_c_sort_path():
    sys = hecke_system(4, "rdoubleprime")
    p = c_sort_path((3, 1, 2, 4), (1, 3, 4, 2), sys)
    assert p.start == (3, 1, 2, 4) and p.end == (1, 3, 4, 2)
    assert is_c_path(p)
    with pytest.raises(NotCSortable):
        c_sort_path((1, 2), (2, 1), sys)
    with pytest.raises(NotCSortable):
        c_sort_path((1, 1), (1,), sys)
    assert len(c_sort_path((), (), sys)) == 0


def test_c_sort_path_equal_letters_keep_order():
    sys = hecke_system(4, "rdoubleprime")
    # the two 1s cannot pass each other, so sorting must keep their relative order
    p = c_sort_path((1, 3, 1), (1, 1, 3), sys)
    assert p.end == (1, 1, 3)
    with pytest.raises(NotCSortable):
        c_sort_path((1, 2, 1), (1, 1, 2), sys)


def test_length_vector():
    assert length_vector((3, 1, 3, 2), 3) == (4, 2, 1)
    assert length_vector((), 3) == (0, 0, 0)


@given(st.lists(st.integers(1, 3), max_size=6))
@settings(max_examples=150)
def test_length_vector_monotone_along_steps(letters):
    sys = hecke_system(3, "rfull")
    w = tuple(letters)
    for inst in find_redexes(w, sys):
        before, after = length_vector(w, 3), length_vector(inst.target, 3)
        kind = classify_rule(inst.rule)[0]
        if kind in ("cf", "ci"):
            assert after == before
        else:
            assert after < before


def test_chosen_family_census():
    def census(n):
        sys = hecke_system(n, "rfull")
        out = {}
        for p in enumerate_critical_pairs(sys):
            name = chosen_critical_ed_tagged(p, sys)[1]
            out[name] = out.get(name, 0) + 1
        return out

    assert census(3) == {
        "BB": 4, "Ba": 2, "Bc2": 2, "Bc3": 2, "aB": 2, "aa": 6, "ab": 4,
        "ac": 2, "ac-mirror": 2, "bB": 2, "ba": 4, "bb": 4, "undo": 14,
    }
    assert census(4) == {
        "BB": 16, "Ba": 6, "Bc1": 2, "Bc2": 6, "Bc3": 6, "Bc4": 2, "aB": 6,
        "aa": 8, "ab": 6, "ac": 6, "ac-mirror": 6, "bB": 6, "ba": 6,
        "bb": 6, "bc": 2, "undo": 56,
    }


def test_chosen_family_frozen_peaks():
    sys = hecke_system(3, "rfull")
    by_peak = {}
    for p in enumerate_critical_pairs(sys):
        by_peak.setdefault(p.peak, set()).add(chosen_critical_ed_tagged(p, sys)[1])
    assert by_peak[(3, 2, 1, 3, 1)] == {"Bc3"}
    assert by_peak[(3, 2, 3, 1)] == {"Bc2"}
    assert by_peak[(3, 2, 1, 3, 2, 1, 3)] == {"BB"}
    assert by_peak[(3, 2, 3, 2, 1, 3)] == {"bB"}
    assert by_peak[(3, 3, 2, 1, 3)] == {"aB"}
    assert by_peak[(3, 2, 1, 3, 3)] == {"Ba"}
    assert by_peak[(3, 1, 1)] == {"ac"}
    assert by_peak[(3, 3, 1)] == {"ac-mirror"}
    assert by_peak[(3, 2, 1, 3)] == {"undo"}


def test_chosen_diagrams_fit_and_decrease():
    for n in (1, 2, 3):
        sys = hecke_system(n, "rfull")
        for p in enumerate_critical_pairs(sys):
            ed, name, transposed = chosen_critical_ed_tagged(p, sys)
            assert ed.top == p.first and ed.left == p.second
            ok, wit = is_decreasing_ed(sys.order, ed)
            assert ok, (name, p.render(n), wit)
            assert chosen_critical_ed(p, sys) == ed


def test_chosen_orientations_are_paired():
    sys = hecke_system(3, "rfull")
    flags = {}
    for p in enumerate_critical_pairs(sys):
        key = frozenset([(p.first.left, p.first.rule.name), (p.second.left, p.second.rule.name)])
        flags.setdefault((p.peak, key), []).append(
            chosen_critical_ed_tagged(p, sys)[2]
        )
    for (peak, _), pair_flags in flags.items():
        assert sorted(pair_flags) == [False, True], peak


def test_unclassified_inclusion_pair():
    sys = hecke_system(3, "rfull")
    b31 = sys.rule("b31")
    a2 = sys.rule("a2")
    pair = CriticalPair(
        kind="inclusion",
        first=RuleInstance((), b31, ()),
        second=RuleInstance((1,), a2, (3,)),
        peak=(3, 2, 1, 3),
    )
    with pytest.raises(UnclassifiedPair):
        chosen_critical_ed(pair, sys)


def test_cells_family_sizes_and_labels():
    p2 = cells_P(2)
    assert len(p2.members) == 5
    assert list(p2.labels) == ["aa(1)", "aa(2)", "ba(2)", "ab(2)", "bb(2)"]
    p3 = cells_P(3)
    assert len(p3.members) == 14
    assert list(p3.labels) == [
        "loop(1,3)", "loop(3,1)", "aa(1)", "aa(2)", "aa(3)",
        "ba(2)", "ab(2)", "bb(2)", "ba(3)", "ab(3)", "bb(3)",
        "ac(1,3)", "ac(3,1)", "zz(2)",
    ]
    p4 = cells_P(4)
    assert len(p4.members) == 29
    assert p4.with_naturals


def test_cells_are_parallel_pairs():
    for n in (2, 3, 4):
        fam = cells_P(n)
        for s1, s2 in fam.members:
            assert s1.start == s2.start and s1.end == s2.end


def test_zz_member_shape():
    fam = cells_P(3)
    s1, s2 = fam.members[list(fam.labels).index("zz(2)")]
    assert s1.start == (3, 2, 1, 3, 2, 3)
    assert s1.end == (1, 2, 1, 3, 2, 1)
    assert len(s1) == 7 and len(s2) == 7


def test_translate_to_basic_frozen():
    sys = hecke_system(3, "rfull")
    rdp = hecke_system(3, "rdoubleprime")
    b31 = sys.rule("b31")
    t = translate_to_basic(Path((3, 2, 1, 3), (RuleInstance((), b31, ()),)), rdp)
    assert [s.render(3) for s in t.steps] == ["32:c13:-", "-:b3:1"]
    assert t.end == (2, 3, 2, 1)


def test_translate_wide_braid():
    sys = hecke_system(4, "rfull")
    rdp = hecke_system(4, "rdoubleprime")
    b41 = sys.rule("b41")
    t = translate_to_basic(Path(b41.lhs, (RuleInstance((), b41, ()),)), rdp)
    assert t.start == b41.lhs and t.end == b41.rhs
    assert [s.rule.name for s in t.steps] == ["c14", "c24", "b4"]


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_translate_preserves_endpoints(seed):
    import random

    rng = random.Random(seed)
    sys = hecke_system(3, "rfull")
    rdp = hecke_system(3, "rdoubleprime")
    w = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 7)))
    steps = []
    cur = w
    for _ in range(rng.randint(0, 5)):
        reds = find_redexes(cur, sys)
        if not reds:
            break
        st_ = rng.choice(reds)
        steps.append(st_)
        cur = st_.target
    p = Path(w, tuple(steps))
    t = translate_to_basic(p, rdp)
    assert t.start == p.start and t.end == p.end
    assert len(t) >= len(p)


def test_enumerate_monoid_counts():
    assert len(enumerate_monoid(1)) == 2
    assert len(enumerate_monoid(2)) == 6
    assert len(enumerate_monoid(3)) == 24
    assert len(enumerate_monoid(4)) == 120
    assert enumerate_monoid(2) == [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]


def test_enumerate_monoid_variants_agree():
    assert len(enumerate_monoid(2, variant="rprime")) == 6
    got = {len(w) for w in enumerate_monoid(3, variant="rfull")}
    assert max(got) == 6  # the longest element has n(n+1)/2 letters


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        enumerate_monoid(6)
    assert len(enumerate_monoid(5, cap=5)) == 720


@given(st.lists(st.integers(1, 3), max_size=6))
@settings(max_examples=150, deadline=None)
def test_hecke_canon_matches_generic(letters):
    sys = hecke_system(3, "rdoubleprime")
    w = tuple(letters)
    assert hecke_canon(w, sys) == generic_canon(w, sys)


def test_verify_suite_rank2():
    rep = verify_suite(2)
    assert rep.ok
    assert [i.status for i in rep.items] == ["PASS"] * 5
    names = [i.name for i in rep.items]
    assert names == [
        "natural-diagrams-decreasing",
        "critical-pairs-covered",
        "commutation-subsystem",
        "attractor-loops-are-commutations",
        "coherence",
    ]


def test_mirror_commutation_cell_derivable_from_base():
    sys = hecke_system(3, "rfull")
    rdp = hecke_system(3, "rdoubleprime")
    fam = cells_P(3)
    pair = next(
        p
        for p in enumerate_critical_pairs(sys)
        if chosen_critical_ed_tagged(p, sys)[1] == "ac-mirror"
    )
    ed = chosen_critical_ed(pair, sys)
    s1 = Path(ed.top.source, (ed.top,) + ed.right.steps)
    s2 = Path(ed.left.source, (ed.left,) + ed.bottom.steps)
    v = paths_equivalent_mod_cells(
        translate_to_basic(s1, rdp), translate_to_basic(s2, rdp), fam, bound=50000
    )
    assert v is PathVerdict.EQUIVALENT
