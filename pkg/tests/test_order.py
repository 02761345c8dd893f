"""Instance preorders, decreasingness of diagrams, monomiality checks."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from srw.diagrams import ElementaryDiagram, natural_ed, transpose_ed
from srw.hecke import hecke_order, hecke_system
from srw.order import (
    InstanceOrder,
    Verdict,
    check_monomial_sample,
    is_decreasing_ed,
    rule_rank_order,
)
from srw.words import Path, Rule, RuleInstance

from oracles import tiny_system


def test_verdict_flip():
    assert Verdict.GREATER.flip() is Verdict.LESS
    assert Verdict.EQUIVALENT.flip() is Verdict.EQUIVALENT


def test_rule_rank_order():
    sys = tiny_system()
    ord_ = rule_rank_order({"dbl": 1, "swp": 0})
    a = RuleInstance((), sys.rule("dbl"), ())
    b = RuleInstance((2,), sys.rule("swp"), ())
    assert ord_.greater(a, b)
    assert not ord_.greater(b, a)
    assert ord_.equivalent(a, RuleInstance((1, 2), sys.rule("dbl"), ()))
    by_len = rule_rank_order({"dbl": 0, "swp": 0}, tie="length")
    long = RuleInstance((1, 2), sys.rule("dbl"), ())
    short = RuleInstance((), sys.rule("dbl"), ())
    assert by_len.greater(long, short)


def test_hecke_order_idempotence_by_total_length():
    sys = hecke_system(3, "rfull")
    ord_ = sys.order
    a1 = sys.rule("a1")
    wide = RuleInstance((), a1, (2,))
    tight = RuleInstance((), a1, ())
    assert ord_.greater(wide, tight)
    assert ord_.equivalent(wide, RuleInstance((3,), sys.rule("a2"), ()))


def test_hecke_order_families():
    sys = hecke_system(3, "rfull")
    ord_ = sys.order
    b = RuleInstance((), sys.rule("b21"), ())
    cf = RuleInstance((), sys.rule("c31"), ())
    ci = RuleInstance((), sys.rule("c13"), ())
    a = RuleInstance((1, 2, 3), sys.rule("a1"), (1, 2, 3))
    assert ord_.greater(b, cf) and ord_.greater(b, ci) and ord_.greater(b, a)
    assert ord_.greater(cf, a) and ord_.greater(ci, a)
    assert ord_.greater(ci, cf)


def test_hecke_order_forward_commutation_refinement():
    sys = hecke_system(3, "rfull")
    ord_ = sys.order
    c31 = sys.rule("c31")
    assert ord_.greater(RuleInstance((3,), c31, ()), RuleInstance((), c31, (2,)))
    assert ord_.equivalent(RuleInstance((2,), c31, ()), RuleInstance((), c31, (2,)))


def test_hecke_order_braid_normalization():
    sys = hecke_system(3, "rfull")
    ord_ = sys.order
    for w in [(), (1,), (2, 3), (1, 1, 2)]:
        long = RuleInstance((), sys.rule("b31"), w)
        basic = RuleInstance((), sys.rule("b32"), (1,) + w)
        assert ord_.equivalent(long, basic)


def test_hecke_order_inverse_commutations_tie():
    sys = hecke_system(4, "rfull")
    ord_ = sys.order
    c13 = sys.rule("c13")
    assert ord_.equivalent(
        RuleInstance((4,), c13, ()), RuleInstance((), c13, (2, 2))
    )
    assert ord_.greater(
        RuleInstance((), sys.rule("c24"), ()), RuleInstance((), sys.rule("c14"), ())
    )


def _random_instances(seed, count, sys, max_ctx=3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        rule = rng.choice(sys.rules)
        u = tuple(rng.randint(1, sys.n) for _ in range(rng.randint(0, max_ctx)))
        v = tuple(rng.randint(1, sys.n) for _ in range(rng.randint(0, max_ctx)))
        out.append(RuleInstance(u, rule, v))
    return out


def test_hecke_order_is_total_asymmetric_transitive():
    sys = hecke_system(3, "rfull")
    ord_ = sys.order
    insts = _random_instances(5, 60, sys)
    for a in insts:
        for b in insts:
            g_ab, g_ba = ord_.greater(a, b), ord_.greater(b, a)
            eq = ord_.equivalent(a, b)
            assert g_ab + g_ba + eq == 1  # totality and asymmetry
    for a in insts[:20]:
        for b in insts[:20]:
            for c in insts[:20]:
                if ord_.equivalent(a, b) and ord_.equivalent(b, c):
                    assert ord_.equivalent(a, c)
                if ord_.greater(a, b) and ord_.greater(b, c):
                    assert ord_.greater(a, c)


def test_decreasing_square_of_idempotences():
    sys = hecke_system(2, "rfull")
    a1 = sys.rule("a1")
    top = RuleInstance((1,), a1, ())
    left = RuleInstance((), a1, (1,))
    mid = RuleInstance((), a1, ())
    ed = ElementaryDiagram(
        top=top,
        left=left,
        right=Path(top.target, (mid,)),
        bottom=Path(left.target, (mid,)),
    )
    ok, wit = is_decreasing_ed(sys.order, ed)
    assert ok and (wit.j, wit.s) == (0, 0)


def test_not_decreasing_reports_reason():
    sys = tiny_system()
    ord_ = rule_rank_order({"dbl": 0, "swp": 1})
    # 1121 -> 121 -> 112: closing a dbl/dbl corner through the bigger swp rule
    top = RuleInstance((), sys.rule("dbl"), (2, 1))
    left = RuleInstance((), sys.rule("dbl"), (2, 1))
    swp = RuleInstance((1,), sys.rule("swp"), ())
    bad = ElementaryDiagram(
        top=top,
        left=left,
        right=Path(top.target, (swp,)),
        bottom=Path(left.target, (swp,)),
    )
    ok, wit = is_decreasing_ed(ord_, bad)
    assert not ok and wit.reason


def test_natural_square_decreasing_under_hecke_order():
    sys = hecke_system(3, "rfull")
    for w in [(), (1,), (2, 2), (3, 1, 2)]:
        ed = natural_ed(sys.rule("a1"), w, sys.rule("c31"))
        ok, _ = is_decreasing_ed(sys.order, ed)
        assert ok
        ok, _ = is_decreasing_ed(sys.order, transpose_ed(ed))
        assert ok


def test_monomial_sample_hecke_order_clean():
    sys = hecke_system(3, "rfull")
    rep = check_monomial_sample(sys.order, sys, trials=500, seed=3)
    assert rep.ok and rep.trials == 500


def _first_letter_order() -> InstanceOrder:
    """Compare instances by the first letter of their left context.

    Looks as if it measures the context, but whiskering on the left
    changes the first letter, so verdicts flip under composition.
    """

    def cmp(a: RuleInstance, b: RuleInstance) -> Verdict:
        ka = a.left[0] if a.left else 0
        kb = b.left[0] if b.left else 0
        if ka == kb:
            return Verdict.EQUIVALENT
        return Verdict.GREATER if ka > kb else Verdict.LESS

    return InstanceOrder(name="first-letter", compare=cmp)


def test_monomial_sample_catches_broken_order():
    sys = hecke_system(3, "rfull")
    rep = check_monomial_sample(_first_letter_order(), sys, trials=500, seed=3)
    assert not rep.ok
    assert rep.counterexamples
