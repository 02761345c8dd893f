"""Command line interface for the string rewriting toolkit.

Systems travel as JSON documents:

    {"generators": 3,
     "rules": [{"name": "a1", "lhs": [1, 1], "rhs": [1]}, ...],
     "order": {"kind": "hecke"}}

The order field is optional; besides "hecke" it accepts
{"kind": "rule-rank", "ranks": {"a1": 0, ...}, "tie": "equivalent"}
("tie" may also be "length").  Words on the command line use the same
syntax as in reports: a digit string for up to nine generators,
dot-separated numbers above that, and "-" for the empty word.  Steps are
written LEFT:RULE:RIGHT, paths as comma-separated steps (or "-"), and
zigzags as semicolon-separated steps each prefixed with ">" (traversed
forward) or "<" (traversed backward).

Exit status: 0 for success or a passing check, 1 for a failing check or
an undecided computation, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys as _sysmod
from typing import Any

from .critical import enumerate_critical_pairs, local_confluence_report
from .diagrams import (
    Tiling,
    bfs_join_chooser,
    complete_peak,
    complete_zigzag,
    export_dot,
    natural_ed,
    standard_provider,
)
from .hecke import (
    CapExceeded,
    InvalidRank,
    chosen_critical_ed_tagged,
    enumerate_monoid,
    hecke_order,
    hecke_provider,
    hecke_system,
    verify_suite,
)
from .order import is_decreasing_ed, rule_rank_order
from .seminormal import NotOneClass, canon, words_equal
from .words import (
    BACKWARD,
    FORWARD,
    BoundExceeded,
    Path,
    Rule,
    RuleInstance,
    SourceMismatch,
    SrsSystem,
    Zigzag,
    find_redexes,
    reach,
    word_from_str,
    word_to_str,
)


class UsageError(Exception):
    """Unusable input: bad file, bad word, bad step, bad system."""


def system_to_doc(sys: SrsSystem) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "generators": sys.n,
        "rules": [
            {"name": r.name, "lhs": list(r.lhs), "rhs": list(r.rhs)}
            for r in sys.rules
        ],
    }
    if sys.order is not None:
        doc["order"] = {"kind": sys.order.name}
    return doc


def system_from_doc(doc: Any) -> SrsSystem:
    if not isinstance(doc, dict):
        raise UsageError("system document must be a JSON object")
    n = doc.get("generators", doc.get("n"))
    if not isinstance(n, int) or n < 1:
        raise UsageError("field 'generators' must be a positive integer")
    raw_rules = doc.get("rules")
    if not isinstance(raw_rules, list) or not raw_rules:
        raise UsageError("field 'rules' must be a non-empty list")
    rules = []
    for r in raw_rules:
        try:
            name = r["name"]
            lhs = tuple(r["lhs"])
            rhs = tuple(r["rhs"])
        except (TypeError, KeyError) as exc:
            raise UsageError(f"malformed rule entry {r!r}") from exc
        if not isinstance(name, str) or not name:
            raise UsageError(f"rule name must be a non-empty string, got {name!r}")
        if not all(isinstance(g, int) for g in lhs + rhs):
            raise UsageError(f"rule {name}: sides must be lists of integers")
        try:
            rules.append(Rule(name=name, lhs=lhs, rhs=rhs))
        except ValueError as exc:
            raise UsageError(f"rule {name}: {exc}") from exc
    order = None
    odoc = doc.get("order")
    if odoc is not None:
        if not isinstance(odoc, dict) or "kind" not in odoc:
            raise UsageError("field 'order' must be an object with a 'kind'")
        kind = odoc["kind"]
        if kind == "hecke":
            order = hecke_order()
        elif kind == "rule-rank":
            ranks = odoc.get("ranks")
            if not isinstance(ranks, dict):
                raise UsageError("rule-rank order needs a 'ranks' object")
            names = {r.name for r in rules}
            for name in ranks:
                if name not in names:
                    raise UsageError(f"rank for unknown rule {name!r}")
            tie = odoc.get("tie", "equivalent")
            if tie not in ("equivalent", "length"):
                raise UsageError(f"unknown tie policy {tie!r}")
            order = rule_rank_order(ranks, tie=tie)
        else:
            raise UsageError(f"unknown order kind {kind!r}")
    try:
        return SrsSystem(n=n, rules=tuple(rules), order=order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def load_system(path: str) -> SrsSystem:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    return system_from_doc(doc)


def parse_word(s: str, sys: SrsSystem) -> tuple[int, ...]:
    try:
        w = word_from_str(s, sys.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for g in w:
        if not 1 <= g <= sys.n:
            raise UsageError(f"letter {g} outside 1..{sys.n} in {s!r}")
    return w


def parse_step(s: str, sys: SrsSystem) -> RuleInstance:
    parts = s.split(":")
    if len(parts) != 3:
        raise UsageError(f"step {s!r} is not LEFT:RULE:RIGHT")
    left, name, right = parts
    try:
        rule = sys.rule(name)
    except KeyError as exc:
        raise UsageError(f"unknown rule {name!r}") from exc
    return RuleInstance(parse_word(left, sys), rule, parse_word(right, sys))


def parse_path(s: str, sys: SrsSystem, start: tuple[int, ...] | None = None) -> Path:
    if s == "-":
        if start is None:
            raise UsageError("an empty path needs a start word from elsewhere")
        return Path(start)
    steps = tuple(parse_step(part, sys) for part in s.split(","))
    try:
        return Path(steps[0].source, steps)
    except SourceMismatch as exc:
        raise UsageError(str(exc)) from exc


def parse_zigzag(s: str, sys: SrsSystem) -> Zigzag:
    legs = []
    for part in s.split(";"):
        if not part or part[0] not in (FORWARD, BACKWARD):
            raise UsageError(f"zigzag leg {part!r} must start with '>' or '<'")
        legs.append((part[0], parse_step(part[1:], sys)))
    if not legs:
        raise UsageError("empty zigzag")
    d0, s0 = legs[0]
    start = s0.source if d0 == FORWARD else s0.target
    try:
        return Zigzag(start, tuple(legs))
    except SourceMismatch as exc:
        raise UsageError(str(exc)) from exc


def _provider_for(sys: SrsSystem):
    if sys.order is not None and sys.order.name == "hecke":
        return hecke_provider(sys)
    return standard_provider(sys, chooser=bfs_join_chooser(sys))


def _emit_json(doc: Any) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _tiling_doc(t: Tiling, sys: SrsSystem) -> dict[str, Any]:
    tags: dict[str, int] = {}
    for rec in t.cells:
        tags[rec.tag] = tags.get(rec.tag, 0) + 1
    return {"cells": len(t.cells), "tags": tags}


# --- subcommand bodies ------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    msg = f"valid: {len(sys.rules)} rules over {sys.n} generators"
    if args.json:
        _emit_json({"valid": True, "rules": len(sys.rules), "generators": sys.n})
    else:
        print(msg)
    return 0


def cmd_redexes(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    w = parse_word(args.word, sys)
    insts = find_redexes(w, sys)
    if args.json:
        _emit_json(
            {
                "word": sys.fmt(w),
                "redexes": [i.render(sys.n) for i in insts],
            }
        )
    else:
        for inst in insts:
            print(inst.render(sys.n))
    return 0


def cmd_reach(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    w = parse_word(args.word, sys)
    try:
        res = reach(w, sys, max_words=args.max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ws = sorted(res.words, key=lambda t: (len(t), t))
    if args.json:
        _emit_json(
            {
                "complete": res.complete,
                "count": len(ws),
                "words": [sys.fmt(x) for x in ws],
            }
        )
    else:
        for x in ws:
            print(sys.fmt(x))
        if not res.complete:
            print(f"(truncated at {args.max} words)", file=_sysmod.stderr)
    return 0


def cmd_normal_form(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    w = parse_word(args.word, sys)
    try:
        c = canon(w, sys)
    except (NotOneClass, BoundExceeded, ValueError) as exc:
        print(f"no canonical form: {exc}", file=_sysmod.stderr)
        return 1
    if args.json:
        _emit_json({"word": sys.fmt(w), "normal-form": sys.fmt(c)})
    else:
        print(sys.fmt(c))
    return 0


def cmd_equal(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    u = parse_word(args.word1, sys)
    v = parse_word(args.word2, sys)
    try:
        eq = words_equal(u, v, sys)
    except (NotOneClass, BoundExceeded, ValueError) as exc:
        print(f"undecided: {exc}", file=_sysmod.stderr)
        return 1
    if args.json:
        _emit_json({"equal": eq})
    else:
        print("equal" if eq else "different")
    return 0 if eq else 1


def cmd_critical_pairs(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    pairs = enumerate_critical_pairs(sys)
    if args.json:
        _emit_json(
            {
                "count": len(pairs),
                "pairs": [
                    {
                        "kind": p.kind,
                        "peak": sys.fmt(p.peak),
                        "first": p.first.render(sys.n),
                        "second": p.second.render(sys.n),
                    }
                    for p in pairs
                ],
            }
        )
    else:
        for p in pairs:
            print(p.render(sys.n))
    return 0


def cmd_confluence(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    rep = local_confluence_report(sys, bound=args.bound)
    if args.json:
        _emit_json(
            {
                "ok": rep.ok,
                "bound": rep.bound,
                "pairs": rep.total,
                "failures": [p.render(sys.n) for p in rep.failures],
            }
        )
    else:
        for p in rep.failures:
            print(f"unjoinable: {p.render(sys.n)}")
        if rep.ok:
            print(f"PASS: {rep.total} critical pairs join (bound {rep.bound})")
        else:
            print(
                f"FAIL: {len(rep.failures)} of {rep.total} critical pairs "
                f"did not join (bound {rep.bound})"
            )
    return 0 if rep.ok else 1


def cmd_check_decreasing(args: argparse.Namespace) -> int:
    import itertools

    sys = load_system(args.system)
    if sys.order is None:
        raise UsageError("check-decreasing needs a system with an order")
    failures: list[str] = []
    checked = 0
    for r1 in sys.rules:
        for r2 in sys.rules:
            for length in range(args.contexts + 1):
                for w in itertools.product(range(1, sys.n + 1), repeat=length):
                    ed = natural_ed(r1, w, r2)
                    ok, wit = is_decreasing_ed(sys.order, ed)
                    checked += 1
                    if not ok:
                        failures.append(
                            f"natural {r1.name}|{sys.fmt(w)}|{r2.name}: {wit.reason}"
                        )
    if sys.order.name == "hecke":
        for pair in enumerate_critical_pairs(sys):
            ed = chosen_critical_ed_tagged(pair, sys)[0]
            ok, wit = is_decreasing_ed(sys.order, ed)
            checked += 1
            if not ok:
                failures.append(f"critical {pair.render(sys.n)}: {wit.reason}")
    else:
        chooser = bfs_join_chooser(sys)
        for pair in enumerate_critical_pairs(sys):
            res = chooser(pair)
            checked += 1
            if res is None:
                failures.append(f"critical {pair.render(sys.n)}: no joining square")
                continue
            ok, wit = is_decreasing_ed(sys.order, res[0])
            if not ok:
                failures.append(f"critical {pair.render(sys.n)}: {wit.reason}")
    if args.json:
        _emit_json({"ok": not failures, "checked": checked, "failures": failures})
    else:
        for f in failures:
            print(f)
        verdict = "PASS" if not failures else "FAIL"
        print(f"{verdict}: {checked} diagrams checked, {len(failures)} not decreasing")
    return 0 if not failures else 1


def _print_completion(
    kind: str,
    sink: tuple[int, ...],
    p1: Path,
    p2: Path,
    t: Tiling,
    sys: SrsSystem,
    args: argparse.Namespace,
) -> None:
    if args.dot:
        print(export_dot(t), end="")
        return
    first, second = ("right", "bottom") if kind == "peak" else ("from-start", "from-end")
    if args.json:
        doc = _tiling_doc(t, sys)
        doc["common" if kind == "zigzag" else "sink"] = sys.fmt(sink)
        doc[first] = p1.render(sys.n)
        doc[second] = p2.render(sys.n)
        _emit_json(doc)
        return
    print(f"{'common' if kind == 'zigzag' else 'sink'} {sys.fmt(sink)}")
    print(f"{first} {p1.render(sys.n)}")
    print(f"{second} {p2.render(sys.n)}")
    print(f"cells {len(t.cells)}")


def cmd_complete_peak(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    if args.top == "-" and args.left == "-":
        raise UsageError("at least one of --top/--left must contain a step")
    top = parse_path(args.top, sys) if args.top != "-" else None
    left = parse_path(args.left, sys) if args.left != "-" else None
    if top is None:
        top = Path(left.start)
    if left is None:
        left = Path(top.start)
    if top.start != left.start:
        raise UsageError("--top and --left must start at the same word")
    t = complete_peak(sys, _provider_for(sys), top, left, fuel=args.fuel)
    b = t.boundary()
    _print_completion("peak", b.sink, b.from_start, b.from_end, t, sys, args)
    return 0


def cmd_complete_zigzag(args: argparse.Namespace) -> int:
    sys = load_system(args.system)
    z = parse_zigzag(args.zigzag, sys)
    comp = complete_zigzag(sys, _provider_for(sys), z, fuel=args.fuel)
    _print_completion(
        "zigzag", comp.common, comp.from_start, comp.from_end, comp.tiling, sys, args
    )
    return 0


def cmd_hecke_gen(args: argparse.Namespace) -> int:
    sys = hecke_system(args.rank, args.variant)
    text = json.dumps(system_to_doc(sys), sort_keys=True, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_hecke_enumerate(args: argparse.Namespace) -> int:
    elems = enumerate_monoid(args.rank, variant=args.variant, cap=args.cap)
    if args.json:
        _emit_json(
            {
                "count": len(elems),
                "elements": [word_to_str(w, args.rank) for w in elems],
            }
        )
    else:
        print(f"count {len(elems)}")
        for w in elems:
            print(word_to_str(w, args.rank))
    return 0


def cmd_hecke_verify(args: argparse.Namespace) -> int:
    rep = verify_suite(args.rank, coherence_bound=args.coherence_bound)
    statuses = [item.status for item in rep.items]
    overall = (
        "FAIL" if "FAIL" in statuses else "UNKNOWN" if "UNKNOWN" in statuses else "PASS"
    )
    if args.json:
        _emit_json(
            {
                "rank": rep.n,
                "overall": overall,
                "items": [
                    {"name": i.name, "status": i.status, "detail": i.detail}
                    for i in rep.items
                ],
            }
        )
    else:
        for item in rep.items:
            print(f"{item.name}: {item.status} ({item.detail})")
        print(f"VERDICT: {overall}")
    return 0 if rep.ok else 1


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="srw",
        description="String rewriting: reduction, critical pairs, diagram tiling.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, help="check a system document")
    p.add_argument("system")
    p.add_argument("--json", action="store_true")

    p = add("redexes", cmd_redexes, help="list the rule instances applicable to a word")
    p.add_argument("system")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")

    p = add("reach", cmd_reach, help="list all words reachable by rewriting")
    p.add_argument("system")
    p.add_argument("word")
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = add("normal-form", cmd_normal_form, help="canonical form of a word")
    p.add_argument("system")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")

    p = add("equal", cmd_equal, help="decide whether two words present the same element")
    p.add_argument("system")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--json", action="store_true")

    p = add("critical-pairs", cmd_critical_pairs, help="enumerate critical pairs")
    p.add_argument("system")
    p.add_argument("--json", action="store_true")

    p = add("confluence", cmd_confluence, help="joinability of all critical pairs")
    p.add_argument("system")
    p.add_argument("--bound", type=int, default=16)
    p.add_argument("--json", action="store_true")

    p = add(
        "check-decreasing",
        cmd_check_decreasing,
        help="verify the order makes natural and critical diagrams decreasing",
    )
    p.add_argument("system")
    p.add_argument("--contexts", type=int, default=2)
    p.add_argument("--json", action="store_true")

    p = add("complete-peak", cmd_complete_peak, help="tile a peak of two reductions")
    p.add_argument("system")
    p.add_argument("--top", required=True, help="comma-separated steps, or -")
    p.add_argument("--left", required=True, help="comma-separated steps, or -")
    p.add_argument("--fuel", type=int, default=10000)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("complete-zigzag", cmd_complete_zigzag, help="tile a zigzag of reductions")
    p.add_argument("system")
    p.add_argument("--zigzag", required=True, help="semicolon-separated >/< steps")
    p.add_argument("--fuel", type=int, default=10000)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")

    ph = sub.add_parser("hecke", help="the 0-Hecke monoid presentations")
    hsub = ph.add_subparsers(dest="hecke_command", required=True)

    def addh(name: str, fn, **kwargs) -> argparse.ArgumentParser:
        p = hsub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = addh("gen", cmd_hecke_gen, help="emit a Hecke system document")
    p.add_argument("rank", type=int)
    p.add_argument(
        "--variant",
        choices=["rprime", "rdoubleprime", "rfull"],
        default="rdoubleprime",
    )
    p.add_argument("-o", "--output", default=None)

    p = addh("enumerate", cmd_hecke_enumerate, help="list all monoid elements")
    p.add_argument("rank", type=int)
    p.add_argument(
        "--variant",
        choices=["rprime", "rdoubleprime", "rfull"],
        default="rdoubleprime",
    )
    p.add_argument("--cap", type=int, default=5)
    p.add_argument("--json", action="store_true")

    p = addh("verify", cmd_hecke_verify, help="run the machine checks for rank n")
    p.add_argument("rank", type=int)
    p.add_argument("--coherence-bound", type=int, default=100000)
    p.add_argument("--json", action="store_true")

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UsageError, InvalidRank, CapExceeded) as exc:
        print(f"error: {exc}", file=_sysmod.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=_sysmod.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=_sysmod.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
