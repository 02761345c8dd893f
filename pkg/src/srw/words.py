"""Words, rules, rewriting steps and reachability.

A word is a tuple of generators; a generator is an integer in 1..n.
Words over alphabets of at most nine generators print as digit strings
("212"), larger alphabets print dot-separated ("2.12.3").

A rule rewrites a fixed left-hand side to a fixed right-hand side.  A
rule instance places a rule inside a context: the instance (u, r, v)
rewrites the word u·lhs(r)·v to u·rhs(r)·v.  Instances double as the
steps of reduction paths; a path stores its start word plus the chained
instances, and a zigzag is a path whose legs may also run backward.

`find_redexes` lists every way a rule applies inside a word, ordered by
(start position, rule name).  `reach` computes the set of words reachable
by any number of steps; for systems whose rules never lengthen words the
set is finite and the closure is exact, otherwise a bound on explored
words is required and the result may be truncated.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

__all__ = [
    "Word",
    "word_from_str",
    "word_to_str",
    "Rule",
    "RuleInstance",
    "Step",
    "Path",
    "Zigzag",
    "SrsSystem",
    "SourceMismatch",
    "BoundExceeded",
    "ReachResult",
    "apply_instance",
    "find_redexes",
    "reach",
]

Word = tuple[int, ...]


def word_to_str(w: Word, n: int) -> str:
    """Render a word: digit string for n <= 9, dot-separated otherwise.

    The empty word renders as "-" so that it survives a round trip
    through command lines and step specs.
    """
    if not w:
        return "-"
    if n <= 9:
        return "".join(str(g) for g in w)
    return ".".join(str(g) for g in w)


def word_from_str(s: str, n: int) -> Word:
    """Parse the rendering produced by `word_to_str` ("" also means empty)."""
    if s in ("", "-"):
        return ()
    if n <= 9:
        parts = list(s)
    else:
        parts = s.split(".")
    try:
        w = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"not a word over 1..{n}: {s!r}")
    for g in w:
        if not 1 <= g <= n:
            raise ValueError(f"generator {g} out of range 1..{n} in {s!r}")
    return w


@dataclass(frozen=True)
class Rule:
    """A rewriting rule lhs -> rhs, both words, lhs non-empty."""

    name: str
    lhs: Word
    rhs: Word

    def __post_init__(self) -> None:
        if not self.lhs:
            raise ValueError(f"rule {self.name}: empty left-hand side")

    def shortens(self) -> bool:
        return len(self.rhs) < len(self.lhs)


@dataclass(frozen=True)
class RuleInstance:
    """A rule in context: rewrites left·lhs·right to left·rhs·right."""

    left: Word
    rule: Rule
    right: Word

    @property
    def source(self) -> Word:
        return self.left + self.rule.lhs + self.right

    @property
    def target(self) -> Word:
        return self.left + self.rule.rhs + self.right

    def whisker(self, u: Word, v: Word) -> "RuleInstance":
        """The same rule applied inside the larger context u·(-)·v."""
        return RuleInstance(u + self.left, self.rule, self.right + v)

    def render(self, n: int) -> str:
        return (
            f"{word_to_str(self.left, n)}:{self.rule.name}:"
            f"{word_to_str(self.right, n)}"
        )


# A step of a reduction path is exactly a rule instance: its source and
# target words are determined by the contexts, so no separate record is
# needed.
Step = RuleInstance


class SourceMismatch(ValueError):
    """Raised when an instance is applied to a word it does not match."""


class BoundExceeded(RuntimeError):
    """Raised when an exact closure was requested but the bound cut it off."""


def apply_instance(w: Word, inst: RuleInstance) -> Word:
    """Apply one step to w; w must equal the instance's source word."""
    if w != inst.source:
        raise SourceMismatch(f"step source {inst.source} does not match {w}")
    return inst.target


@dataclass(frozen=True)
class Path:
    """A forward reduction path: a start word plus chained steps."""

    start: Word
    steps: tuple[RuleInstance, ...] = ()

    def __post_init__(self) -> None:
        cur = self.start
        for s in self.steps:
            if s.source != cur:
                raise SourceMismatch(
                    f"path breaks at {s}: expected source {cur}, got {s.source}"
                )
            cur = s.target

    @property
    def end(self) -> Word:
        return self.steps[-1].target if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def words(self) -> list[Word]:
        """All words visited, start first, end last."""
        out = [self.start]
        for s in self.steps:
            out.append(s.target)
        return out

    def whisker(self, u: Word, v: Word) -> "Path":
        return Path(u + self.start + v, tuple(s.whisker(u, v) for s in self.steps))

    def concat(self, other: "Path") -> "Path":
        if other.start != self.end:
            raise SourceMismatch(
                f"cannot concatenate: {self.end} then {other.start}"
            )
        return Path(self.start, self.steps + other.steps)

    def render(self, n: int) -> str:
        if not self.steps:
            return "-"
        return ",".join(s.render(n) for s in self.steps)


FORWARD = ">"
BACKWARD = "<"


@dataclass(frozen=True)
class Zigzag:
    """A chain of steps walked forward ('>') or backward ('<').

    A '>' leg moves from the step's source to its target, a '<' leg the
    other way, so a zigzag witnesses equality in the congruence generated
    by the rules without committing to a direction.
    """

    start: Word
    legs: tuple[tuple[str, RuleInstance], ...] = ()

    def __post_init__(self) -> None:
        cur = self.start
        for direction, s in self.legs:
            if direction == FORWARD:
                if s.source != cur:
                    raise SourceMismatch(
                        f"forward leg at {cur}: step source is {s.source}"
                    )
                cur = s.target
            elif direction == BACKWARD:
                if s.target != cur:
                    raise SourceMismatch(
                        f"backward leg at {cur}: step target is {s.target}"
                    )
                cur = s.source
            else:
                raise ValueError(f"bad leg direction {direction!r}")

    @property
    def end(self) -> Word:
        cur = self.start
        for direction, s in self.legs:
            cur = s.target if direction == FORWARD else s.source
        return cur

    def __len__(self) -> int:
        return len(self.legs)


@dataclass(frozen=True)
class SrsSystem:
    """A string rewriting system: alphabet size n plus named rules.

    `order`, when present, compares rule instances (see srw.order); it is
    excluded from equality and hashing so systems with the same rules are
    interchangeable as cache keys.
    """

    n: int
    rules: tuple[Rule, ...]
    order: object | None = field(default=None, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.n}")
        seen: set[str] = set()
        for r in self.rules:
            if r.name in seen:
                raise ValueError(f"duplicate rule name {r.name}")
            seen.add(r.name)
            for g in r.lhs + r.rhs:
                if not 1 <= g <= self.n:
                    raise ValueError(
                        f"rule {r.name}: generator {g} out of range 1..{self.n}"
                    )

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(name)

    def length_nonincreasing(self) -> bool:
        return all(len(r.rhs) <= len(r.lhs) for r in self.rules)

    def fmt(self, w: Word) -> str:
        return word_to_str(w, self.n)


def find_redexes(w: Word, sys: SrsSystem) -> list[RuleInstance]:
    """All instances whose source is w, ordered by (position, rule name)."""
    rules = sorted(sys.rules, key=lambda r: r.name)
    out: list[RuleInstance] = []
    for pos in range(len(w) + 1):
        for r in rules:
            m = len(r.lhs)
            if pos + m <= len(w) and w[pos : pos + m] == r.lhs:
                out.append(RuleInstance(w[:pos], r, w[pos + m :]))
    return out


@dataclass(frozen=True)
class ReachResult:
    """Words reachable from a start word; `complete` is False when the
    closure was truncated by the explored-words bound."""

    words: frozenset[Word]
    complete: bool


def reach(
    w: Word,
    sys: SrsSystem,
    max_words: int | None = None,
    require_exact: bool = False,
) -> ReachResult:
    """Breadth-first closure of {w} under one-step rewriting.

    For length-nonincreasing systems the closure is finite and no bound
    is needed.  Otherwise a bound on the number of explored words must be
    given; when the bound truncates the closure the result is flagged
    incomplete, or BoundExceeded is raised if `require_exact` was set.
    """
    if max_words is None and not sys.length_nonincreasing():
        raise ValueError(
            "system has lengthening rules: reach needs a max_words bound"
        )
    seen: set[Word] = {w}
    queue: deque[Word] = deque([w])
    complete = True
    while queue:
        cur = queue.popleft()
        for inst in find_redexes(cur, sys):
            t = inst.target
            if t in seen:
                continue
            if max_words is not None and len(seen) >= max_words:
                complete = False
                queue.clear()
                break
            seen.add(t)
            queue.append(t)
    if not complete and require_exact:
        raise BoundExceeded(f"reach truncated at {max_words} words")
    return ReachResult(frozenset(seen), complete)
