"""Elementary diagrams, tilings of peaks and zigzags, and cell families.

An elementary diagram is a rectangle of reductions: a top step, a left
step, and two convergence paths (right and bottom) ending at a common
word.  Dashed sides encode the degenerate shapes: a dashed top or left
is stored as None (a length-zero side), a dashed right or bottom as an
empty path.  The legal shapes are

- proper: solid top and left, arbitrary (possibly empty) right and
  bottom convergence paths with a common end;
- dashed top: the right side is the single step repeating the left step,
  the bottom is empty;
- dashed left: the bottom is the single step repeating the top step, the
  right is empty;
- all dashed: every side has length zero.

`natural_ed(r, w, r')` is the square that commutes two non-overlapping
redexes separated by the word w; whiskering extends a diagram by outer
context, transposition swaps the two sides.

A `Tiling` fills the area under a zigzag with elementary diagrams.  The
untiled boundary (the frontier) is walked from the zigzag's start to its
end: backward legs are horizontal edges, forward legs vertical edges.
An open corner is a horizontal edge immediately followed by a vertical
one: a word with two diverging steps and nothing glued beneath.
Adjoining a diagram whose top and left match those steps replaces the
two edges by the diagram's right and bottom sides.  When no corner
remains the frontier has the shape V*H*: a path from the walk's start
down to a common sink, then a path from the walk's end to the same sink.
Completing a peak (a two-sided zigzag: reversed top path, then left
path) yields the right and bottom boundary of the classical confluence
diagram; completing an arbitrary zigzag yields a common reduct with
reduction paths from both endpoints.

A `CellFamily` is a set of parallel path pairs; `paths_equivalent_mod_cells`
searches for a rewrite of one path into another by replacing whiskered
occurrences of a member path with its partner (in both directions,
including insertion and deletion of whiskered loops) and, optionally, by
commuting adjacent steps with disjoint redexes.  The verdict is
one-sided: Equivalent means a chain of substitutions was found, Unknown
means none was found within the search budget.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator

from .words import (
    Path,
    Rule,
    RuleInstance,
    SourceMismatch,
    SrsSystem,
    Word,
    Zigzag,
    find_redexes,
    word_to_str,
)

__all__ = [
    "ElementaryDiagram",
    "natural_ed",
    "whisker_ed",
    "transpose_ed",
    "CornerMismatch",
    "FuelExhausted",
    "NoCellForCorner",
    "CellRecord",
    "Tiling",
    "Boundary",
    "tiling_from_peak",
    "tiling_from_zigzag",
    "complete_tiling",
    "complete_peak",
    "complete_zigzag",
    "ZigzagCompletion",
    "bfs_join_chooser",
    "standard_provider",
    "CellFamily",
    "PathVerdict",
    "NotParallel",
    "paths_equivalent_mod_cells",
    "export_dot",
    "reduction_graph_dot",
]


@dataclass(frozen=True)
class ElementaryDiagram:
    """One tile: top/left steps (None = dashed) and right/bottom paths."""

    top: RuleInstance | None
    left: RuleInstance | None
    right: Path
    bottom: Path

    def __post_init__(self) -> None:
        t, l = self.top, self.left
        if t is not None and l is not None:
            if t.source != l.source:
                raise SourceMismatch("top and left must share their source")
            if self.right.start != t.target:
                raise SourceMismatch("right side must start at the top's target")
            if self.bottom.start != l.target:
                raise SourceMismatch("bottom side must start at the left's target")
            if self.right.end != self.bottom.end:
                raise SourceMismatch("right and bottom must converge")
        elif t is None and l is not None:
            if self.right.steps != (l,) or self.right.start != l.source:
                raise SourceMismatch(
                    "dashed top: right side must repeat the left step"
                )
            if self.bottom != Path(l.target):
                raise SourceMismatch("dashed top: bottom side must be dashed-empty")
        elif l is None and t is not None:
            if self.bottom.steps != (t,) or self.bottom.start != t.source:
                raise SourceMismatch(
                    "dashed left: bottom side must repeat the top step"
                )
            if self.right != Path(t.target):
                raise SourceMismatch("dashed left: right side must be dashed-empty")
        else:
            if self.right.steps or self.bottom.steps:
                raise SourceMismatch("all-dashed diagram must have empty sides")
            if self.right.start != self.bottom.start:
                raise SourceMismatch("all-dashed diagram sides must share a word")

    @property
    def source(self) -> Word:
        if self.top is not None:
            return self.top.source
        if self.left is not None:
            return self.left.source
        return self.right.start

    @property
    def sink(self) -> Word:
        return self.right.end if self.top is not None or self.left is not None else self.right.start

    @property
    def is_proper(self) -> bool:
        return self.top is not None and self.left is not None


def natural_ed(r1: Rule, w: Word, r2: Rule) -> ElementaryDiagram:
    """The commuting square of two disjoint redexes separated by w.

    Top applies r1 with the word w·lhs(r2) on its right; left applies r2
    with lhs(r1)·w on its left; either order reaches rhs(r1)·w·rhs(r2).
    """
    top = RuleInstance((), r1, w + r2.lhs)
    left = RuleInstance(r1.lhs + w, r2, ())
    right = Path(top.target, (RuleInstance(r1.rhs + w, r2, ()),))
    bottom = Path(left.target, (RuleInstance((), r1, w + r2.rhs),))
    return ElementaryDiagram(top=top, left=left, right=right, bottom=bottom)


def whisker_ed(ed: ElementaryDiagram, u: Word, v: Word) -> ElementaryDiagram:
    """The same diagram inside the outer context u·(-)·v."""
    return ElementaryDiagram(
        top=None if ed.top is None else ed.top.whisker(u, v),
        left=None if ed.left is None else ed.left.whisker(u, v),
        right=ed.right.whisker(u, v),
        bottom=ed.bottom.whisker(u, v),
    )


def transpose_ed(ed: ElementaryDiagram) -> ElementaryDiagram:
    """Swap the horizontal and vertical roles; an involution."""
    return ElementaryDiagram(
        top=ed.left, left=ed.top, right=ed.bottom, bottom=ed.right
    )


class CornerMismatch(ValueError):
    """The diagram offered for a corner does not match its two steps."""


class FuelExhausted(RuntimeError):
    """Corner resolution ran out of fuel with open corners remaining."""


class NoCellForCorner(RuntimeError):
    """The cell provider had no diagram for a corner's step pair."""


@dataclass(frozen=True)
class CellRecord:
    """An adjoined cell with its provenance tag and origin label."""

    ed: ElementaryDiagram
    tag: str  # natural | critical | whiskered | transposed | improper
    origin: str


@dataclass(frozen=True)
class _Edge:
    kind: str  # "H" or "V"
    step: RuleInstance | None  # None only for dashed identification edges
    src: int
    dst: int


@dataclass(frozen=True)
class Boundary:
    """The two convergence paths of a complete tiling."""

    sink: Word
    from_start: Path  # from the frontier walk's start word
    from_end: Path  # from the frontier walk's end word


class Tiling:
    """A partially tiled region under a zigzag.

    The frontier is kept as the walk from the zigzag's start to its end;
    horizontal entries are traversed backward, vertical entries forward.
    Node identifiers exist for rendering; the reduction content lives in
    the step instances themselves.
    """

    def __init__(self, n: int, start: Word, legs: Iterable[tuple[str, RuleInstance]]):
        self.n = n
        self.nodes: dict[int, Word] = {}
        self.edges: list[_Edge] = []
        self.cells: list[CellRecord] = []
        self._frontier: list[_Edge] = []
        self.walk_start = start
        cur = self._new_node(start)
        cur_word = start
        for kind, step in legs:
            if kind == "V":
                if step.source != cur_word:
                    raise SourceMismatch("vertical leg does not chain")
                nxt = self._new_node(step.target)
                e = _Edge("V", step, cur, nxt)
                cur_word = step.target
            elif kind == "H":
                if step.target != cur_word:
                    raise SourceMismatch("horizontal leg does not chain")
                nxt = self._new_node(step.source)
                e = _Edge("H", step, nxt, cur)
                cur_word = step.source
            else:
                raise ValueError(f"bad leg kind {kind!r}")
            cur = nxt
            self.edges.append(e)
            self._frontier.append(e)
        self.walk_end = cur_word

    def _new_node(self, w: Word) -> int:
        i = len(self.nodes)
        self.nodes[i] = w
        return i

    @property
    def frontier(self) -> tuple[_Edge, ...]:
        return tuple(self._frontier)

    def open_corners(self) -> list[tuple[int, RuleInstance, RuleInstance]]:
        """Positions where a horizontal step meets a diverging vertical one."""
        out = []
        f = self._frontier
        for i in range(len(f) - 1):
            if f[i].kind == "H" and f[i + 1].kind == "V":
                out.append((i, f[i].step, f[i + 1].step))
        return out

    @property
    def is_complete(self) -> bool:
        return not self.open_corners()

    def adjoin_at_corner(self, index: int, ed: ElementaryDiagram, tag: str, origin: str = "") -> None:
        """Glue `ed` at the open corner starting at frontier position `index`."""
        f = self._frontier
        if not (
            0 <= index < len(f) - 1 and f[index].kind == "H" and f[index + 1].kind == "V"
        ):
            raise CornerMismatch(f"no open corner at frontier position {index}")
        h, v = f[index], f[index + 1]
        if ed.top != h.step or ed.left != v.step:
            raise CornerMismatch(
                "diagram's top/left do not match the corner's steps"
            )
        y, z = h.dst, v.dst
        ventries: list[_Edge] = []
        hchain: list[_Edge] = []
        rsteps, bsteps = ed.right.steps, ed.bottom.steps
        cur = y
        for i, st in enumerate(rsteps):
            last = i == len(rsteps) - 1
            dst = z if (last and not bsteps) else self._new_node(st.target)
            ventries.append(_Edge("V", st, cur, dst))
            cur = dst
        sink_node = cur if rsteps else y
        cur = z
        for i, st in enumerate(bsteps):
            last = i == len(bsteps) - 1
            dst = sink_node if last else self._new_node(st.target)
            hchain.append(_Edge("H", st, cur, dst))
            cur = dst
        if not rsteps and not bsteps:
            self.edges.append(_Edge("H", None, y, z))
        new_entries = ventries + list(reversed(hchain))
        self.edges.extend(ventries)
        self.edges.extend(hchain)
        self._frontier[index : index + 2] = new_entries
        self.cells.append(CellRecord(ed=ed, tag=tag, origin=origin))

    def boundary(self) -> Boundary:
        """The convergence paths of a complete tiling."""
        corners = self.open_corners()
        if corners:
            raise ValueError(f"tiling still has {len(corners)} open corner(s)")
        vsteps = [e.step for e in self._frontier if e.kind == "V"]
        hsteps = [e.step for e in self._frontier if e.kind == "H"]
        from_start = Path(self.walk_start, tuple(vsteps))
        from_end = Path(self.walk_end, tuple(reversed(hsteps)))
        if from_start.end != from_end.end:
            raise SourceMismatch("boundary paths fail to converge")
        return Boundary(
            sink=from_start.end, from_start=from_start, from_end=from_end
        )


def tiling_from_peak(n: int, top: Path, left: Path) -> Tiling:
    """Seed a tiling from a peak: two co-initial forward paths."""
    if top.start != left.start:
        raise SourceMismatch("peak paths must share their start word")
    legs = [("H", s) for s in reversed(top.steps)] + [("V", s) for s in left.steps]
    return Tiling(n, top.end, legs)


def tiling_from_zigzag(n: int, zig: Zigzag) -> Tiling:
    """Seed a tiling whose frontier is the given zigzag."""
    legs = [("H" if d == "<" else "V", s) for d, s in zig.legs]
    return Tiling(n, zig.start, legs)


CellProvider = Callable[
    [RuleInstance, RuleInstance], tuple[ElementaryDiagram, str, str] | None
]


def complete_tiling(t: Tiling, provider: CellProvider, fuel: int = 10000) -> Tiling:
    """Adjoin provider cells at the first open corner until none remain."""
    while True:
        corners = t.open_corners()
        if not corners:
            return t
        if fuel <= 0:
            raise FuelExhausted(
                f"{len(corners)} open corner(s) remain with no fuel left"
            )
        index, h, v = corners[0]
        got = provider(h, v)
        if got is None:
            raise NoCellForCorner(f"no cell for corner ({h}, {v})")
        ed, tag, origin = got
        t.adjoin_at_corner(index, ed, tag, origin)
        fuel -= 1


def complete_peak(
    sys: SrsSystem,
    provider: CellProvider,
    top: Path,
    left: Path,
    fuel: int = 10000,
) -> Tiling:
    """Tile the peak formed by two co-initial paths."""
    return complete_tiling(tiling_from_peak(sys.n, top, left), provider, fuel)


@dataclass(frozen=True)
class ZigzagCompletion:
    common: Word
    from_start: Path
    from_end: Path
    tiling: Tiling


def complete_zigzag(
    sys: SrsSystem,
    provider: CellProvider,
    zig: Zigzag,
    fuel: int = 10000,
) -> ZigzagCompletion:
    """Tile a zigzag down to a common reduct of its two endpoints."""
    t = complete_tiling(tiling_from_zigzag(sys.n, zig), provider, fuel)
    b = t.boundary()
    return ZigzagCompletion(
        common=b.sink, from_start=b.from_start, from_end=b.from_end, tiling=t
    )


# --- cell providers -------------------------------------------------------


def _relative_pair(h: RuleInstance, v: RuleInstance):
    """Strip the common outer context of two overlapping co-initial steps.

    Returns (bare critical pair, left context, right context) with h's
    stripped copy first, or None when the redexes do not interfere.
    """
    from .critical import CriticalPair

    w = h.source
    ah, bh = len(h.left), len(h.left) + len(h.rule.lhs)
    av, bv = len(v.left), len(v.left) + len(v.rule.lhs)
    if bh <= av or bv <= ah:
        return None
    lo, hi = min(ah, av), max(bh, bv)
    u_ctx, v_ctx = w[:lo], w[hi:]
    h_rel = RuleInstance(h.left[lo:], h.rule, h.right[: len(h.right) - len(v_ctx)])
    v_rel = RuleInstance(v.left[lo:], v.rule, v.right[: len(v.right) - len(v_ctx)])
    strictly_inside = (ah < av and bv < bh) or (av < ah and bh < bv)
    kind = "inclusion" if strictly_inside else "overlap"
    pair = CriticalPair(kind=kind, first=h_rel, second=v_rel, peak=w[lo:hi])
    return pair, u_ctx, v_ctx


def _natural_cell(
    h: RuleInstance, v: RuleInstance
) -> tuple[ElementaryDiagram, str, str] | None:
    """A whiskered (possibly transposed) commuting square for disjoint redexes."""
    ah, bh = len(h.left), len(h.left) + len(h.rule.lhs)
    av, bv = len(v.left), len(v.left) + len(v.rule.lhs)
    w = h.source
    if bh <= av:
        mid = w[bh:av]
        ed = whisker_ed(natural_ed(h.rule, mid, v.rule), w[:ah], w[bv:])
        tag = "natural"
    elif bv <= ah:
        mid = w[bv:ah]
        ed = transpose_ed(natural_ed(v.rule, mid, h.rule))
        ed = whisker_ed(ed, w[:av], w[bh:])
        tag = "transposed"
    else:
        return None
    if ed.top != h or ed.left != v:  # pragma: no cover - construction invariant
        raise CornerMismatch("natural square construction mismatch")
    return ed, tag, f"natural({h.rule.name},{v.rule.name})"


def _degenerate_cell(h: RuleInstance) -> tuple[ElementaryDiagram, str, str]:
    ed = ElementaryDiagram(
        top=h, left=h, right=Path(h.target), bottom=Path(h.target)
    )
    return ed, "improper", "repeated-step"


def bfs_join_chooser(sys: SrsSystem, bound: int = 16):
    """Critical-cell chooser that joins pairs by breadth-first search."""
    from .critical import build_critical_ed, join_pair

    def choose(pair) -> tuple[ElementaryDiagram, bool] | None:
        j = join_pair(pair, sys, bound)
        if j is None:
            return None
        return build_critical_ed(pair, j), False
    return choose


def standard_provider(sys: SrsSystem, chooser=None) -> CellProvider:
    """Cells for every corner: repeated steps close improperly, disjoint
    redexes commute naturally, overlapping redexes defer to a critical-pair
    chooser (BFS joining by default) and are whiskered back into context."""
    if chooser is None:
        chooser = bfs_join_chooser(sys)

    def provide(h: RuleInstance, v: RuleInstance):
        if h.source != v.source:
            raise CornerMismatch("corner steps must share their source")
        if h == v:
            return _degenerate_cell(h)
        nat = _natural_cell(h, v)
        if nat is not None:
            return nat
        rel = _relative_pair(h, v)
        if rel is None:  # pragma: no cover - one of the cases above applies
            return None
        pair, u_ctx, v_ctx = rel
        got = chooser(pair)
        if got is None:
            return None
        ed, transposed = got
        ed = whisker_ed(ed, u_ctx, v_ctx)
        if ed.top != h or ed.left != v:
            raise CornerMismatch("critical cell does not fit its corner")
        if transposed:
            tag = "transposed"
        elif u_ctx or v_ctx:
            tag = "whiskered"
        else:
            tag = "critical"
        return ed, tag, f"critical({pair.first.rule.name},{pair.second.rule.name})"

    return provide


# --- path equivalence modulo a cell family --------------------------------


class PathVerdict(Enum):
    EQUIVALENT = "equivalent"
    UNKNOWN = "unknown"


class NotParallel(ValueError):
    """The two paths do not share both endpoints."""


@dataclass(frozen=True)
class CellFamily:
    """Named parallel path pairs, optionally taken together with all
    commuting squares of disjoint redexes."""

    name: str
    members: tuple[tuple[Path, Path], ...]
    with_naturals: bool = False
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for a, b in self.members:
            if a.start != b.start or a.end != b.end:
                raise NotParallel(
                    f"family {self.name}: member paths are not parallel"
                )
        if self.labels and len(self.labels) != len(self.members):
            raise ValueError("labels must match members")


def _word_at(start: Word, steps: tuple[RuleInstance, ...], i: int) -> Word:
    return steps[i - 1].target if i > 0 else start


def _substitutions(
    start: Word, steps: tuple[RuleInstance, ...], frm: Path, to: Path
) -> Iterator[tuple[RuleInstance, ...]]:
    """All ways to replace a whiskered occurrence of `frm` by `to`."""
    k = len(frm.steps)
    base = frm.start
    for i in range(len(steps) - k + 1):
        w = _word_at(start, steps, i)
        for x in range(len(w) - len(base) + 1):
            if w[x : x + len(base)] != base:
                continue
            u, v = w[:x], w[x + len(base) :]
            if all(steps[i + t] == frm.steps[t].whisker(u, v) for t in range(k)):
                yield (
                    steps[:i]
                    + tuple(s.whisker(u, v) for s in to.steps)
                    + steps[i + k :]
                )


def _natural_swaps(
    start: Word, steps: tuple[RuleInstance, ...]
) -> Iterator[tuple[RuleInstance, ...]]:
    """Commute adjacent steps whose redexes do not touch."""
    for i in range(len(steps) - 1):
        s1, s2 = steps[i], steps[i + 1]
        a1 = len(s1.left)
        b1 = a1 + len(s1.rule.rhs)
        a2 = len(s2.left)
        b2 = a2 + len(s2.rule.lhs)
        if a2 >= b1:  # second redex right of the first rewrite
            mid = s2.left[len(s1.left) + len(s1.rule.rhs) :]
            first = RuleInstance(s1.left + s1.rule.lhs + mid, s2.rule, s2.right)
            second = RuleInstance(s1.left, s1.rule, mid + s2.rule.rhs + s2.right)
            yield steps[:i] + (first, second) + steps[i + 2 :]
        elif b2 <= a1:  # second redex left of the first rewrite
            mid = s1.left[b2:]
            first = RuleInstance(s2.left, s2.rule, mid + s1.rule.lhs + s1.right)
            second = RuleInstance(
                s2.left + s2.rule.rhs + mid, s1.rule, s1.right
            )
            yield steps[:i] + (first, second) + steps[i + 2 :]


def paths_equivalent_mod_cells(
    p: Path,
    q: Path,
    family: CellFamily,
    bound: int = 10000,
) -> PathVerdict:
    """Search for a chain of member substitutions turning p into q.

    Bidirectional breadth-first search over step sequences; `bound`
    limits the total number of explored states.  Equivalent is
    definitive; Unknown only means the budget ran out.
    """
    if p.start != q.start or p.end != q.end:
        raise NotParallel("paths must share start and end words")
    start = p.start
    if p.steps == q.steps:
        return PathVerdict.EQUIVALENT
    moves: list[tuple[Path, Path]] = []
    for a, b in family.members:
        moves.append((a, b))
        moves.append((b, a))

    def neighbours(steps: tuple[RuleInstance, ...]) -> Iterator[tuple[RuleInstance, ...]]:
        for frm, to in moves:
            yield from _substitutions(start, steps, frm, to)
        if family.with_naturals:
            yield from _natural_swaps(start, steps)

    seen_p: set[tuple] = {p.steps}
    seen_q: set[tuple] = {q.steps}
    frontier_p: list[tuple] = [p.steps]
    frontier_q: list[tuple] = [q.steps]
    budget = bound
    while frontier_p and frontier_q and budget > 0:
        if len(frontier_p) <= len(frontier_q):
            frontier, seen, other = frontier_p, seen_p, seen_q
            which = "p"
        else:
            frontier, seen, other = frontier_q, seen_q, seen_p
            which = "q"
        new: list[tuple] = []
        for state in frontier:
            for nxt in neighbours(state):
                if nxt in seen:
                    continue
                if nxt in other:
                    return PathVerdict.EQUIVALENT
                seen.add(nxt)
                new.append(nxt)
                budget -= 1
                if budget <= 0:
                    break
            if budget <= 0:
                break
        if which == "p":
            frontier_p = new
        else:
            frontier_q = new
    return PathVerdict.UNKNOWN


# --- graphviz export ------------------------------------------------------


def export_dot(t: Tiling) -> str:
    """Render a tiling as graphviz dot.

    Solid edges carry their step's "left:rule:right" label; dashed edges
    mark identified words from improper closures.  Rank groups keep each
    row of the diagram on one level so the drawing reads top-to-bottom,
    left-to-right like the underlying rectangle.
    """
    n = t.n
    indeg: dict[int, list[_Edge]] = {i: [] for i in t.nodes}
    for e in t.edges:
        indeg[e.dst].append(e)
    row: dict[int, int] = {}
    col: dict[int, int] = {}
    expanding: set[int] = set()
    for start in t.nodes:
        stack = [start]
        while stack:
            v = stack[-1]
            if v in row:
                stack.pop()
                continue
            if v not in expanding:
                expanding.add(v)
                deps = [
                    e.src
                    for e in indeg[v]
                    if e.src not in row and e.src not in expanding
                ]
                if deps:
                    stack.extend(deps)
                    continue
            best_r = best_c = 0
            for e in indeg[v]:
                if e.src not in row:
                    continue
                r, c = row[e.src], col[e.src]
                if e.step is not None:
                    if e.kind == "V":
                        r += 1
                    else:
                        c += 1
                best_r, best_c = max(best_r, r), max(best_c, c)
            row[v], col[v] = best_r, best_c
            stack.pop()
    lines = ["digraph tiling {", "  rankdir=TB;", '  node [shape=box, fontname="monospace"];']
    for v in sorted(t.nodes):
        lines.append(f'  n{v} [label="{word_to_str(t.nodes[v], n)}"];')
    for e in t.edges:
        if e.step is None:
            lines.append(f"  n{e.src} -> n{e.dst} [style=dashed];")
        else:
            lines.append(
                f'  n{e.src} -> n{e.dst} [label="{e.step.render(n)}"];'
            )
    by_row: dict[int, list[int]] = {}
    for v in sorted(t.nodes):
        by_row.setdefault(row[v], []).append(v)
    for r in sorted(by_row):
        members = "; ".join(f"n{v}" for v in by_row[r])
        lines.append(f"  {{rank=same; {members};}}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def reduction_graph_dot(sys: SrsSystem, words: Iterable[Word]) -> str:
    """Render the one-step reduction graph spanned by the given words."""
    ws = sorted(set(words), key=lambda w: (len(w), w))
    index = {w: i for i, w in enumerate(ws)}
    lines = ["digraph reduction {", '  node [shape=box, fontname="monospace"];']
    for w in ws:
        lines.append(f'  n{index[w]} [label="{sys.fmt(w)}"];')
    for w in ws:
        for inst in find_redexes(w, sys):
            if inst.target in index:
                lines.append(
                    f'  n{index[w]} -> n{index[inst.target]} '
                    f'[label="{inst.render(sys.n)}"];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
