"""Bi-directional head-driven chart parser, plus an exhaustive oracle.

Every edge is a head looking for the dependent its next slot asks for, on the
left or the right, and every edge is also a candidate dependent for its
neighbours.  Focus markers (``*word*``) are stripped during tokenization and
the marked words get their focussed lexical entries.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field

from .errors import FootClash, NoParse, NotFocusable, UnknownWord
from .focus import Analysis, analyses
from .grammar import Lexicon, Sign, combine, focus_mark, instantiate, next_slot
from .logic import alpha_equal

MAX_ORACLE_TOKENS = 8


def tokenize(sentence: str) -> tuple[list[str], list[int]]:
    """Split on whitespace; return the bare words and the focussed positions."""
    words, marks = [], []
    for i, tok in enumerate(sentence.split()):
        if len(tok) > 2 and tok.startswith("*") and tok.endswith("*"):
            marks.append(i)
            tok = tok[1:-1]
        if "*" in tok:
            raise ValueError(f"malformed focus marker in {tok!r}")
        words.append(tok)
    return words, marks


def _prepare(tokens, lexicon: Lexicon) -> tuple[list[str], list[list[Sign]]]:
    if isinstance(tokens, str):
        tokens = tokens.split()
    words, marks = tokenize(" ".join(tokens))
    if not words:
        raise ValueError("nothing to parse")
    lexical = []
    for i, w in enumerate(words):
        entries = lexicon.lookup(w)
        if not entries:
            raise UnknownWord(w)
        if i in marks:
            entries = [focus_mark(e) for e in entries if e.focusable]
            if not entries:
                raise NotFocusable(f"{w!r} cannot carry focus")
        lexical.append([instantiate(e.sign, (i, i + 1)) for e in entries])
    return words, lexical


@dataclass(frozen=True)
class Edge:
    start: int
    end: int
    sign: Sign

    @property
    def pending_left(self):
        return tuple(s for s in self.sign.subcat if s.direction == "left")

    @property
    def pending_right(self):
        return tuple(s for s in self.sign.subcat if s.direction == "right")

    @property
    def is_complete(self) -> bool:
        return not self.sign.subcat

    def key(self):
        return (self.start, self.end, self.sign.key())


@dataclass
class Chart:
    n: int
    by_start: dict = field(default_factory=lambda: defaultdict(list))
    by_end: dict = field(default_factory=lambda: defaultdict(list))
    agenda: deque = field(default_factory=deque)
    seen: set = field(default_factory=set)
    clashes: list = field(default_factory=list)

    def propose(self, edge: Edge) -> None:
        k = edge.key()
        if k not in self.seen:
            self.seen.add(k)
            self.agenda.append(edge)

    def record(self, edge: Edge) -> None:
        self.by_start[edge.start].append(edge)
        self.by_end[edge.end].append(edge)

    def edges(self) -> list[Edge]:
        return [e for s in sorted(self.by_start) for e in self.by_start[s]]

    def spanning(self) -> list[Edge]:
        return [e for e in self.by_start[0] if e.end == self.n]

    def try_combine(self, head: Edge, dep: Edge, direction: str) -> None:
        try:
            sign = combine(head.sign, dep.sign, direction)
        except FootClash as exc:
            self.clashes.append(exc)
            return
        if sign is not None:
            start = min(head.start, dep.start)
            end = max(head.end, dep.end)
            self.propose(Edge(start, end, sign))


def build_chart(lexical: list[list[Sign]]) -> Chart:
    chart = Chart(len(lexical))
    for i, signs in enumerate(lexical):
        for s in signs:
            chart.propose(Edge(i, i + 1, s))
    while chart.agenda:
        e = chart.agenda.popleft()
        chart.record(e)
        slot = next_slot(e.sign)
        if slot is not None:
            partners = chart.by_start[e.end] if slot.direction == "right" else chart.by_end[e.start]
            for d in list(partners):
                if d is not e:
                    chart.try_combine(e, d, slot.direction)
        # e as the dependent of an already-recorded head
        for h in list(chart.by_end[e.start]):
            if h is not e and _wants(h, "right"):
                chart.try_combine(h, e, "right")
        for h in list(chart.by_start[e.end]):
            if h is not e and _wants(h, "left"):
                chart.try_combine(h, e, "left")
    return chart


def _wants(edge: Edge, direction: str) -> bool:
    slot = next_slot(edge.sign)
    return slot is not None and slot.direction == direction


def is_sentence(sign: Sign) -> bool:
    return sign.category == "S" and sign.saturated and sign.feature("vform") != "base"


def _finish(signs: list[Sign], clashes: list) -> list[Analysis]:
    out: list[Analysis] = []
    for s in signs:
        if is_sentence(s):
            out.extend(analyses(s))
    if not out:
        if clashes:
            raise clashes[0]
        raise NoParse("no analysis spans the whole input as a sentence")
    return out


def parse(tokens, lexicon: Lexicon) -> list[Analysis]:
    """All analyses of ``tokens`` (a list of words, or a sentence string)."""
    _, lexical = _prepare(tokens, lexicon)
    chart = build_chart(lexical)
    return _finish([e.sign for e in chart.spanning()], chart.clashes)


def parse_with_chart(tokens, lexicon: Lexicon) -> tuple[list[Analysis], Chart]:
    _, lexical = _prepare(tokens, lexicon)
    chart = build_chart(lexical)
    return _finish([e.sign for e in chart.spanning()], chart.clashes), chart


def parse_oracle(tokens, lexicon: Lexicon) -> list[Analysis]:
    """Exhaustive bottom-up enumeration over every split of every span."""
    words, lexical = _prepare(tokens, lexicon)
    n = len(words)
    if n > MAX_ORACLE_TOKENS:
        raise ValueError(f"the oracle handles at most {MAX_ORACLE_TOKENS} tokens")
    cells: dict[tuple[int, int], list[Sign]] = {}
    clashes: list = []
    for i in range(n):
        cells[i, i + 1] = list(lexical[i])
    for width in range(2, n + 1):
        for i in range(n - width + 1):
            k = i + width
            found: dict = {}
            for j in range(i + 1, k):
                for left in cells[i, j]:
                    for right in cells[j, k]:
                        for head, dep, d in ((left, right, "right"), (right, left, "left")):
                            try:
                                s = combine(head, dep, d)
                            except FootClash as exc:
                                clashes.append(exc)
                                continue
                            if s is not None:
                                found.setdefault(s.key(), s)
            cells[i, k] = list(found.values())
    return _finish(cells[0, n], clashes)


def same_analyses(a: list[Analysis], b: list[Analysis]) -> bool:
    """Set equality of two analysis lists, formulas compared up to alpha."""

    def covered(xs, ys):
        return all(
            any(alpha_equal(x.formula, y.formula) and _residue_eq(x, y) for y in ys)
            for x in xs
        )

    return covered(a, b) and covered(b, a)


def _residue_eq(x: Analysis, y: Analysis) -> bool:
    rx, ry = x.focus_residue, y.focus_residue
    if rx is None or ry is None:
        return rx is ry
    return rx.item.word == ry.item.word and alpha_equal(rx.item.sem, ry.item.sem)
