"""Lexicalized grammar: signs, the lexicon format, and head-dependent
combination with foot-feature propagation.

Lexicon files hold one record per line (a trailing backslash continues a
record; ``#`` starts a comment)::

    word | category slots | features | focusable | sem-sexpr | store-seeds

A slot is written ``>NP=VP`` (a right dependent NP, after which the head is a
VP) or ``<NP=S``.  Optional brackets give features the dependent must have,
``>VP[vform=base,focus=+]``; ``focus=+``/``focus=-`` demand or forbid a
focussed dependent.  A result of ``*`` makes the head an adjunct: the result
takes its category, features and open slots from the dependent.  A trailing
``^`` marks a raise-dependent slot (the dependent's semantics applies to the
head's).  The feature ``op=only`` names an operator that consumes the focus.

For a focusable word the sem is written ``(app (lam FOC TEMPLATE) CORE)``:
CORE is the property that focus extracts and ``FOC`` may also appear in the
store seeds.  A bare sem is taken to be the core itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from .errors import FootClash, LexiconError, NotFocusable, SexprError
from .logic import (
    App, Lam, Term, Var, beta_reduce, canonical_key, free_vars, fresh,
    is_beta_normal, read_all, substitute, to_term,
)
from .scoping import StoreEntry, abstraction, entry_from_sexpr

CATEGORIES = ("S", "NP", "VP", "V", "Det", "N", "Pron", "Adv", "Neg", "Aux")
OPERATORS = ("only", "not", "neg")

Features = tuple[tuple[str, str], ...]


def _features(d: dict[str, str]) -> Features:
    return tuple(sorted(d.items()))


@dataclass(frozen=True)
class Slot:
    direction: str
    category: str
    require: Features = ()
    focus: bool | None = None
    result: str | None = None
    result_features: Features = ()
    raise_dependent: bool = False

    @property
    def adjunct(self) -> bool:
        return self.result == "*"

    def accepts(self, dep: Sign) -> bool:
        if dep.category != self.category:
            return False
        if any(dep.feature(k) != v for k, v in self.require):
            return False
        if self.focus is not None and (dep.focus is not None) != self.focus:
            return False
        return self.adjunct or not dep.subcat

    def __str__(self) -> str:
        req = [f"{k}={v}" for k, v in self.require]
        if self.focus is not None:
            req.append("focus=" + ("+" if self.focus else "-"))
        out = (">" if self.direction == "right" else "<") + self.category
        if req:
            out += "[" + ",".join(req) + "]"
        if self.result is not None:
            out += "=" + self.result
            if self.result_features:
                out += "[" + ",".join(f"{k}={v}" for k, v in self.result_features) + "]"
        return out + ("^" if self.raise_dependent else "")


@dataclass(frozen=True)
class FocusValue:
    """The focussed item, and the hole variable it left behind."""

    item: Sign
    var: str

    def key(self):
        return (self.item.word, canonical_key(self.item.sem), self.var)


@dataclass(frozen=True)
class Sign:
    category: str
    sem: Term
    features: Features = ()
    subcat: tuple[Slot, ...] = ()
    store: tuple[StoreEntry, ...] = ()
    focus: FocusValue | None = None
    slash: Sign | None = None
    operator: str | None = None
    word: str | None = None
    span: tuple[int, int] | None = None
    trace: str = field(default="", compare=False)

    def feature(self, name: str) -> str | None:
        return dict(self.features).get(name)

    @property
    def saturated(self) -> bool:
        return not self.subcat

    def key(self):
        """Identity used for chart deduplication (semantics up to alpha)."""
        return (
            self.category,
            self.features,
            self.subcat,
            canonical_key(self.sem),
            tuple(e.key() for e in self.store),
            None if self.focus is None else self.focus.key(),
            None if self.slash is None else self.slash.key(),
            self.operator,
        )


@dataclass(frozen=True)
class LexEntry:
    word: str
    sign: Sign
    focusable: bool = False
    core: Term | None = None
    core_var: str | None = None
    template: Sign | None = None
    focussed: bool = False
    line: int | None = None


class Lexicon:
    """Word -> entries map with case-insensitive lookup."""

    def __init__(self, entries=()):
        self._entries: dict[str, list[LexEntry]] = {}
        for e in entries:
            self._entries.setdefault(e.word.lower(), []).append(e)

    def lookup(self, word: str) -> list[LexEntry]:
        return list(self._entries.get(word.lower(), ()))

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def words(self) -> list[str]:
        return sorted(self._entries)

    def entries(self) -> list[LexEntry]:
        return [e for w in self.words() for e in self._entries[w]]


# -- loading ---------------------------------------------------------------

_SLOT = re.compile(
    r"([<>])([A-Za-z]+)(?:\[([^\]]*)\])?(?:=(\*|[A-Za-z]+)(?:\[([^\]]*)\])?)?(\^)?"
)
_TRUE = {"yes", "true", "+", "1"}
_FALSE = {"no", "false", "-", "0", ""}


def _parse_feats(text: str | None, line: int) -> dict[str, str]:
    out: dict[str, str] = {}
    if not text or text.strip() in ("", "-"):
        return out
    for item in text.split(","):
        k, sep, v = item.strip().partition("=")
        if not sep or not k or not v:
            raise LexiconError(f"bad feature {item.strip()!r}", line)
        out[k.strip()] = v.strip()
    return out


def parse_slot(text: str, line: int = 0) -> Slot:
    m = _SLOT.fullmatch(text)
    if m is None:
        raise LexiconError(f"bad subcat slot {text!r}", line)
    direction, cat, req, result, rfeats, raised = m.groups()
    need = _parse_feats(req, line)
    focus = need.pop("focus", None)
    if focus not in (None, "+", "-"):
        raise LexiconError(f"focus requirement must be + or -, got {focus!r}", line)
    return Slot(
        direction="right" if direction == ">" else "left",
        category=cat,
        require=_features(need),
        focus=None if focus is None else focus == "+",
        result=result,
        result_features=_features(_parse_feats(rfeats, line)),
        raise_dependent=bool(raised),
    )


def _records(source: str):
    buf, start = "", None
    for n, raw in enumerate(source.splitlines(), 1):
        text = raw.split("#", 1)[0].rstrip()
        if start is None:
            if not text.strip():
                continue
            start = n
        if text.endswith("\\"):
            buf += text[:-1] + " "
            continue
        buf += text
        yield start, buf
        buf, start = "", None
    if start is not None:
        raise LexiconError("file ends inside a continued record", start)


def slot_vars(sign: Sign) -> list[str]:
    """Variables of the sem's leading lambdas, one per non-raising slot."""
    out = []
    t = sign.sem
    for slot in sign.subcat:
        if slot.raise_dependent:
            continue
        if not isinstance(t, Lam):
            break
        out.append(t.var)
        t = t.body
    return out


def _check_dangling(sign: Sign, word: str, line: int) -> None:
    bound = {e.var for e in sign.store}
    loose = free_vars(sign.sem) - bound - {"now"}
    if loose:
        raise LexiconError(f"{word!r}: sem has dangling variables {sorted(loose)}", line)
    allowed = bound | set(slot_vars(sign)) | {"now"}
    for e in sign.store:
        if e.restriction is not None:
            loose = free_vars(e.restriction) - allowed
            if loose:
                raise LexiconError(
                    f"{word!r}: store seed {e.var} has dangling variables {sorted(loose)}",
                    line,
                )


def _fill_core(template: Sign, var: str, value: Term) -> Sign:
    return replace(
        template,
        sem=beta_reduce(substitute(template.sem, var, value)),
        store=tuple(e.substitute(var, value) for e in template.store),
    )


def parse_entry(line: int, record: str) -> LexEntry:
    fields = [f.strip() for f in record.split("|")]
    if len(fields) != 6:
        raise LexiconError(f"expected 6 '|'-separated fields, found {len(fields)}", line)
    word, cat_field, feat_field, focus_field, sem_field, store_field = fields
    if not word or " " in word:
        raise LexiconError(f"bad word {word!r}", line)
    cat_parts = cat_field.split()
    if not cat_parts:
        raise LexiconError("missing category", line)
    category, *slot_texts = cat_parts
    if category not in CATEGORIES:
        raise LexiconError(f"unknown category {category!r}", line)
    subcat = tuple(parse_slot(s, line) for s in slot_texts)
    feats = _parse_feats(feat_field, line)
    operator = feats.pop("op", None)
    if operator is not None and operator not in OPERATORS:
        raise LexiconError(f"unknown operator {operator!r}", line)
    flag = focus_field.lower()
    if flag not in _TRUE | _FALSE:
        raise LexiconError(f"focusable must be yes or no, got {focus_field!r}", line)
    focusable = flag in _TRUE
    try:
        sem_items = read_all(sem_field)
        if len(sem_items) != 1:
            raise SexprError("sem field must hold exactly one term")
        sem = to_term(sem_items[0])
        store = tuple(entry_from_sexpr(s) for s in read_all(store_field))
    except SexprError as exc:
        raise LexiconError(str(exc), line) from None

    template = Sign(
        category=category,
        sem=sem,
        features=_features(feats),
        subcat=subcat,
        store=store,
        operator=operator,
        word=word,
        trace=word,
    )
    if not focusable:
        sign = replace(template, sem=beta_reduce(sem))
        _check_dangling(sign, word, line)
        return LexEntry(word, sign, line=line)

    if isinstance(sem, App) and isinstance(sem.fun, Lam):
        core_var, body, core = sem.fun.var, sem.fun.body, sem.arg
    else:
        core_var, body, core = "FOC", Var("FOC"), sem
        if any(e.var == "FOC" for e in store):
            raise LexiconError("implicit focus frame clashes with store variable FOC", line)
    if free_vars(core):
        raise LexiconError(f"{word!r}: focusable core must be closed", line)
    if not isinstance(beta_reduce(core), Lam):
        raise LexiconError(f"{word!r}: focusable core must be a property (a lambda)", line)
    template = replace(template, sem=body)
    sign = _fill_core(template, core_var, core)
    _check_dangling(sign, word, line)
    return LexEntry(
        word, sign, focusable=True, core=beta_reduce(core), core_var=core_var,
        template=template, line=line,
    )


def load_lexicon(source: str) -> Lexicon:
    """Parse lexicon text; errors carry the offending line number."""
    return Lexicon(parse_entry(n, rec) for n, rec in _records(source))


def load_lexicon_file(path: str | Path) -> Lexicon:
    return load_lexicon(Path(path).read_text(encoding="utf-8"))


def bundled_lexicon() -> Lexicon:
    text = resources.files("focuslog").joinpath("data/fragment.lex").read_text("utf-8")
    return load_lexicon(text)


# -- focus and instantiation -----------------------------------------------


def focus_mark(entry: LexEntry) -> LexEntry:
    """Variant of ``entry`` whose core property is replaced by a hole.

    The hole is bound by an abstraction entry of maximal scope, and the
    original property travels up the tree in the ``focus`` feature.
    """
    if not entry.focusable or entry.template is None:
        raise NotFocusable(f"{entry.word!r} cannot carry focus")
    hole = fresh("X")
    marked = _fill_core(entry.template, entry.core_var, Var(hole))
    item = replace(entry.sign, sem=entry.core, store=(), subcat=(), trace=entry.word)
    sign = replace(
        marked,
        store=marked.store + (abstraction(hole),),
        focus=FocusValue(item, hole),
        trace=f"*{entry.word}*",
    )
    return replace(entry, sign=sign, focusable=False, focussed=True)


def instantiate(sign: Sign, span: tuple[int, int] | None = None) -> Sign:
    """Give a lexical sign's store and slot variables fresh names."""
    slots = slot_vars(sign)
    names = sorted({e.var for e in sign.store} | set(slots))
    mapping = {n: fresh(n) for n in names}
    body = sign.sem
    for _ in slots:
        body = body.body
    for old, new in mapping.items():
        body = substitute(body, old, Var(new))
    for v in reversed(slots):
        body = Lam(mapping[v], body)
    focus = sign.focus
    if focus is not None:
        focus = FocusValue(focus.item, mapping.get(focus.var, focus.var))
    return replace(
        sign,
        sem=body,
        store=tuple(e.rename(mapping) for e in sign.store),
        focus=focus,
        span=span,
    )


# -- combination -----------------------------------------------------------


def next_slot(sign: Sign) -> Slot | None:
    return sign.subcat[0] if sign.subcat else None


def combine(head: Sign, dep: Sign, direction: str) -> Sign | None:
    """Fill the head's next slot with ``dep``.

    Returns ``None`` when the slot does not apply; raises :class:`FootClash`
    when both daughters carry a focus (or a slash, or an operator).
    """
    slot = next_slot(head)
    if slot is None or slot.direction != direction or not slot.accepts(dep):
        return None
    if head.focus is not None and dep.focus is not None:
        raise FootClash("both daughters carry focus")
    if head.slash is not None and dep.slash is not None:
        raise FootClash("both daughters carry slash")
    if head.operator is not None and dep.operator is not None:
        raise FootClash("two focus operators in one clause")

    if slot.raise_dependent:
        sem = beta_reduce(App(dep.sem, head.sem))
        head_store = head.store
    else:
        if not isinstance(head.sem, Lam):
            raise LexiconError(f"head {head.word or head.category!r} sem is not a function")
        sem = beta_reduce(App(head.sem, dep.sem))
        var = head.sem.var
        head_store = tuple(e.substitute(var, dep.sem) for e in head.store)

    if slot.adjunct:
        feats = dict(dep.features)
        feats.update(slot.result_features)
        category, subcat = dep.category, dep.subcat
    else:
        feats = dict(head.features)
        feats.update(slot.result_features)
        category, subcat = slot.result or head.category, head.subcat[1:]

    left, right = (head, dep) if direction == "right" else (dep, head)
    span = None
    if left.span is not None and right.span is not None:
        span = (left.span[0], right.span[1])
    result = Sign(
        category=category,
        sem=sem,
        features=_features(feats),
        subcat=subcat,
        store=head_store + dep.store,
        focus=head.focus or dep.focus,
        slash=head.slash or dep.slash,
        operator=head.operator or dep.operator,
        word=None,
        span=span,
        trace=f"[{category} {left.trace} {right.trace}]",
    )
    if not is_beta_normal(sem):
        raise LexiconError(f"combining {left.trace} and {right.trace} left a redex")
    return result
