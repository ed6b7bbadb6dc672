"""Rendering terms as plain text, LaTeX math, or s-expressions.

Plain and LaTeX output share one layout: a binder takes the next delimited
unit as its scope, so ``λA car(A)`` and ``∃D(R ∧ W)`` are both unambiguous,
application is a left-associative infix dot and conjunction chains are
printed flat.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .sexpr import to_sexpr
from .terms import (
    And, App, Card, Const, Eq, Exists, Forall, Implies, Iota, Lam, Less, Neg,
    Or, Pred, Term, Var,
)

FORMATS = ("plain", "latex", "sexpr")


@dataclass(frozen=True)
class _Style:
    lam: str
    exists: str
    forall: str
    iota: str
    colon: str
    and_: str
    or_: str
    implies: str
    neg: str
    dot: str
    lt: str
    eq: str
    space: str

    def name(self, s: str) -> str:
        return s


class _Latex(_Style):
    def name(self, s: str) -> str:
        m = re.fullmatch(r"(.*?)_(\d+)", s)
        if m:
            return f"{self.name(m.group(1))}_{{{m.group(2)}}}"
        s = s.replace("_", r"\_")
        return s if len(s.rstrip("'")) <= 1 else rf"\mathit{{{s}}}"


PLAIN = _Style(
    lam="λ", exists="∃", forall="∀", iota="ι", colon=":",
    and_=" ∧ ", or_=" ∨ ", implies=" → ", neg="¬", dot=".",
    lt=" < ", eq=" = ", space=" ",
)
LATEX = _Latex(
    lam=r"\lambda ", exists=r"\exists ", forall=r"\forall ", iota=r"\iota ",
    colon="{:}", and_=r" \wedge ", or_=r" \vee ", implies=r" \rightarrow ",
    neg=r"\neg ", dot=" . ", lt=" < ", eq=" = ", space=r"\, ",
)


def pretty(t: Term, format: str = "plain") -> str:
    if format == "plain":
        return _full(t, PLAIN)
    if format == "latex":
        return _full(t, LATEX)
    if format == "sexpr":
        return to_sexpr(t)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def _delimited(t: Term) -> bool:
    return isinstance(t, (Var, Const, Pred, Card, Lam, Exists, Forall, Iota))


def _unit(t: Term, st: _Style) -> str:
    """Render ``t`` so that it can stand as an operand anywhere."""
    if _delimited(t):
        return _full(t, st)
    return "(" + _full(t, st) + ")"


def _scope(body: Term, st: _Style) -> str:
    if _delimited(body):
        return st.space + _full(body, st)
    return "(" + _full(body, st) + ")"


def _operand(t: Term, st: _Style) -> str:
    # operands of the logical connectives
    if isinstance(t, (And, Or, Implies)):
        return "(" + _full(t, st) + ")"
    return _full(t, st)


def _full(t: Term, st: _Style) -> str:
    match t:
        case Var(name) | Const(name):
            return st.name(name)
        case Pred(name, args):
            return st.name(name) + "(" + ", ".join(_full(a, st) for a in args) + ")"
        case Card(s, n):
            return f"|{_full(s, st)}|={n}"
        case Lam(x, b):
            return st.lam + st.name(x) + _scope(b, st)
        case Exists(x, b):
            return st.exists + st.name(x) + _scope(b, st)
        case Forall(x, b):
            return st.forall + st.name(x) + _scope(b, st)
        case Iota(x, r, b):
            return st.iota + st.name(x) + st.colon + "(" + _full(r, st) + ")" + _scope(b, st)
        case And():
            parts = []
            while isinstance(t, And):
                parts.append(_operand(t.left, st))
                t = t.right
            parts.append(_operand(t, st))
            return st.and_.join(parts)
        case Or(l, r):
            return _operand(l, st) + st.or_ + _operand(r, st)
        case Implies(l, r):
            return _operand(l, st) + st.implies + _operand(r, st)
        case Neg(b):
            return st.neg + _unit(b, st)
        case Eq(l, r):
            return _side(l, st) + st.eq + _side(r, st)
        case Less(l, r):
            return _side(l, st) + st.lt + _side(r, st)
        case App(f, a):
            if isinstance(f, App):
                head = _full(f, st)
            elif isinstance(f, (Lam, Exists, Forall, Iota)):
                head = "(" + _full(f, st) + ")"
            else:
                head = _unit(f, st)
            return head + st.dot + _unit(a, st)
    raise TypeError(f"not a term: {t!r}")


def _side(t: Term, st: _Style) -> str:
    return _full(t, st) if isinstance(t, App) else _unit(t, st)
