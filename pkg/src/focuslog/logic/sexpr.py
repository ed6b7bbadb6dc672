"""S-expression reader and the lossless term <-> sexpr mapping.

Grammar::

    (var X) (const c) (lam X B) (app F A) (and L R) (or L R) (implies L R)
    (neg B) (eq L R) (lt L R) (exists X B) (forall X B) (iota X R B)
    (card S n) (pred name A1 ... Ak)
"""

from __future__ import annotations

import re

from ..errors import SexprError
from .terms import (
    And, App, Card, Const, Eq, Exists, Forall, Implies, Iota, Lam, Less, Neg,
    Or, Pred, Term, Var,
)

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def read_all(text: str) -> list:
    """Read every s-expression in ``text`` into nested lists of atoms."""
    stack: list[list] = [[]]
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SexprError(f"unreadable input at offset {pos}")
        pos = m.end()
        if m.group(1):
            stack.append([])
        elif m.group(2):
            if len(stack) == 1:
                raise SexprError(f"unbalanced ')' at offset {m.start(2)}")
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(m.group(3))
    if len(stack) != 1:
        raise SexprError("unbalanced '(': input ended inside a list")
    return stack[0]


def read(text: str):
    items = read_all(text)
    if len(items) != 1:
        raise SexprError(f"expected one s-expression, found {len(items)}")
    return items[0]


def _atom(x, what: str) -> str:
    if not isinstance(x, str):
        raise SexprError(f"expected {what}, found a list")
    return x


_BINARY = {"and": And, "or": Or, "implies": Implies, "eq": Eq, "lt": Less, "app": App}
_QUANT = {"lam": Lam, "exists": Exists, "forall": Forall}
_BINARY_TAGS = {cls: tag for tag, cls in _BINARY.items()}
_QUANT_TAGS = {cls: tag for tag, cls in _QUANT.items()}


def to_term(s) -> Term:
    """Convert a read s-expression into a :data:`Term`."""
    if isinstance(s, str) or not s:
        raise SexprError(f"expected a tagged list, found {s!r}")
    tag, *rest = s
    tag = _atom(tag, "a tag")

    def arity(n: int) -> None:
        if len(rest) != n:
            raise SexprError(f"({tag} ...) takes {n} arguments, got {len(rest)}")

    if tag == "var":
        arity(1)
        return Var(_atom(rest[0], "a variable name"))
    if tag == "const":
        arity(1)
        return Const(_atom(rest[0], "a constant name"))
    if tag in _BINARY:
        arity(2)
        return _BINARY[tag](to_term(rest[0]), to_term(rest[1]))
    if tag in _QUANT:
        arity(2)
        return _QUANT[tag](_atom(rest[0], "a variable name"), to_term(rest[1]))
    if tag == "neg":
        arity(1)
        return Neg(to_term(rest[0]))
    if tag == "iota":
        arity(3)
        return Iota(_atom(rest[0], "a variable name"), to_term(rest[1]), to_term(rest[2]))
    if tag == "card":
        arity(2)
        n = _atom(rest[1], "a cardinality")
        if not n.isdigit():
            raise SexprError(f"cardinality must be a natural number, got {n!r}")
        return Card(to_term(rest[0]), int(n))
    if tag == "pred":
        if not rest:
            raise SexprError("(pred ...) needs a name")
        return Pred(_atom(rest[0], "a predicate name"), [to_term(a) for a in rest[1:]])
    raise SexprError(f"unknown term tag {tag!r}")


def parse_sexpr(text: str) -> Term:
    return to_term(read(text))


def to_sexpr(t: Term) -> str:
    match t:
        case Var(name):
            return f"(var {name})"
        case Const(name):
            return f"(const {name})"
        case Neg(b):
            return f"(neg {to_sexpr(b)})"
        case Iota(x, r, b):
            return f"(iota {x} {to_sexpr(r)} {to_sexpr(b)})"
        case Card(s, n):
            return f"(card {to_sexpr(s)} {n})"
        case Pred(name, args):
            return "(pred " + " ".join([name, *map(to_sexpr, args)]) + ")"
    cls = type(t)
    if cls in _QUANT_TAGS:
        return f"({_QUANT_TAGS[cls]} {t.var} {to_sexpr(t.body)})"
    if cls in _BINARY_TAGS:
        l, r = (t.fun, t.arg) if cls is App else (t.left, t.right)
        return f"({_BINARY_TAGS[cls]} {to_sexpr(l)} {to_sexpr(r)})"
    raise TypeError(f"not a term: {t!r}")
