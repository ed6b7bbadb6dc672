"""Immutable terms of the interpretation language.

Every node is a frozen dataclass, so terms hash, compare structurally and can
be shared freely.  Structural equality is *not* alpha-equivalence; use
:func:`focuslog.logic.alpha_equal` for comparisons up to bound-variable names.
"""

from __future__ import annotations

import itertools
import re
import threading
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Lam:
    var: str
    body: Term


@dataclass(frozen=True)
class App:
    """Application, written with an infix dot (``F.A``)."""

    fun: Term
    arg: Term


@dataclass(frozen=True)
class And:
    left: Term
    right: Term


@dataclass(frozen=True)
class Or:
    left: Term
    right: Term


@dataclass(frozen=True)
class Implies:
    left: Term
    right: Term


@dataclass(frozen=True)
class Neg:
    body: Term


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Less:
    left: Term
    right: Term


@dataclass(frozen=True)
class Exists:
    var: str
    body: Term


@dataclass(frozen=True)
class Forall:
    var: str
    body: Term


@dataclass(frozen=True)
class Iota:
    """``ιX:(R) B`` -- B holds of the contextually unique X satisfying R."""

    var: str
    restriction: Term
    body: Term


@dataclass(frozen=True)
class Card:
    """``|S|=n``."""

    set_term: Term
    n: int


@dataclass(frozen=True)
class Pred:
    """Flat predicate application such as ``member(C, B)``."""

    name: str
    args: tuple[Term, ...]

    def __init__(self, name: str, args=()):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "args", tuple(args))


Term = Union[
    Var, Const, Lam, App, And, Or, Implies, Neg, Eq, Less,
    Exists, Forall, Iota, Card, Pred,
]

BINARY = (And, Or, Implies, Eq, Less)
BINDERS = (Lam, Exists, Forall)  # Iota handled separately: it has a restriction


def pred(name: str, *args: Term) -> Pred:
    return Pred(name, args)


def conj(*terms: Term) -> Term:
    """Right-nested conjunction of one or more terms."""
    if not terms:
        raise ValueError("conj() needs at least one term")
    out = terms[-1]
    for t in reversed(terms[:-1]):
        out = And(t, out)
    return out


def children(t: Term) -> tuple[Term, ...]:
    match t:
        case Var() | Const():
            return ()
        case Lam(_, b) | Exists(_, b) | Forall(_, b) | Neg(b):
            return (b,)
        case App(f, a):
            return (f, a)
        case And(l, r) | Or(l, r) | Implies(l, r) | Eq(l, r) | Less(l, r):
            return (l, r)
        case Iota(_, r, b):
            return (r, b)
        case Card(s, _):
            return (s,)
        case Pred(_, args):
            return args
    raise TypeError(f"not a term: {t!r}")


def size(t: Term) -> int:
    return 1 + sum(size(c) for c in children(t))


# -- fresh names -----------------------------------------------------------

_SUFFIX = re.compile(r"_\d+$")
_lock = threading.Lock()
_counter = itertools.count(1)


def base_name(name: str) -> str:
    return _SUFFIX.sub("", name)


def fresh(name: str) -> str:
    """A new variable name ``<base>_<n>`` from the global monotone counter."""
    with _lock:
        n = next(_counter)
    return f"{base_name(name)}_{n}"


def reset_fresh(start: int = 1) -> None:
    """Restart the fresh-name counter (used to make output reproducible)."""
    global _counter
    with _lock:
        _counter = itertools.count(start)

