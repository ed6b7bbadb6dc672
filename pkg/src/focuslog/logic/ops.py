"""Free variables, substitution, beta reduction and alpha-equivalence."""

from __future__ import annotations

import string

from ..errors import ReductionDepthExceeded
from .terms import (
    And, App, Card, Const, Eq, Exists, Forall, Implies, Iota, Lam, Less, Neg,
    Or, Pred, Term, Var, children, fresh,
)

DEFAULT_STEP_BUDGET = 10_000


def rebuild(t: Term, kids: tuple[Term, ...] | list[Term]) -> Term:
    """Copy of ``t`` with its immediate subterms replaced by ``kids``."""
    match t:
        case Var() | Const():
            return t
        case Lam(x, _):
            return Lam(x, kids[0])
        case Exists(x, _):
            return Exists(x, kids[0])
        case Forall(x, _):
            return Forall(x, kids[0])
        case Neg(_):
            return Neg(kids[0])
        case Iota(x, _, _):
            return Iota(x, kids[0], kids[1])
        case Card(_, n):
            return Card(kids[0], n)
        case Pred(name, _):
            return Pred(name, kids)
        case App() | And() | Or() | Implies() | Eq() | Less():
            return type(t)(kids[0], kids[1])
    raise TypeError(f"not a term: {t!r}")


def binder_var(t: Term) -> str | None:
    if isinstance(t, (Lam, Exists, Forall, Iota)):
        return t.var
    return None


def free_vars(t: Term) -> frozenset[str]:
    match t:
        case Var(name):
            return frozenset((name,))
        case Const():
            return frozenset()
        case Lam(x, b) | Exists(x, b) | Forall(x, b):
            return free_vars(b) - {x}
        case Iota(x, r, b):
            return (free_vars(r) | free_vars(b)) - {x}
    out: frozenset[str] = frozenset()
    for c in children(t):
        out |= free_vars(c)
    return out


def _fresh_avoiding(name: str, avoid: frozenset[str] | set[str]) -> str:
    new = fresh(name)
    while new in avoid:
        new = fresh(name)
    return new


def substitute(t: Term, x: str, v: Term) -> Term:
    """Replace free occurrences of ``x`` in ``t`` by ``v``, renaming binders
    that would capture a free variable of ``v``."""
    return _subst(t, x, v, free_vars(v))


def _subst(t: Term, x: str, v: Term, fvv: frozenset[str]) -> Term:
    match t:
        case Var(name):
            return v if name == x else t
        case Const():
            return t
    y = binder_var(t)
    if y is None:
        return rebuild(t, [_subst(c, x, v, fvv) for c in children(t)])
    if y == x or x not in free_vars(t):
        return t
    kids = children(t)
    if y in fvv:
        y2 = _fresh_avoiding(y, fvv | free_vars(t))
        kids = tuple(_subst(c, y, Var(y2), frozenset((y2,))) for c in kids)
        t = _with_binder(t, y2)
    return rebuild(t, [_subst(c, x, v, fvv) for c in kids])


def _with_binder(t: Term, y: str) -> Term:
    match t:
        case Lam(_, b):
            return Lam(y, b)
        case Exists(_, b):
            return Exists(y, b)
        case Forall(_, b):
            return Forall(y, b)
        case Iota(_, r, b):
            return Iota(y, r, b)
    raise TypeError(f"not a binder: {t!r}")


class _Budget:
    __slots__ = ("left", "limit")

    def __init__(self, limit: int):
        self.left = limit
        self.limit = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise ReductionDepthExceeded(
                f"beta reduction did not terminate within {self.limit} steps"
            )


def beta_reduce(t: Term, max_steps: int = DEFAULT_STEP_BUDGET) -> Term:
    """Normal-order (leftmost-outermost) reduction to beta-normal form.

    Applications of a constant or a predicate collapse into flat predicate
    applications: ``App(Const(p), a)`` becomes ``p(a)``.
    """
    return _normalize(t, _Budget(max_steps))


def _head_reduce(t: Term, budget: _Budget) -> Term:
    # weak head normal form plus constant collapse
    while isinstance(t, App):
        f = _head_reduce(t.fun, budget)
        match f:
            case Lam(x, body):
                budget.spend()
                t = substitute(body, x, t.arg)
            case Const(name):
                budget.spend()
                return Pred(name, (t.arg,))
            case Pred(name, args):
                budget.spend()
                return Pred(name, args + (t.arg,))
            case _:
                return App(f, t.arg)
    return t


def _normalize(t: Term, budget: _Budget) -> Term:
    match t:
        case Var() | Const():
            return t
        case App():
            h = _head_reduce(t, budget)
            if isinstance(h, App):
                return App(_normalize(h.fun, budget), _normalize(h.arg, budget))
            return _normalize(h, budget)
    return rebuild(t, [_normalize(c, budget) for c in children(t)])


def is_beta_normal(t: Term) -> bool:
    if isinstance(t, App) and isinstance(t.fun, (Lam, Const, Pred)):
        return False
    return all(is_beta_normal(c) for c in children(t))


def alpha_equal(a: Term, b: Term) -> bool:
    """Structural equality up to consistent renaming of bound variables."""
    return _alpha(a, b, {}, {}, 0)


def _alpha(a: Term, b: Term, env_a: dict, env_b: dict, depth: int) -> bool:
    # env maps a bound name to the depth of its binder
    if type(a) is not type(b):
        return False
    match a:
        case Var(name):
            ia, ib = env_a.get(name), env_b.get(b.name)
            if ia is None and ib is None:
                return name == b.name
            return ia == ib
        case Const(name):
            return name == b.name
        case Card(s, n):
            return n == b.n and _alpha(s, b.set_term, env_a, env_b, depth)
        case Pred(name, args):
            if name != b.name or len(args) != len(b.args):
                return False
    x, y = binder_var(a), binder_var(b)
    if x is not None:
        env_a = {**env_a, x: depth}
        env_b = {**env_b, y: depth}
        depth += 1
    ka, kb = children(a), children(b)
    return len(ka) == len(kb) and all(
        _alpha(c, d, env_a, env_b, depth) for c, d in zip(ka, kb)
    )


def canonical_key(t: Term):
    """Hashable nameless form of ``t``: equal keys iff alpha-equal terms."""
    return _key(t, ())


def _key(t: Term, scope: tuple[str, ...]):
    match t:
        case Var(name):
            for i in range(len(scope) - 1, -1, -1):
                if scope[i] == name:
                    return ("bound", len(scope) - 1 - i)
            return ("free", name)
        case Const(name):
            return ("const", name)
        case Card(s, n):
            return ("card", _key(s, scope), n)
        case Pred(name, args):
            return ("pred", name) + tuple(_key(a, scope) for a in args)
    x = binder_var(t)
    inner = scope + (x,) if x is not None else scope
    return (type(t).__name__,) + tuple(_key(c, inner) for c in children(t))


def _letters():
    n = 0
    while True:
        for ch in string.ascii_uppercase:
            yield ch if n == 0 else f"{ch}{n}"
        n += 1


def canonical_names(t: Term) -> Term:
    """Rename bound variables to A, B, C, ... in order of their binders'
    left-to-right appearance, the lettering used in printed analyses."""
    avoid = free_vars(t)
    gen = (name for name in _letters() if name not in avoid)
    return _rename_all(t, {}, gen)


def _rename_all(t: Term, env: dict[str, str], gen) -> Term:
    match t:
        case Var(name):
            return Var(env.get(name, name))
        case Const():
            return t
    x = binder_var(t)
    if x is None:
        return rebuild(t, [_rename_all(c, env, gen) for c in children(t)])
    new = next(gen)
    inner = {**env, x: new}
    return rebuild(_with_binder(t, new), [_rename_all(c, inner, gen) for c in children(t)])
