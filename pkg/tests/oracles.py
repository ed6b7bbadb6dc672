"""Reference implementations used as test oracles.

The term oracles work on a nameless (de Bruijn) encoding written from
scratch, so they share no code with the library's named-variable machinery.
The scoping oracle brute-forces permutations and groups them by searching
over commuting swaps.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from hypothesis import strategies as st

from focuslog.errors import FreeVarLeak
from focuslog.logic import (
    And, App, Card, Const, Eq, Exists, Forall, Implies, Iota, Lam, Less, Neg,
    Or, Pred, Var,
)
from focuslog.scoping import (
    StoreEntry, abstraction, admissible_orders, apply_order, enumerate_scopings,
)

# ---------------------------------------------------------------- encoding

_BIN = {And: "and", Or: "or", Implies: "implies", Eq: "eq", Less: "lt", App: "app"}
_ONE = {Lam: "lam", Exists: "exists", Forall: "forall"}
_BINDING = {"lam", "exists", "forall", "iota"}


def db(t, bound=()):
    """Nameless form: bound occurrences become ("idx", n), n counting binders
    outward from the occurrence."""
    if isinstance(t, Var):
        if t.name in bound:
            return ("idx", bound[::-1].index(t.name))
        return ("free", t.name)
    if isinstance(t, Const):
        return ("const", t.name)
    if isinstance(t, Neg):
        return ("neg", db(t.body, bound))
    if isinstance(t, Card):
        return ("card", db(t.set_term, bound), t.n)
    if isinstance(t, Pred):
        return ("pred", t.name) + tuple(db(a, bound) for a in t.args)
    if type(t) in _ONE:
        return (_ONE[type(t)], db(t.body, bound + (t.var,)))
    if isinstance(t, Iota):
        inner = bound + (t.var,)
        return ("iota", db(t.restriction, inner), db(t.body, inner))
    if type(t) in _BIN:
        a, b = (t.fun, t.arg) if isinstance(t, App) else (t.left, t.right)
        return (_BIN[type(t)], db(a, bound), db(b, bound))
    raise TypeError(t)


def fv(t, bound=frozenset()):
    if isinstance(t, Var):
        return set() if t.name in bound else {t.name}
    if isinstance(t, Const):
        return set()
    if type(t) in _ONE:
        return fv(t.body, bound | {t.var})
    if isinstance(t, Iota):
        return fv(t.restriction, bound | {t.var}) | fv(t.body, bound | {t.var})
    out = set()
    for c in _kids(t):
        out |= fv(c, bound)
    return out


def bound_names(t):
    """Every name that occurs as a binder anywhere in ``t``."""
    out = set()
    if type(t) in _ONE or isinstance(t, Iota):
        out.add(t.var)
    for c in _kids(t):
        out |= bound_names(c)
    return out


def _kids(t):
    if isinstance(t, (Var, Const)):
        return ()
    if isinstance(t, Neg) or type(t) in _ONE:
        return (t.body,)
    if isinstance(t, Card):
        return (t.set_term,)
    if isinstance(t, Pred):
        return t.args
    if isinstance(t, Iota):
        return (t.restriction, t.body)
    if isinstance(t, App):
        return (t.fun, t.arg)
    return (t.left, t.right)


# ------------------------------------------------- nameless substitution

def db_replace_free(n, x, v):
    """Replace the free name ``x`` by the nameless term ``v`` (which must have
    no loose indices, so no shifting is needed)."""
    if n[0] == "free":
        return v if n[1] == x else n
    if n[0] in ("idx", "const"):
        return n
    if n[0] == "card":
        return ("card", db_replace_free(n[1], x, v), n[2])
    if n[0] == "pred":
        return n[:2] + tuple(db_replace_free(a, x, v) for a in n[2:])
    return (n[0],) + tuple(db_replace_free(c, x, v) for c in n[1:])


def _map_idx(n, f, depth=0):
    tag = n[0]
    if tag == "idx":
        return f(n[1], depth)
    if tag in ("free", "const"):
        return n
    if tag == "card":
        return ("card", _map_idx(n[1], f, depth), n[2])
    if tag == "pred":
        return n[:2] + tuple(_map_idx(a, f, depth) for a in n[2:])
    d = depth + 1 if tag in _BINDING else depth
    return (tag,) + tuple(_map_idx(c, f, d) for c in n[1:])


def _shift(n, by, cutoff=0):
    return _map_idx(n, lambda i, d: ("idx", i + by) if i >= d + cutoff else ("idx", i))


def _subst_top(body, arg):
    # body[0 := arg], then drop the binder
    def f(i, d):
        if i == d:
            return _shift(arg, d)
        if i > d:
            return ("idx", i - 1)
        return ("idx", i)
    return _map_idx(body, f)


class OutOfFuel(Exception):
    pass


def db_normalize(n, fuel=None):
    """Normal-order normal form of a nameless term, with the same
    constant-collapse rule as the library."""
    fuel = fuel if fuel is not None else [10_000]

    def spend():
        fuel[0] -= 1
        if fuel[0] < 0:
            raise OutOfFuel

    def whnf(n):
        while n[0] == "app":
            f = whnf(n[1])
            if f[0] == "lam":
                spend()
                n = _subst_top(f[1], n[2])
            elif f[0] == "const":
                spend()
                return ("pred", f[1], n[2])
            elif f[0] == "pred":
                spend()
                return f + (n[2],)
            else:
                return ("app", f, n[2])
        return n

    def norm(n):
        tag = n[0]
        if tag in ("idx", "free", "const"):
            return n
        if tag == "app":
            h = whnf(n)
            if h[0] == "app":
                return ("app", norm(h[1]), norm(h[2]))
            return norm(h)
        if tag == "card":
            return ("card", norm(n[1]), n[2])
        if tag == "pred":
            return n[:2] + tuple(norm(a) for a in n[2:])
        return (tag,) + tuple(norm(c) for c in n[1:])

    return norm(n)


# ------------------------------------------------------- term generation

NAMES = ("X", "Y", "Z", "W", "V")
CONSTS = ("now", "car", "man", "steal")
PREDS = ("member", "agent", "simple", "p")


def random_term(rng: random.Random, depth: int = 4):
    """A random term; applications of abstractions are common so that
    reductions and renamings actually happen."""
    if depth <= 0 or rng.random() < 0.2:
        if rng.random() < 0.7:
            return Var(rng.choice(NAMES))
        return Const(rng.choice(CONSTS))
    d = depth - 1
    k = rng.randrange(12)
    x = rng.choice(NAMES)
    if k in (0, 1):
        return Lam(x, random_term(rng, d))
    if k in (2, 3):
        return App(random_term(rng, d), random_term(rng, d))
    if k == 4:
        return App(Lam(x, random_term(rng, d)), random_term(rng, d))
    if k == 5:
        return rng.choice((And, Or, Implies, Eq, Less))(random_term(rng, d), random_term(rng, d))
    if k == 6:
        return Neg(random_term(rng, d))
    if k == 7:
        return rng.choice((Exists, Forall))(x, random_term(rng, d))
    if k == 8:
        return Iota(x, random_term(rng, d), random_term(rng, d))
    if k == 9:
        return Card(random_term(rng, d), rng.randint(1, 3))
    return Pred(rng.choice(PREDS), [random_term(rng, d) for _ in range(rng.randint(0, 3))])


def term_corpus(n: int, seed: int = 0, depth: int = 4):
    rng = random.Random(seed)
    return [random_term(rng, depth) for _ in range(n)]


def _leaf():
    return st.one_of(st.sampled_from(NAMES).map(Var), st.sampled_from(CONSTS).map(Const))


def _extend(inner):
    name = st.sampled_from(NAMES)
    return st.one_of(
        st.builds(Lam, name, inner),
        st.builds(App, inner, inner),
        st.builds(lambda x, b, a: App(Lam(x, b), a), name, inner, inner),
        st.builds(And, inner, inner),
        st.builds(Implies, inner, inner),
        st.builds(Eq, inner, inner),
        st.builds(Neg, inner),
        st.builds(Exists, name, inner),
        st.builds(Forall, name, inner),
        st.builds(Iota, name, inner, inner),
        st.builds(Card, inner, st.integers(1, 3)),
        st.builds(Pred, st.sampled_from(PREDS), st.lists(inner, max_size=3).map(tuple)),
    )


terms = st.recursive(_leaf(), _extend, max_leaves=12)


# ------------------------------------------------------- scoping oracle

def brute_force_orders(store):
    """Every permutation that respects restriction dependencies and
    priorities (widest first), with ties free."""
    n = len(store)
    out = []
    avoid = {i: set() for i in range(n)}
    for i, a in enumerate(store):
        for j, b in enumerate(store):
            if i != j and b.restriction is not None and a.var in fv(b.restriction):
                avoid[i].add(j)  # i must be wider than j

    def closure():
        reach = {i: set(s) for i, s in avoid.items()}
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for j in list(reach[i]):
                    new = reach[j] - reach[i]
                    if new:
                        reach[i] |= new
                        changed = True
        return reach

    wider = closure()
    for perm in itertools.permutations(range(n)):
        pos = {e: k for k, e in enumerate(perm)}  # k = 0 is outermost
        ok = True
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if j in wider[i] and pos[i] > pos[j]:
                    ok = False
                elif (j not in wider[i] and i not in wider[j]
                      and store[i].priority > store[j].priority and pos[i] > pos[j]):
                    ok = False
        if ok:
            out.append(perm)
    return out


STORE_VARS = ("A", "B", "C", "D")
STORE_KINDS = ("existential", "universal", "iota", "abstraction")


def random_store(rng: random.Random, n: int):
    """Up to four entries with random kinds, priorities and restrictions that
    mention other entries' variables (cycles included)."""
    names = STORE_VARS[:n]
    store = []
    for v in names:
        kind = rng.choices(STORE_KINDS, weights=(4, 3, 3, 1))[0]
        if kind == "abstraction":
            store.append(abstraction(v))
            continue
        others = [o for o in names if o != v and rng.random() < 0.3]
        restr = None
        if kind == "iota" or rng.random() < 0.7:
            restr = Pred("r" + v.lower(), [Var(v)] + [Var(o) for o in others])
        store.append(StoreEntry(kind, v, restr, rng.randint(0, 3)))
    return store


def _commute(a, b):
    if a.kind != b.kind or a.kind == "abstraction":
        return False
    return not ((b.restriction is not None and a.var in fv(b.restriction))
                or (a.restriction is not None and b.var in fv(a.restriction)))


def order_classes(store, orders):
    """Components of the valid orders under swaps of adjacent commuting
    entries (breadth-first search)."""
    valid = set(orders)
    classes, seen = [], set()
    for o in orders:
        if o in seen:
            continue
        comp, todo = [], deque([o])
        seen.add(o)
        while todo:
            cur = todo.popleft()
            comp.append(cur)
            for k in range(len(cur) - 1):
                if _commute(store[cur[k]], store[cur[k + 1]]):
                    nxt = cur[:k] + (cur[k + 1], cur[k]) + cur[k + 2:]
                    if nxt in valid and nxt not in seen:
                        seen.add(nxt)
                        todo.append(nxt)
        classes.append(comp)
    return classes


def scoping_agrees(store) -> bool:
    """enumerate_scopings against brute force: same admissible orders, one
    duplicate-free result per meaning class, closed results, abstractions
    outermost."""
    matrix = Pred("m", [Var(e.var) for e in store])
    orders = brute_force_orders(store)
    if set(admissible_orders(store)) != set(orders):
        return False
    classes = []
    for comp in order_classes(store, orders):
        try:
            classes.append({db(apply_order(store, matrix, o)) for o in comp})
        except FreeVarLeak:
            pass
    try:
        got = enumerate_scopings(store, matrix)
    except FreeVarLeak:
        return not classes
    keys = [db(t) for t in got]
    if len(set(keys)) != len(keys) or len(got) > len(classes):
        return False
    if not all(any(k in c for c in classes) for k in keys):
        return False
    if not all(any(k in c for k in keys) for c in classes):
        return False
    n_abs = sum(e.kind == "abstraction" for e in store)
    for t in got:
        if fv(t) - {"now"}:
            return False
        for _ in range(n_abs):
            if not isinstance(t, Lam):
                return False
            t = t.body
    return True
