"""Cooper storage: scope-taking operators held in a store and discharged over
the finished matrix formula.

Each :class:`StoreEntry` becomes a wrapper around the formula built so far::

    existential   ∃X(R ∧ W)      (∃X W without a restriction)
    universal     ∀X(R → W)      (∀X W)
    iota          ιX:(R) W
    abstraction   λX W           always outermost

Admissible orders respect two constraints.  An entry whose restriction
mentions another entry's variable scopes inside that entry; otherwise a
higher priority scopes wider.  Ties are explored both ways.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Sequence

from .errors import FreeVarLeak, OrphanEntry, SexprError
from .logic import (
    And, Exists, Forall, Implies, Iota, Lam, Term, Var, alpha_equal,
    beta_reduce, canonical_key, free_vars, substitute, to_sexpr, to_term,
)

KINDS = ("existential", "universal", "iota", "abstraction")
MAX_PRIORITY = 1_000_000

# priorities used by the bundled lexicon; configuration, not theory
PRIORITY_TENSE = 3
PRIORITY_DEFINITE = 2
PRIORITY_UNIVERSAL = 2
PRIORITY_INDEFINITE = 1
PRIORITY_PRONOUN = 0


@dataclass(frozen=True)
class StoreEntry:
    kind: str
    var: str
    restriction: Term | None = None
    priority: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown store entry kind {self.kind!r}")
        if self.kind == "abstraction":
            object.__setattr__(self, "priority", MAX_PRIORITY)
            if self.restriction is not None:
                raise ValueError("abstraction entries take no restriction")
        if self.kind == "iota" and self.restriction is None:
            raise ValueError("iota entries need a restriction")

    def wrap(self, formula: Term) -> Term:
        r = self.restriction
        match self.kind:
            case "existential":
                return Exists(self.var, formula if r is None else And(r, formula))
            case "universal":
                return Forall(self.var, formula if r is None else Implies(r, formula))
            case "iota":
                return Iota(self.var, r, formula)
        return Lam(self.var, formula)

    def substitute(self, name: str, value: Term) -> StoreEntry:
        """Fill a variable of the restriction (a slot of the seeding word)."""
        if self.restriction is None or name not in free_vars(self.restriction):
            return self
        return replace(self, restriction=beta_reduce(substitute(self.restriction, name, value)))

    def rename(self, mapping: dict[str, str]) -> StoreEntry:
        r = self.restriction
        if r is not None:
            for old, new in mapping.items():
                r = substitute(r, old, Var(new))
        return replace(self, var=mapping.get(self.var, self.var), restriction=r)

    def to_sexpr(self) -> str:
        prio = "max" if self.kind == "abstraction" else str(self.priority)
        tail = "" if self.restriction is None else " " + to_sexpr(self.restriction)
        return f"(store {self.kind} {self.var} {prio}{tail})"

    def key(self):
        r = None if self.restriction is None else canonical_key(self.restriction)
        return (self.kind, self.var, self.priority, r)


def abstraction(var: str) -> StoreEntry:
    return StoreEntry("abstraction", var)


def entry_from_sexpr(s) -> StoreEntry:
    """Build an entry from a read ``(store kind var priority restriction?)``."""
    if isinstance(s, str) or len(s) not in (4, 5) or s[0] != "store":
        raise SexprError(f"expected (store kind var priority restriction?), got {s!r}")
    _, kind, var, prio, *restr = s
    if not all(isinstance(x, str) for x in (kind, var, prio)):
        raise SexprError("store kind, variable and priority must be atoms")
    if prio == "max":
        priority = MAX_PRIORITY
    else:
        try:
            priority = int(prio)
        except ValueError:
            raise SexprError(f"bad priority {prio!r}") from None
    try:
        return StoreEntry(kind, var, to_term(restr[0]) if restr else None, priority)
    except ValueError as exc:
        raise SexprError(str(exc)) from None


# -- ordering --------------------------------------------------------------


def _depends(store: Sequence[StoreEntry]) -> list[set[int]]:
    """``deps[j]`` holds the entries that must scope outside entry ``j``."""
    direct = [set() for _ in store]
    for j, e in enumerate(store):
        if e.restriction is None:
            continue
        fv = free_vars(e.restriction)
        for i, other in enumerate(store):
            if i != j and other.var in fv:
                direct[j].add(i)
    closure = [set(d) for d in direct]
    changed = True
    while changed:
        changed = False
        for j in range(len(store)):
            extra = set().union(*(closure[i] for i in closure[j])) - closure[j]
            if extra:
                closure[j] |= extra
                changed = True
    return closure


def precedence(store: Sequence[StoreEntry]) -> set[tuple[int, int]]:
    """Pairs ``(i, j)``: entry ``i`` must be applied outside entry ``j``."""
    deps = _depends(store)
    out = set()
    for i, j in itertools.permutations(range(len(store)), 2):
        if i in deps[j]:
            out.add((i, j))
        elif j not in deps[i] and store[i].priority > store[j].priority:
            out.add((i, j))
    return out


def admissible_orders(store: Sequence[StoreEntry]) -> Iterator[tuple[int, ...]]:
    """Orders (outermost first) that satisfy :func:`precedence`."""
    before = precedence(store)
    must_precede = {j: {i for i, k in before if k == j} for j in range(len(store))}

    def extend(prefix: list[int], left: set[int]):
        if not left:
            yield tuple(prefix)
            return
        for j in sorted(left):
            if must_precede[j] & left:
                continue
            prefix.append(j)
            left.remove(j)
            yield from extend(prefix, left)
            left.add(j)
            prefix.pop()

    yield from extend([], set(range(len(store))))


def commute(a: StoreEntry, b: StoreEntry) -> bool:
    """Adjacent entries whose swap cannot change the meaning."""
    if a.kind != b.kind or a.kind == "abstraction":
        return False
    return not (
        (b.restriction is not None and a.var in free_vars(b.restriction))
        or (a.restriction is not None and b.var in free_vars(a.restriction))
    )


def normal_order(store: Sequence[StoreEntry], order: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least order reachable by swapping adjacent
    commuting entries that no precedence constraint ties together."""
    before = precedence(store)

    def independent(i: int, j: int) -> bool:
        return (i, j) not in before and (j, i) not in before and commute(store[i], store[j])

    rest = list(order)
    out = []
    while rest:
        best = None
        for p, j in enumerate(rest):
            if all(independent(rest[q], j) for q in range(p)):
                if best is None or j < rest[best]:
                    best = p
        out.append(rest.pop(best))
    return tuple(out)


# -- discharge -------------------------------------------------------------


def check_orphans(store: Sequence[StoreEntry], matrix: Term) -> None:
    for i, e in enumerate(store):
        if e.var in free_vars(matrix):
            continue
        if any(
            o.restriction is not None and e.var in free_vars(o.restriction)
            for k, o in enumerate(store)
            if k != i
        ):
            continue
        raise OrphanEntry(f"store entry for {e.var} binds nothing")


def apply_order(store: Sequence[StoreEntry], matrix: Term, order: Sequence[int]) -> Term:
    """Wrap ``matrix`` in the entries of ``order`` (outermost first)."""
    formula = matrix
    for j in reversed(order):
        formula = store[j].wrap(formula)
    leaked = free_vars(formula) - {"now"}
    if leaked:
        raise FreeVarLeak(f"unbound variables after scoping: {sorted(leaked)}")
    return formula


def discharge(store: Sequence[StoreEntry], matrix: Term) -> list[Term]:
    """One formula per admissible order, duplicates included."""
    store = list(store)
    check_orphans(store, matrix)
    out = []
    leak = None
    for order in admissible_orders(store):
        try:
            out.append(apply_order(store, matrix, order))
        except FreeVarLeak as exc:
            leak = exc
    if not out:
        raise leak or FreeVarLeak("no admissible scoping")
    return out


def enumerate_scopings(store: Sequence[StoreEntry], matrix: Term) -> list[Term]:
    """Non-redundant scopings: one formula per class of orders that differ
    only by commuting neighbours, no two alpha-equal."""
    store = list(store)
    check_orphans(store, matrix)
    seen_orders: set[tuple[int, ...]] = set()
    out: list[Term] = []
    leak = None
    for order in admissible_orders(store):
        rep = normal_order(store, order)
        if rep in seen_orders:
            continue
        seen_orders.add(rep)
        try:
            term = apply_order(store, matrix, rep)
        except FreeVarLeak as exc:
            leak = exc
            continue
        if not any(alpha_equal(term, t) for t in out):
            out.append(term)
    if not out:
        raise leak or FreeVarLeak("no admissible scoping")
    return out


def dedupe(terms: Iterable[Term]) -> list[Term]:
    out: list[Term] = []
    for t in terms:
        if not any(alpha_equal(t, u) for u in out):
            out.append(t)
    return out
