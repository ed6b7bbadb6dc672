"""Meaning postulates for ``only`` and focussed ``not``.

    only(P, Q) → Q.P ∧ ∀P′(Q.P′ → P′=P)
    not(P, Q)  → ¬Q.P ∧ ∃P′(Q.P′)

Consequences are returned as beta-normal formulas; nothing is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .focus import Analysis
from .logic import (
    App, Eq, Exists, Forall, Implies, Neg, Pred, Term, Var, beta_reduce,
    free_vars, fresh,
)

NO_MP = "no MP applies"


@dataclass(frozen=True)
class Consequence:
    label: str
    formula: Term


@dataclass(frozen=True)
class MeaningPostulate:
    operator: str
    schema: Callable[[Term, Term], dict[str, Term]]

    def apply(self, p: Term, q: Term) -> list[Consequence]:
        return [Consequence(k, v) for k, v in self.schema(p, q).items()]


def _alternative(p: Term, q: Term) -> str:
    avoid = free_vars(p) | free_vars(q)
    name = fresh("P'")
    while name in avoid:
        name = fresh("P'")
    return name


def consequences_only(p: Term, q: Term) -> dict[str, Term]:
    alt = _alternative(p, q)
    return {
        "positive": beta_reduce(App(q, p)),
        "exclusive": Forall(alt, Implies(beta_reduce(App(q, Var(alt))), Eq(Var(alt), p))),
    }


def consequences_not(p: Term, q: Term) -> dict[str, Term]:
    alt = _alternative(p, q)
    return {
        "negative": Neg(beta_reduce(App(q, p))),
        "existential": Exists(alt, beta_reduce(App(q, Var(alt)))),
    }


POSTULATES = {
    "only": MeaningPostulate("only", consequences_only),
    "not": MeaningPostulate("not", consequences_not),
}


def derive(analysis: Analysis | Term) -> list[Consequence]:
    """Consequences licensed by the root operator of an analysis, if any."""
    f = analysis.formula if isinstance(analysis, Analysis) else analysis
    if isinstance(f, Pred) and f.name in POSTULATES and len(f.args) == 2:
        return POSTULATES[f.name].apply(*f.args)
    return []


def note(analysis: Analysis | Term) -> str | None:
    """Why :func:`derive` found nothing, for display."""
    f = analysis.formula if isinstance(analysis, Analysis) else analysis
    if derive(f):
        return None
    return f"{NO_MP} (plain negation)" if isinstance(f, Neg) else NO_MP
