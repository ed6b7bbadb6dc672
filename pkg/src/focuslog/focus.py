"""Turning a parsed sign into analyses.

A focussed sentence discharges to an abstraction over the hole the focussed
item left.  An operator (``only``, focussed ``not``) pairs that abstraction
with the focussed item's semantics; without an operator the pair is kept as
an :class:`Analysis` with a focus residue.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoFocus
from .grammar import FocusValue, Sign
from .logic import App, Lam, Neg, Pred, Term, beta_reduce, free_vars
from .scoping import enumerate_scopings

FOCUS_OPERATORS = ("only", "not")


@dataclass(frozen=True)
class Analysis:
    formula: Term
    focus_residue: FocusValue | None = None
    digest: str = ""
    sign: Sign | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.focus_residue is not None:
            f = self.formula
            if not (isinstance(f, Lam) and f.var == self.focus_residue.var):
                raise ValueError("a focus residue needs an abstraction over its hole")


def _abstraction_for(sign: Sign, abstraction: Term | None) -> Term:
    if abstraction is None:
        abstraction = enumerate_scopings(sign.store, sign.sem)[0]
    if not (isinstance(abstraction, Lam) and abstraction.var == sign.focus.var):
        raise ValueError(
            f"expected an abstraction over the focus hole {sign.focus.var}, "
            f"got a {type(abstraction).__name__}"
        )
    return abstraction


def bind_operator(op_name: str, sign: Sign, abstraction: Term | None = None) -> Term:
    """``op(P, λX body)``: the operator applied to the focussed item's
    semantics and the abstraction over its hole."""
    if op_name not in FOCUS_OPERATORS:
        raise ValueError(f"unknown focus operator {op_name!r}")
    if sign.focus is None:
        raise NoFocus(f"{op_name!r} needs a focussed item and there is none")
    q = _abstraction_for(sign, abstraction)
    return beta_reduce(Pred(op_name, (sign.focus.item.sem, q)))


def residual_focus(sign: Sign, abstraction: Term | None = None) -> Analysis:
    if sign.focus is None:
        raise NoFocus("sign carries no focus")
    q = _abstraction_for(sign, abstraction)
    return Analysis(q, sign.focus, sign.trace, sign)


def analyses(sign: Sign) -> list[Analysis]:
    """All analyses of a complete sentence sign, one per scoping."""
    out = []
    for term in enumerate_scopings(sign.store, sign.sem):
        op = sign.operator
        if op in FOCUS_OPERATORS:
            out.append(Analysis(bind_operator(op, sign, term), None, sign.trace, sign))
        elif op == "neg":
            if sign.focus is None:
                out.append(Analysis(Neg(term), None, sign.trace, sign))
            else:
                q = _abstraction_for(sign, term)
                out.append(Analysis(Lam(q.var, Neg(q.body)), sign.focus, sign.trace, sign))
        elif sign.focus is not None:
            out.append(residual_focus(sign, term))
        else:
            out.append(Analysis(term, None, sign.trace, sign))
    return out


def reapply(analysis: Analysis) -> Term:
    """Put the focussed property back into the abstraction.

    For an operator analysis ``op(P, Q)`` this is ``Q.P``; for a residue it
    is the abstraction applied to the residue's property.
    """
    f = analysis.formula
    if isinstance(f, Pred) and f.name in FOCUS_OPERATORS and len(f.args) == 2:
        p, q = f.args
    elif analysis.focus_residue is not None:
        p, q = analysis.focus_residue.item.sem, f
    else:
        raise NoFocus("analysis has no focus to re-apply")
    return beta_reduce(App(q, p))


def is_closed(analysis: Analysis) -> bool:
    return not free_vars(analysis.formula)
