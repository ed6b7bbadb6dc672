"""Terms of the interpretation language and the operations on them."""

from .ops import (
    DEFAULT_STEP_BUDGET, alpha_equal, beta_reduce, canonical_key,
    canonical_names, free_vars, is_beta_normal, rebuild, substitute,
)
from .pretty import FORMATS, pretty
from .sexpr import parse_sexpr, read, read_all, to_sexpr, to_term
from .terms import (
    And, App, Card, Const, Eq, Exists, Forall, Implies, Iota, Lam, Less, Neg,
    Or, Pred, Term, Var, children, conj, fresh, pred, reset_fresh, size,
)

__all__ = [
    "And", "App", "Card", "Const", "DEFAULT_STEP_BUDGET", "Eq", "Exists",
    "FORMATS", "Forall", "Implies", "Iota", "Lam", "Less", "Neg", "Or", "Pred",
    "Term", "Var", "alpha_equal", "beta_reduce", "canonical_key",
    "canonical_names", "children", "conj", "free_vars", "fresh",
    "is_beta_normal", "parse_sexpr", "pred", "pretty", "read", "read_all",
    "rebuild", "reset_fresh", "size", "substitute", "to_sexpr", "to_term",
]
