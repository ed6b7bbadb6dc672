"""Quantifier storage: what the parser keeps aside, and how it is put back."""

from focuslog.grammar import bundled_lexicon
from focuslog.logic import canonical_names, pretty, reset_fresh
from focuslog.parser import parse
from focuslog.scoping import admissible_orders, enumerate_scopings

lexicon = bundled_lexicon()


def show(t):
    print("   ", pretty(canonical_names(t)))


## [one reading]
# Each NP leaves an entry in the store and a bare variable in the matrix.
reset_fresh()
(a,) = parse("the woman stole a bike", lexicon)
print("matrix:")
show(a.sign.sem)
for e in a.sign.store:
    print("  store:", e.kind, e.var, "priority", e.priority)
print("discharged:")
show(a.formula)
## [one reading]

## [ties]
# "every" and "the" have the same priority, so both orders survive.
reset_fresh()
for a in parse("every man stole the bike", lexicon):
    show(a.formula)
## [ties]

## [orders versus readings]
# Two indefinites can be stacked either way, but the two stackings mean the
# same thing, so only one of them is reported.
reset_fresh()
(a,) = parse("a man ate a peach", lexicon)
store = a.sign.store
print(len(list(admissible_orders(store))), "orders,",
      len(enumerate_scopings(store, a.sign.sem)), "reading")
## [orders versus readings]
