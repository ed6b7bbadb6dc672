"""Moving the focus under "only" changes what is being excluded."""

from focuslog.entailment import derive
from focuslog.grammar import bundled_lexicon
from focuslog.logic import canonical_names, pretty, reset_fresh
from focuslog.parser import parse

lexicon = bundled_lexicon()


def walk(sentence):
    reset_fresh()
    print(sentence)
    for a in parse(sentence, lexicon):
        print("  ", pretty(canonical_names(a.formula)))
        for c in derive(a):
            print(f"   {c.label}:", pretty(canonical_names(c.formula)))
    print()


## [focus on the object]
walk("I only borrowed a *car*")
## [focus on the object]

## [focus on the verb]
# Now the extracted property is an event type, and the abstraction applies
# its variable to selectors for the object and the subject.
walk("I only *borrowed* a car")
## [focus on the verb]

## [no operator]
# With nothing to consume it, the focus is handed back alongside an
# abstraction over "kinds of individuals who ate it".
reset_fresh()
(a,) = parse("A *man* ate it", lexicon)
print(pretty(canonical_names(a.formula)))
print("focus:", a.focus_residue.item.word, pretty(a.focus_residue.item.sem))
## [no operator]
