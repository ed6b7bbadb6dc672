"""Plain and focussed negation come out of the same word."""

from focuslog.entailment import derive, note
from focuslog.grammar import bundled_lexicon
from focuslog.logic import canonical_names, pretty, reset_fresh
from focuslog.parser import parse

lexicon = bundled_lexicon()

for sentence in ("I didn't steal it", "I didn't *steal* it", "I didn't steal *it*"):
    reset_fresh()
    (a,) = parse(sentence, lexicon)
    print(sentence)
    print("  ", pretty(canonical_names(a.formula)))
    cons = derive(a)
    for c in cons:
        print(f"   {c.label}:", pretty(canonical_names(c.formula)))
    if not cons:
        print("  ", note(a))
    print()
