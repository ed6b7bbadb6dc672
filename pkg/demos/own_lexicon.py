"""A lexicon of your own: two words, one focusable."""

from focuslog.entailment import derive
from focuslog.logic import canonical_names, pretty
from focuslog.grammar import load_lexicon
from focuslog.parser import parse

SOURCE = r"""
# proper names carry their entity directly; no store entry needed
Kim    | NP | - | yes | (lam P (app (var P) (const kim))) |
Lee    | NP | - | yes | (lam P (app (var P) (const lee))) |
called | V >NP=VP <NP=S | vform=fin | no | \
         (lam O (lam S (app (var S) (lam X (app (var O) (lam Y (pred call (var X) (var Y)))))))) |
only   | Adv >VP[focus=+]=* | op=only | no | (lam V (var V)) |
"""

lexicon = load_lexicon(SOURCE)

## [plain]
(a,) = parse("Kim called Lee", lexicon)
print(pretty(a.formula))
## [plain]

## [only]
(a,) = parse("Kim only called *Lee*", lexicon)
print(pretty(canonical_names(a.formula)))
for c in derive(a):
    print(f"  {c.label}:", pretty(canonical_names(c.formula)))
## [only]
