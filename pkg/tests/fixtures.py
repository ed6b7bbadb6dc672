"""The fixture corpus and the pairing of focussed sentences with plain ones."""

from pathlib import Path

from focuslog.focus import reapply
from focuslog.logic import Neg, Pred

CORPUS_FILE = Path(__file__).parent / "data" / "corpus.txt"


def corpus():
    lines = CORPUS_FILE.read_text(encoding="utf-8").splitlines()
    return [l.strip() for l in lines if l.strip() and not l.startswith("#")]


def focussed():
    return [s for s in corpus() if "*" in s]


def plain_counterpart(sentence):
    """Drop the focus marker, and ``only``, which needs a focus to parse."""
    words = [w.strip("*") for w in sentence.split() if w.lower() != "only"]
    return " ".join(words)


def recompose(analysis):
    """Re-apply the abstraction to the focus property.  Focussed ``not``
    denies what plain negation denies, so it is compared under ¬."""
    t = reapply(analysis)
    f = analysis.formula
    if isinstance(f, Pred) and f.name == "not":
        return Neg(t)
    return t
