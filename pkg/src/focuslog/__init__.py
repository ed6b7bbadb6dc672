"""Focus, quantifier storage and meaning postulates for "only" and "not"."""
