"""Bounded countermodel search for schemas the bimodal logic leaves out.

A miss within bounds is reported as exhausted, never as valid.
"""
from strictpot.formula import parse
from strictpot.search import CLASSICAL, FORCING, SearchBounds, find_countermodel

bounds = SearchBounds(max_worlds=3, max_domain=2)

targets = [
    ("B for D", "P(a) -> []D <>D P(a)", CLASSICAL),
    (".2 for D", "<>D []D P(a) -> []D <>D P(a)", CLASSICAL),
    ("B for G", "~exists x ~(x = a) -> []G <>G ~exists x ~(x = a)", CLASSICAL),
    ("reverse subsumption", "[]G P(a) -> []D P(a)", CLASSICAL),
    ("excluded middle", "P(a) | ~P(a)", FORCING),
    ("Mixed.2", "<>G []D P(a) -> []D <>G P(a)", CLASSICAL),
]

for label, text, sem in targets:
    res = find_countermodel(parse(text), sem, bounds)
    print(f"== {label} ({res.verdict})")
    print(res.text())
