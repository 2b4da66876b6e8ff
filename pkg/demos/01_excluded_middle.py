"""Excluded middle on a two-world chain.

P(a) is undetermined at the root and becomes true one step later, so the
root does not force P(a) | ~P(a), though the disjunction is classically true.
"""
from strictpot.formula import parse
from strictpot.kripke import eval_classical, eval_forcing, excluded_middle_model, render_model
from strictpot.translate import star

m = excluded_middle_model()
print(render_model(m))

em = parse("P(a) | ~P(a)")
for w in m.worlds:
    print(w, "forces:", eval_forcing(m, w, {}, em), " classically true:", eval_classical(m, w, {}, em))

# forcing f is classical truth of star(f)
print("\nstar image:", star(em))
print("root, star image:", eval_classical(m, "w0", {}, star(em)))

# why the root fails, step by step
trace = []
eval_forcing(m, "w0", {}, em, trace)
for depth, line in trace:
    print("  " * depth + line)
