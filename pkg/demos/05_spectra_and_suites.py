"""Determinacy spectra on a small model, then two property suites."""
import numpy as np

from strictpot.formula import Signature, parse
from strictpot.kripke import powerset_model, spectrum
from strictpot.search import SearchBounds, run_property_suite, space_size
from strictpot.search.pools import LINK_SIG

sig = Signature({"P": ("s",)})
m = powerset_model({"a", "b"}, sig, {"P": {("a",)}})
pool = [parse(t) for t in ("exists x P(x)", "forall x P(x)", "~exists x P(x)", "exists x ~P(x)")]

rows = []
for w in m.worlds:
    sp = spectrum(m, w, pool)
    rows.append([f in sp.possG for f in pool] + [f in sp.possD for f in pool])
table = np.array(rows, dtype=int)
print("columns: possG x4, possD x4")
for w, r in zip(m.worlds, table):
    print(f"{w:8}", r)
# possG is contained in possD at every world
print("inclusion holds:", bool(np.all(table[:, :4] <= table[:, 4:])))

b = SearchBounds(max_worlds=2, max_domain=2)
print("\nspace:", space_size(LINK_SIG, b))
print(run_property_suite("spectra", b).text())
# the .2 failure needs three worlds
print(run_property_suite("failures", SearchBounds(max_worlds=3, max_domain=2)).text())
