"""The translations side by side, and the two composites compared with star."""
from strictpot.formula import parse, render
from strictpot.kripke import eval_classical, powerset_model
from strictpot.formula import Signature
from strictpot.translate import TRANSLATIONS, composite_via_d, composite_via_g, normalize, star

sources = ["P(a)", "exists x P(x)", "forall x (P(x) -> exists y R(x,y))", "~~P(a) -> P(a)"]

for text in sources:
    f = parse(text)
    print(text)
    for kind in ("godel", "pot", "star"):
        g = TRANSLATIONS[kind](f)
        print(f"  {kind:6} {render(g)}")
    print(f"  {'norm':6} {render(normalize(composite_via_d(f)))}")

# Worlds are subsets of {a, b}; G adds individuals, D also settles P.
sig = Signature({"P": ("s",), "R": ("s", "s")})
m = powerset_model({"a", "b"}, sig, {"P": {("a",)}, "R": {("a", "b")}})
print("\nworld  star  via-D  via-G")
for text in sources[1:3]:
    f = parse(text)
    print(text)
    for w in m.worlds:
        vals = [eval_classical(m, w, {}, t(f)) for t in (star, composite_via_d, composite_via_g)]
        print(f"  {w:8}", *("T" if v else "F" for v in vals))
