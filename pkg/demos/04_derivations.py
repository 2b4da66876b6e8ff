"""Checking Hilbert derivations against the system inventories."""
from strictpot.proofs import axiom_inventory, check_derivation, parse_derivation, run_corpus, system

bm = system("BM-FOL")
for sid, display in axiom_inventory(bm):
    print(f"{sid:12} {display}")

text = """\
1. []D P(a) -> []G P(a) ; schema Subsump {phi := P(a)}
2. []G P(a) -> []G []G P(a) ; schema 4-G {phi := P(a)}
3. []D P(a) -> []G []G P(a) ; taut 1 2
"""
d = parse_derivation(text)
print("\n" + d.render())
print(check_derivation(d, bm))

rs = parse_derivation("1. []G P(a) -> []D P(a) ; schema RS {phi := P(a)}\n")
print("without the toggle:", check_derivation(rs, bm))
print("with the toggle:   ", check_derivation(rs, system("BM-FOL", reverse_subsumption=True)))

print("\nbundled corpus")
for entry, verdict, ok in run_corpus():
    print(f"  {'ok ' if ok else 'BAD'} {entry.file:28} {entry.system:11} {verdict}")
