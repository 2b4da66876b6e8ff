import json
from pathlib import Path

import pytest
from hypothesis import given, settings

from strictpot.formula import Not, Or, Var, alpha_eq, parse
from strictpot.proofs import (
    NAMES, REGISTRY, SET_THEORETIC, DerivationSyntaxError, SchemaError, axiom_inventory,
    check_derivation, corpus_entries, instantiate_schema, is_tautology, parse_derivation,
    run_corpus, system,
)
from strictpot.search import SearchBounds, run_checks, signature_for, valid

from strategies import formulas

GOLDEN = json.loads((Path(__file__).parent / "data" / "inventories.json").read_text())


@pytest.mark.parametrize("name", NAMES)
def test_inventory_matches_golden_table(name):
    spec = system(name)
    assert list(spec.schemas) == GOLDEN[name]["schemas"]
    assert list(spec.rules) == GOLDEN[name]["rules"]
    ids = [sid for sid, _ in axiom_inventory(spec)]
    assert ids[-len(spec.rules):] == list(spec.rules)


def test_toggles():
    assert "RS" not in system("BM-FOL").schemas
    assert "RS" in system("BM-FOL", reverse_subsumption=True).schemas
    assert "RS" not in system("S4-FOL", reverse_subsumption=True).schemas
    assert "Dec-eq" not in system("I-FOL", id_eq=False).schemas
    assert "Dec-eq" not in system("BM-FOL").schemas


def test_unknown_system():
    with pytest.raises(ValueError):
        system("K-FOL")


def test_set_theoretic_constructors_attach():
    spec = system("BM-TPL").extend(*SET_THEORETIC, name="BM-TPL+sets")
    for sid in SET_THEORETIC:
        assert spec.allows(sid)
    assert not system("BM-TPL").allows("Ext")


def test_instantiation():
    f = instantiate_schema("Subsump", {"phi": parse("P(a)")})
    assert alpha_eq(f, parse("[]D P(a) -> []G P(a)"))
    g = instantiate_schema("Mixed.2", {"phi": parse("P(a)")})
    assert alpha_eq(g, parse("<>G []D P(a) -> []D <>G P(a)"))


def test_instantiation_errors():
    with pytest.raises(SchemaError):
        instantiate_schema("Subsump", {})
    with pytest.raises(SchemaError):
        instantiate_schema("Stb-G-atom", {"phi": parse("P(a) & P(b)")})
    with pytest.raises(SchemaError):
        instantiate_schema("Q-Exists", {"phi": parse("P(x)"), "psi": parse("R(x,x)"), "x": Var("x")})
    with pytest.raises(SchemaError):
        instantiate_schema("UI", {"phi": parse("P(x)"), "x": parse("P(a)"), "t": Var("y")})


def test_every_schema_has_display():
    for sid, sch in REGISTRY.items():
        assert sch.display and sch.id == sid


def test_tautologies():
    assert is_tautology(parse("[]D P(a) | ~[]D P(a)"))
    assert is_tautology(parse("(P(a) -> R(a,a)) -> (~R(a,a) -> ~P(a))"))
    assert not is_tautology(parse("P(a) -> []D P(a)"))
    assert is_tautology(parse("forall x P(x) -> forall y P(y)"))


@settings(max_examples=60, deadline=None)
@given(formulas(modal=True, plural=False, max_leaves=6))
def test_excluded_middle_always_tautology(f):
    assert is_tautology(Or(f, Not(f)))


@pytest.mark.parametrize("entry", corpus_entries(), ids=lambda e: e.file)
def test_corpus_entry_verdict(entry):
    v = entry.check()
    assert entry.matches(v), str(v)


def test_corpus_size():
    entries = corpus_entries()
    pos = [e for e in entries if e.expect == "accepted"]
    neg = [e for e in entries if e.expect == "rejected"]
    assert len(pos) >= 12 and len(neg) >= 4
    assert all(ok for _, _, ok in run_corpus())


def test_rejections_name_first_bad_line():
    text = "1. P(a) -> []D <>D P(a) ; schema B-D {phi := P(a)}\n"
    v = check_derivation(parse_derivation(text), system("BM-FOL"))
    assert (v.accepted, v.bad_line) == (False, 1)
    assert "not in its inventory" in v.reason
    v = check_derivation(parse_derivation("1. P(a) ; schema Nope\n"), system("BM-FOL"))
    assert v.reason == "unknown schema Nope"


def test_rs_toggle_changes_verdict():
    text = "1. []G P(a) -> []D P(a) ; schema RS {phi := P(a)}\n"
    d = parse_derivation(text)
    assert not check_derivation(d, system("BM-FOL")).accepted
    assert check_derivation(d, system("BM-FOL", reverse_subsumption=True)).accepted


def test_intuitionistic_base_has_no_truth_tables():
    d = parse_derivation("1. P(a) | ~P(a) ; taut\n")
    assert check_derivation(d, system("BM-FOL")).accepted
    v = check_derivation(d, system("I-FOL"))
    assert not v.accepted and v.bad_line == 1


def test_necessitation_respects_premises():
    d = parse_derivation("1. P(a) ; premise\n2. []D P(a) ; necD 1\n")
    v = check_derivation(d, system("BM-FOL"))
    assert v.bad_line == 2 and "premise" in v.reason
    v = check_derivation(parse_derivation("1. P(a) | ~P(a) ; taut\n2. []G (P(a) | ~P(a)) ; necG 1\n"),
                         system("S4-FOL"))
    assert v.bad_line == 2


def test_gen_and_dependencies():
    d = parse_derivation("1. P(x) ; premise\n2. forall x P(x) ; gen 1 x\n")
    assert check_derivation(d, system("BM-FOL")).bad_line == 2
    d = parse_derivation("1. P(a) ; premise\n2. P(a) -> R(a,a) ; premise\n3. R(a,a) ; mp 1 2\n"
                         "4. forall x R(a,a) ; gen 3 x\n")
    v = check_derivation(d, system("BM-FOL"))
    assert v.accepted and v.depends_on == {1, 2}


def test_syntax_errors_carry_line():
    with pytest.raises(DerivationSyntaxError) as e:
        parse_derivation("1. P(a) ; premise\n3. P(a) ; premise\n")
    assert e.value.line == 2
    with pytest.raises(DerivationSyntaxError):
        parse_derivation("1. P(a) ; frobnicate\n")
    with pytest.raises(DerivationSyntaxError):
        parse_derivation("1. P(a ; premise\n")


def test_render_round_trip():
    entry = next(e for e in corpus_entries() if e.file == "subsump_chain_mp.prf")
    d = parse_derivation(entry.path.read_text())
    again = parse_derivation(d.render())
    assert [l.formula for l in again.lines] == [l.formula for l in d.lines]
    assert check_derivation(again, entry.spec()).accepted


def test_soundness_bridge():
    """Premise-free theorems of the classical bimodal rows hold on every bounded model."""
    concl = []
    for e in corpus_entries():
        if e.expect != "accepted" or e.system not in ("BM-FOL", "S4-FOL") or e.reverse_subsumption:
            continue
        v = e.check()
        if not v.depends_on:
            concl.append((e.file, v.conclusion))
    assert len(concl) >= 8
    sig = signature_for([f for _, f in concl])
    results, _ = run_checks([valid(n, f) for n, f in concl], sig, SearchBounds(max_worlds=3, max_domain=2))
    assert [r.check.label for r in results if not r.ok] == []
