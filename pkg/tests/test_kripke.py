import pytest

from strictpot.formula import PVar, Signature, Var, parse
from strictpot.kripke import (
    BimodalFrame, BimodalModel, EvaluationError, ModelFileError, chain_frame, eval_classical,
    eval_forcing, eval_is42, excluded_middle_model, is_valid, parse_assignment, parse_model,
    powerset_model, render_model, spectrum, validate_frame, validate_model,
)
from strictpot.search import is42_countermodel
from strictpot.translate import star

EM = excluded_middle_model()


def test_excluded_middle_is_not_forced():
    f = parse("P(a) | ~P(a)")
    assert eval_forcing(EM, "w0", {}, f) is False
    assert eval_classical(EM, "w0", {}, f) is True
    assert eval_forcing(EM, "w1", {}, f) is True


def test_d_modalities_on_the_chain():
    assert eval_classical(EM, "w0", {}, parse("<>D P(a)"))
    assert not eval_classical(EM, "w0", {}, parse("[]D P(a)"))
    assert not eval_classical(EM, "w0", {}, parse("<>G P(a)"))


def test_spectrum_of_the_chain():
    sp = spectrum(EM, "w0", [parse("P(a)")])
    assert sp.possG == frozenset()
    assert sp.possD == {parse("P(a)")}
    assert sp.band == {parse("P(a)")}


def test_forcing_matches_star_on_stock_model():
    for text in ["P(a) | ~P(a)", "~~P(a) -> P(a)", "exists x P(x)", "forall x ~~P(x)"]:
        f = parse(text)
        for w in EM.worlds:
            assert eval_forcing(EM, w, {}, f) == eval_classical(EM, w, {}, star(f))


def test_mixed_convergence_violation_reported():
    fr = BimodalFrame.build(["w0", "w1", "w2"], {("w0", "w1"), ("w0", "w2")}, {("w0", "w1")},
                            {w: {"a"} for w in ["w0", "w1", "w2"]})
    conds = {v.condition for v in validate_frame(fr)}
    assert "mixed-convergence" in conds


def test_domain_monotonicity_and_g_within_d():
    fr = BimodalFrame.build(["u", "v"], {("u", "v")}, {("v", "u")}, {"u": {"a", "b"}, "v": {"a"}})
    conds = {v.condition for v in validate_frame(fr)}
    assert {"domain-monotone", "G-within-D"} <= conds


def test_g_stability_violation():
    fr = chain_frame(2, g_identity=False)
    m = BimodalModel(fr, Signature({"P": ("s",)}, {"a"}), {("w0", "P"): {("a",)}})
    assert not is_valid(m)
    assert any(v.condition == "G-stability" for v in validate_model(m))


def test_assignment_checks():
    with pytest.raises(EvaluationError):
        eval_classical(EM, "w0", {Var("x"): "zz9"}, parse("P(x)"))
    with pytest.raises(EvaluationError):
        eval_classical(EM, "w0", {}, parse("P(x)"))


def test_plural_rigidity():
    fr = chain_frame(2, dom={"w0": {"a"}, "w1": {"a", "b"}}, g_identity=False)
    m = BimodalModel(fr, Signature({}, {"a"}), {})
    a = {PVar("xx"): frozenset({"a"})}
    assert eval_classical(m, "w0", a, parse("a pc xx -> []D a pc xx"))
    assert eval_classical(m, "w0", {}, parse("forallp xx forall x (x pc xx -> []D x pc xx)"))


def test_trace_is_preorder():
    trace = []
    eval_forcing(EM, "w0", {}, parse("P(a) | ~P(a)"), trace)
    assert trace[0][0] == 0 and trace[0][1].endswith("false")
    assert "|-" in trace[0][1]
    assert all(d >= 1 for d, _ in trace[1:])


def test_model_file_round_trip():
    text = render_model(EM)
    loaded = parse_model(text)
    assert loaded.violations == []
    assert loaded.model == EM
    assert render_model(loaded.model) == text


def test_model_file_errors_name_lines():
    with pytest.raises(ModelFileError) as e:
        parse_model("worlds: w0\nbogus: 1\n")
    assert e.value.line == 2
    loaded = parse_model("worlds: w0 w1\nleqD: w0<=w1\nleqG: w1<=w0\ndom w0: a\ndom w1: a\n")
    report = "\n".join(loaded.report())
    assert "G-within-D" in report and "line 3" in report


def test_parse_assignment():
    a = parse_assignment("x=a, xx={a b}")
    assert a == {Var("x"): "a", PVar("xx"): frozenset({"a", "b"})}


def test_is42_countermodel_refutes_phi0_stability():
    m, w = is42_countermodel()
    phi0 = "~exists x ~(x = a)"
    assert eval_is42(m, w, {}, parse(phi0))
    assert not eval_is42(m, w, {}, parse(f"{phi0} -> []G ({phi0})"))
    assert eval_is42(m, w, {}, parse("P(a) -> []G P(a)")) if "P" in m.sig.predicates else True


def test_powerset_model_is_valid():
    sig = Signature({"P": ("s",)})
    m = powerset_model({"a", "b"}, sig, {"P": {("a",)}})
    assert is_valid(m)
    assert len(m.worlds) == 4
    assert eval_classical(m, "{}", {}, parse("<>G exists x P(x)"))
