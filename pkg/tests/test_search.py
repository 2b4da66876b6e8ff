import json

import pytest

from strictpot.formula import Signature, parse
from strictpot.kripke import eval_classical, eval_forcing, excluded_middle_model, validate_frame, validate_model
from strictpot.search import (
    CLASSICAL, FORCING, SUITES, ModelFlags, SearchBounds, agree, check_link_suite, enumerate_models,
    find_countermodel, run_checks, run_property_suite, signature_for, space_size, valid,
)
from strictpot.search.frames import mixed_convergent, preorders
from strictpot.search.pools import LINK_SIG, singular_pool

P1 = Signature({"P": ("s",)})
TINY = SearchBounds(max_worlds=2, max_domain=1)


def test_bounds_must_be_positive():
    with pytest.raises(ValueError):
        SearchBounds(max_worlds=0)
    with pytest.raises(ValueError):
        SearchBounds(max_individuals=0)


def test_one_world_one_individual():
    b = SearchBounds(max_worlds=1, max_domain=1)
    models = list(enumerate_models(P1, b))
    assert len(models) == 2
    assert space_size(P1, b) == {"frames": 1, "models": 2}
    exts = sorted(len(m.interp.get((m.worlds[0], "P"), ())) for m in models)
    assert exts == [0, 1]


def test_preorder_counts():
    # labelled preorders on 1, 2, 3 points
    assert [len(preorders(n)) for n in (1, 2, 3)] == [1, 4, 29]


def test_stream_contains_excluded_middle_countermodel():
    em = excluded_middle_model()
    sig = Signature({"P": ("s",)}, {"a"})
    b = SearchBounds(max_worlds=2, max_domain=1, g_identity=True)
    f = parse("P(a) | ~P(a)")
    hits = [m for m in enumerate_models(sig, b)
            if len(m.worlds) == 2 and not eval_forcing(m, m.worlds[0], {}, f)]
    assert hits
    m = hits[0]
    assert [len(m.interp.get((w, "P"), ())) for w in m.worlds] == [0, 1]
    assert eval_forcing(em, "w0", {}, f) is False


def test_every_model_is_valid_and_mixed_convergent():
    b = SearchBounds(max_worlds=3, max_domain=1)
    n = 0
    for m in enumerate_models(P1, b):
        n += 1
        assert validate_frame(m.frame) == []
        assert validate_model(m) == []
    assert n == space_size(P1, b)["models"]


def test_mixed_convergence_filter():
    # D-chain 0<1, 0<2 with G adding only 0<1: world 2 has no D-extension of 1
    d = frozenset({(0, 1), (0, 2)})
    g = frozenset({(0, 1)})
    assert not mixed_convergent(d | {(i, i) for i in range(3)}, g | {(i, i) for i in range(3)}, 3)
    assert mixed_convergent(d | {(i, i) for i in range(3)}, frozenset((i, i) for i in range(3)), 3)


def test_enumeration_is_deterministic():
    a = [m for m in enumerate_models(P1, TINY)]
    b = [m for m in enumerate_models(P1, TINY)]
    assert a == b


FORMULAS = ["P(a) -> []D <>D P(a)", "<>D []D P(a) -> []D <>D P(a)", "[]G P(a) -> []D P(a)",
            "<>G []D P(a) -> []D <>G P(a)", "exists x P(x) -> []G exists x P(x)",
            "<>D forall x P(x) -> forall x <>D P(x)"]


def test_pruning_preserves_verdicts():
    fs = [parse(t) for t in FORMULAS]
    sig = signature_for(fs)
    checks = [valid(t, f) for t, f in zip(FORMULAS, fs)]
    b = SearchBounds(max_worlds=3, max_domain=2, max_individuals=2)
    pruned, sp = run_checks(checks, sig, b)
    full, sf = run_checks(checks, sig, SearchBounds(max_worlds=3, max_domain=2, max_individuals=2, prune=False))
    assert sf.models > sp.models
    assert [r.ok for r in pruned] == [r.ok for r in full]


def test_batch_agrees_with_single_model_evaluation():
    texts = ["P(x) -> []D P(x)", "exists y R(x,y)", "forall y (R(x,y) | ~R(x,y))", "<>G ~P(x)",
             "[]D exists y R(y,x)", "~~P(x) -> P(x)"]
    fs = [parse(t) for t in texts]
    b = SearchBounds(max_worlds=2, max_domain=2)
    checks = [valid(t, f, CLASSICAL) for t, f in zip(texts, fs)]
    checks += [valid(t, f, FORCING) for t, f in zip(texts, fs) if "[]" not in t and "<>" not in t]
    results, stats = run_checks(checks, LINK_SIG, b)
    x = parse("P(x)").args[0]
    for c, r in zip(checks, results):
        ev = eval_classical if c.modes[0] == CLASSICAL else eval_forcing
        bad = 0
        for m in enumerate_models(LINK_SIG, b):
            if any(not ev(m, w, {x: d}, c.formulas[0]) for w in m.worlds for d in m.frame.dom[w]):
                bad += 1
        assert (bad == 0) == r.ok, c.label
    assert stats.models == space_size(LINK_SIG, b)["models"]


def test_witness_replays():
    f = parse("exists y R(x,y)")
    (r,), _ = run_checks([valid("ser", f)], LINK_SIG, TINY)
    w = r.witness
    assert w is not None
    assert eval_classical(w.model, w.world, w.assignment, f) is False


def test_forcing_needs_modal_free():
    with pytest.raises(ValueError):
        run_checks([valid("bad", parse("[]D P(a)"), FORCING)], P1, TINY)


@pytest.mark.parametrize("text,worlds", [("P(a) -> []D <>D P(a)", 2), ("<>D []D P(a) -> []D <>D P(a)", 3),
                                         ("~exists x ~(x = a) -> []G <>G ~exists x ~(x = a)", 3)])
def test_countermodels_found(text, worlds):
    res = find_countermodel(parse(text), CLASSICAL)
    assert res.found and res.replayed
    assert len(res.model.worlds) <= worlds
    assert eval_classical(res.model, res.world, res.assignment, parse(text)) is False


def test_mixed2_exhausts():
    res = find_countermodel(parse("<>G []D P(a) -> []D <>G P(a)"), CLASSICAL)
    assert not res.found
    assert "not a validity proof" in res.text()
    assert res.space["frames"] > 0


def test_forcing_countermodel_to_excluded_middle():
    res = find_countermodel(parse("P(a) | ~P(a)"), FORCING)
    assert res.found and len(res.model.worlds) == 2
    assert eval_forcing(res.model, res.world, {}, parse("P(a) | ~P(a)")) is False


def test_first_countermodel_is_deterministic():
    f = parse("<>D []D P(a) -> []D <>D P(a)")
    assert find_countermodel(f).text() == find_countermodel(f).text()


def test_link_small_bounds():
    rep = check_link_suite(SearchBounds(max_worlds=2, max_domain=2))
    assert rep.ok
    assert rep.summary.startswith("0 mismatches")


def test_identity_frames_make_forcing_classical():
    pool = singular_pool(depth=2)
    b = SearchBounds(max_worlds=1, max_domain=2)
    checks = [agree(str(i), f, FORCING, f, CLASSICAL) for i, f in enumerate(pool)]
    results, _ = run_checks(checks, LINK_SIG, b)
    assert all(r.ok for r in results)


def test_rs_failure_two_worlds():
    rep = run_property_suite("rs-failure", SearchBounds())
    assert rep.ok
    assert "2 worlds" in rep.records[0].outcome


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_property_suite("nope")
    assert "ed-id" in SUITES


@pytest.mark.parametrize("name", ["failures", "unfaithful", "dec-prec"])
def test_quick_suites_pass(name):
    rep = run_property_suite(name, SearchBounds())
    assert rep.ok, rep.text(verbose=True)
    data = json.loads(rep.to_json())
    assert data["suite"] == name if "suite" in data else data["name"] == name
    assert all(r["verdict"] == "pass" for r in data["records"])


def test_g_stability_flag_enlarges_space():
    b = SearchBounds(max_worlds=2, max_domain=1)
    assert space_size(P1, b, ModelFlags(g_stable=False))["models"] > space_size(P1, b)["models"]
