import pytest
from hypothesis import given, settings

from strictpot.formula import FormulaError, Language, PVar, Var, classify_language, parse, render
from strictpot.translate import (
    LanguageError, composite_via_d, composite_via_g, extended_godel, extended_potentialist, godel,
    normalize, potentialist, reverse, star,
)
from strictpot.formula import size
from strategies import formulas


def r(fn, text):
    return render(fn(parse(text)))


def test_atomic_clauses():
    assert r(godel, "P(a)") == "[]D P(a)"
    assert r(potentialist, "P(a)") == "P(a)"
    assert r(star, "P(a)") == "[]D P(a)"


def test_quantifier_clauses():
    assert r(star, "exists x P(x)") == "<>G exists x []D P(x)"
    assert r(godel, "exists x P(x)") == "exists x []D P(x)"
    assert r(potentialist, "forall x P(x)") == "[]G forall x P(x)"
    assert r(potentialist, "exists x P(x)") == "<>G exists x P(x)"
    assert r(godel, "forall x P(x)") == "[]D forall x []D P(x)"


def test_connectives():
    assert r(godel, "P(a) -> Q(a)") == "[]D ([]D P(a) -> []D Q(a))"
    assert r(godel, "~P(a)") == "[]D ~[]D P(a)"
    assert r(godel, "P(a) & Q(a)") == "[]D P(a) & []D Q(a)"


def test_extended_translations():
    assert r(extended_godel, "[]G P(a)") == "[]D []D P(a)"
    assert r(extended_godel, "<>G P(a)") == "<>G []D P(a)"
    assert r(extended_potentialist, "[]D exists x P(x)") == "[]D <>G exists x P(x)"
    assert r(extended_godel, "P(a) -> []G P(a)") == "[]D ([]D P(a) -> []D []D P(a))"


def test_wrong_source_language():
    with pytest.raises(LanguageError):
        extended_godel(parse("[]D P(a)"))
    with pytest.raises(LanguageError):
        godel(parse("<>G P(a)"))
    with pytest.raises(LanguageError):
        extended_potentialist(parse("<>G P(a)"))


def test_reverse_and_normalize():
    assert render(normalize(reverse(parse("<>G existsp zz P(z)"), PVar("aa")))) == "P(z)"
    assert render(normalize(reverse(parse("[]D P(a)"), PVar("aa")))) == "[]D P(a)"
    with pytest.raises(FormulaError):
        reverse(parse("P(a)"), Var("x"))
    with pytest.raises(FormulaError):
        reverse(parse("x pc aa"), PVar("aa"))


@settings(max_examples=200, deadline=None)
@given(formulas(modal=False))
def test_target_languages(f):
    assert classify_language(godel(f)) <= Language.LD
    assert classify_language(potentialist(f)) <= Language.LG
    assert classify_language(star(f)) <= Language.LBM
    assert classify_language(composite_via_d(f)) <= Language.LBM
    assert classify_language(composite_via_g(f)) <= Language.LBM


@settings(max_examples=100, deadline=None)
@given(formulas(modal=False))
def test_translation_growth_is_linear(f):
    assert size(godel(f)) <= 3 * size(f)
    assert size(star(f)) <= 3 * size(f)
