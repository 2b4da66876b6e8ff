import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strictpot.formula import (
    And, Atom, BoxD, Const, Eq, ExistsS, ForallP, ForallS, Implies, Language, Not, Or, PVar,
    ParseError, Prec, Signature, SortError, UnknownSymbolError, Var, alpha_eq, canonical,
    classify_language, depth, free_vars, infer_signature, parse, parse_term, render, substitute,
    substitute_many,
)
from strategies import formulas, sterm, svar


def test_parse_basic_shapes():
    f = parse("forall x (P(x) -> exists y R(x,y))")
    assert isinstance(f, ForallS) and f.var == Var("x")
    assert isinstance(f.body, Implies)
    assert parse("P(a)") == Atom("P", (Const("a"),))
    assert parse("x pc xx") == Prec(Var("x"), PVar("xx"))
    assert parse("x != y") == Not(Eq(Var("x"), Var("y")))


def test_precedence_and_associativity():
    assert parse("P(a) & Q(a) | R(a)") == Or(And(parse("P(a)"), parse("Q(a)")), parse("R(a)"))
    f = parse("P(a) -> Q(a) -> R(a)")
    assert isinstance(f.right, Implies)
    assert parse("~P(a) & Q(a)").left == Not(parse("P(a)"))
    assert parse("[]D P(a) -> P(a)").left == BoxD(parse("P(a)"))


def test_iff_expands_to_two_implications():
    f = parse("P(a) <-> Q(a)")
    assert f == And(Implies(parse("P(a)"), parse("Q(a)")), Implies(parse("Q(a)"), parse("P(a)")))


def test_restricted_quantifiers():
    f = parse("forall x pc xx P(x)")
    assert f == ForallS(Var("x"), Implies(Prec(Var("x"), PVar("xx")), parse("P(x)")))
    g = parse("forallp yy sub xx P(a)")
    assert isinstance(g, ForallP) and isinstance(g.body.left, ForallS)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as e:
        parse("P(a) & & Q(a)")
    assert e.value.col == 8
    with pytest.raises(ParseError):
        parse("forall a P(a)")
    with pytest.raises(SortError):
        parse("P(xx) & P(x)")


def test_closed_signature_rejects_unknown_predicates():
    sig = Signature({"P": ("s",)}, {"a"})
    assert parse("P(a)", sig) == Atom("P", (Const("a"),))
    with pytest.raises(UnknownSymbolError):
        parse("Q(a)", sig)


def test_free_variable_restriction():
    assert parse("exists x P(x)", free=[]) is not None
    with pytest.raises(UnknownSymbolError):
        parse("P(x)", free=[])


def test_languages():
    assert classify_language(parse("P(a)")) is Language.L
    assert classify_language(parse("[]D P(a)")) is Language.LD
    assert classify_language(parse("<>G P(a)")) is Language.LG
    assert classify_language(parse("[]D <>G P(a)")) is Language.LBM
    assert Language.L <= Language.LG and not Language.LD <= Language.LG


def test_substitution_avoids_capture():
    f = parse("exists y R(x,y)")
    g = substitute(f, Var("x"), Var("y"))
    assert Var("y") in free_vars(g)
    assert isinstance(g, ExistsS) and g.var != Var("y")


def test_simultaneous_substitution_swaps():
    f = parse("R(x,y)")
    assert substitute_many(f, {Var("x"): Var("y"), Var("y"): Var("x")}) == parse("R(y,x)")


def test_alpha_equivalence():
    assert alpha_eq(parse("forall x P(x)"), parse("forall y P(y)"))
    assert not alpha_eq(parse("forall x R(x,y)"), parse("forall y R(y,y)"))


def test_infer_signature():
    sig = infer_signature([parse("P(a) & R(x,b) & Set(xx,x)")])
    assert sig.predicates == {"P": ("s",), "R": ("s", "s"), "Set": ("p", "s")}
    assert sig.constants == {"a", "b"}


def test_depth_counts_atoms_as_one():
    assert depth(parse("P(a)")) == 1
    assert depth(parse("~[]D P(a)")) == 3


@settings(max_examples=300, deadline=None)
@given(formulas())
def test_render_parse_round_trip(f):
    assert parse(render(f)) == f


@settings(max_examples=200, deadline=None)
@given(formulas(), svar, sterm)
def test_substitution_removes_the_variable(f, v, t):
    g = substitute(f, v, t)
    if t != v:
        assert v not in free_vars(g)
    if v not in free_vars(f):
        assert g == f


@settings(max_examples=200, deadline=None)
@given(formulas())
def test_canonical_is_alpha_invariant(f):
    g = f
    if isinstance(f, ForallS):
        g = ForallS(Var("w9"), substitute(f.body, f.var, Var("w9"))) if Var("w9") not in free_vars(f) else f
    assert alpha_eq(f, g)
    assert canonical(f) == canonical(g)


def test_parse_term():
    assert parse_term("a") == Const("a")
    assert parse_term("xx") == PVar("xx")
    assert parse_term("x") == Var("x")
