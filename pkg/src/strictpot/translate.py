"""Translations between L, L^D, L^G and L^BM.

Forward translations (all structurally recursive, no simplification)::

    godel                  L   -> L^D    atoms, ->, ~, forall get []D
    potentialist           L   -> L^G    forall -> []G forall, exists -> <>G exists
    star                   L   -> L^BM   godel, but exists -> <>G exists
    extended_godel         L^G -> L^BM   <>G p -> <>G p^g, []G p -> []D p^g
    extended_potentialist  L^D -> L^BM   quantifiers G-modalised, []D kept

``reverse`` maps plural L^BM formulas to non-modal plural formulas
(plus []D for the D-modality), relativised to an anchor plurality.
``normalize`` is the optional simplifier.
"""
from __future__ import annotations

from .formula import (
    ATOMIC, And, Atom, Binary, BoxD, BoxG, DiaD, DiaG, Eq, ExistsP, ExistsS,
    ForallP, ForallS, Formula, FormulaError, Implies, Language, Not, Or, PVar,
    Prec, Quant, Unary, Var, all_names, classify_language, exists_sub, exists_sup,
    forall_sub, forall_sup, free_vars, fresh_name, included, substitute,
)


class LanguageError(FormulaError):
    """Input formula is outside the source language of a translation."""


def _require(f: Formula, allowed: Language, name: str):
    lang = classify_language(f)
    if not lang <= allowed:
        raise LanguageError(f"{name} expects a formula of {allowed.value}, got {lang.value}: {f}")


# ---------------------------------------------------------------- Gödel


def godel(f: Formula) -> Formula:
    _require(f, Language.L, "godel")
    return _godel(f, exists_g=False)


def star(f: Formula) -> Formula:
    _require(f, Language.L, "star")
    return _godel(f, exists_g=True)


def extended_godel(f: Formula) -> Formula:
    _require(f, Language.LG, "extended_godel")
    return _godel(f, exists_g=False)


def _godel(f, exists_g):
    if isinstance(f, ATOMIC):
        return BoxD(f)
    if isinstance(f, Not):
        return BoxD(Not(_godel(f.body, exists_g)))
    if isinstance(f, Implies):
        return BoxD(Implies(_godel(f.left, exists_g), _godel(f.right, exists_g)))
    if isinstance(f, (And, Or)):
        return type(f)(_godel(f.left, exists_g), _godel(f.right, exists_g))
    if isinstance(f, (ForallS, ForallP)):
        return BoxD(type(f)(f.var, _godel(f.body, exists_g)))
    if isinstance(f, (ExistsS, ExistsP)):
        q = type(f)(f.var, _godel(f.body, exists_g))
        return DiaG(q) if exists_g else q
    # modal clauses only reachable from extended_godel
    if isinstance(f, DiaG):
        return DiaG(_godel(f.body, exists_g))
    if isinstance(f, BoxG):
        return BoxD(_godel(f.body, exists_g))
    raise LanguageError(f"no Gödel clause for {type(f).__name__}")


# ---------------------------------------------------------------- potentialist


def potentialist(f: Formula) -> Formula:
    _require(f, Language.L, "potentialist")
    return _pot(f)


def extended_potentialist(f: Formula) -> Formula:
    _require(f, Language.LD, "extended_potentialist")
    return _pot(f)


def _pot(f):
    if isinstance(f, ATOMIC):
        return f
    if isinstance(f, Unary):
        # Not, and the D-modalities of extended_potentialist
        return type(f)(_pot(f.body))
    if isinstance(f, Binary):
        return type(f)(_pot(f.left), _pot(f.right))
    if isinstance(f, (ForallS, ForallP)):
        return BoxG(type(f)(f.var, _pot(f.body)))
    if isinstance(f, (ExistsS, ExistsP)):
        return DiaG(type(f)(f.var, _pot(f.body)))
    raise LanguageError(f"no potentialist clause for {type(f).__name__}")


def composite_via_d(f: Formula) -> Formula:
    """L -> L^D -> L^BM: Gödel first, then the extended potentialist translation."""
    return extended_potentialist(godel(f))


def composite_via_g(f: Formula) -> Formula:
    """L -> L^G -> L^BM: potentialist first, then the extended Gödel translation."""
    return extended_godel(potentialist(f))


# ---------------------------------------------------------------- reverse


def reverse(f: Formula, anchor: PVar) -> Formula:
    """Relativise a plural bimodal formula to the plurality ``anchor``.

    G-modalities become quantifiers over super-pluralities of the anchor;
    []D becomes a box over such a quantifier.  Singular quantifiers are
    restricted to members of the current anchor, plural ones to its
    sub-pluralities.
    """
    if not isinstance(anchor, PVar):
        raise FormulaError(f"anchor must be a plural variable, got {anchor!r}")
    if anchor.name in all_names(f):
        raise FormulaError(f"anchor {anchor.name} occurs in {f}")
    avoid = all_names(f) | {anchor.name}
    return _rev(f, anchor, avoid)


def _fresh_plural(avoid, base="yy"):
    name = base if base not in avoid else fresh_name(base, avoid)
    avoid.add(name)
    return PVar(name)


def _rev(f, xx, avoid):
    if isinstance(f, ATOMIC):
        return f
    if isinstance(f, Not):
        return Not(_rev(f.body, xx, avoid))
    if isinstance(f, Binary):
        return type(f)(_rev(f.left, xx, avoid), _rev(f.right, xx, avoid))
    if isinstance(f, ExistsS):
        return ExistsS(f.var, And(Prec(f.var, xx), _rev(f.body, xx, avoid)))
    if isinstance(f, ForallS):
        return ForallS(f.var, Implies(Prec(f.var, xx), _rev(f.body, xx, avoid)))
    if isinstance(f, ExistsP):
        return exists_sub(f.var, xx, _rev(f.body, xx, avoid))
    if isinstance(f, ForallP):
        return forall_sub(f.var, xx, _rev(f.body, xx, avoid))
    if isinstance(f, (BoxG, DiaG, BoxD, DiaD)):
        yy = _fresh_plural(avoid)
        inner = _rev(f.body, yy, avoid)
        if isinstance(f, BoxG):
            return forall_sup(yy, xx, inner)
        if isinstance(f, DiaG):
            return exists_sup(yy, xx, inner)
        if isinstance(f, BoxD):
            return BoxD(forall_sup(yy, xx, inner))
        return DiaD(exists_sup(yy, xx, inner))
    raise LanguageError(f"no reverse clause for {type(f).__name__}")


# ---------------------------------------------------------------- normalizer


def normalize(f: Formula) -> Formula:
    """Collapse iterated like modalities and vacuous plural relativisations.

    Both rewrites are equivalences on the intended frames: like modalities
    are S4 (so []D[]D p <-> []D p), and a quantifier over super- or
    sub-pluralities of xx whose variable does not occur in the body is
    witnessed by xx itself.
    """
    if isinstance(f, ATOMIC):
        return f
    if isinstance(f, Unary):
        body = normalize(f.body)
        if type(body) is type(f) and not isinstance(f, Not):
            return body
        return type(f)(body)
    if isinstance(f, Binary):
        return type(f)(normalize(f.left), normalize(f.right))
    if isinstance(f, Quant):
        body = normalize(f.body)
        vac = _vacuous_relativisation(type(f), f.var, body)
        if vac is not None:
            return vac
        return type(f)(f.var, body)
    raise TypeError(f"not a formula: {f!r}")


def _is_inclusion(g, left, right):
    if not isinstance(g, ForallS):
        return False
    z = g.var
    return g.body == Implies(Prec(z, left), Prec(z, right))


def _vacuous_relativisation(cls, yy, body):
    if not isinstance(yy, PVar):
        return None
    if cls is ForallP and isinstance(body, Implies):
        guard, rest = body.left, body.right
    elif cls is ExistsP and isinstance(body, And):
        guard, rest = body.left, body.right
    else:
        return None
    if yy in free_vars(rest):
        return None
    if not isinstance(guard, ForallS) or not isinstance(guard.body, Implies):
        return None
    lhs, rhs = guard.body.left, guard.body.right
    if not (isinstance(lhs, Prec) and isinstance(rhs, Prec)):
        return None
    other = rhs.plural if lhs.plural == yy else lhs.plural if rhs.plural == yy else None
    if other is None or other == yy:
        return None
    if _is_inclusion(guard, yy, other) or _is_inclusion(guard, other, yy):
        return rest
    return None


TRANSLATIONS = {
    "godel": godel,
    "pot": potentialist,
    "star": star,
    "ext-godel": extended_godel,
    "ext-pot": extended_potentialist,
}
