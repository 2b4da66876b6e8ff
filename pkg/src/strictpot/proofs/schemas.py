"""Axiom schemas.

A schema is a named builder from metavariable bindings to a formula.
Metavariables have kinds: ``formula`` (phi, psi, chi, theta), ``var``
(singular variables x, y), ``term`` (singular terms t) and ``pvar``
(plural variables xx, yy, zz, aa).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..formula import (
    ATOMIC, And, Atom, BoxD, BoxG, DiaD, DiaG, Eq, ExistsP, ExistsS, ForallP,
    ForallS, Formula, FormulaError, Implies, Not, Or, PVar, Prec, Term, Var,
    all_names, exists_pc, exists_sub, forall_pc, forall_sub, free_vars,
    fresh_name, iff, included, is_modal_free, member, substitute,
)

FORMULA, VAR, TERM, PVAR = "formula", "var", "term", "pvar"


class SchemaError(FormulaError):
    """Bad instantiation: missing metavariable, wrong kind, or side condition."""


@dataclass(frozen=True)
class Schema:
    id: str
    display: str
    metavars: tuple  # (name, kind) pairs
    build: Callable = field(compare=False)
    side: Callable | None = field(default=None, compare=False)
    note: str = ""

    def instantiate(self, args: dict) -> Formula:
        missing = [n for n, _ in self.metavars if n not in args]
        if missing:
            raise SchemaError(f"{self.id}: missing metavariable {', '.join(missing)}")
        extra = set(args) - {n for n, _ in self.metavars}
        if extra:
            raise SchemaError(f"{self.id}: unknown metavariable {', '.join(sorted(extra))}")
        for name, kind in self.metavars:
            _check_kind(self.id, name, kind, args[name])
        if self.side is not None:
            problem = self.side(args)
            if problem:
                raise SchemaError(f"{self.id}: side condition violated: {problem}")
        return self.build(args)


def _check_kind(sid, name, kind, value):
    ok = {
        FORMULA: isinstance(value, Formula),
        VAR: isinstance(value, Var),
        TERM: isinstance(value, Term) and not isinstance(value, PVar),
        PVAR: isinstance(value, PVar),
    }[kind]
    if not ok:
        raise SchemaError(f"{sid}: {name} must be a {kind}, got {value}")


REGISTRY: dict = {}


def schema(id, display, metavars, build, side=None, note=""):
    s = Schema(id, display, tuple(metavars), build, side, note)
    if id in REGISTRY:
        raise ValueError(f"duplicate schema {id}")
    REGISTRY[id] = s
    return s


def get(id: str) -> Schema:
    try:
        return REGISTRY[id]
    except KeyError:
        raise SchemaError(f"unknown schema {id}") from None


F = [("phi", FORMULA)]
FP = [("phi", FORMULA), ("psi", FORMULA)]
FPC = [("phi", FORMULA), ("psi", FORMULA), ("chi", FORMULA)]


def _not_free(var_key, f_key):
    def side(a):
        if a[var_key] in free_vars(a[f_key]):
            return f"{a[var_key].name} occurs free in {f_key}"
        return None
    return side


def _atomic(a):
    return None if isinstance(a["phi"], ATOMIC) else "phi must be atomic"


def _modal_free(a):
    return None if is_modal_free(a["phi"]) else "phi must be modal-free"


def _fresh_var(avoid, base="z", plural=False):
    name = base if base not in avoid else fresh_name(base, avoid)
    avoid.add(name)
    return PVar(name) if plural else Var(name)


# ---------------------------------------------------------------- intuitionistic propositional base

schema("I1", "phi -> (psi -> phi)", FP, lambda a: Implies(a["phi"], Implies(a["psi"], a["phi"])))
schema("I2", "(phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))", FPC,
       lambda a: Implies(Implies(a["phi"], Implies(a["psi"], a["chi"])),
                         Implies(Implies(a["phi"], a["psi"]), Implies(a["phi"], a["chi"]))))
schema("I3", "phi & psi -> phi", FP, lambda a: Implies(And(a["phi"], a["psi"]), a["phi"]))
schema("I4", "phi & psi -> psi", FP, lambda a: Implies(And(a["phi"], a["psi"]), a["psi"]))
schema("I5", "phi -> (psi -> phi & psi)", FP, lambda a: Implies(a["phi"], Implies(a["psi"], And(a["phi"], a["psi"]))))
schema("I6", "phi -> phi | psi", FP, lambda a: Implies(a["phi"], Or(a["phi"], a["psi"])))
schema("I7", "psi -> phi | psi", FP, lambda a: Implies(a["psi"], Or(a["phi"], a["psi"])))
schema("I8", "(phi -> chi) -> ((psi -> chi) -> (phi | psi -> chi))", FPC,
       lambda a: Implies(Implies(a["phi"], a["chi"]), Implies(Implies(a["psi"], a["chi"]), Implies(Or(a["phi"], a["psi"]), a["chi"]))))
schema("I9", "(phi -> psi) -> ((phi -> ~psi) -> ~phi)", FP,
       lambda a: Implies(Implies(a["phi"], a["psi"]), Implies(Implies(a["phi"], Not(a["psi"])), Not(a["phi"]))))
schema("I10", "~phi -> (phi -> psi)", FP, lambda a: Implies(Not(a["phi"]), Implies(a["phi"], a["psi"])))

# ---------------------------------------------------------------- quantifiers and identity

schema("UI", "forall x phi -> phi[t/x]", [("phi", FORMULA), ("x", VAR), ("t", TERM)],
       lambda a: Implies(ForallS(a["x"], a["phi"]), substitute(a["phi"], a["x"], a["t"])))
schema("EG", "phi[t/x] -> exists x phi", [("phi", FORMULA), ("x", VAR), ("t", TERM)],
       lambda a: Implies(substitute(a["phi"], a["x"], a["t"]), ExistsS(a["x"], a["phi"])))
schema("Q-Dist", "forall x (psi -> phi) -> (psi -> forall x phi), x not free in psi",
       [("phi", FORMULA), ("psi", FORMULA), ("x", VAR)],
       lambda a: Implies(ForallS(a["x"], Implies(a["psi"], a["phi"])), Implies(a["psi"], ForallS(a["x"], a["phi"]))),
       _not_free("x", "psi"))
schema("Q-Exists", "forall x (phi -> psi) -> (exists x phi -> psi), x not free in psi",
       [("phi", FORMULA), ("psi", FORMULA), ("x", VAR)],
       lambda a: Implies(ForallS(a["x"], Implies(a["phi"], a["psi"])), Implies(ExistsS(a["x"], a["phi"]), a["psi"])),
       _not_free("x", "psi"))
schema("UI-P", "forallp xx phi -> phi[yy/xx]", [("phi", FORMULA), ("xx", PVAR), ("yy", PVAR)],
       lambda a: Implies(ForallP(a["xx"], a["phi"]), substitute(a["phi"], a["xx"], a["yy"])))
schema("EG-P", "phi[yy/xx] -> existsp xx phi", [("phi", FORMULA), ("xx", PVAR), ("yy", PVAR)],
       lambda a: Implies(substitute(a["phi"], a["xx"], a["yy"]), ExistsP(a["xx"], a["phi"])))
schema("Q-Dist-P", "forallp xx (psi -> phi) -> (psi -> forallp xx phi), xx not free in psi",
       [("phi", FORMULA), ("psi", FORMULA), ("xx", PVAR)],
       lambda a: Implies(ForallP(a["xx"], Implies(a["psi"], a["phi"])), Implies(a["psi"], ForallP(a["xx"], a["phi"]))),
       _not_free("xx", "psi"))
schema("Q-Exists-P", "forallp xx (phi -> psi) -> (existsp xx phi -> psi), xx not free in psi",
       [("phi", FORMULA), ("psi", FORMULA), ("xx", PVAR)],
       lambda a: Implies(ForallP(a["xx"], Implies(a["phi"], a["psi"])), Implies(ExistsP(a["xx"], a["phi"]), a["psi"])),
       _not_free("xx", "psi"))
schema("Refl", "t = t", [("t", TERM)], lambda a: Eq(a["t"], a["t"]))
schema("Leibniz", "s = t -> (phi[s/x] -> phi[t/x])", [("phi", FORMULA), ("x", VAR), ("s", TERM), ("t", TERM)],
       lambda a: Implies(Eq(a["s"], a["t"]), Implies(substitute(a["phi"], a["x"], a["s"]), substitute(a["phi"], a["x"], a["t"]))))
schema("Dec-eq", "s = t | ~s = t", [("s", TERM), ("t", TERM)],
       lambda a: Or(Eq(a["s"], a["t"]), Not(Eq(a["s"], a["t"]))))


# ---------------------------------------------------------------- classical normal modal logic


def _modal_family(tag, box, dia):
    schema(f"K-{tag}", f"[]{tag} (phi -> psi) -> ([]{tag} phi -> []{tag} psi)", FP,
           lambda a: Implies(box(Implies(a["phi"], a["psi"])), Implies(box(a["phi"]), box(a["psi"]))))
    schema(f"T-{tag}", f"[]{tag} phi -> phi", F, lambda a: Implies(box(a["phi"]), a["phi"]))
    schema(f"4-{tag}", f"[]{tag} phi -> []{tag} []{tag} phi", F, lambda a: Implies(box(a["phi"]), box(box(a["phi"]))))
    schema(f"Dual-{tag}", f"<>{tag} phi <-> ~[]{tag} ~phi", F, lambda a: iff(dia(a["phi"]), Not(box(Not(a["phi"])))))
    schema(f"CBF-{tag}", f"[]{tag} forall x phi -> forall x []{tag} phi", [("phi", FORMULA), ("x", VAR)],
           lambda a: Implies(box(ForallS(a["x"], a["phi"])), ForallS(a["x"], box(a["phi"]))))
    schema(f"CBF-{tag}-P", f"[]{tag} forallp xx phi -> forallp xx []{tag} phi", [("phi", FORMULA), ("xx", PVAR)],
           lambda a: Implies(box(ForallP(a["xx"], a["phi"])), ForallP(a["xx"], box(a["phi"]))))
    schema(f".2-{tag}", f"<>{tag} []{tag} phi -> []{tag} <>{tag} phi", F,
           lambda a: Implies(dia(box(a["phi"])), box(dia(a["phi"]))))
    schema(f"B-{tag}", f"phi -> []{tag} <>{tag} phi", F, lambda a: Implies(a["phi"], box(dia(a["phi"]))))
    schema(f"5-{tag}", f"<>{tag} phi -> []{tag} <>{tag} phi", F, lambda a: Implies(dia(a["phi"]), box(dia(a["phi"]))))


_modal_family("D", BoxD, DiaD)
_modal_family("G", BoxG, DiaG)

schema("Subsump", "[]D phi -> []G phi", F, lambda a: Implies(BoxD(a["phi"]), BoxG(a["phi"])))
schema("Mixed.2", "<>G []D phi -> []D <>G phi", F, lambda a: Implies(DiaG(BoxD(a["phi"])), BoxD(DiaG(a["phi"]))))
schema("RS", "[]G phi -> []D phi", F, lambda a: Implies(BoxG(a["phi"]), BoxD(a["phi"])))
schema("Stb-G-atom", "<>G phi -> []G phi, phi atomic", F, lambda a: Implies(DiaG(a["phi"]), BoxG(a["phi"])), _atomic)

# ---------------------------------------------------------------- intuitionistic S4.2 (G modality)

schema("IK-box", "[]G (phi -> psi) -> ([]G phi -> []G psi)", FP,
       lambda a: Implies(BoxG(Implies(a["phi"], a["psi"])), Implies(BoxG(a["phi"]), BoxG(a["psi"]))))
schema("IK-dia", "[]G (phi -> psi) -> (<>G phi -> <>G psi)", FP,
       lambda a: Implies(BoxG(Implies(a["phi"], a["psi"])), Implies(DiaG(a["phi"]), DiaG(a["psi"]))))
schema("IT-box", "[]G phi -> phi", F, lambda a: Implies(BoxG(a["phi"]), a["phi"]))
schema("IT-dia", "phi -> <>G phi", F, lambda a: Implies(a["phi"], DiaG(a["phi"])))
schema("I4-box", "[]G phi -> []G []G phi", F, lambda a: Implies(BoxG(a["phi"]), BoxG(BoxG(a["phi"]))))
schema("I4-dia", "<>G <>G phi -> <>G phi", F, lambda a: Implies(DiaG(DiaG(a["phi"])), DiaG(a["phi"])))
schema("IDia-or", "<>G (phi | psi) -> <>G phi | <>G psi", FP,
       lambda a: Implies(DiaG(Or(a["phi"], a["psi"])), Or(DiaG(a["phi"]), DiaG(a["psi"]))))
schema("IDia-bot", "~<>G (phi & ~phi)", F, lambda a: Not(DiaG(And(a["phi"], Not(a["phi"])))))
schema("IDia-imp", "(<>G phi -> []G psi) -> []G (phi -> psi)", FP,
       lambda a: Implies(Implies(DiaG(a["phi"]), BoxG(a["psi"])), BoxG(Implies(a["phi"], a["psi"]))))
schema("I.2", "<>G []G phi -> []G <>G phi", F, lambda a: Implies(DiaG(BoxG(a["phi"])), BoxG(DiaG(a["phi"]))))

# ---------------------------------------------------------------- plural logic

XV, YV = Var("x"), Var("y")


def _p_ext(a):
    xx, yy, phi = a["xx"], a["yy"], a["phi"]
    avoid = all_names(phi) | {xx.name, yy.name}
    z = _fresh_var(avoid)
    co = ForallS(z, iff(Prec(z, xx), Prec(z, yy)))
    return Implies(co, iff(phi, substitute(phi, xx, yy)))


schema("P-Ext", "forall z (z pc xx <-> z pc yy) -> (phi <-> phi[yy/xx]), phi modal-free",
       [("phi", FORMULA), ("xx", PVAR), ("yy", PVAR)], _p_ext, _modal_free)


def _p_choice(a):
    psi, x, y, xx, yy, zz = a["psi"], a["x"], a["y"], a["xx"], a["yy"], a["zz"]
    avoid = all_names(psi) | {x.name, y.name, xx.name, yy.name, zz.name}
    x2 = _fresh_var(avoid, x.name)
    y2 = _fresh_var(avoid, y.name)
    hyp1 = forall_pc(x, xx, exists_pc(y, yy, psi))
    hyp2 = ForallS(x, ForallS(x2, ForallS(y, Implies(And(psi, substitute(psi, x, x2)), Eq(x, x2)))))
    unique = And(Prec(y, zz), And(psi, ForallS(y2, Implies(And(Prec(y2, zz), substitute(psi, y, y2)), Eq(y2, y)))))
    return Implies(And(hyp1, hyp2), ExistsP(zz, forall_pc(x, xx, ExistsS(y, unique))))


def _choice_side(a):
    if a["zz"] in free_vars(a["psi"]):
        return "zz occurs free in psi"
    if a["x"] == a["y"]:
        return "x and y must differ"
    return None


schema("P-Choice",
       "(forall x pc xx)(exists y pc yy) psi & forall x x' y (psi(x,y) & psi(x',y) -> x = x') -> "
       "existsp zz (forall x pc xx)(exists! y pc zz) psi",
       [("psi", FORMULA), ("x", VAR), ("y", VAR), ("xx", PVAR), ("yy", PVAR), ("zz", PVAR)],
       _p_choice, _choice_side)

schema("Stb-prec-D", "x pc yy -> []D x pc yy", [("x", TERM), ("yy", PVAR)],
       lambda a: Implies(Prec(a["x"], a["yy"]), BoxD(Prec(a["x"], a["yy"]))))
schema("Stb-nprec-D", "~x pc yy -> []D ~x pc yy", [("x", TERM), ("yy", PVAR)],
       lambda a: Implies(Not(Prec(a["x"], a["yy"])), BoxD(Not(Prec(a["x"], a["yy"])))))
schema("Stb-prec-G", "x pc yy -> []G x pc yy", [("x", TERM), ("yy", PVAR)],
       lambda a: Implies(Prec(a["x"], a["yy"]), BoxG(Prec(a["x"], a["yy"]))))
schema("Stb-nprec-G", "~x pc yy -> []G ~x pc yy", [("x", TERM), ("yy", PVAR)],
       lambda a: Implies(Not(Prec(a["x"], a["yy"])), BoxG(Not(Prec(a["x"], a["yy"])))))


def _inext_prec(box):
    def build(a):
        x, yy, th = a["x"], a["yy"], a["theta"]
        return Implies(forall_pc(x, yy, box(th)), box(forall_pc(x, yy, th)))
    return build


def _inext_sub(box):
    def build(a):
        xx, yy, th = a["xx"], a["yy"], a["theta"]
        return Implies(forall_sub(xx, yy, box(th)), box(forall_sub(xx, yy, th)))
    return build


def _distinct(k1, k2):
    def side(a):
        return f"{k1} and {k2} must differ" if a[k1] == a[k2] else None
    return side


for _tag, _box in (("D", BoxD), ("G", BoxG)):
    schema(f"InExt-prec-{_tag}", f"forall x (x pc yy -> []{_tag} theta) -> []{_tag} forall x (x pc yy -> theta)",
           [("theta", FORMULA), ("x", VAR), ("yy", PVAR)], _inext_prec(_box))
    schema(f"InExt-sub-{_tag}", f"forallp xx (xx sub yy -> []{_tag} theta) -> []{_tag} forallp xx (xx sub yy -> theta)",
           [("theta", FORMULA), ("xx", PVAR), ("yy", PVAR)], _inext_sub(_box), _distinct("xx", "yy"))

schema("Dec-prec", "x pc yy | ~x pc yy", [("x", TERM), ("yy", PVAR)],
       lambda a: Or(Prec(a["x"], a["yy"]), Not(Prec(a["x"], a["yy"]))))


def omni_prec(phi, x, aa):
    dec = forall_pc(x, aa, Or(phi, Not(phi)))
    ex = exists_pc(x, aa, phi)
    return Implies(dec, Or(ex, Not(ex)))


def omni_sub(phi, xx, aa):
    dec = forall_sub(xx, aa, Or(phi, Not(phi)))
    ex = exists_sub(xx, aa, phi)
    return Implies(dec, Or(ex, Not(ex)))


schema("Omni-prec", "(forall x pc aa)(phi | ~phi) -> (exists x pc aa) phi | ~(exists x pc aa) phi",
       [("phi", FORMULA), ("x", VAR), ("aa", PVAR)], lambda a: omni_prec(a["phi"], a["x"], a["aa"]))
schema("Omni-sub", "(forallp xx sub aa)(phi | ~phi) -> (existsp xx sub aa) phi | ~(existsp xx sub aa) phi",
       [("phi", FORMULA), ("xx", PVAR), ("aa", PVAR)], lambda a: omni_sub(a["phi"], a["xx"], a["aa"]),
       _distinct("xx", "aa"))

# comprehension

schema("Empty", "existsp xx forall x ~x pc xx", [],
       lambda a: ExistsP(PVar("xx"), ForallS(XV, Not(Prec(XV, PVar("xx"))))))
schema("P-Adj", "forall x forallp xx existsp yy forall y (y pc yy <-> y pc xx | y = x)", [],
       lambda a: ForallS(XV, ForallP(PVar("xx"), ExistsP(PVar("yy"), ForallS(
           YV, iff(Prec(YV, PVar("yy")), Or(Prec(YV, PVar("xx")), Eq(YV, XV))))))))
schema("P-Union", "existsp zz forall x (x pc zz <-> x pc xx | x pc yy)", [("xx", PVAR), ("yy", PVAR)],
       lambda a: _union(a["xx"], a["yy"]), _distinct("xx", "yy"))


def _union(xx, yy):
    avoid = {xx.name, yy.name}
    zz = _fresh_var(avoid, "zz", plural=True)
    x = _fresh_var(avoid, "x")
    return ExistsP(zz, ForallS(x, iff(Prec(x, zz), Or(Prec(x, xx), Prec(x, yy)))))


def _sep_side(a):
    if a["yy"] in free_vars(a["phi"]):
        return "yy occurs free in phi"
    if a["yy"] == a["xx"]:
        return "xx and yy must differ"
    return None


def _sep(a):
    x, xx, yy, phi = a["x"], a["xx"], a["yy"], a["phi"]
    return ExistsP(yy, ForallS(x, iff(Prec(x, yy), And(Prec(x, xx), phi))))


schema("P-Sep", "existsp yy forall x (x pc yy <-> x pc xx & phi)",
       [("phi", FORMULA), ("x", VAR), ("xx", PVAR), ("yy", PVAR)], _sep, _sep_side)
schema("Dec-P-Sep", "(forall x pc xx)(phi | ~phi) -> existsp yy forall x (x pc yy <-> x pc xx & phi)",
       [("phi", FORMULA), ("x", VAR), ("xx", PVAR), ("yy", PVAR)],
       lambda a: Implies(forall_pc(a["x"], a["xx"], Or(a["phi"], Not(a["phi"]))), _sep(a)), _sep_side,
       note="the decidability antecedent is generated from phi")


def _comp_side(a):
    return "yy occurs free in phi" if a["yy"] in free_vars(a["phi"]) else None


schema("P-Comp", "existsp yy forall x (x pc yy <-> phi)", [("phi", FORMULA), ("x", VAR), ("yy", PVAR)],
       lambda a: ExistsP(a["yy"], ForallS(a["x"], iff(Prec(a["x"], a["yy"]), a["phi"]))), _comp_side)

# ---------------------------------------------------------------- set-theoretic constructors (unbundled)


def omni_prop(chi, psi, x):
    """Omniscience for quantification restricted to chi(x), tested on psi(x)."""
    ex = ExistsS(x, And(chi, psi))
    return Implies(ForallS(x, Implies(chi, Or(psi, Not(psi)))), Or(ex, Not(ex)))


def _ed_to_s(a):
    chi, psi, x, y = a["phi"], a["psi"], a["x"], a["y"]
    return Implies(omni_prop(chi, psi, x), ExistsS(y, ForallS(x, iff(member(x, y, all_names(chi)), chi))))


def _ed_to_p(a):
    chi, psi, x, yy = a["phi"], a["psi"], a["x"], a["yy"]
    return Implies(omni_prop(chi, psi, x), ExistsP(yy, ForallS(x, iff(Prec(x, yy), chi))))


def _ext(a):
    x, y, xx, yy = a["x"], a["y"], a["xx"], a["yy"]
    avoid = {x.name, y.name, xx.name, yy.name}
    z = _fresh_var(avoid)
    co = ForallS(z, iff(Prec(z, xx), Prec(z, yy)))
    return Implies(And(Atom("Set", (xx, x)), Atom("Set", (yy, y))), iff(Eq(x, y), co))


def _induction(a):
    phi, x = a["phi"], a["x"]
    avoid = all_names(phi) | {x.name}
    xx = _fresh_var(avoid, "xx", plural=True)
    y = _fresh_var(avoid, "y")
    z = _fresh_var(avoid, "z")
    nonset = ForallS(x, Implies(Not(ExistsP(xx, Atom("Set", (xx, x)))), phi))
    her = ForallP(xx, ForallS(y, Implies(And(Atom("Set", (xx, y)), ForallS(z, Implies(Prec(z, xx), substitute(phi, x, z)))),
                                          substitute(phi, x, y))))
    return Implies(And(nonset, her), ForallS(x, phi))


def _subset_of(x, a, avoid):
    z = _fresh_var(set(avoid) | {x.name, a.name})
    return ForallS(z, Implies(member(z, x, avoid | {z.name}), member(z, a, avoid | {z.name})))


def _omni_subset(a):
    phi, x, s = a["phi"], a["x"], a["a"]
    avoid = all_names(phi) | {x.name, s.name}
    guard = _subset_of(x, s, avoid)
    ex = ExistsS(x, And(guard, phi))
    return Implies(ForallS(x, Implies(guard, Or(phi, Not(phi)))), Or(ex, Not(ex)))


def _omni_subset_nat(a):
    phi, x = a["phi"], a["x"]
    avoid = all_names(phi) | {x.name}
    z = _fresh_var(avoid)
    guard = ForallS(z, Implies(member(z, x, avoid), Atom("Nat", (z,))))
    ex = ExistsS(x, And(guard, phi))
    return Implies(ForallS(x, Implies(guard, Or(phi, Not(phi)))), Or(ex, Not(ex)))


schema("ED->S", "Omni(phi; psi) -> exists y forall x (x in y <-> phi)",
       [("phi", FORMULA), ("psi", FORMULA), ("x", VAR), ("y", VAR)], _ed_to_s,
       note="extensional definiteness of phi is witnessed schematically by one omniscience instance")
schema("ED->P", "Omni(phi; psi) -> existsp yy forall x (x pc yy <-> phi)",
       [("phi", FORMULA), ("psi", FORMULA), ("x", VAR), ("yy", PVAR)], _ed_to_p, _comp_side)
schema("Ext", "Set(xx,x) & Set(yy,y) -> (x = y <-> forall z (z pc xx <-> z pc yy))",
       [("x", VAR), ("y", VAR), ("xx", PVAR), ("yy", PVAR)], _ext)
schema("Ind", "forall x (~existsp xx Set(xx,x) -> phi) & Her(phi) -> forall x phi",
       [("phi", FORMULA), ("x", VAR)], _induction)
schema("Collapse*", "[]D forallp xx <>G exists y Set(xx,y)", [],
       lambda a: BoxD(ForallP(PVar("xx"), DiaG(ExistsS(YV, Atom("Set", (PVar("xx"), YV)))))))
schema("P->S", "forallp xx exists y Set(xx,y)", [],
       lambda a: ForallP(PVar("xx"), ExistsS(YV, Atom("Set", (PVar("xx"), YV)))))
schema("Omni-subset", "(forall x sub a)(phi | ~phi) -> (exists x sub a) phi | ~(exists x sub a) phi",
       [("phi", FORMULA), ("x", VAR), ("a", TERM)], _omni_subset)
schema("Omni-subset-Nat", "(forall x sub Nat)(phi | ~phi) -> (exists x sub Nat) phi | ~(exists x sub Nat) phi",
       [("phi", FORMULA), ("x", VAR)], _omni_subset_nat)

SET_THEORETIC = ("ED->S", "ED->P", "Ext", "Ind", "Collapse*", "P->S", "Omni-subset", "Omni-subset-Nat")
