"""Property suites over bounded model spaces.

Each suite turns a family of claims into ``Check`` obligations, runs them
through the batched engine and reports one record per instance.  A record
is ``pass`` when the observed outcome matches the expected one: validity
instances need zero failing models, exhibits need a countermodel inside
the bounds.  Exhausted bounds never count as a proof of anything beyond
the bounds themselves.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from ..formula import (
    And, Atom, BoxD, BoxG, Const, DiaD, DiaG, Eq, ExistsS, ForallS, Formula, depth,
    Implies, Not, Or, PVar, Signature, Var, parse, render, substitute,
)
from ..kripke import BimodalFrame, BimodalModel, eval_classical, eval_forcing, eval_is42, render_model
from ..proofs import check_file, corpus_path, system
from ..proofs.schemas import get as schema
from ..proofs.schemas import omni_prec, omni_sub
from ..translate import (
    composite_via_d, composite_via_g, extended_godel, godel, potentialist, star,
)
from .batch import CLASSICAL, FORCING
from .engine import (
    DEFAULT_FLAGS, ModelFlags, SearchBounds, agree, enumerate_models, run_checks,
    signature_for, space_size, valid,
)
from .pools import LINK_SIG, XX, YY, X, Y, Z, atoms, by_depth, modal_pool, plural_pool, singular_pool

AA = PVar("aa")
A = Const("a")


@dataclass
class Record:
    suite: str
    instance: str
    expected: str  # valid | agree | countermodel | accepted | false
    verdict: str  # pass | fail
    outcome: str = ""
    witness: str | None = None
    group: str = ""

    def as_dict(self) -> dict:
        return {"suite": self.suite, "group": self.group, "instance": self.instance, "expected": self.expected,
                "verdict": self.verdict, "outcome": self.outcome, "witness": self.witness}


@dataclass
class SuiteReport:
    name: str
    claim: str
    records: list = field(default_factory=list)
    models: int = 0
    frames: int = 0
    elapsed: float = 0.0
    summary: str = ""

    @property
    def failures(self) -> list:
        return [r for r in self.records if r.verdict != "pass"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def text(self, verbose=False) -> str:
        lines = [f"suite {self.name}: {self.claim}"]
        groups = {}
        for r in self.records:
            groups.setdefault(r.group, []).append(r)
        for g, rs in groups.items():
            bad = sum(r.verdict != "pass" for r in rs)
            lines.append(f"  {g or 'instances'}: {len(rs) - bad}/{len(rs)} pass")
        shown = self.records if verbose else self.failures
        for r in shown:
            lines.append(f"  [{r.verdict}] {r.instance} (expected {r.expected}) {r.outcome}".rstrip())
            if r.witness and (verbose or r.verdict != "pass"):
                lines += ["    " + w for w in r.witness.splitlines()]
        if self.summary:
            lines.append("  " + self.summary)
        lines.append(f"  space: {self.frames} frames, {self.models} models")
        lines.append(f"  result: {'PASS' if self.ok else 'FAIL'} ({len(self.records) - len(self.failures)}"
                     f"/{len(self.records)} instances)")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"suite": self.name, "claim": self.claim, "ok": self.ok, "models": self.models,
                           "frames": self.frames, "summary": self.summary,
                           "records": [r.as_dict() for r in self.records]}, indent=1)


def _witness_text(w) -> str:
    return f"at {w.describe()} in\n{w.model_text().rstrip()}"


def _absorb(report, checks, sig, bounds, flags, jobs, expected="valid"):
    results, stats = run_checks(checks, sig, bounds, flags, jobs=jobs)
    report.models = max(report.models, stats.models)
    report.frames = max(report.frames, stats.frames)
    report.elapsed += stats.elapsed
    for r in results:
        c = r.check
        inst = " == ".join(render(f) for f in c.formulas) if c.kind == "agree" else render(c.formulas[0])
        if r.ok:
            report.records.append(Record(report.name, inst, c.kind if c.kind == "agree" else expected, "pass",
                                         f"holds in all {r.models} models", None, c.group))
        else:
            report.records.append(Record(report.name, inst, c.kind if c.kind == "agree" else expected, "fail",
                                         f"fails in {r.failing_models} models", _witness_text(r.witness), c.group))
    return results


# ---------------------------------------------------------------- countermodels


@dataclass
class CountermodelResult:
    formula: Formula
    semantics: str
    found: bool
    model: BimodalModel | None = None
    world: str | None = None
    assignment: dict = field(default_factory=dict)
    models_searched: int = 0
    frames: int = 0
    space: dict = field(default_factory=dict)
    replayed: bool | None = None

    @property
    def verdict(self) -> str:
        return "countermodel" if self.found else "exhausted"

    def text(self) -> str:
        if not self.found:
            return (f"exhausted bounds: no countermodel to {render(self.formula)} among "
                    f"{self.space.get('models', self.models_searched)} models "
                    f"({self.space.get('frames', self.frames)} frames); this is not a validity proof")
        asg = ", ".join(f"{k.name}={_show(v)}" for k, v in sorted(self.assignment.items(), key=lambda kv: kv[0].name))
        head = f"# countermodel to {render(self.formula)} ({self.semantics}) at world {self.world}"
        if asg:
            head += f" with {asg}"
        return head + "\n" + render_model(self.model)


def _show(v):
    return "{" + " ".join(sorted(v)) + "}" if isinstance(v, frozenset) else str(v)


def find_countermodel(f: Formula, semantics: str = CLASSICAL, bounds: SearchBounds | None = None,
                      flags: ModelFlags = DEFAULT_FLAGS, sig: Signature | None = None) -> CountermodelResult:
    """First model in enumeration order falsifying ``f`` somewhere, or an exhausted-bounds report."""
    bounds = bounds or SearchBounds()
    sig = signature_for([f], sig)
    results, stats = run_checks([valid("target", f, semantics)], sig, bounds, flags, stop_first=True)
    r = results[0]
    out = CountermodelResult(f, semantics, not r.ok, frames=stats.frames, models_searched=stats.models)
    if r.ok:
        out.space = space_size(sig, bounds, flags)
        return out
    w = r.witness
    out.model, out.world, out.assignment = w.model, w.world, w.assignment
    ev = eval_classical if semantics == CLASSICAL else eval_forcing
    out.replayed = not ev(w.model, w.world, w.assignment, f)
    return out


# ---------------------------------------------------------------- suite definitions

CLAIMS = {
    "link": "forcing a formula agrees with classical truth of its star image",
    "stability": "Goedel images are D-stable, potentialist images G-stable; negative D-stability can fail",
    "bm-axioms": "every instance of the bimodal axiom schemas is true at every world",
    "spectra": "G-possible determinacy implies D-possible determinacy, is D-monotone, and D-possible determinacy is D-antitone",
    "rigidity": "plural stability, inextendibility, extensionality and comprehension schemas are valid",
    "dec-prec": "the Goedel image of decidable membership is valid",
    "omni": "the Goedel images of plural omniscience (over members and subpluralities) are valid",
    "rs-failure": "reverse subsumption has a countermodel",
    "failures": "B, 5 and .2 for D, B for G, reverse subsumption and forced excluded middle all have small countermodels",
    "unfaithful": "the translated image of phi -> []G phi is a bimodal theorem while phi -> []G phi fails in an "
                  "intuitionistic S4.2 model",
    "ed-id": "definiteness principles (a)-(g) are forced at every world (finite analogue)",
    "commutation": "both composite translations agree with the star translation",
}

SUITES = tuple(CLAIMS)


def _new(name):
    return SuiteReport(name, CLAIMS[name])


def check_link_suite(bounds: SearchBounds | None = None, flags: ModelFlags = DEFAULT_FLAGS, jobs: int = 1,
                     singular_depth: int | None = None, plural_depth: int | None = None) -> SuiteReport:
    """Compare forcing with classical truth of the star image on every pooled formula."""
    bounds = bounds or SearchBounds()
    sd = singular_depth or bounds.max_pool_depth
    pd = plural_depth or min(bounds.max_pool_depth, 2)
    rep = _new("link")
    checks = [agree(render(f), f, FORCING, star(f), CLASSICAL, group="singular") for f in singular_pool(depth=sd)]
    checks += [agree(render(f), f, FORCING, star(f), CLASSICAL, group="plural")
               for f in plural_pool(depth=pd, variables=(X, Y, XX, YY))]
    results = _absorb(rep, checks, LINK_SIG, bounds, flags, jobs)
    mism = sum(r.failing_models for r in results)
    rep.summary = f"{mism} mismatches / {len(checks) * rep.models} checks ({len(checks)} formulas)"
    return rep


def _bm_pools(depth):
    return {
        "sing": by_depth(modal_pool(depth=depth, variables=(X, Y)), depth),
        "atoms": atoms(LINK_SIG, (X, Y)),
        "plural": by_depth(modal_pool(depth=depth, variables=(X, XX, YY), quantify=False), depth),
    }


def _inst(sid, **args):
    return schema(sid).instantiate(args)


def _bm_checks(depth):
    p = _bm_pools(depth)
    checks = []
    for sid in ("T-D", "4-D", "T-G", "4-G", ".2-G", "Subsump", "Mixed.2", "Dual-D", "Dual-G"):
        checks += [valid(sid, _inst(sid, phi=f), group=sid) for f in p["sing"]]
    for sid in ("K-D", "K-G"):
        pairs = [(f, g) for f in p["sing"] for g in p["atoms"]] + [(g, f) for f in p["sing"] for g in p["atoms"]]
        checks += [valid(sid, _inst(sid, phi=f, psi=g), group=sid) for f, g in pairs]
    for sid in ("CBF-D", "CBF-G"):
        checks += [valid(sid, _inst(sid, phi=f, x=X), group=sid) for f in p["sing"]]
    checks += [valid("Stb-G-atom", _inst("Stb-G-atom", phi=f), group="Stb-G-atom") for f in p["atoms"]]
    checks += _rigidity_checks(p)
    return checks


def _rigidity_checks(p):
    checks = []
    for sid in ("Stb-prec-D", "Stb-nprec-D", "Stb-prec-G", "Stb-nprec-G"):
        checks += [valid(sid, _inst(sid, x=x, yy=yy), group=sid) for x in (X, Y) for yy in (XX, YY)]
    for tag in ("D", "G"):
        checks += [valid(f"InExt-prec-{tag}", _inst(f"InExt-prec-{tag}", theta=f, x=X, yy=YY), group=f"InExt-prec-{tag}")
                   for f in p["plural"]]
        checks += [valid(f"InExt-sub-{tag}", _inst(f"InExt-sub-{tag}", theta=f, xx=XX, yy=YY), group=f"InExt-sub-{tag}")
                   for f in p["plural"]]
    return checks


def _suite_bm_axioms(bounds, flags, jobs):
    rep = _new("bm-axioms")
    _absorb(rep, _bm_checks(bounds.max_pool_depth), LINK_SIG, bounds, flags, jobs)
    return rep


def _suite_rigidity(bounds, flags, jobs):
    rep = _new("rigidity")
    p = _bm_pools(bounds.max_pool_depth)
    checks = _rigidity_checks(p)
    mf = [f for f in plural_pool(depth=bounds.max_pool_depth, variables=(X, Y, XX, YY))]
    checks += [valid("P-Ext", _inst("P-Ext", phi=f, xx=XX, yy=YY), group="P-Ext") for f in mf if YY not in _fv(f)]
    checks.append(valid("Empty", _inst("Empty"), group="comprehension"))
    checks.append(valid("P-Adj", _inst("P-Adj"), group="comprehension"))
    checks.append(valid("P-Union", _inst("P-Union", xx=XX, yy=YY), group="comprehension"))
    sep = [f for f in singular_pool(depth=min(bounds.max_pool_depth, 2)) if X in _fv(f)]
    checks += [valid("P-Sep", _inst("P-Sep", phi=f, x=X, xx=XX, yy=YY), group="comprehension") for f in sep]
    checks += [valid("P-Comp", _inst("P-Comp", phi=f, x=X, yy=YY), group="comprehension") for f in sep]
    rel = [f for f in singular_pool(depth=1) if {X, Y} <= _fv(f)] + [parse("R(x,y) & ~R(y,x)")]
    checks += [valid("P-Choice", _inst("P-Choice", psi=f, x=X, y=Y, xx=XX, yy=YY, zz=PVar("zz")), group="P-Choice")
               for f in rel]
    _absorb(rep, checks, LINK_SIG, bounds, flags, jobs)
    return rep


def _fv(f):
    from ..formula import free_vars
    return free_vars(f)


def _suite_stability(bounds, flags, jobs):
    rep = _new("stability")
    pool = singular_pool(depth=bounds.max_pool_depth) + plural_pool(depth=min(bounds.max_pool_depth, 2),
                                                                     variables=(X, Y, XX, YY))
    checks = []
    for f in pool:
        g, p = godel(f), potentialist(f)
        checks.append(valid(render(f), Implies(g, BoxD(g)), group="godel positive D-stability"))
        checks.append(valid(render(f), Implies(p, BoxG(p)), group="pot positive G-stability"))
        checks.append(valid(render(f), Implies(Not(p), BoxG(Not(p))), group="pot negative G-stability"))
    _absorb(rep, checks, LINK_SIG, bounds, flags, jobs)
    g = godel(parse("P(x)"))
    target = Implies(Not(g), BoxD(Not(g)))
    _exhibit(rep, target, CLASSICAL, bounds, flags, "godel negative D-stability can fail")
    return rep


def _exhibit(rep, f, semantics, bounds, flags, group, sig=None):
    res = find_countermodel(f, semantics, bounds, flags, sig)
    rep.models = max(rep.models, res.space.get("models", res.models_searched))
    rep.frames = max(rep.frames, res.space.get("frames", res.frames))
    ok = res.found and res.replayed
    outcome = (f"countermodel with {len(res.model.worlds)} worlds, replayed false" if res.found
               else "bounds exhausted without a countermodel")
    rep.records.append(Record(rep.name, render(f), "countermodel", "pass" if ok else "fail", outcome,
                              res.text() if res.found else None, group))
    return res


def _suite_spectra(bounds, flags, jobs):
    rep = _new("spectra")
    pool = by_depth(modal_pool(depth=bounds.max_pool_depth, variables=(X, Y)), bounds.max_pool_depth)
    checks = []
    for f in pool:
        bd = BoxD(f)
        checks.append(valid(render(f), Implies(DiaG(bd), DiaD(bd)), group="possG within possD"))
        checks.append(valid(render(f), Implies(DiaG(bd), BoxD(DiaG(bd))), group="possG monotone along D"))
        checks.append(valid(render(f), Implies(DiaD(DiaD(bd)), DiaD(bd)), group="possD antitone along D"))
    _absorb(rep, checks, LINK_SIG, bounds, flags, jobs)
    return rep


def _suite_dec_prec(bounds, flags, jobs):
    rep = _new("dec-prec")
    checks = [valid(render(_inst("Dec-prec", x=x, yy=yy)), godel(_inst("Dec-prec", x=x, yy=yy)), group="Dec-prec")
              for x in (X, Y, A) for yy in (XX, YY)]
    sig = Signature(LINK_SIG.predicates, frozenset({"a"}))
    _absorb(rep, checks, sig, bounds, flags, jobs)
    return rep


def _suite_omni(bounds, flags, jobs):
    rep = _new("omni")
    depth = min(bounds.max_pool_depth, 2)
    sing = [f for f in plural_pool(depth=depth, variables=(X, Y, YY)) if X in _fv(f)]
    plur = [f for f in plural_pool(depth=depth, variables=(X, XX, YY)) if XX in _fv(f)]
    checks = [valid(render(omni_prec(f, X, AA)), godel(omni_prec(f, X, AA)), group="Omni-prec") for f in sing]
    checks += [valid(render(omni_sub(f, XX, AA)), godel(omni_sub(f, XX, AA)), group="Omni-sub") for f in plur]
    _absorb(rep, checks, LINK_SIG, bounds, flags, jobs)
    return rep


RS_TARGET = "[]G P(a) -> []D P(a)"

FAILURE_TARGETS = (
    ("B for D", "P(a) -> []D <>D P(a)", CLASSICAL),
    ("B for G", "~exists x ~(x = a) -> []G <>G ~exists x ~(x = a)", CLASSICAL),
    ("5 for D", "<>D P(a) -> []D <>D P(a)", CLASSICAL),
    (".2 for D", "<>D []D P(a) -> []D <>D P(a)", CLASSICAL),
    ("reverse subsumption", RS_TARGET, CLASSICAL),
    ("forced excluded middle", "P(a) | ~P(a)", FORCING),
)


def _suite_rs_failure(bounds, flags, jobs):
    rep = _new("rs-failure")
    _exhibit(rep, parse(RS_TARGET), CLASSICAL, bounds, flags, "reverse subsumption")
    return rep


def _suite_failures(bounds, flags, jobs):
    rep = _new("failures")
    for label, text, sem in FAILURE_TARGETS:
        _exhibit(rep, parse(text), sem, bounds, flags, label)
    return rep


COMMUTATION_DEPTH, COMMUTATION_SAMPLE = 5, 120  # deeper singular formulas, thinned per level


def _suite_commutation(bounds, flags, jobs):
    rep = _new("commutation")
    deep = [f for f in singular_pool(depth=COMMUTATION_DEPTH, per_level=COMMUTATION_SAMPLE)
            if depth(f) > bounds.max_pool_depth]
    pool = singular_pool(depth=bounds.max_pool_depth) + deep + plural_pool(depth=min(bounds.max_pool_depth, 2),
                                                                     variables=(X, Y, XX, YY))
    checks = []
    for f in pool:
        s = star(f)
        checks.append(agree(render(f), composite_via_d(f), CLASSICAL, s, CLASSICAL, group="via D"))
        checks.append(agree(render(f), composite_via_g(f), CLASSICAL, s, CLASSICAL, group="via G"))
    _absorb(rep, checks, LINK_SIG, bounds, flags, jobs)
    return rep


# ---------------------------------------------------------------- the unfaithfulness exhibit

PHI0 = "~exists x ~(x = a)"


def is42_countermodel():
    """A two-world model where phi0 -> []G phi0 fails under intuitionistic S4.2 forcing.

    The information order is trivial and the modal relation adds an
    individual: "everything is a" holds at u0 and fails at u1.
    """
    fr = BimodalFrame.build(("u0", "u1"), (), {("u0", "u1")}, {"u0": {"a"}, "u1": {"a", "b"}})
    return BimodalModel(fr, Signature({}, frozenset({"a"})), {}), "u0"


def _suite_unfaithful(bounds, flags, jobs):
    rep = _new("unfaithful")
    sig = Signature({"P": ("s",)}, frozenset({"a"}))
    sources = [parse("P(a) -> []G P(a)"), parse(f"{PHI0} -> []G ({PHI0})")]
    images = [extended_godel(f) for f in sources]
    _absorb(rep, [valid(render(s), i, group="image valid") for s, i in zip(sources, images)], sig, bounds, flags, jobs)
    bm = system("BM-FOL")
    for name, img in (("image_stability_atom.prf", images[0]), ("image_stability_phi0.prf", images[1])):
        v = check_file(corpus_path(name), bm)
        ok = v.accepted and v.conclusion == img
        rep.records.append(Record(rep.name, f"{name} in BM-FOL", "accepted", "pass" if ok else "fail",
                                  str(v), None, "image derivable"))
    m, w = is42_countermodel()
    val = eval_is42(m, w, {}, sources[1])
    rep.records.append(Record(rep.name, render(sources[1]), "false", "pass" if not val else "fail",
                              f"intuitionistic S4.2 forcing at {w} gives {str(val).lower()}",
                              render_model(m), "source refuted"))
    # The atomic source is stable in the intuitionistic system; record that too.
    v = check_file(corpus_path("is42_stability.prf"), system("S4.2-I-FOL"))
    rep.records.append(Record(rep.name, "is42_stability.prf in S4.2-I-FOL", "accepted",
                              "pass" if v.accepted else "fail", str(v), None, "atomic source derivable"))
    bad = [(mm, ww) for mm in enumerate_models(sig, bounds, flags) for ww in mm.worlds
           if not eval_is42(mm, ww, {}, sources[0])]
    rep.records.append(Record(rep.name, render(sources[0]), "valid", "fail" if bad else "pass",
                              "intuitionistic S4.2 forcing on every bounded model" +
                              (f": fails in {len(bad)} cases" if bad else ""),
                              render_model(bad[0][0]) if bad else None, "atomic source derivable"))
    return rep


# ---------------------------------------------------------------- definiteness principles


def ID(f, x=X):
    return ForallS(x, Or(f, Not(f)))


def Omni(chi, psi, x=X):
    """Omniscience for quantification over chi-instances tested on psi."""
    ex = ExistsS(x, And(chi, psi))
    return Implies(ForallS(x, Implies(chi, Or(psi, Not(psi)))), Or(ex, Not(ex)))


ED_SIG = LINK_SIG
UNARY_POOL = ("P(x)", "~P(x)", "R(x,x)", "exists y R(x,y)", "forall y R(x,y)", "exists y R(y,x)",
              "P(x) | R(x,x)", "P(x) -> R(x,x)")
BINARY_POOL = ("R(x,y)", "R(y,x)", "x = y", "R(x,y) & P(y)", "~R(x,y)", "P(x) | P(y)")
THETA_POOL = ("P(y)", "~P(y)", "R(y,y)", "exists z R(y,z)")


def ed_id_instances():
    """(item, formula) pairs for the seven definiteness principles."""
    U = [parse(t) for t in UNARY_POOL]
    B = [parse(t) for t in BINARY_POOL]
    T = [parse(t) for t in THETA_POOL]
    out = []
    for F in U:
        out.append(("a", Implies(ID(F), ID(Not(F)))))
        for G in U:
            for op in (And, Or, Implies):
                out.append(("a", Implies(And(ID(F), ID(G)), ID(op(F, G)))))
    for Xf in U:
        for F in B:
            ex = ExistsS(X, And(Xf, F))
            out.append(("b", Implies(And(ForallS(Y, Omni(Xf, F)), ForallS(X, ForallS(Y, Or(F, Not(F))))),
                                     ForallS(Y, Or(ex, Not(ex))))))
    for Xf in U:
        for F in U:
            for psi in U:
                out.append(("c", Implies(And(Omni(Xf, And(F, psi)), ID(F)), Omni(And(Xf, F), psi))))
    for Xf in U:
        for psi in B:
            for th in T:
                hyp1 = Omni(Xf, ExistsS(Y, And(psi, th)))
                hyp2 = ForallS(X, Implies(Xf, Omni(psi, th, Y)))
                out.append(("d", Implies(And(hyp1, hyp2), Omni(ExistsS(X, And(Xf, psi)), th, Y))))
                func = ForallS(Y, ForallS(Z, Implies(And(psi, substitute(psi, Y, Z)), Eq(Y, Z))))
                hyp2e = ForallS(X, Implies(Xf, And(ExistsS(Y, psi), func)))
                out.append(("e", Implies(And(hyp1, hyp2e), Omni(ExistsS(X, And(Xf, psi)), th, Y))))
    for Xf in U:
        if Z in _fv(Xf):
            continue
        xz = substitute(Xf, X, Z)
        dec = ForallS(X, ForallS(Z, Or(Eq(X, Z), Not(Eq(X, Z)))))
        out.append(("f", Implies(And(ForallS(Z, Omni(Xf, Eq(X, Z))), dec), ForallS(Z, Or(xz, Not(xz))))))
        for psi in U:
            ideq = ForallS(X, ForallS(Z, Or(Eq(X, Z), Not(Eq(X, Z)))))
            out.append(("g", Implies(And(ideq, Omni(Xf, psi)), ForallS(Z, Omni(Or(Xf, Eq(X, Z)), psi)))))
    return out


def _suite_ed_id(bounds, flags, jobs):
    rep = _new("ed-id")
    flags = replace(flags, decidable_identity=True)
    checks = [valid(render(f), f, FORCING, group=f"item ({item})") for item, f in ed_id_instances()]
    _absorb(rep, checks, ED_SIG, bounds, flags, jobs)
    rep.summary = "finite analogue: definiteness is schematic over a fixed instance pool; identity flagged decidable"
    return rep


_RUNNERS = {
    "link": lambda b, fl, j: check_link_suite(b, fl, j),
    "stability": _suite_stability,
    "bm-axioms": _suite_bm_axioms,
    "spectra": _suite_spectra,
    "rigidity": _suite_rigidity,
    "dec-prec": _suite_dec_prec,
    "omni": _suite_omni,
    "rs-failure": _suite_rs_failure,
    "failures": _suite_failures,
    "unfaithful": _suite_unfaithful,
    "ed-id": _suite_ed_id,
    "commutation": _suite_commutation,
}


def run_property_suite(name: str, bounds: SearchBounds | None = None, flags: ModelFlags = DEFAULT_FLAGS,
                       jobs: int = 1) -> SuiteReport:
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name}; known: {', '.join(SUITES)}")
    return _RUNNERS[name](bounds or SearchBounds(), flags, jobs)
