"""Finite bimodal Kripke frames and models.

Two satisfaction relations live here: classical bimodal truth
(``eval_classical``) over all four languages, and potentialist forcing
(``eval_forcing``) over the modal-free language.  Plural variables denote
fixed sets of individuals, so plural membership is rigid across worlds.

Models are plain data; ``validate_frame`` / ``validate_model`` report
violations instead of raising, and the evaluators trust their input.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import chain, combinations, product
from typing import Iterable, Mapping

from .formula import (
    PLURAL, And, Atom, BoxD, BoxG, Const, DiaD, DiaG, Eq, ExistsP, ExistsS,
    ForallP, ForallS, Formula, FormulaError, Implies, Language, Not, Or, PVar,
    Prec, Signature, Term, Var, classify_language, free_vars, parse, render,
)


class EvaluationError(FormulaError):
    """Assignment or constant outside the domain of the evaluation world."""


class ModelFileError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def subsets(items) -> list:
    items = sorted(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


# ---------------------------------------------------------------- frames


@dataclass(frozen=True, eq=False)
class BimodalFrame:
    worlds: tuple
    leqD: frozenset
    leqG: frozenset
    dom: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "leqD", frozenset(self.leqD))
        object.__setattr__(self, "leqG", frozenset(self.leqG))
        object.__setattr__(self, "dom", {w: frozenset(self.dom.get(w, ())) for w in self.worlds})
        succ_d = {w: tuple(v for v in self.worlds if (w, v) in self.leqD) for w in self.worlds}
        succ_g = {w: tuple(v for v in self.worlds if (w, v) in self.leqG) for w in self.worlds}
        object.__setattr__(self, "_succ_d", succ_d)
        object.__setattr__(self, "_succ_g", succ_g)

    @classmethod
    def build(cls, worlds, leqD=(), leqG=(), dom=None, reflexive=True):
        """Convenience constructor adding the reflexive closure of both relations."""
        worlds = tuple(worlds)
        d, g = set(leqD), set(leqG)
        if reflexive:
            d |= {(w, w) for w in worlds}
            g |= {(w, w) for w in worlds}
        return cls(worlds, frozenset(d), frozenset(g), dict(dom or {}))

    def succD(self, w) -> tuple:
        return self._succ_d[w]

    def succG(self, w) -> tuple:
        return self._succ_g[w]

    def individuals(self) -> frozenset:
        return frozenset().union(*self.dom.values()) if self.dom else frozenset()

    def __eq__(self, other):
        return (isinstance(other, BimodalFrame) and self.worlds == other.worlds
                and self.leqD == other.leqD and self.leqG == other.leqG and self.dom == other.dom)

    def __hash__(self):
        return hash((self.worlds, self.leqD, self.leqG, tuple(sorted((w, tuple(sorted(d))) for w, d in self.dom.items()))))


@dataclass(frozen=True)
class Violation:
    condition: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        wit = ", ".join(str(x) for x in self.witness)
        return f"{self.condition} violated at ({wit})" + (f": {self.detail}" if self.detail else "")


FRAME_CONDITIONS = (
    "D-reflexive", "D-transitive", "G-reflexive", "G-transitive",
    "G-convergent", "G-within-D", "mixed-convergence", "domain-monotone",
)


def _preorder_violations(rel, worlds, name):
    out = []
    for w in worlds:
        if (w, w) not in rel:
            out.append(Violation(f"{name}-reflexive", (w,)))
    for (u, v) in sorted(rel):
        for (v2, x) in sorted(rel):
            if v2 == v and (u, x) not in rel:
                out.append(Violation(f"{name}-transitive", (u, v, x)))
    return out


def validate_frame(f: BimodalFrame) -> list:
    """Every violated frame condition, each with a witnessing tuple of worlds."""
    ws = f.worlds
    out = []
    known = set(ws)
    for (u, v) in sorted(f.leqD | f.leqG):
        if u not in known or v not in known:
            out.append(Violation("unknown-world", (u, v)))
    if out:
        return out
    out += _preorder_violations(f.leqD, ws, "D")
    out += _preorder_violations(f.leqG, ws, "G")
    for w in ws:
        sg = f.succG(w)
        for u, v in combinations(sg, 2):
            if not any((u, x) in f.leqG and (v, x) in f.leqG for x in ws):
                out.append(Violation("G-convergent", (w, u, v)))
    for (u, v) in sorted(f.leqG):
        if (u, v) not in f.leqD:
            out.append(Violation("G-within-D", (u, v)))
    for w0 in ws:
        for w1 in f.succG(w0):
            for w2 in f.succD(w0):
                if not any((w1, w3) in f.leqD and (w2, w3) in f.leqG for w3 in ws):
                    out.append(Violation("mixed-convergence", (w0, w1, w2), "no w3 D-extending the G-successor and G-extending the D-successor"))
    for (u, v) in sorted(f.leqD):
        missing = f.dom[u] - f.dom[v]
        if missing:
            out.append(Violation("domain-monotone", (u, v), "lost " + " ".join(sorted(missing))))
    return out


# ---------------------------------------------------------------- models


@dataclass(frozen=True, eq=False)
class BimodalModel:
    """A frame plus interpretations.

    ``interp`` maps (world, predicate) to a set of argument tuples; plural
    argument positions hold frozensets of individuals.  Missing keys mean
    the empty extension.  Constants denote the individual of the same name.
    """

    frame: BimodalFrame
    sig: Signature
    interp: Mapping = field(default_factory=dict)
    g_stable: bool = True
    d_stable: bool = False
    decidable_identity: bool = True

    def __post_init__(self):
        clean = {}
        for key, ext in dict(self.interp).items():
            clean[key] = frozenset(tuple(_freeze(x) for x in t) for t in ext)
        object.__setattr__(self, "interp", clean)

    def ext(self, w, pred) -> frozenset:
        return self.interp.get((w, pred), frozenset())

    @property
    def worlds(self):
        return self.frame.worlds

    def flags(self) -> dict:
        return {"g_stable": self.g_stable, "d_stable": self.d_stable, "decidable_identity": self.decidable_identity}

    def __eq__(self, other):
        return (isinstance(other, BimodalModel) and self.frame == other.frame and self.sig == other.sig
                and self._nonempty() == other._nonempty() and self.flags() == other.flags())

    def _nonempty(self):
        return {k: v for k, v in self.interp.items() if v}

    def __hash__(self):
        return hash((self.frame, tuple(sorted((k, tuple(sorted(v, key=repr))) for k, v in self.interp.items() if v))))


def _freeze(x):
    return frozenset(x) if isinstance(x, (set, frozenset, list)) else x


def _tuples_over(sorts, dom):
    pools = [subsets(dom) if s == PLURAL else sorted(dom) for s in sorts]
    return product(*pools)


def _within(t, dom):
    return all((x <= dom) if isinstance(x, frozenset) else (x in dom) for x in t)


def validate_model(m: BimodalModel) -> list:
    f = m.frame
    out = validate_frame(f)
    for (w, pred), ext in sorted(m.interp.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
        sorts = m.sig.sorts(pred)
        if w not in f.dom:
            out.append(Violation("unknown-world", (w,), f"interpretation of {pred}"))
            continue
        if sorts is None:
            out.append(Violation("signature", (w,), f"undeclared predicate {pred}"))
            continue
        for t in sorted(ext, key=repr):
            if len(t) != len(sorts) or any(isinstance(x, frozenset) != (s == PLURAL) for x, s in zip(t, sorts)):
                out.append(Violation("signature", (w,), f"{pred}{_show_tuple(t)} does not fit sorts {''.join(sorts)}"))
            elif not _within(t, f.dom[w]):
                out.append(Violation("extension-domain", (w,), f"{pred}{_show_tuple(t)} uses individuals outside dom({w})"))
    for c in sorted(m.sig.constants):
        for w in f.worlds:
            if c not in f.dom[w]:
                out.append(Violation("constant-domain", (w,), f"constant {c} not in dom({w})"))
    if any(v.condition in ("unknown-world", "D-reflexive", "G-reflexive") for v in out):
        return out
    for flag, rel, name in ((m.g_stable, f.leqG, "G-stability"), (m.d_stable, f.leqD, "D-stability")):
        if not flag:
            continue
        for (u, v) in sorted(rel):
            if u == v:
                continue
            for pred, sorts in sorted(m.sig.predicates.items()):
                eu, ev = m.ext(u, pred), m.ext(v, pred)
                for t in _tuples_over(sorts, f.dom[u]):
                    if (t in eu) != (t in ev):
                        out.append(Violation(name, (u, v), f"{pred}{_show_tuple(t)} differs"))
    return out


def is_valid(m: BimodalModel) -> bool:
    return not validate_model(m)


# ---------------------------------------------------------------- evaluation


def _show_tuple(t):
    return "(" + ", ".join(_show_value(x) for x in t) + ")"


def _show_value(x):
    if isinstance(x, frozenset):
        return "{" + " ".join(sorted(x)) + "}"
    return str(x)


def _value(m, w, env, t: Term):
    if isinstance(t, Const):
        if t.name not in m.frame.dom[w]:
            raise EvaluationError(f"constant {t.name} does not exist at {w}")
        return t.name
    try:
        return env[t]
    except KeyError:
        raise EvaluationError(f"unassigned variable {t.name}") from None


def _atomic(m, w, env, f) -> bool:
    if isinstance(f, Atom):
        vals = tuple(_value(m, w, env, t) for t in f.args)
        return vals in m.ext(w, f.pred)
    if isinstance(f, Eq):
        return _value(m, w, env, f.left) == _value(m, w, env, f.right)
    return _value(m, w, env, f.elem) in _value(m, w, env, f.plural)


def normalize_assignment(a) -> dict:
    """Accept ``{"x": "a", "xx": {"a"}}`` or Term-keyed dicts."""
    out = {}
    for k, v in dict(a or {}).items():
        if isinstance(k, str):
            k = PVar(k) if isinstance(v, (set, frozenset, list, tuple)) else Var(k)
        out[k] = frozenset(v) if isinstance(k, PVar) else v
    return out


def check_assignment(m: BimodalModel, w, a: dict, f: Formula):
    if w not in m.frame.dom:
        raise EvaluationError(f"unknown world {w}")
    dom = m.frame.dom[w]
    for v in free_vars(f):
        if v not in a:
            raise EvaluationError(f"free variable {v.name} is unassigned")
    for v, val in a.items():
        if isinstance(v, PVar):
            if not isinstance(val, frozenset) or not val <= dom:
                raise EvaluationError(f"plural value of {v.name} is not a subset of dom({w})")
        elif val not in dom:
            raise EvaluationError(f"value {val} of {v.name} is not in dom({w})")


class _Tracer:
    def __init__(self, sink, rel):
        self.sink, self.rel, self.depth = sink, rel, 0

    def enter(self):
        self.depth += 1
        if self.sink is None:
            return None
        self.sink.append(None)
        return len(self.sink) - 1

    def leave(self, idx, w, f, val):
        self.depth -= 1
        if idx is not None:
            self.sink[idx] = (self.depth, f"{w} {self.rel} {render(f)} : {'true' if val else 'false'}")


def eval_classical(m: BimodalModel, w, a, f: Formula, trace: list | None = None) -> bool:
    """Classical bimodal satisfaction ``w |= f`` under assignment ``a``.

    If ``trace`` is a list, (depth, line) pairs are appended in evaluation order.
    """
    a = normalize_assignment(a)
    check_assignment(m, w, a, f)
    return _cl(m, w, a, f, _Tracer(trace, "|="))


def _cl(m, w, env, f, tr) -> bool:
    idx = tr.enter()
    fr = m.frame
    if isinstance(f, (Atom, Eq, Prec)):
        val = _atomic(m, w, env, f)
    elif isinstance(f, Not):
        val = not _cl(m, w, env, f.body, tr)
    elif isinstance(f, And):
        val = _cl(m, w, env, f.left, tr) and _cl(m, w, env, f.right, tr)
    elif isinstance(f, Or):
        val = _cl(m, w, env, f.left, tr) or _cl(m, w, env, f.right, tr)
    elif isinstance(f, Implies):
        val = (not _cl(m, w, env, f.left, tr)) or _cl(m, w, env, f.right, tr)
    elif isinstance(f, BoxD):
        val = all(_cl(m, v, env, f.body, tr) for v in fr.succD(w))
    elif isinstance(f, DiaD):
        val = any(_cl(m, v, env, f.body, tr) for v in fr.succD(w))
    elif isinstance(f, BoxG):
        val = all(_cl(m, v, env, f.body, tr) for v in fr.succG(w))
    elif isinstance(f, DiaG):
        val = any(_cl(m, v, env, f.body, tr) for v in fr.succG(w))
    elif isinstance(f, ForallS):
        val = all(_cl(m, w, {**env, f.var: d}, f.body, tr) for d in sorted(fr.dom[w]))
    elif isinstance(f, ExistsS):
        val = any(_cl(m, w, {**env, f.var: d}, f.body, tr) for d in sorted(fr.dom[w]))
    elif isinstance(f, ForallP):
        val = all(_cl(m, w, {**env, f.var: s}, f.body, tr) for s in subsets(fr.dom[w]))
    elif isinstance(f, ExistsP):
        val = any(_cl(m, w, {**env, f.var: s}, f.body, tr) for s in subsets(fr.dom[w]))
    else:
        raise TypeError(f"not a formula: {f!r}")
    tr.leave(idx, w, f, val)
    return val


def eval_forcing(m: BimodalModel, w, a, f: Formula, trace: list | None = None) -> bool:
    """Potentialist forcing ``w ||- f`` for modal-free ``f``."""
    if classify_language(f) is not Language.L:
        raise FormulaError(f"forcing is defined for modal-free formulas only: {render(f)}")
    a = normalize_assignment(a)
    check_assignment(m, w, a, f)
    return _fc(m, w, a, f, _Tracer(trace, "||-"))


def _fc(m, w, env, f, tr) -> bool:
    idx = tr.enter()
    fr = m.frame
    if isinstance(f, (Atom, Eq, Prec)):
        val = all(_atomic(m, v, env, f) for v in fr.succD(w))
    elif isinstance(f, And):
        val = _fc(m, w, env, f.left, tr) and _fc(m, w, env, f.right, tr)
    elif isinstance(f, Or):
        val = _fc(m, w, env, f.left, tr) or _fc(m, w, env, f.right, tr)
    elif isinstance(f, Implies):
        val = all((not _fc(m, v, env, f.left, tr)) or _fc(m, v, env, f.right, tr) for v in fr.succD(w))
    elif isinstance(f, Not):
        val = not any(_fc(m, v, env, f.body, tr) for v in fr.succD(w))
    elif isinstance(f, ExistsS):
        val = any(_fc(m, v, {**env, f.var: d}, f.body, tr) for v in fr.succG(w) for d in sorted(fr.dom[v]))
    elif isinstance(f, ForallS):
        val = all(_fc(m, v, {**env, f.var: d}, f.body, tr) for v in fr.succD(w) for d in sorted(fr.dom[v]))
    elif isinstance(f, ExistsP):
        val = any(_fc(m, v, {**env, f.var: s}, f.body, tr) for v in fr.succG(w) for s in subsets(fr.dom[v]))
    elif isinstance(f, ForallP):
        val = all(_fc(m, v, {**env, f.var: s}, f.body, tr) for v in fr.succD(w) for s in subsets(fr.dom[v]))
    else:
        raise TypeError(f"not a formula: {f!r}")
    tr.leave(idx, w, f, val)
    return val


def eval_is42(m: BimodalModel, w, a, f: Formula) -> bool:
    """Forcing for intuitionistic S4.2 over L^G.

    ``leqD`` plays the intuitionistic (information) order and ``leqG`` the
    modal accessibility relation; quantifiers range over the current
    domain.  []G quantifies over every modal successor of every
    information extension; <>G looks for a modal successor.  With
    ``leqD`` the identity this is ordinary classical modal S4.2 with
    growing domains.  The frame need not satisfy the bimodal conditions.
    """
    if classify_language(f).has_d:
        raise FormulaError("intuitionistic S4.2 forcing takes D-free formulas")
    a = normalize_assignment(a)
    check_assignment(m, w, a, f)
    return _is42(m, w, a, f)


def _is42(m, w, env, f):
    fr = m.frame
    if isinstance(f, (Atom, Eq, Prec)):
        return all(_atomic(m, v, env, f) for v in fr.succD(w))
    if isinstance(f, And):
        return _is42(m, w, env, f.left) and _is42(m, w, env, f.right)
    if isinstance(f, Or):
        return _is42(m, w, env, f.left) or _is42(m, w, env, f.right)
    if isinstance(f, Implies):
        return all((not _is42(m, v, env, f.left)) or _is42(m, v, env, f.right) for v in fr.succD(w))
    if isinstance(f, Not):
        return not any(_is42(m, v, env, f.body) for v in fr.succD(w))
    if isinstance(f, ExistsS):
        return any(_is42(m, w, {**env, f.var: d}, f.body) for d in sorted(fr.dom[w]))
    if isinstance(f, ForallS):
        return all(_is42(m, v, {**env, f.var: d}, f.body) for v in fr.succD(w) for d in sorted(fr.dom[v]))
    if isinstance(f, ExistsP):
        return any(_is42(m, w, {**env, f.var: s}, f.body) for s in subsets(fr.dom[w]))
    if isinstance(f, ForallP):
        return all(_is42(m, v, {**env, f.var: s}, f.body) for v in fr.succD(w) for s in subsets(fr.dom[v]))
    if isinstance(f, BoxG):
        return all(_is42(m, u, env, f.body) for v in fr.succD(w) for u in fr.succG(v))
    if isinstance(f, DiaG):
        return any(_is42(m, u, env, f.body) for u in fr.succG(w))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------- spectra


@dataclass(frozen=True)
class DeterminacySpectrum:
    world: object
    possG: frozenset
    possD: frozenset

    @property
    def band(self) -> frozenset:
        """Formulas D-possibly but not G-possibly determined."""
        return self.possD - self.possG


def spectrum(m: BimodalModel, w, pool: Iterable[Formula], a=None) -> DeterminacySpectrum:
    pg, pd = set(), set()
    for phi in pool:
        if eval_classical(m, w, a, DiaG(BoxD(phi))):
            pg.add(phi)
        if eval_classical(m, w, a, DiaD(BoxD(phi))):
            pd.add(phi)
    return DeterminacySpectrum(w, frozenset(pg), frozenset(pd))


# ---------------------------------------------------------------- model files

_LEQ = re.compile(r"^([^\s<=]+)<=([^\s<=]+)$")


@dataclass
class LoadedModel:
    model: BimodalModel
    lines: dict
    violations: list

    def report(self) -> list:
        return [describe(v, self.lines) for v in self.violations]


def describe(v: Violation, lines: Mapping) -> str:
    key = None
    w = v.witness[0] if v.witness else None
    if v.condition.startswith("D-") or v.condition == "mixed-convergence":
        key = ("leqD",) if v.condition.startswith("D-") else ("leqG",)
    elif v.condition.startswith("G-"):
        key = ("leqG",) if v.condition != "G-stability" else ("interp", v.witness[-1])
    elif v.condition == "D-stability":
        key = ("interp", v.witness[-1])
    elif v.condition == "domain-monotone":
        key = ("dom", v.witness[-1])
    elif v.condition in ("extension-domain", "signature"):
        key = ("interp", w)
    elif v.condition == "constant-domain":
        key = ("dom", w)
    line = lines.get(key) or lines.get(("worlds",))
    return f"line {line}: {v}" if line else str(v)


def _split_tuples(text, lineno):
    out = []
    for m in re.finditer(r"\(([^()]*)\)", text):
        body = m.group(1)
        items, i = [], 0
        for tok in re.finditer(r"\{[^{}]*\}|[^\s,{}]+", body):
            t = tok.group(0)
            items.append(frozenset(t[1:-1].replace(",", " ").split()) if t.startswith("{") else t)
        out.append(tuple(items))
    rest = re.sub(r"\(([^()]*)\)", "", text).strip()
    if rest:
        raise ModelFileError(f"unexpected text {rest!r} in extension", lineno)
    return out


def _infer_sorts(tuples):
    sorts = None
    for t in tuples:
        s = tuple(PLURAL if isinstance(x, frozenset) else "s" for x in t)
        if sorts is not None and s != sorts:
            return None
        sorts = s
    return sorts


def parse_model(text: str, sig: Signature | None = None) -> LoadedModel:
    """Read the keyword-block model format; see ``render_model``."""
    worlds, leqD, leqG, dom, interp = [], set(), set(), {}, {}
    lines = {}
    preds = dict(sig.predicates) if sig else {}
    consts = set(sig.constants) if sig else set()
    flags = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise ModelFileError(f"expected 'keyword: ...', got {line!r}", lineno)
        words = head.split()
        kw = words[0]
        if kw == "worlds" and len(words) == 1:
            worlds += body.split()
            lines[("worlds",)] = lineno
        elif kw in ("leqD", "leqG") and len(words) == 1:
            rel = leqD if kw == "leqD" else leqG
            for item in body.replace(",", " ").split():
                mm = _LEQ.match(item)
                if not mm:
                    raise ModelFileError(f"expected u<=v, got {item!r}", lineno)
                rel.add((mm.group(1), mm.group(2)))
            lines.setdefault((kw,), lineno)
        elif kw == "dom" and len(words) == 2:
            dom[words[1]] = frozenset(body.replace(",", " ").split())
            lines[("dom", words[1])] = lineno
        elif kw == "interp" and len(words) == 3:
            w, pred = words[1], words[2]
            tuples = _split_tuples(body, lineno)
            interp.setdefault((w, pred), set()).update(tuples)
            lines[("interp", w)] = lines.get(("interp", w), lineno)
            if pred not in preds:
                sorts = _infer_sorts(tuples)
                if sorts is None:
                    raise ModelFileError(f"cannot infer argument sorts of {pred}; declare it in 'preds:'", lineno)
                preds[pred] = sorts
        elif kw == "preds" and len(words) == 1:
            for item in body.split():
                name, _, s = item.partition("/")
                preds[name] = tuple(s)
        elif kw == "consts" and len(words) == 1:
            consts |= set(body.replace(",", " ").split())
        elif kw == "flags" and len(words) == 1:
            for item in body.split():
                name, _, val = item.partition("=")
                if name not in ("g_stable", "d_stable", "decidable_identity"):
                    raise ModelFileError(f"unknown flag {name}", lineno)
                flags[name] = val.lower() not in ("off", "false", "0", "no")
        else:
            raise ModelFileError(f"unknown keyword {head!r}", lineno)
    if not worlds:
        raise ModelFileError("no 'worlds:' line")
    for w in dom:
        if w not in worlds:
            raise ModelFileError(f"domain given for unknown world {w}", lines[("dom", w)])
    try:
        signature = Signature(preds, frozenset(consts))
    except FormulaError as e:
        raise ModelFileError(str(e)) from None
    frame = BimodalFrame.build(worlds, leqD, leqG, dom)
    model = BimodalModel(frame, signature, interp, **flags)
    return LoadedModel(model, lines, validate_model(model))


def load_model(path) -> LoadedModel:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())


def _closure_edges(rel, worlds):
    return [f"{u}<={v}" for u in worlds for v in worlds if u != v and (u, v) in rel]


def render_model(m: BimodalModel) -> str:
    fr = m.frame
    out = [f"worlds: {' '.join(fr.worlds)}"]
    if m.sig.predicates:
        out.append(f"preds: {m.sig.decl()}")
    if m.sig.constants:
        out.append(f"consts: {' '.join(sorted(m.sig.constants))}")
    defaults = BimodalModel(fr, m.sig).flags()
    if m.flags() != defaults:
        out.append("flags: " + " ".join(f"{k}={'on' if v else 'off'}" for k, v in m.flags().items()))
    out.append(("leqD: " + " ".join(_closure_edges(fr.leqD, fr.worlds))).rstrip())
    out.append(("leqG: " + " ".join(_closure_edges(fr.leqG, fr.worlds))).rstrip())
    for w in fr.worlds:
        out.append(f"dom {w}: {' '.join(sorted(fr.dom[w]))}".rstrip())
    for w in fr.worlds:
        for pred in sorted(m.sig.predicates):
            ext = m.ext(w, pred)
            if ext:
                items = sorted(_show_tuple(t) for t in ext)
                out.append(f"interp {w} {pred}: {' '.join(items)}")
    return "\n".join(out) + "\n"


def parse_assignment(text: str | None) -> dict:
    """``"x=a, xx={a b}"`` -> assignment dict."""
    out = {}
    if not text:
        return out
    for m in re.finditer(r"([A-Za-z][\w']*)\s*=\s*(\{[^{}]*\}|[^\s,{}]+)", text):
        name, val = m.group(1), m.group(2)
        if val.startswith("{"):
            out[PVar(name)] = frozenset(val[1:-1].replace(",", " ").split())
        else:
            out[Var(name)] = val
    return out


# ---------------------------------------------------------------- stock models


def chain_frame(n: int, dom=None, g_identity=True, prefix="w") -> BimodalFrame:
    ws = [f"{prefix}{i}" for i in range(n)]
    leq = {(ws[i], ws[j]) for i in range(n) for j in range(i, n)}
    g = {(w, w) for w in ws} if g_identity else leq
    return BimodalFrame.build(ws, leq, g, dom or {w: {"a"} for w in ws})


def excluded_middle_model() -> BimodalModel:
    """w0 <=D w1, G the identity, P(a) only at w1."""
    fr = chain_frame(2)
    return BimodalModel(fr, Signature({"P": ("s",)}, frozenset({"a"})), {("w1", "P"): {("a",)}})


def powerset_model(m_universe: Iterable, sig: Signature, interp: Mapping) -> BimodalModel:
    """Worlds are the subsets of a universe ordered by inclusion.

    Both relations are inclusion, the domain of S is S, and each
    predicate is interpreted at S by restricting ``interp`` (a map from
    predicate to tuples over the universe) to S.  Worlds are named by
    sorted concatenation, with ``{}`` for the empty world.
    """
    universe = sorted(m_universe)
    subs = subsets(universe)
    name = {s: "{" + " ".join(sorted(s)) + "}" for s in subs}
    rel = {(name[s], name[t]) for s in subs for t in subs if s <= t}
    fr = BimodalFrame(tuple(name[s] for s in subs), rel, rel, {name[s]: s for s in subs})
    ip = {}
    for s in subs:
        for pred, ext in interp.items():
            ip[(name[s], pred)] = {t for t in (tuple(_freeze(x) for x in t) for t in ext) if _within(t, s)}
    return BimodalModel(fr, sig, ip)


def world_name(s) -> str:
    return "{" + " ".join(sorted(s)) + "}"
