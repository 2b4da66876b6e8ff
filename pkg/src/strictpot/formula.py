"""Syntax of the four languages L, L^D, L^G and L^BM.

Formulas are immutable trees of frozen dataclasses.  Terms come in two
sorts: singular (variables and constants) and plural (variables only).
Plural variable names end in a doubled letter (``xx``, ``yy1``, ``aa'``).

Concrete syntax (ASCII)::

    ~ & | -> <->           connectives (<-> is sugar)
    []D <>D []G <>G        modalities
    forall x  exists x     singular quantifiers
    forallp xx existsp xx  plural quantifiers
    x = y   x != y   x pc xx   xx sub yy   x in y

``sub`` (plural inclusion), ``in`` (set membership), ``<->`` and the
restricted quantifiers ``forall x pc xx ...`` / ``existsp yy sub xx ...``
are expanded at parse time, so the tree only ever holds primitives.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

SINGULAR = "s"
PLURAL = "p"


class FormulaError(ValueError):
    pass


class ParseError(FormulaError):
    def __init__(self, message, text="", pos=0, expected=()):
        self.text = text
        self.pos = pos
        self.expected = tuple(expected)
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.col = line, col
        detail = f"{message} at line {line}, column {col}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownSymbolError(ParseError):
    pass


class SortError(FormulaError):
    pass


def _stem(name: str) -> str:
    return name.rstrip("'0123456789")


def is_plural_name(name: str) -> bool:
    stem = _stem(name)
    return len(stem) >= 2 and stem[-1].isalpha() and stem[-1] == stem[-2]


# ---------------------------------------------------------------- terms


@dataclass(frozen=True)
class Term:
    name: str

    sort = SINGULAR

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Var(Term):
    """Singular variable."""


@dataclass(frozen=True)
class Const(Term):
    pass


@dataclass(frozen=True)
class PVar(Term):
    """Plural variable."""

    sort = PLURAL


def term(name: str, sig: "Signature | None" = None) -> Term:
    """Build a term from a bare name using the naming conventions."""
    sig = sig or Signature.open()
    if is_plural_name(name):
        return PVar(name)
    if sig.is_constant(name):
        return Const(name)
    return Var(name)


# ---------------------------------------------------------------- formulas


class Formula:
    __slots__ = ()

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Atom(Formula):
    pred: str
    args: tuple = ()


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Prec(Formula):
    """Plural membership ``elem pc plural``."""

    elem: Term
    plural: PVar


@dataclass(frozen=True)
class Unary(Formula):
    body: Formula


class Not(Unary):
    pass


class BoxD(Unary):
    pass


class DiaD(Unary):
    pass


class BoxG(Unary):
    pass


class DiaG(Unary):
    pass


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula


class And(Binary):
    pass


class Or(Binary):
    pass


class Implies(Binary):
    pass


@dataclass(frozen=True)
class Quant(Formula):
    var: Term
    body: Formula


class ForallS(Quant):
    pass


class ExistsS(Quant):
    pass


class ForallP(Quant):
    pass


class ExistsP(Quant):
    pass


MODALS = (BoxD, DiaD, BoxG, DiaG)
ATOMIC = (Atom, Eq, Prec)
SINGULAR_QUANTS = (ForallS, ExistsS)
PLURAL_QUANTS = (ForallP, ExistsP)


def iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def conj(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        raise FormulaError("empty conjunction")
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


# ---------------------------------------------------------------- signature


DESIGNATED = {"Set": (PLURAL, SINGULAR), "Nat": (SINGULAR,), "Succ": (SINGULAR, SINGULAR)}

_OPEN_CONSTANT = re.compile(r"^[a-e][0-9']*$")


@dataclass(frozen=True)
class Signature:
    """Predicate sorts and constants.

    An *open* signature accepts any predicate (sorts fixed by first use
    within one parse) and treats the names ``a``..``e`` (optionally with
    digits or primes) as constants.
    """

    predicates: Mapping[str, tuple] = field(default_factory=dict)
    constants: frozenset = frozenset()
    extensible: bool = False

    def __post_init__(self):
        object.__setattr__(self, "predicates", {k: tuple(v) for k, v in dict(self.predicates).items()})
        object.__setattr__(self, "constants", frozenset(self.constants))
        for name, sorts in self.predicates.items():
            if not name[:1].isupper():
                raise FormulaError(f"predicate name must be capitalised: {name}")
            if any(s not in (SINGULAR, PLURAL) for s in sorts):
                raise FormulaError(f"bad sort list for {name}: {sorts}")
            if name in DESIGNATED and sorts != DESIGNATED[name]:
                raise FormulaError(f"designated symbol {name} must have sorts {DESIGNATED[name]}")
        for c in self.constants:
            if is_plural_name(c):
                raise FormulaError(f"constant {c} looks like a plural variable")

    @classmethod
    def open(cls, predicates=None) -> "Signature":
        return cls(predicates or {}, frozenset(), True)

    @classmethod
    def parse_decl(cls, text: str, constants: Iterable[str] = ()) -> "Signature":
        """``"P/s R/ss Set/ps"`` style declaration."""
        preds = {}
        for item in text.split():
            name, _, sorts = item.partition("/")
            preds[name] = tuple(sorts)
        return cls(preds, frozenset(constants))

    def decl(self) -> str:
        return " ".join(f"{n}/{''.join(s)}" for n, s in sorted(self.predicates.items()))

    def sorts(self, pred: str):
        return self.predicates.get(pred)

    def is_constant(self, name: str) -> bool:
        if name in self.constants:
            return True
        return self.extensible and bool(_OPEN_CONSTANT.match(name))

    def with_predicates(self, extra: Mapping[str, tuple]) -> "Signature":
        preds = dict(self.predicates)
        preds.update(extra)
        return Signature(preds, self.constants, self.extensible)


# ---------------------------------------------------------------- traversal


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Unary):
        yield from subformulas(f.body)
    elif isinstance(f, Binary):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, Quant):
        yield from subformulas(f.body)


def terms_of(f: Formula) -> tuple:
    if isinstance(f, Atom):
        return f.args
    if isinstance(f, Eq):
        return (f.left, f.right)
    if isinstance(f, Prec):
        return (f.elem, f.plural)
    return ()


def free_vars(f: Formula) -> frozenset:
    if isinstance(f, ATOMIC):
        return frozenset(t for t in terms_of(f) if isinstance(t, (Var, PVar)))
    if isinstance(f, Unary):
        return free_vars(f.body)
    if isinstance(f, Binary):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Quant):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def all_names(f: Formula) -> set:
    """Every term name occurring in f, bound or free."""
    out = set()
    for g in subformulas(f):
        out.update(t.name for t in terms_of(g))
        if isinstance(g, Quant):
            out.add(g.var.name)
    return out


def constants_of(f: Formula) -> frozenset:
    return frozenset(t for g in subformulas(f) for t in terms_of(g) if isinstance(t, Const))


def predicates_of(f: Formula) -> frozenset:
    return frozenset(g.pred for g in subformulas(f) if isinstance(g, Atom))


def depth(f: Formula) -> int:
    if isinstance(f, ATOMIC):
        return 1
    if isinstance(f, (Unary, Quant)):
        return 1 + depth(f.body)
    return 1 + max(depth(f.left), depth(f.right))


def size(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))


def is_modal_free(f: Formula) -> bool:
    return not any(isinstance(g, MODALS) for g in subformulas(f))


# ---------------------------------------------------------------- languages


class Language(enum.Enum):
    L = "L"
    LD = "L^D"
    LG = "L^G"
    LBM = "L^BM"

    @classmethod
    def from_flags(cls, has_d: bool, has_g: bool) -> "Language":
        return {(False, False): cls.L, (True, False): cls.LD,
                (False, True): cls.LG, (True, True): cls.LBM}[(has_d, has_g)]

    @property
    def has_d(self):
        return self in (Language.LD, Language.LBM)

    @property
    def has_g(self):
        return self in (Language.LG, Language.LBM)

    def join(self, other: "Language") -> "Language":
        return Language.from_flags(self.has_d or other.has_d, self.has_g or other.has_g)

    def __le__(self, other: "Language"):
        return self.join(other) is other


def classify_language(f: Formula) -> Language:
    has_d = has_g = False
    for g in subformulas(f):
        if isinstance(g, (BoxD, DiaD)):
            has_d = True
        elif isinstance(g, (BoxG, DiaG)):
            has_g = True
    return Language.from_flags(has_d, has_g)


# ---------------------------------------------------------------- substitution


def fresh_name(base: str, avoid) -> str:
    name = base + "'"
    while name in avoid:
        name += "'"
    return name


def rename_bound(f: Quant, new: str) -> Quant:
    new_var = type(f.var)(new)
    return type(f)(new_var, substitute(f.body, f.var, new_var))


def substitute(f: Formula, v: Term, t: Term) -> Formula:
    """Capture-avoiding substitution of term t for the variable v."""
    if not isinstance(v, (Var, PVar)):
        raise SortError(f"can only substitute for variables, got {v!r}")
    if v.sort != t.sort:
        raise SortError(f"cannot substitute {t.sort}-term {t} for {v.sort}-variable {v}")
    return _subst(f, v, t, frozenset([t]) if isinstance(t, (Var, PVar)) else frozenset())


def _subst(f, v, t, t_free):
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(t if a == v else a for a in f.args))
    if isinstance(f, Eq):
        return Eq(t if f.left == v else f.left, t if f.right == v else f.right)
    if isinstance(f, Prec):
        return Prec(t if f.elem == v else f.elem, t if f.plural == v else f.plural)
    if isinstance(f, Unary):
        return type(f)(_subst(f.body, v, t, t_free))
    if isinstance(f, Binary):
        return type(f)(_subst(f.left, v, t, t_free), _subst(f.right, v, t, t_free))
    if isinstance(f, Quant):
        if f.var == v or v not in free_vars(f.body):
            return f
        if f.var in t_free:
            avoid = all_names(f.body) | {t.name, v.name}
            f = rename_bound(f, fresh_name(f.var.name, avoid))
        return type(f)(f.var, _subst(f.body, v, t, t_free))
    raise TypeError(f"not a formula: {f!r}")


def substitute_many(f: Formula, mapping: Mapping[Term, Term]) -> Formula:
    """Simultaneous substitution via fresh intermediates."""
    avoid = all_names(f) | {t.name for t in mapping.values()} | {v.name for v in mapping}
    temps = {}
    for v in mapping:
        tmp = type(v)(fresh_name(v.name, avoid))
        avoid.add(tmp.name)
        temps[v] = tmp
        f = substitute(f, v, tmp)
    for v, t in mapping.items():
        f = substitute(f, temps[v], t)
    return f


def alpha_eq(f: Formula, g: Formula) -> bool:
    return _alpha(f, g, {}, {}, 0)


def _alpha(f, g, env_f, env_g, level):
    if type(f) is not type(g):
        return False
    if isinstance(f, ATOMIC):
        if isinstance(f, Atom) and f.pred != g.pred:
            return False
        tf, tg = terms_of(f), terms_of(g)
        if len(tf) != len(tg):
            return False
        for a, b in zip(tf, tg):
            la, lb = env_f.get(a), env_g.get(b)
            if la is None and lb is None:
                if a != b:
                    return False
            elif la != lb:
                return False
        return True
    if isinstance(f, Unary):
        return _alpha(f.body, g.body, env_f, env_g, level)
    if isinstance(f, Binary):
        return (_alpha(f.left, g.left, env_f, env_g, level)
                and _alpha(f.right, g.right, env_f, env_g, level))
    if isinstance(f, Quant):
        return _alpha(f.body, g.body, {**env_f, f.var: level}, {**env_g, g.var: level}, level + 1)
    raise TypeError(f"not a formula: {f!r}")


def canonical(f: Formula) -> Formula:
    """Alpha-normal form: bound variables renamed by binding depth."""
    return _canon(f, {}, 0)


def _canon(f, env, level):
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(env.get(a, a) for a in f.args))
    if isinstance(f, Eq):
        return Eq(env.get(f.left, f.left), env.get(f.right, f.right))
    if isinstance(f, Prec):
        return Prec(env.get(f.elem, f.elem), env.get(f.plural, f.plural))
    if isinstance(f, Unary):
        return type(f)(_canon(f.body, env, level))
    if isinstance(f, Binary):
        return type(f)(_canon(f.left, env, level), _canon(f.right, env, level))
    if isinstance(f, Quant):
        new = type(f.var)(f"%{level}")
        return type(f)(new, _canon(f.body, {**env, f.var: new}, level + 1))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------- derived notation


def _fresh_var(cls, base, avoid):
    name = base
    while name in avoid:
        name = name + "'"
    avoid.add(name)
    return cls(name)


def included(xx: PVar, yy: PVar, avoid=None) -> Formula:
    """``xx sub yy`` := forall z (z pc xx -> z pc yy)."""
    avoid = set(avoid or ()) | {xx.name, yy.name}
    z = _fresh_var(Var, "z", avoid)
    return ForallS(z, Implies(Prec(z, xx), Prec(z, yy)))


def member(x: Term, y: Term, avoid=None) -> Formula:
    """``x in y`` := existsp zz (Set(zz, y) & x pc zz)."""
    avoid = set(avoid or ()) | {x.name, y.name}
    zz = _fresh_var(PVar, "zz", avoid)
    return ExistsP(zz, And(Atom("Set", (zz, y)), Prec(x, zz)))


def forall_pc(x: Var, xx: PVar, body: Formula) -> Formula:
    return ForallS(x, Implies(Prec(x, xx), body))


def exists_pc(x: Var, xx: PVar, body: Formula) -> Formula:
    return ExistsS(x, And(Prec(x, xx), body))


def forall_sub(yy: PVar, xx: PVar, body: Formula) -> Formula:
    """(forall yy sub xx) body"""
    avoid = all_names(body) | {yy.name, xx.name}
    return ForallP(yy, Implies(included(yy, xx, avoid), body))


def exists_sub(yy: PVar, xx: PVar, body: Formula) -> Formula:
    avoid = all_names(body) | {yy.name, xx.name}
    return ExistsP(yy, And(included(yy, xx, avoid), body))


def forall_sup(yy: PVar, xx: PVar, body: Formula) -> Formula:
    """(forall yy sup xx) body, i.e. over every yy with xx sub yy."""
    avoid = all_names(body) | {yy.name, xx.name}
    return ForallP(yy, Implies(included(xx, yy, avoid), body))


def exists_sup(yy: PVar, xx: PVar, body: Formula) -> Formula:
    avoid = all_names(body) | {yy.name, xx.name}
    return ExistsP(yy, And(included(xx, yy, avoid), body))


# ---------------------------------------------------------------- parser

_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|\[\]D|\[\]G|<>D|<>G|!=|[~&|(),=])|(?P<id>[A-Za-z_][A-Za-z0-9_]*'*))"
)

_KEYWORDS = {"forall", "exists", "forallp", "existsp", "pc", "sub", "sup", "in"}
_MODAL_TOKENS = {"[]D": BoxD, "<>D": DiaD, "[]G": BoxG, "<>G": DiaG}


def _tokenize(text):
    pos = 0
    out = []
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + (len(rest) - len(rest.lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = "op" if m.group("op") else "id"
        val = m.group(kind)
        out.append((kind, val, m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, sig, free):
        self.text = text
        self.sig = sig
        self.preds = dict(sig.predicates)
        self.free = None if free is None else set(free)
        self.toks = _tokenize(text)
        self.i = 0
        self.bound = []  # stack of names

    # token helpers
    def peek(self, k=0):
        return self.toks[self.i + k]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, expected=(), tok=None, cls=ParseError):
        tok = tok or self.peek()
        return cls(msg, self.text, tok[2], expected)

    def expect(self, val):
        tok = self.next()
        if tok[1] != val or tok[0] == "end":
            raise self.error(f"unexpected {tok[1] or 'end of input'!r}", [repr(val)], tok)
        return tok

    def at(self, val):
        tok = self.peek()
        return tok[0] != "end" and tok[1] == val

    # grammar
    def parse(self):
        f = self.iff()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}", ["end of input", "&", "|", "->"])
        return f

    def iff(self):
        left = self.imp()
        if self.at("<->"):
            self.next()
            right = self.imp()
            return iff(left, right)
        return left

    def imp(self):
        left = self.disj()
        if self.at("->"):
            self.next()
            return Implies(left, self.imp())
        return left

    def disj(self):
        left = self.conj()
        while self.at("|"):
            self.next()
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.at("&"):
            self.next()
            left = And(left, self.unary())
        return left

    def unary(self):
        kind, val, pos = self.peek()
        if val == "~" and kind == "op":
            self.next()
            return Not(self.unary())
        if kind == "op" and val in _MODAL_TOKENS:
            self.next()
            return _MODAL_TOKENS[val](self.unary())
        if kind == "id" and val in ("forall", "exists", "forallp", "existsp"):
            return self.quantifier()
        return self.primary()

    def quantifier(self):
        kind, kw, pos = self.next()
        plural = kw.endswith("p")
        tok = self.next()
        if tok[0] != "id" or tok[1] in _KEYWORDS:
            raise self.error("expected a variable", ["variable"], tok)
        name = tok[1]
        if plural != is_plural_name(name):
            want = "plural" if plural else "singular"
            raise self.error(f"{kw} needs a {want} variable, got {name!r}", tok=tok, cls=SortErrorAt)
        if not plural and self.sig.is_constant(name):
            raise self.error(f"cannot quantify over constant {name!r}", tok=tok, cls=SortErrorAt)
        var = PVar(name) if plural else Var(name)
        restriction = None
        if self.peek()[0] == "id" and self.peek()[1] in ("pc", "sub", "sup"):
            rkind = self.next()[1]
            rtok = self.peek()
            bound_to = self.term()
            if rkind == "pc" and (plural or not isinstance(bound_to, PVar)):
                raise self.error("'pc' restriction needs a singular variable and a plural term",
                                 tok=rtok, cls=SortErrorAt)
            if rkind in ("sub", "sup") and (not plural or not isinstance(bound_to, PVar)):
                raise self.error(f"'{rkind}' restriction needs plural variables", tok=rtok, cls=SortErrorAt)
            restriction = (rkind, bound_to)
        self.bound.append(name)
        body = self.unary()
        self.bound.pop()
        universal = kw.startswith("forall")
        if restriction is None:
            cls = {("forall", False): ForallS, ("exists", False): ExistsS,
                   ("forall", True): ForallP, ("exists", True): ExistsP}[("forall" if universal else "exists", plural)]
            return cls(var, body)
        rkind, other = restriction
        if rkind == "pc":
            return (forall_pc if universal else exists_pc)(var, other, body)
        if rkind == "sub":
            return (forall_sub if universal else exists_sub)(var, other, body)
        return (forall_sup if universal else exists_sup)(var, other, body)

    def primary(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.next()
            f = self.iff()
            self.expect(")")
            return f
        if kind != "id" or val in _KEYWORDS:
            raise self.error(f"unexpected {val or 'end of input'!r}",
                             ["formula", "(", "~", "modality", "quantifier"])
        if val[0].isupper():
            return self.atom()
        left_tok = self.peek()
        left = self.term()
        op_tok = self.peek()
        op = op_tok[1]
        if op in ("=", "!="):
            self.next()
            right_tok = self.peek()
            right = self.term()
            for t, tk in ((left, left_tok), (right, right_tok)):
                if t.sort != SINGULAR:
                    raise self.error(f"identity needs singular terms, got {t}", tok=tk, cls=SortErrorAt)
            eq = Eq(left, right)
            return Not(eq) if op == "!=" else eq
        if op == "pc":
            self.next()
            right_tok = self.peek()
            right = self.term()
            if left.sort != SINGULAR:
                raise self.error(f"left of 'pc' must be singular, got {left}", tok=left_tok, cls=SortErrorAt)
            if not isinstance(right, PVar):
                raise self.error(f"right of 'pc' must be plural, got {right}", tok=right_tok, cls=SortErrorAt)
            return Prec(left, right)
        if op in ("sub", "sup"):
            self.next()
            right_tok = self.peek()
            right = self.term()
            if not isinstance(left, PVar) or not isinstance(right, PVar):
                raise self.error(f"'{op}' needs plural variables", tok=right_tok, cls=SortErrorAt)
            return included(left, right) if op == "sub" else included(right, left)
        if op == "in":
            self.next()
            right_tok = self.peek()
            right = self.term()
            if left.sort != SINGULAR or right.sort != SINGULAR:
                raise self.error("'in' needs singular terms", tok=right_tok, cls=SortErrorAt)
            self.check_pred("Set", (PLURAL, SINGULAR), op_tok)
            return member(left, right)
        raise self.error(f"unexpected {op or 'end of input'!r} after term {left}", ["=", "!=", "pc", "sub", "in"], op_tok)

    def check_pred(self, name, sorts, tok):
        known = self.preds.get(name)
        if known is None:
            if not self.sig.extensible:
                raise self.error(f"unknown predicate {name!r}", tok=tok, cls=UnknownSymbolErrorAt)
            self.preds[name] = sorts
            return
        if known != sorts:
            got = "".join(sorts)
            raise self.error(f"sort mismatch for {name}: declared {''.join(known) or '()'}, used as {got or '()'}",
                             tok=tok, cls=SortErrorAt)

    def atom(self):
        tok = self.next()
        name = tok[1]
        args = []
        arg_toks = []
        if self.at("("):
            self.next()
            if not self.at(")"):
                while True:
                    arg_toks.append(self.peek())
                    args.append(self.term())
                    if self.at(","):
                        self.next()
                        continue
                    break
            self.expect(")")
        sorts = tuple(a.sort for a in args)
        known = self.preds.get(name)
        if known is not None and len(known) == len(args):
            for a, want, tk in zip(args, known, arg_toks):
                if a.sort != want:
                    raise self.error(f"sort mismatch in {name}: {a} is {a.sort}, expected {want}",
                                     tok=tk, cls=SortErrorAt)
        self.check_pred(name, sorts, tok)
        return Atom(name, tuple(args))

    def term(self):
        tok = self.next()
        if tok[0] != "id" or tok[1] in _KEYWORDS or tok[1][0].isupper():
            raise self.error(f"expected a term, got {tok[1] or 'end of input'!r}", ["term"], tok)
        name = tok[1]
        if is_plural_name(name):
            t = PVar(name)
        elif self.sig.is_constant(name):
            return Const(name)
        else:
            t = Var(name)
        if name not in self.bound and self.free is not None and name not in self.free:
            raise self.error(f"unbound variable {name!r}", tok=tok, cls=UnknownSymbolError)
        return t


class SortErrorAt(ParseError, SortError):
    pass


class UnknownSymbolErrorAt(UnknownSymbolError):
    pass


def parse(text: str, sig: Signature | None = None, free: Iterable[str] | None = None) -> Formula:
    """Parse concrete syntax into a Formula.

    ``free`` restricts which variables may occur free; None allows any.
    """
    return _Parser(text, sig if sig is not None else Signature.open(), free).parse()


def parse_term(text: str, sig: Signature | None = None) -> Term:
    p = _Parser(text, sig if sig is not None else Signature.open(), None)
    t = p.term()
    if p.peek()[0] != "end":
        raise p.error("trailing input after term")
    return t


def infer_signature(formulas: Iterable[Formula], constants: Iterable[str] = ()) -> Signature:
    preds = {}
    consts = set(constants)
    for f in formulas:
        for g in subformulas(f):
            if isinstance(g, Atom):
                sorts = tuple(a.sort for a in g.args)
                if preds.setdefault(g.pred, sorts) != sorts:
                    raise SortError(f"inconsistent use of {g.pred}")
        consts |= {c.name for c in constants_of(f)}
    return Signature(preds, frozenset(consts))


# ---------------------------------------------------------------- printer

_PREC_IMP, _PREC_OR, _PREC_AND, _PREC_UNARY = 1, 2, 3, 4
_UNARY_TOKENS = {Not: "~", BoxD: "[]D ", DiaD: "<>D ", BoxG: "[]G ", DiaG: "<>G "}
_QUANT_TOKENS = {ForallS: "forall", ExistsS: "exists", ForallP: "forallp", ExistsP: "existsp"}


def _prec(f):
    if isinstance(f, Implies):
        return _PREC_IMP
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    return _PREC_UNARY


def _wrap(f, need):
    s = render(f)
    return f"({s})" if _prec(f) < need else s


def render(f: Formula) -> str:
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({','.join(a.name for a in f.args)})"
    if isinstance(f, Eq):
        return f"{f.left} = {f.right}"
    if isinstance(f, Prec):
        return f"{f.elem} pc {f.plural}"
    if isinstance(f, Unary):
        tok = _UNARY_TOKENS[type(f)]
        body = f.body
        return tok + _wrap(body, _PREC_UNARY)
    if isinstance(f, Quant):
        return f"{_QUANT_TOKENS[type(f)]} {f.var.name} {_wrap(f.body, _PREC_UNARY)}"
    if isinstance(f, Implies):
        return f"{_wrap(f.left, _PREC_IMP + 1)} -> {_wrap(f.right, _PREC_IMP)}"
    if isinstance(f, Or):
        return f"{_wrap(f.left, _PREC_OR)} | {_wrap(f.right, _PREC_OR + 1)}"
    if isinstance(f, And):
        return f"{_wrap(f.left, _PREC_AND)} & {_wrap(f.right, _PREC_AND + 1)}"
    raise TypeError(f"not a formula: {f!r}")
