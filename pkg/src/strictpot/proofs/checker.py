"""Hilbert-style derivations: file format, tautology test, and the line checker.

Line syntax::

    n. <formula> ; <justification>

with justification one of ``premise``, ``taut`` (optionally ``taut i j ...``
for a tautological consequence of earlier lines), ``schema NAME {k := v, ...}``,
``mp i j``, ``necD i``, ``necG i`` or ``gen i x``.  Blank lines and ``#``
comments are ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..formula import (
    And, BoxD, BoxG, ForallP, ForallS, Formula, FormulaError, Implies, Not, Or,
    PVar, ParseError, Var, alpha_eq, canonical, conj, free_vars, parse,
    parse_term, render,
)
from . import schemas as S
from .systems import TAUT, SystemSpec

MAX_TAUT_ATOMS = 16


class DerivationSyntaxError(FormulaError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Justification:
    kind: str  # premise | taut | schema | mp | necD | necG | gen
    cites: tuple = ()
    schema: str = ""
    args: tuple = ()  # (name, raw text) pairs
    var: str = ""

    def __str__(self):
        if self.kind == "schema":
            inner = ", ".join(f"{k} := {v}" for k, v in self.args)
            return f"schema {self.schema}" + (f" {{{inner}}}" if inner else "")
        if self.kind == "gen":
            return f"gen {self.cites[0]} {self.var}"
        return " ".join([self.kind, *map(str, self.cites)])


@dataclass(frozen=True)
class Line:
    number: int
    formula: Formula
    justification: Justification
    source_line: int = 0


@dataclass
class Derivation:
    lines: list = field(default_factory=list)

    @property
    def premises(self) -> list:
        return [l.formula for l in self.lines if l.justification.kind == "premise"]

    @property
    def conclusion(self) -> Formula | None:
        return self.lines[-1].formula if self.lines else None

    def render(self) -> str:
        return "\n".join(f"{l.number}. {render(l.formula)} ; {l.justification}" for l in self.lines) + "\n"


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    bad_line: int | None = None
    reason: str = ""
    conclusion: Formula | None = None
    depends_on: frozenset = frozenset()  # premise lines the conclusion rests on

    def __str__(self):
        if self.accepted:
            c = render(self.conclusion) if self.conclusion is not None else "(empty)"
            return f"accepted: {c}"
        return f"rejected at line {self.bad_line}: {self.reason}"


# ---------------------------------------------------------------- parsing

_LINE = re.compile(r"^\s*(\d+)\s*\.\s*(.*?)\s*;\s*(.*?)\s*$")


def _split_args(text: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        parts.append("".join(cur))
    return parts


def parse_justification(text: str, line=None) -> Justification:
    text = text.strip()
    head, _, rest = text.partition(" ")
    rest = rest.strip()
    if head == "premise" and not rest:
        return Justification("premise")
    if head == "schema":
        m = re.match(r"^(\S+)\s*(?:\{(.*)\})?\s*$", rest, re.S)
        if not m:
            raise DerivationSyntaxError(f"bad schema justification: {text}", line)
        args = []
        for part in _split_args(m.group(2) or ""):
            name, sep, value = part.partition(":=")
            if not sep or not name.strip() or not value.strip():
                raise DerivationSyntaxError(f"bad metavariable binding: {part.strip()}", line)
            args.append((name.strip(), value.strip()))
        return Justification("schema", schema=m.group(1), args=tuple(args))
    nums = rest.split()
    if head == "gen":
        if len(nums) != 2 or not nums[0].isdigit():
            raise DerivationSyntaxError("gen needs a line number and a variable", line)
        return Justification("gen", (int(nums[0]),), var=nums[1])
    arity = {"taut": None, "mp": 2, "necD": 1, "necG": 1}
    if head not in arity:
        raise DerivationSyntaxError(f"unknown justification: {text}", line)
    if not all(n.isdigit() for n in nums):
        raise DerivationSyntaxError(f"line references must be numbers: {rest}", line)
    if arity[head] is not None and len(nums) != arity[head]:
        raise DerivationSyntaxError(f"{head} cites {arity[head]} line(s)", line)
    return Justification(head, tuple(int(n) for n in nums))


def parse_derivation(text: str) -> Derivation:
    d = Derivation()
    for i, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        m = _LINE.match(body)
        if not m:
            raise DerivationSyntaxError("expected 'n. formula ; justification'", i)
        number = int(m.group(1))
        expected = len(d.lines) + 1
        if number != expected:
            raise DerivationSyntaxError(f"line numbered {number}, expected {expected}", i)
        try:
            f = parse(m.group(2))
        except ParseError as e:
            raise DerivationSyntaxError(f"formula: {e}", i) from e
        d.lines.append(Line(number, f, parse_justification(m.group(3), i), i))
    return d


def load_derivation(path) -> Derivation:
    return parse_derivation(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------- tautologies


def _abstract(f, table):
    """Propositional skeleton: non-connective subformulas become letters."""
    if isinstance(f, Not):
        return ("not", _abstract(f.body, table))
    if isinstance(f, (And, Or, Implies)):
        return (type(f).__name__, _abstract(f.left, table), _abstract(f.right, table))
    return ("var", table.setdefault(canonical(f), len(table)))


def _truth(node, cols):
    tag = node[0]
    if tag == "var":
        return cols[node[1]]
    if tag == "not":
        return ~_truth(node[1], cols)
    l, r = _truth(node[1], cols), _truth(node[2], cols)
    if tag == "And":
        return l & r
    if tag == "Or":
        return l | r
    return ~l | r


def is_tautology(f: Formula) -> bool:
    """Classical propositional tautology, treating non-connective parts as letters."""
    table = {}
    node = _abstract(f, table)
    n = len(table)
    if n > MAX_TAUT_ATOMS:
        raise ValueError(f"{n} propositional letters exceed the truth-table cap of {MAX_TAUT_ATOMS}")
    rows = np.arange(1 << n, dtype=np.uint32)
    cols = [((rows >> k) & 1).astype(bool) for k in range(n)]
    return bool(np.all(_truth(node, cols)))


# ---------------------------------------------------------------- checking


def _bind(schema: S.Schema, args, line):
    kinds = dict(schema.metavars)
    out = {}
    for name, raw in args:
        kind = kinds.get(name)
        if kind is None:
            raise S.SchemaError(f"{schema.id}: unknown metavariable {name}")
        if kind == S.FORMULA:
            out[name] = parse(raw)
        else:
            out[name] = parse_term(raw)
    return out


def check_derivation(d: Derivation, spec: SystemSpec) -> Verdict:
    """Accept iff every line is justified in ``spec``; otherwise name the first bad line."""
    deps = {}

    def reject(line, why):
        return Verdict(False, line.number, why)

    def cited(line, i):
        if not 1 <= i < line.number:
            raise _Bad(f"cites line {i}, which is not an earlier line")
        return d.lines[i - 1]

    for line in d.lines:
        j, f = line.justification, line.formula
        try:
            if j.kind == "premise":
                deps[line.number] = frozenset({line.number})
            elif j.kind == "taut":
                if TAUT not in spec.schemas:
                    raise _Bad(f"the tautology rule is not available in {spec.name} ({spec.base} base)")
                prev = [cited(line, i) for i in j.cites]
                target = Implies(conj([p.formula for p in prev]), f) if prev else f
                try:
                    ok = is_tautology(target)
                except ValueError as e:
                    raise _Bad(str(e)) from None
                if not ok:
                    what = "a tautological consequence of the cited lines" if prev else "a tautology"
                    raise _Bad(f"formula is not {what}")
                deps[line.number] = frozenset().union(*(deps[p.number] for p in prev))
            elif j.kind == "schema":
                if j.schema not in S.REGISTRY:
                    raise _Bad(f"unknown schema {j.schema}")
                if not spec.allows(j.schema):
                    raise _Bad(f"unknown schema {j.schema} for {spec.name}: not in its inventory")
                sch = S.get(j.schema)
                try:
                    inst = sch.instantiate(_bind(sch, j.args, line.number))
                except (S.SchemaError, ParseError, FormulaError) as e:
                    raise _Bad(str(e)) from None
                if not alpha_eq(inst, f):
                    raise _Bad(f"formula is not the {j.schema} instance {render(inst)}")
                deps[line.number] = frozenset()
            elif j.kind == "mp":
                a, b = (cited(line, i) for i in j.cites)
                if not _mp(a.formula, b.formula, f):
                    raise _Bad(f"mp {a.number} {b.number}: neither cited line is an implication "
                               f"from the other to this formula")
                deps[line.number] = deps[a.number] | deps[b.number]
            elif j.kind in ("necD", "necG"):
                tag = j.kind[-1]
                if tag not in spec.modalities:
                    raise _Bad(f"{j.kind} is not a rule of {spec.name}")
                src = cited(line, j.cites[0])
                if deps[src.number]:
                    lines = ", ".join(map(str, sorted(deps[src.number])))
                    raise _Bad(f"{j.kind} cites line {src.number}, which depends on premise line(s) {lines}")
                box = BoxD if tag == "D" else BoxG
                if not alpha_eq(f, box(src.formula)):
                    raise _Bad(f"formula is not {render(box(src.formula))}")
                deps[line.number] = frozenset()
            elif j.kind == "gen":
                src = cited(line, j.cites[0])
                v = parse_term(j.var)
                if not isinstance(v, (Var, PVar)):
                    raise _Bad(f"gen needs a variable, got {j.var}")
                if isinstance(v, PVar) and not spec.plural:
                    raise _Bad(f"{spec.name} has no plural quantifiers")
                for p in deps[src.number]:
                    if v in free_vars(d.lines[p - 1].formula):
                        raise _Bad(f"{v.name} is free in premise line {p}")
                q = ForallP if isinstance(v, PVar) else ForallS
                if not alpha_eq(f, q(v, src.formula)):
                    raise _Bad(f"formula is not {render(q(v, src.formula))}")
                deps[line.number] = deps[src.number]
            else:
                raise _Bad(f"unknown justification {j.kind}")
        except _Bad as e:
            return reject(line, str(e))
    last = d.lines[-1].number if d.lines else None
    return Verdict(True, None, "", d.conclusion, deps.get(last, frozenset()))


class _Bad(Exception):
    pass


def _mp(a, b, f):
    for x, y in ((a, b), (b, a)):
        if isinstance(y, Implies) and alpha_eq(y.left, x) and alpha_eq(y.right, f):
            return True
    return False


def check_file(path, spec: SystemSpec) -> Verdict:
    return check_derivation(load_derivation(path), spec)
