"""Deterministic formula pools for schema instantiation and exhaustive checks.

Depth counts atoms as 1.  Levels up to ``exhaustive`` are complete (up to
alpha-equivalence); deeper levels are thinned by a fixed stride so that
at most ``per_level`` formulas survive.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..formula import (
    PLURAL, And, Atom, BoxD, BoxG, DiaD, DiaG, Eq, ExistsP, ExistsS, ForallP,
    ForallS, Formula, Implies, Not, Or, PVar, Prec, Signature, Var, canonical,
    free_vars,
)

UNARY = {"not": Not, "boxD": BoxD, "diaD": DiaD, "boxG": BoxG, "diaG": DiaG}
BINARY = {"and": And, "or": Or, "imp": Implies}
MODAL_OPS = ("boxD", "diaD", "boxG", "diaG")


def atoms(sig: Signature, variables, equality=True) -> list:
    """All atomic formulas over ``variables`` (and the signature's constants)."""
    sing = [v for v in variables if not isinstance(v, PVar)]
    plur = [v for v in variables if isinstance(v, PVar)]
    out = []
    for name, sorts in sorted(sig.predicates.items()):
        pools = [plur if s == PLURAL else sing for s in sorts]
        for args in product(*pools):
            out.append(Atom(name, tuple(args)))
    if equality:
        for i, x in enumerate(sing):
            for y in sing[i + 1:]:
                out.append(Eq(x, y))
    for x in sing:
        for xx in plur:
            out.append(Prec(x, xx))
    return out


@dataclass(frozen=True)
class PoolSpec:
    depth: int
    unary: tuple = ("not",)
    binary: tuple = ("and", "or", "imp")
    quantify: tuple = ()  # variables that quantifiers may bind
    exhaustive: int = 2
    per_level: int = 1500


def levels(base, spec: PoolSpec) -> list:
    """Formulas grouped by exact depth; ``levels[0]`` is the atomic level."""
    seen = set()

    def fresh(f):
        key = canonical(f)
        if key in seen:
            return False
        seen.add(key)
        return True

    lv = [[f for f in base if fresh(f)]]
    for d in range(2, spec.depth + 1):
        prev = lv[-1]
        lower = [f for level in lv for f in level]
        cands = []
        for op in spec.unary:
            cands += [UNARY[op](f) for f in prev]
        for v in spec.quantify:
            qs = (ForallP, ExistsP) if isinstance(v, PVar) else (ForallS, ExistsS)
            for f in prev:
                if v in free_vars(f):
                    cands += [q(v, f) for q in qs]
        n_prev = len(prev)
        for op in spec.binary:
            cls = BINARY[op]
            for i, l in enumerate(lower):
                for r in (prev if i < len(lower) - n_prev else lower):
                    cands.append(cls(l, r))
        if d > spec.exhaustive and len(cands) > spec.per_level:
            stride = -(-len(cands) // spec.per_level)
            cands = cands[::stride]
        lv.append([f for f in cands if fresh(f)])
    return lv


def pool(base, spec: PoolSpec) -> list:
    return [f for level in levels(base, spec) for f in level]


X, Y, Z = Var("x"), Var("y"), Var("z")
XX, YY = PVar("xx"), PVar("yy")

LINK_SIG = Signature({"P": ("s",), "R": ("s", "s")})


def singular_pool(sig=LINK_SIG, depth=3, per_level=1500, variables=(X, Y)) -> list:
    spec = PoolSpec(depth, quantify=tuple(variables), per_level=per_level)
    return pool(atoms(sig, variables), spec)


def plural_pool(sig=LINK_SIG, depth=2, per_level=1500, variables=(X, XX, YY)) -> list:
    spec = PoolSpec(depth, quantify=tuple(variables), per_level=per_level)
    return pool(atoms(sig, variables), spec)


def modal_pool(sig=LINK_SIG, depth=2, per_level=1500, variables=(X, Y), quantify=True) -> list:
    """Pool over L^BM: connectives, all four modalities and quantifiers."""
    spec = PoolSpec(depth, unary=("not",) + MODAL_OPS, quantify=tuple(variables) if quantify else (),
                    per_level=per_level)
    return pool(atoms(sig, variables), spec)


def l_pool(sig=LINK_SIG, depth=2, variables=(X, Y), per_level=1500) -> list:
    return singular_pool(sig, depth, per_level, variables)


def by_depth(formulas, max_depth) -> list:
    from ..formula import depth
    return [f for f in formulas if depth(f) <= max_depth]
