"""Hypothesis strategies for formulas over a small fixed vocabulary."""
from hypothesis import strategies as st

from strictpot.formula import (
    And, Atom, BoxD, BoxG, Const, DiaD, DiaG, Eq, ExistsP, ExistsS, ForallP,
    ForallS, Implies, Not, Or, Prec, PVar, Var,
)

SVARS = [Var("x"), Var("y"), Var("z")]
PVARS = [PVar("xx"), PVar("yy")]
CONSTS = [Const("a"), Const("b")]

sterm = st.sampled_from(SVARS + CONSTS)
svar = st.sampled_from(SVARS)
pvar = st.sampled_from(PVARS)

atomic = st.one_of(
    st.builds(lambda t: Atom("P", (t,)), sterm),
    st.builds(lambda s, t: Atom("R", (s, t)), sterm, sterm),
    st.builds(Eq, sterm, sterm),
    st.builds(Prec, sterm, pvar),
)


def formulas(modal=True, plural=True, max_leaves=12):
    unary = [Not] + ([BoxD, DiaD, BoxG, DiaG] if modal else [])

    def extend(children):
        opts = [
            st.builds(lambda c, f: c(f), st.sampled_from(unary), children),
            st.builds(lambda c, l, r: c(l, r), st.sampled_from([And, Or, Implies]), children, children),
            st.builds(lambda q, v, f: q(v, f), st.sampled_from([ForallS, ExistsS]), svar, children),
        ]
        if plural:
            opts.append(st.builds(lambda q, v, f: q(v, f), st.sampled_from([ForallP, ExistsP]), pvar, children))
        return st.one_of(*opts)

    base = atomic if plural else st.one_of(
        st.builds(lambda t: Atom("P", (t,)), sterm),
        st.builds(lambda s, t: Atom("R", (s, t)), sterm, sterm),
        st.builds(Eq, sterm, sterm),
    )
    return st.recursive(base, extend, max_leaves=max_leaves)
