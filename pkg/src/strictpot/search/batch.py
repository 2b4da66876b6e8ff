"""Vectorised evaluation over every interpretation of one frame configuration.

A truth table is a uint64 array of shape (worlds, assignments, words): bit
``m % 64`` of word ``m // 64`` is the value in the m-th model of the
batch.  All models in a batch share the frame and the domains, so modal
operators and quantifiers become reductions over small index sets while
the model axis stays packed.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from ..formula import (
    And, Atom, BoxD, BoxG, Const, DiaD, DiaG, Eq, ExistsP, ExistsS, ForallP,
    ForallS, Formula, Implies, Not, Or, Prec, PVar, Term,
)
from .interps import SlotLayout, code_bits, index_subsets

ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
CLASSICAL, FORCING = "classical", "forcing"


class Batch:
    """Truth tables for a fixed variable set over a chunk of interpretation codes."""

    def __init__(self, lay: SlotLayout, codes: np.ndarray, variables, shared=None):
        cfg = lay.config
        self.lay, self.cfg, self.codes = lay, cfg, codes
        self.W = cfg.n
        self.M = len(codes)
        self.words = (self.M + 63) // 64
        self.variables = tuple(variables)
        self.var_index = {v: i for i, v in enumerate(self.variables)}
        used = cfg.used
        self.doms = [sorted(cfg.dom[w]) for w in range(self.W)]
        self.dom_subsets = [index_subsets(cfg.dom[w]) for w in range(self.W)]
        ranges = [index_subsets(used) if isinstance(v, PVar) else list(used) for v in self.variables]
        self.assignments = list(product(*ranges))
        self.A = len(self.assignments)
        position = {a: i for i, a in enumerate(self.assignments)}
        self.sub = []
        for k, rng in enumerate(ranges):
            table = {}
            for val in rng:
                table[val] = np.array([position[a[:k] + (val,) + a[k + 1:]] for a in self.assignments], dtype=np.int64)
            self.sub.append(table)
        self.legal = np.zeros((self.W, self.A), dtype=bool)
        for w in range(self.W):
            dom = cfg.dom[w]
            for i, a in enumerate(self.assignments):
                self.legal[w, i] = all((x <= dom) if isinstance(x, frozenset) else (x in dom) for x in a)
        self.const_index = {name: i for i, name in enumerate(cfg.universe[:cfg.n_constants])}
        self._pack_classes()
        self.shared = shared if shared is not None else set()
        self.memo = {}

    def _pack_classes(self):
        K = self.lay.n_classes
        bits = code_bits(self.codes, K) if K else np.zeros((self.M, 0), dtype=bool)
        padded = np.zeros((self.words * 64, K), dtype=bool)
        padded[: self.M] = bits
        packed = np.packbits(padded, axis=0, bitorder="little")  # (words*8, K)
        cls = np.ascontiguousarray(packed.T).view("<u8")  # (K, words)
        self.cls = np.vstack([cls, np.zeros((1, self.words), dtype=np.uint64)])
        self.tail = np.full(self.words, ALL, dtype=np.uint64)
        if self.M % 64:
            self.tail[-1] = np.uint64((1 << (self.M % 64)) - 1)

    # -------------------------------------------------------------- atoms

    def _term_values(self, t: Term):
        if isinstance(t, Const):
            i = self.const_index.get(t.name)
            if i is None:
                raise KeyError(f"constant {t.name} is not part of the enumerated signature")
            return [i] * self.A
        k = self.var_index.get(t)
        if k is None:
            raise KeyError(f"variable {t.name} is outside the batch variables")
        return [a[k] for a in self.assignments]

    def _atom(self, f):
        if isinstance(f, Atom):
            cols = [self._term_values(t) for t in f.args]
            idx = np.full((self.W, self.A), -1, dtype=np.int64)
            for w in range(self.W):
                for i in range(self.A):
                    idx[w, i] = self.lay.slot(w, f.pred, tuple(c[i] for c in cols))
            return self.cls[idx]
        if isinstance(f, Eq):
            l, r = self._term_values(f.left), self._term_values(f.right)
            mask = np.array([x == y for x, y in zip(l, r)])
        else:
            e, p = self._term_values(f.elem), self._term_values(f.plural)
            mask = np.array([x in s for x, s in zip(e, p)])
        row = np.where(mask[:, None], ALL, np.uint64(0)).astype(np.uint64)
        return np.broadcast_to(row, (self.W, self.A, self.words)).copy()

    # -------------------------------------------------------------- evaluation

    def classical(self, f: Formula) -> np.ndarray:
        return self._eval(f, CLASSICAL)

    def forcing(self, f: Formula) -> np.ndarray:
        return self._eval(f, FORCING)

    def _eval(self, f, mode):
        key = (mode, f)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        local = {}
        out = self._node(f, mode, local)
        return out

    def _get(self, f, mode, local):
        key = (mode, f)
        hit = self.memo.get(key)
        if hit is None:
            hit = local.get(key)
        if hit is None:
            hit = self._node(f, mode, local)
        return hit

    def _node(self, f, mode, local):
        val = self._compute(f, mode, local)
        key = (mode, f)
        if key in self.shared:
            self.memo[key] = val
        else:
            local[key] = val
        return val

    def _reduce(self, arrays, op):
        arrays = list(arrays)
        out = arrays[0].copy()
        for a in arrays[1:]:
            op(out, a, out=out)
        return out

    def _compute(self, f, mode, local):
        W = range(self.W)
        if isinstance(f, (Atom, Eq, Prec)):
            base = self._atom(f)
            if mode == CLASSICAL:
                return base
            return np.stack([self._reduce((base[v] for v in self.cfg.succD(w)), np.bitwise_and) for w in W])
        if isinstance(f, And):
            return self._get(f.left, mode, local) & self._get(f.right, mode, local)
        if isinstance(f, Or):
            return self._get(f.left, mode, local) | self._get(f.right, mode, local)
        if isinstance(f, Implies):
            imp = ~self._get(f.left, mode, local) | self._get(f.right, mode, local)
            if mode == CLASSICAL:
                return imp
            return np.stack([self._reduce((imp[v] for v in self.cfg.succD(w)), np.bitwise_and) for w in W])
        if isinstance(f, Not):
            neg = ~self._get(f.body, mode, local)
            if mode == CLASSICAL:
                return neg
            return np.stack([self._reduce((neg[v] for v in self.cfg.succD(w)), np.bitwise_and) for w in W])
        if isinstance(f, (BoxD, DiaD, BoxG, DiaG)):
            if mode != CLASSICAL:
                raise ValueError("forcing is defined for modal-free formulas only")
            b = self._get(f.body, mode, local)
            succ = self.cfg.succD if isinstance(f, (BoxD, DiaD)) else self.cfg.succG
            op = np.bitwise_and if isinstance(f, (BoxD, BoxG)) else np.bitwise_or
            return np.stack([self._reduce((b[v] for v in succ(w)), op) for w in W])
        if isinstance(f, (ForallS, ExistsS, ForallP, ExistsP)):
            b = self._get(f.body, mode, local)
            k = self.var_index.get(f.var)
            if k is None:
                raise KeyError(f"bound variable {f.var.name} is outside the batch variables")
            plural = isinstance(f, (ForallP, ExistsP))
            universal = isinstance(f, (ForallS, ForallP))
            op = np.bitwise_and if universal else np.bitwise_or
            table = self.sub[k]

            def values(v):
                return self.dom_subsets[v] if plural else self.doms[v]

            if mode == CLASSICAL:
                return np.stack([self._reduce((b[w][table[d]] for d in values(w)), op) for w in W])
            succ = self.cfg.succD if universal else self.cfg.succG
            return np.stack([
                self._reduce((b[v][table[d]] for v in succ(w) for d in values(v)), op) for w in W
            ])
        raise TypeError(f"not a formula: {f!r}")

    # -------------------------------------------------------------- queries

    def failures(self, table: np.ndarray, worlds=None) -> np.ndarray:
        """Word array marking models where ``table`` is false at some legal cell."""
        bad = ~table & self.tail
        mask = self.legal if worlds is None else self.legal & _world_mask(self.W, self.A, worlds)
        bad = bad[mask]
        if bad.size == 0:
            return np.zeros(self.words, dtype=np.uint64)
        return np.bitwise_or.reduce(bad, axis=0)

    def first_failure(self, table: np.ndarray, worlds=None):
        """(model index, world, assignment index) of the first false legal cell, or None."""
        mask = self.legal if worlds is None else self.legal & _world_mask(self.W, self.A, worlds)
        bad = (~table & self.tail) & np.where(mask[..., None], ALL, np.uint64(0))
        per_word = np.bitwise_or.reduce(bad.reshape(-1, self.words), axis=0)
        nz = np.flatnonzero(per_word)
        if not len(nz):
            return None
        word = int(nz[0])
        bit = _lowest_bit(int(per_word[word]))
        m = word * 64 + bit
        cells = (bad[:, :, word] >> np.uint64(bit)) & np.uint64(1)
        w, a = np.argwhere(cells.astype(bool))[0]
        return m, int(w), int(a)

    def count_false(self, table: np.ndarray) -> int:
        bad = (~table & self.tail)[self.legal]
        return int(_popcount(bad).sum())

    def cells(self) -> int:
        return int(self.legal.sum()) * self.M

    def assignment_dict(self, a_index: int) -> dict:
        names = self.cfg.universe
        out = {}
        for v, val in zip(self.variables, self.assignments[a_index]):
            out[v] = frozenset(names[i] for i in val) if isinstance(val, frozenset) else names[val]
        return out


def _world_mask(W, A, worlds):
    m = np.zeros((W, A), dtype=bool)
    for w in worlds:
        m[w] = True
    return m


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


_BYTE_POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _popcount(words: np.ndarray) -> np.ndarray:
    b = np.ascontiguousarray(words).view(np.uint8)
    return _BYTE_POP[b].reshape(words.shape + (8,)).sum(axis=-1)
