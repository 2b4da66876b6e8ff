"""Interpretations over a fixed frame configuration.

Every atomic fact ``(world, predicate, tuple)`` is a *slot*.  Stability
constraints force some slots to agree, so slots are grouped into classes
with a union-find, and an interpretation is a bit per class.  Codes are
integers over the class bits; under pruning only the lexicographically
least code in each automorphism orbit is kept.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from ..formula import PLURAL
from ..kripke import BimodalModel
from .frames import FrameConfig


def index_subsets(items) -> list:
    items = sorted(items)
    return [frozenset(x for j, x in enumerate(items) if mask >> j & 1) for mask in range(1 << len(items))]


def slot_tuples(sorts, dom):
    pools = [index_subsets(dom) if s == PLURAL else sorted(dom) for s in sorts]
    return list(product(*pools))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        a, b = self.find(i), self.find(j)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


@dataclass
class SlotLayout:
    config: FrameConfig
    predicates: tuple  # (name, sorts) pairs, sorted
    slots: list  # (world, pred, tuple)
    slot_index: dict
    slot_class: np.ndarray
    n_classes: int
    class_perms: list  # one permutation array per non-trivial automorphism

    def slot(self, w, pred, t):
        """Class index of the slot, or -1 when the tuple leaves dom(w)."""
        i = self.slot_index.get((w, pred, t))
        return -1 if i is None else int(self.slot_class[i])

    @property
    def size(self) -> int:
        return 1 << self.n_classes


def layout(config: FrameConfig, predicates, g_stable=True, d_stable=False) -> SlotLayout:
    preds = tuple(sorted((name, tuple(s)) for name, s in dict(predicates).items()))
    slots, index = [], {}
    for w in range(config.n):
        for name, sorts in preds:
            for t in slot_tuples(sorts, config.dom[w]):
                index[(w, name, t)] = len(slots)
                slots.append((w, name, t))
    uf = _UnionFind(len(slots))
    rels = []
    if g_stable:
        rels.append(config.leqG)
    if d_stable:
        rels.append(config.leqD)
    for rel in rels:
        for (u, v) in sorted(rel):
            if u == v:
                continue
            for name, sorts in preds:
                for t in slot_tuples(sorts, config.dom[u]):
                    uf.union(index[(u, name, t)], index[(v, name, t)])
    roots, cls = {}, np.empty(len(slots), dtype=np.int64)
    for i in range(len(slots)):
        r = uf.find(i)
        cls[i] = roots.setdefault(r, len(roots))
    n_classes = len(roots)
    perms = []
    for wp, ip in config.autos:
        if list(wp) == list(range(config.n)) and list(ip) == list(range(len(ip))):
            continue
        perm = np.empty(n_classes, dtype=np.int64)
        for i, (w, name, t) in enumerate(slots):
            t2 = tuple(frozenset(ip[x] for x in v) if isinstance(v, frozenset) else ip[v] for v in t)
            perm[cls[i]] = cls[index[(wp[w], name, t2)]]
        perms.append(perm)
    return SlotLayout(config, preds, slots, index, cls, n_classes, perms)


MAX_CLASSES = 40


def canonical_codes(lay: SlotLayout, start: int, stop: int) -> np.ndarray:
    """Codes in [start, stop) that are least in their automorphism orbit."""
    if lay.n_classes > MAX_CLASSES:
        raise ValueError(f"{lay.n_classes} independent atomic facts exceed the enumeration cap")
    codes = np.arange(start, stop, dtype=np.uint64)
    if not lay.class_perms or len(codes) == 0:
        return codes
    bits = code_bits(codes, lay.n_classes)
    keep = np.ones(len(codes), dtype=bool)
    weights = np.left_shift(np.uint64(1), np.arange(lay.n_classes, dtype=np.uint64))
    for perm in lay.class_perms:
        image = (bits.astype(np.uint64) * weights[perm]).sum(axis=1, dtype=np.uint64)
        keep &= codes <= image
    return codes[keep]


def code_bits(codes: np.ndarray, n_classes: int) -> np.ndarray:
    shifts = np.arange(n_classes, dtype=np.uint64)
    return ((codes[:, None] >> shifts[None, :]) & np.uint64(1)).astype(bool)


def count_interpretations(lay: SlotLayout, prune=True, chunk=1 << 16) -> int:
    if not prune or not lay.class_perms:
        return lay.size
    return sum(len(canonical_codes(lay, s, min(s + chunk, lay.size))) for s in range(0, lay.size, chunk))


def iter_code_chunks(lay: SlotLayout, prune=True, chunk=1 << 14):
    """Yield arrays of interpretation codes in increasing order."""
    for s in range(0, lay.size, chunk):
        stop = min(s + chunk, lay.size)
        codes = canonical_codes(lay, s, stop) if prune else np.arange(s, stop, dtype=np.uint64)
        if len(codes):
            yield codes


def materialise(lay: SlotLayout, code: int, sig, flags=None) -> BimodalModel:
    """The BimodalModel for one interpretation code."""
    cfg = lay.config
    frame = cfg.to_frame()
    ws = cfg.world_names()
    names = cfg.universe
    interp = {}
    for i, (w, pred, t) in enumerate(lay.slots):
        if int(code) >> int(lay.slot_class[i]) & 1:
            tt = tuple(frozenset(names[x] for x in v) if isinstance(v, frozenset) else names[v] for v in t)
            interp.setdefault((ws[w], pred), set()).add(tt)
    return BimodalModel(frame, sig, interp, **(flags or {}))
