"""Enumeration of bimodal frames with domains, up to isomorphism.

Worlds are integers ``0..n-1`` here and individuals are indices into a
universe whose first entries are the signature's constants.  A
``FrameConfig`` fixes worlds, both relations and every domain; the
interpretations over it are enumerated separately (see ``interps``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

INDIVIDUAL_NAMES = "abcdefghijklmnopqrstuvwxyz"


def individual_names(constants, count):
    """Universe names: constants first, then unused letters in order."""
    names = list(sorted(constants))
    for ch in INDIVIDUAL_NAMES:
        if len(names) >= count:
            break
        if ch not in names:
            names.append(ch)
    i = 0
    while len(names) < count:
        name = f"i{i}"
        if name not in names:
            names.append(name)
        i += 1
    return tuple(names)


@dataclass(frozen=True)
class FrameConfig:
    n: int
    leqD: frozenset
    leqG: frozenset
    dom: tuple  # per world: frozenset of individual indices
    universe: tuple  # individual names, constants first
    n_constants: int
    autos: tuple = ()  # (world perm, individual perm) pairs

    def succD(self, w):
        return tuple(v for v in range(self.n) if (w, v) in self.leqD)

    def succG(self, w):
        return tuple(v for v in range(self.n) if (w, v) in self.leqG)

    @property
    def used(self) -> tuple:
        return tuple(sorted(set().union(*self.dom)))

    def world_names(self):
        return tuple(f"w{i}" for i in range(self.n))

    def to_frame(self):
        from ..kripke import BimodalFrame
        ws = self.world_names()
        return BimodalFrame(
            ws,
            frozenset((ws[u], ws[v]) for u, v in self.leqD),
            frozenset((ws[u], ws[v]) for u, v in self.leqG),
            {ws[w]: frozenset(self.universe[i] for i in self.dom[w]) for w in range(self.n)},
        )


def _transitive(rel, n):
    return all((u, x) in rel for (u, v) in rel for (v2, x) in rel if v == v2)


@lru_cache(maxsize=None)
def preorders(n: int) -> tuple:
    ident = {(i, i) for i in range(n)}
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for bits in product((0, 1), repeat=len(off)):
        rel = frozenset(ident | {p for p, b in zip(off, bits) if b})
        if _transitive(rel, n):
            out.append(rel)
    return tuple(out)


def _succ(rel, w, n):
    return [v for v in range(n) if (w, v) in rel]


def convergent(rel, n) -> bool:
    for w in range(n):
        for u, v in combinations(_succ(rel, w, n), 2):
            if not any((u, x) in rel and (v, x) in rel for x in range(n)):
                return False
    return True


def mixed_convergent(d, g, n) -> bool:
    for w0 in range(n):
        for w1 in _succ(g, w0, n):
            for w2 in _succ(d, w0, n):
                if not any((w1, w3) in d and (w2, w3) in g for w3 in range(n)):
                    return False
    return True


def rooted(d, n) -> bool:
    return any(all((r, v) in d for v in range(n)) for r in range(n))


def relation_pairs(n, max_worlds=None, g_identity=False, only_rooted=True):
    """Every (leqD, leqG) on n worlds meeting the frame conditions."""
    for d in preorders(n):
        if only_rooted and not rooted(d, n):
            continue
        for g in preorders(n):
            if not g <= d:
                continue
            if g_identity and any(u != v for u, v in g):
                continue
            if convergent(g, n) and mixed_convergent(d, g, n):
                yield d, g


def _encode(n, d, g, dom, wp, ip):
    """Relabel by world perm ``wp`` and individual perm ``ip`` and encode."""
    d2 = tuple(sorted((wp[u], wp[v]) for u, v in d))
    g2 = tuple(sorted((wp[u], wp[v]) for u, v in g))
    dm = [None] * n
    for w in range(n):
        dm[wp[w]] = tuple(sorted(ip[i] for i in dom[w]))
    return (d2, g2, tuple(dm))


def domain_assignments(n, d, universe_size, max_domain, n_constants, nonempty=True, ordered=True):
    const = frozenset(range(n_constants))
    cands = []
    for r in range(0, max_domain + 1):
        for c in combinations(range(universe_size), r):
            s = frozenset(c)
            if const <= s and (s or not nonempty):
                cands.append(s)
    for doms in product(cands, repeat=n):
        if all(doms[u] <= doms[v] for u, v in d) and (not ordered or _first_use_ordered(doms, n_constants)):
            yield tuple(doms)


def _first_use_ordered(doms, k):
    """Fresh individuals are introduced in index order, without gaps."""
    nxt = k
    for s in doms:
        for i in sorted(s):
            if i >= k:
                if i > nxt:
                    return False
                if i == nxt:
                    nxt += 1
    return True


def enumerate_frame_configs(max_worlds, max_domain, max_individuals=None, constants=(),
                            g_identity=False, only_rooted=True, prune=True, min_worlds=1,
                            nonempty=True):
    """Frame configurations in a deterministic order, one per isomorphism class when pruning."""
    constants = tuple(sorted(constants))
    k = len(constants)
    if max_domain < k:
        return
    if max_individuals is None:
        max_individuals = max_domain * max_worlds
    max_individuals = max(max_individuals, k)
    for n in range(min_worlds, max_worlds + 1):
        usize = min(max_individuals, max(k, max_domain * n))
        universe = individual_names(constants, usize)
        world_perms = list(permutations(range(n)))
        for d, g in relation_pairs(n, g_identity=g_identity, only_rooted=only_rooted):
            for dom in domain_assignments(n, d, usize, max_domain, k, nonempty, ordered=prune):
                used = max(set().union(*dom) | {k - 1}) + 1
                ind_perms = [tuple(range(k)) + p + tuple(range(used, usize))
                             for p in permutations(range(k, used))] if prune else [tuple(range(usize))]
                ident = _encode(n, d, g, dom, tuple(range(n)), tuple(range(usize)))
                autos = []
                keep = True
                if prune:
                    for wp in world_perms:
                        for ip in ind_perms:
                            code = _encode(n, d, g, dom, wp, ip)
                            if code < ident and _first_use_ordered(code[2], k):
                                keep = False
                                break
                            if code == ident:
                                autos.append((wp, ip))
                        if not keep:
                            break
                else:
                    autos = [(tuple(range(n)), tuple(range(usize)))]
                if keep:
                    yield FrameConfig(n, d, g, dom, universe, k, tuple(autos))
