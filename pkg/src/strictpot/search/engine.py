"""Bounded model spaces and batched validity / agreement checks."""
from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..formula import (
    Formula, Language, PVar, Signature, Var, all_names, classify_language,
    constants_of, free_vars, infer_signature, subformulas, terms_of,
)
from ..kripke import BimodalModel, eval_classical, eval_forcing, render_model
from .batch import CLASSICAL, FORCING, Batch, _popcount
from .frames import FrameConfig, enumerate_frame_configs
from .interps import count_interpretations, iter_code_chunks, layout, materialise


@dataclass(frozen=True)
class SearchBounds:
    max_worlds: int = 3
    max_domain: int = 2
    max_pool_depth: int = 2
    max_arity: int = 2
    max_individuals: int | None = None
    g_identity: bool = False
    rooted: bool = True
    prune: bool = True
    min_worlds: int = 1
    chunk: int = 1 << 16

    def __post_init__(self):
        for name in ("max_worlds", "max_domain", "max_pool_depth", "max_arity", "min_worlds", "chunk"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.max_individuals is not None and self.max_individuals < 1:
            raise ValueError("max_individuals must be positive")
        if self.min_worlds > self.max_worlds:
            raise ValueError("min_worlds exceeds max_worlds")


@dataclass(frozen=True)
class ModelFlags:
    g_stable: bool = True
    d_stable: bool = False
    decidable_identity: bool = True

    def as_dict(self):
        return {"g_stable": self.g_stable, "d_stable": self.d_stable, "decidable_identity": self.decidable_identity}


DEFAULT_FLAGS = ModelFlags()


def _check_sig(sig: Signature, bounds: SearchBounds):
    for name, sorts in sig.predicates.items():
        if len(sorts) > bounds.max_arity:
            raise ValueError(f"predicate {name} has arity {len(sorts)} above the cap {bounds.max_arity}")


def frame_configs(sig: Signature, bounds: SearchBounds) -> list:
    _check_sig(sig, bounds)
    return list(enumerate_frame_configs(
        bounds.max_worlds, bounds.max_domain, bounds.max_individuals, tuple(sorted(sig.constants)),
        g_identity=bounds.g_identity, only_rooted=bounds.rooted, prune=bounds.prune,
        min_worlds=bounds.min_worlds,
    ))


def space_size(sig: Signature, bounds: SearchBounds, flags: ModelFlags = DEFAULT_FLAGS) -> dict:
    """Frame configurations and models in the space (after pruning)."""
    cfgs = frame_configs(sig, bounds)
    models = sum(count_interpretations(layout(c, sig.predicates, flags.g_stable, flags.d_stable), bounds.prune)
                 for c in cfgs)
    return {"frames": len(cfgs), "models": models}


def enumerate_models(sig: Signature, bounds: SearchBounds, flags: ModelFlags = DEFAULT_FLAGS):
    """Every valid model within bounds (one per isomorphism class when pruning), in a fixed order."""
    for cfg in frame_configs(sig, bounds):
        lay = layout(cfg, sig.predicates, flags.g_stable, flags.d_stable)
        for codes in iter_code_chunks(lay, bounds.prune, bounds.chunk):
            for code in codes:
                yield materialise(lay, int(code), sig, flags.as_dict())


# ---------------------------------------------------------------- checks


@dataclass(frozen=True)
class Check:
    """One validity or agreement obligation.

    ``kind == "valid"``: ``formulas[0]`` under ``modes[0]`` must be true.
    ``kind == "agree"``: both formulas must have the same value.
    """

    label: str
    formulas: tuple
    modes: tuple
    kind: str = "valid"
    group: str = ""


def valid(label, f, mode=CLASSICAL, group="") -> Check:
    return Check(label, (f,), (mode,), "valid", group)


def agree(label, f, mode_f, g, mode_g, group="") -> Check:
    return Check(label, (f, g), (mode_f, mode_g), "agree", group)


@dataclass
class Witness:
    model: BimodalModel
    world: str
    assignment: dict
    values: tuple = ()

    def model_text(self) -> str:
        return render_model(self.model)

    def describe(self) -> str:
        asg = ", ".join(f"{k.name}={_show(v)}" for k, v in sorted(self.assignment.items(), key=lambda kv: kv[0].name))
        return f"world {self.world}" + (f" with {asg}" if asg else "")


def _show(v):
    return "{" + " ".join(sorted(v)) + "}" if isinstance(v, frozenset) else str(v)


@dataclass
class CheckResult:
    check: Check
    failing_models: int = 0
    models: int = 0
    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.failing_models == 0


@dataclass
class RunStats:
    frames: int = 0
    models: int = 0
    checks: int = 0
    elapsed: float = 0.0
    exhausted: bool = True


def check_variables(check: Check) -> tuple:
    names = set()
    for f in check.formulas:
        for g in subformulas(f):
            for t in terms_of(g):
                if isinstance(t, (Var, PVar)):
                    names.add(t)
            if hasattr(g, "var"):
                names.add(g.var)
    return tuple(sorted(names, key=lambda t: (isinstance(t, PVar), t.name)))


def _shared(checks):
    count = Counter()
    for c in checks:
        for f, mode in zip(c.formulas, c.modes):
            for g in set(subformulas(f)):
                count[(mode, g)] += 1
    return {k for k, n in count.items() if n >= 2}


def _groups(checks):
    groups = {}
    for i, c in enumerate(checks):
        groups.setdefault(check_variables(c), []).append(i)
    return [(vs, idx, _shared([checks[i] for i in idx])) for vs, idx in groups.items()]


def _verify_mode(check: Check):
    for f, mode in zip(check.formulas, check.modes):
        if mode == FORCING and classify_language(f) is not Language.L:
            raise ValueError(f"{check.label}: forcing needs a modal-free formula, got {f}")


def _run_config(args):
    """Worker: evaluate every check on every model of one configuration."""
    cfg, sig, flags, bounds, checks, groups, stop_first, pending = args
    lay = layout(cfg, sig.predicates, flags.g_stable, flags.d_stable)
    fails = [0] * len(checks)
    first = [None] * len(checks)
    models = 0
    for codes in iter_code_chunks(lay, bounds.prune, bounds.chunk):
        models += len(codes)
        for variables, idx, shared in groups:
            idx = [i for i in idx if i in pending]
            if not idx:
                continue
            b = Batch(lay, codes, variables, shared)
            for i in idx:
                c = checks[i]
                tables = [b.classical(f) if m == CLASSICAL else b.forcing(f) for f, m in zip(c.formulas, c.modes)]
                if c.kind == "valid":
                    table = tables[0]
                else:
                    table = ~(tables[0] ^ tables[1])
                bad = b.failures(table)
                n = int(_popcount(bad).sum())
                if n:
                    fails[i] += n
                    if first[i] is None:
                        m, w, a = b.first_failure(table)
                        first[i] = (int(codes[m]), w, b.assignment_dict(a))
        if stop_first and all(first[i] is not None for i in pending):
            break
    return models, fails, first


def run_checks(checks, sig: Signature, bounds: SearchBounds, flags: ModelFlags = DEFAULT_FLAGS,
               jobs: int = 1, stop_first: bool = False, progress=None):
    """Evaluate ``checks`` over the bounded model space.

    With ``stop_first`` the run ends once every check has a failing model;
    otherwise the space is exhausted.  Returns (results, stats).
    """
    checks = list(checks)
    for c in checks:
        _verify_mode(c)
    t0 = time.perf_counter()
    cfgs = frame_configs(sig, bounds)
    groups = _groups(checks)
    results = [CheckResult(c) for c in checks]
    stats = RunStats(frames=len(cfgs), checks=len(checks))
    pending = set(range(len(checks)))

    def absorb(ci, out):
        models, fails, first = out
        stats.models += models
        for i, (n, f) in enumerate(zip(fails, first)):
            results[i].failing_models += n
            if f is not None and results[i].witness is None:
                code, w, asg = f
                lay = layout(cfgs[ci], sig.predicates, flags.g_stable, flags.d_stable)
                model = materialise(lay, code, sig, flags.as_dict())
                free = set().union(*(free_vars(f) for f in checks[i].formulas))
                asg = {k: v for k, v in asg.items() if k in free}
                results[i].witness = Witness(model, model.worlds[w], asg)
                if stop_first:
                    pending.discard(i)

    if jobs > 1 and not stop_first:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futures = [ex.submit(_run_config, (c, sig, flags, bounds, checks, groups, False, set(range(len(checks)))))
                       for c in cfgs]
            for ci, fut in enumerate(futures):
                absorb(ci, fut.result())
    else:
        for ci, cfg in enumerate(cfgs):
            if stop_first and not pending:
                stats.exhausted = False
                break
            absorb(ci, _run_config((cfg, sig, flags, bounds, checks, groups, stop_first, set(pending))))
            if progress:
                progress(ci + 1, len(cfgs))
    for r in results:
        r.models = stats.models
    stats.elapsed = time.perf_counter() - t0
    return results, stats


def signature_for(formulas, base: Signature | None = None) -> Signature:
    sig = infer_signature(formulas)
    if base is not None:
        preds = dict(base.predicates)
        for k, v in sig.predicates.items():
            if preds.setdefault(k, v) != v:
                raise ValueError(f"predicate {k} used with sorts {v}, declared {preds[k]}")
        return Signature(preds, base.constants | sig.constants)
    return sig
