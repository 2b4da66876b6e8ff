"""Command-line entry point.

Exit codes: 0 success, 1 parse error, 2 wrong source language,
3 invalid model, 4 derivation rejected, 5 bounds exhausted without a
countermodel, 6 suite failures.
"""
from __future__ import annotations

import argparse
import configparser
import sys
from pathlib import Path

from .formula import FormulaError, ParseError, PVar, parse, parse_term, render
from .kripke import (
    EvaluationError, ModelFileError, eval_classical, eval_forcing, eval_is42, load_model,
    parse_assignment,
)
from .proofs import DerivationSyntaxError, NAMES, axiom_inventory, check_derivation, load_derivation, system
from .search import (
    CLASSICAL, FORCING, SUITES, ModelFlags, SearchBounds, find_countermodel, run_property_suite,
    space_size, signature_for,
)
from .translate import TRANSLATIONS, LanguageError, normalize, reverse

OK, PARSE, LANGUAGE, INVALID_MODEL, REJECTED, EXHAUSTED, SUITE_FAILED = range(7)

BOUND_KEYS = {
    "max_worlds": int, "max_domain": int, "depth": int, "max_arity": int, "max_individuals": int,
    "jobs": int, "g_identity": "bool", "no_prune": "bool", "d_stable": "bool",
}


def _bool(text):
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text}")


def read_config(path) -> dict:
    """keyword=value lines; '#' comments."""
    cp = configparser.ConfigParser(comment_prefixes=("#",), inline_comment_prefixes=("#",))
    cp.read_string("[defaults]\n" + Path(path).read_text(encoding="utf-8"))
    out = {}
    for key, raw in cp["defaults"].items():
        key = key.replace("-", "_")
        if key not in BOUND_KEYS:
            raise ValueError(f"unknown config key {key}")
        kind = BOUND_KEYS[key]
        out[key] = _bool(raw) if kind == "bool" else kind(raw)
    return out


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _add_bounds(p):
    g = p.add_argument_group("bounds")
    g.add_argument("--max-worlds", type=_positive)
    g.add_argument("--max-domain", type=_positive)
    g.add_argument("--depth", type=_positive, help="formula pool depth")
    g.add_argument("--max-arity", type=_positive)
    g.add_argument("--max-individuals", type=_positive)
    g.add_argument("--g-identity", action="store_true", default=None, help="force leqG to be the identity")
    g.add_argument("--no-prune", action="store_true", default=None, help="disable isomorphism pruning")
    g.add_argument("--d-stable", action="store_true", default=None, help="require atoms stable along leqD")


def _bounds(args, cfg) -> tuple:
    def pick(name, default):
        v = getattr(args, name, None)
        return v if v is not None else cfg.get(name, default)

    b = SearchBounds(
        max_worlds=pick("max_worlds", 3), max_domain=pick("max_domain", 2),
        max_pool_depth=pick("depth", 2), max_arity=pick("max_arity", 2),
        max_individuals=pick("max_individuals", None), g_identity=bool(pick("g_identity", False)),
        prune=not pick("no_prune", False),
    )
    flags = ModelFlags(d_stable=bool(pick("d_stable", False)))
    return b, flags


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="strictpot", description="Bimodal potentialism toolkit.")
    ap.add_argument("--config", help="keyword=value file with default bounds")
    ap.add_argument("--jobs", type=_positive, help="worker processes for exhaustive runs")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("translate", help="apply a translation")
    t.add_argument("--kind", required=True, choices=sorted(TRANSLATIONS) + ["reverse"])
    t.add_argument("formula", nargs="?", help="inline formula (or use --file)")
    t.add_argument("--file", help="read formulas from a file, one per line")
    t.add_argument("--anchor", help="plural anchor for --kind reverse")
    t.add_argument("--normalize", action="store_true")

    c = sub.add_parser("check", help="evaluate a formula in a model file")
    c.add_argument("model")
    c.add_argument("formula")
    c.add_argument("--semantics", choices=["classical", "forcing", "is42"], default="classical")
    c.add_argument("--world")
    c.add_argument("--assign", help="e.g. 'x=a, xx={a b}'")
    c.add_argument("--explain", action="store_true", help="print the evaluation trace")

    p = sub.add_parser("prove", help="check a derivation file")
    p.add_argument("derivation")
    p.add_argument("--system", required=True, choices=NAMES)
    p.add_argument("--with-reverse-subsumption", action="store_true")
    p.add_argument("--no-decidable-identity", action="store_true")

    i = sub.add_parser("inventory", help="list a system's schemas and rules")
    i.add_argument("system", choices=NAMES)
    i.add_argument("--with-reverse-subsumption", action="store_true")

    m = sub.add_parser("countermodel", help="search bounded models for a countermodel")
    m.add_argument("formula")
    m.add_argument("--semantics", choices=[CLASSICAL, FORCING], default=CLASSICAL)
    m.add_argument("--out", help="also write the model file here")
    _add_bounds(m)

    s = sub.add_parser("properties", help="run a property suite")
    s.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    s.add_argument("--json", help="write structured results here")
    s.add_argument("--verbose", action="store_true")
    _add_bounds(s)
    return ap


def cmd_translate(args, out) -> int:
    fn = TRANSLATIONS.get(args.kind)
    if args.kind == "reverse":
        if not args.anchor:
            print("error: --kind reverse requires --anchor", file=sys.stderr)
            return PARSE
        anchor = parse_term(args.anchor)
        if not isinstance(anchor, PVar):
            print(f"error: anchor {args.anchor} is not a plural variable", file=sys.stderr)
            return PARSE
        fn = lambda f: reverse(f, anchor)  # noqa: E731
    if args.file:
        texts = [l for l in Path(args.file).read_text(encoding="utf-8").splitlines() if l.strip()
                 and not l.lstrip().startswith("#")]
    elif args.formula is not None:
        texts = [args.formula]
    else:
        print("error: give a formula or --file", file=sys.stderr)
        return PARSE
    for text in texts:
        f = parse(text)
        g = fn(f)
        if args.normalize:
            g = normalize(g)
        print(render(g), file=out)
    return OK


def cmd_check(args, out) -> int:
    loaded = load_model(args.model)
    if loaded.violations:
        print(f"invalid model {args.model}:", file=out)
        for line in loaded.report():
            print("  " + line, file=out)
        return INVALID_MODEL
    m = loaded.model
    f = parse(args.formula, m.sig)
    w = args.world or m.worlds[0]
    if w not in m.worlds:
        print(f"error: unknown world {w}", file=sys.stderr)
        return PARSE
    a = parse_assignment(args.assign)
    trace = [] if args.explain else None
    if args.semantics == "classical":
        val = eval_classical(m, w, a, f, trace)
    elif args.semantics == "forcing":
        val = eval_forcing(m, w, a, f, trace)
    else:
        val = eval_is42(m, w, a, f)
    print("true" if val else "false", file=out)
    for depth, line in trace or ():
        print("  " * depth + line, file=out)
    return OK


def cmd_prove(args, out) -> int:
    d = load_derivation(args.derivation)
    spec = system(args.system, reverse_subsumption=args.with_reverse_subsumption,
                  id_eq=not args.no_decidable_identity)
    v = check_derivation(d, spec)
    print(v, file=out)
    return OK if v.accepted else REJECTED


def cmd_inventory(args, out) -> int:
    spec = system(args.system, reverse_subsumption=args.with_reverse_subsumption)
    for sid, display in axiom_inventory(spec):
        print(f"{sid:14} {display}", file=out)
    return OK


def cmd_countermodel(args, out, cfg) -> int:
    bounds, flags = _bounds(args, cfg)
    f = parse(args.formula)
    sig = signature_for([f])
    size = space_size(sig, bounds, flags)
    print(f"# search space: {size['frames']} frames, {size['models']} models", file=out)
    res = find_countermodel(f, args.semantics, bounds, flags, sig)
    print(res.text(), file=out, end="" if res.found else "\n")
    if not res.found:
        return EXHAUSTED
    if args.out:
        Path(args.out).write_text(res.text(), encoding="utf-8")
    return OK


def cmd_properties(args, out, cfg) -> int:
    bounds, flags = _bounds(args, cfg)
    jobs = args.jobs or cfg.get("jobs", 1)
    names = SUITES if args.suite == "all" else (args.suite,)
    failed = False
    reports = []
    for name in names:
        rep = run_property_suite(name, bounds, flags, jobs)
        reports.append(rep)
        print(rep.text(verbose=args.verbose), file=out)
        failed |= not rep.ok
    if args.json:
        import json
        Path(args.json).write_text(
            json.dumps([json.loads(r.to_json()) for r in reports], indent=1), encoding="utf-8")
    return SUITE_FAILED if failed else OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = read_config(args.config) if args.config else {}
        if args.jobs:
            cfg["jobs"] = args.jobs
        if args.command == "translate":
            return cmd_translate(args, out)
        if args.command == "check":
            return cmd_check(args, out)
        if args.command == "prove":
            return cmd_prove(args, out)
        if args.command == "inventory":
            return cmd_inventory(args, out)
        if args.command == "countermodel":
            return cmd_countermodel(args, out, cfg)
        return cmd_properties(args, out, cfg)
    except LanguageError as e:
        print(f"error: {e}", file=sys.stderr)
        return LANGUAGE
    except (ParseError, DerivationSyntaxError, ModelFileError, EvaluationError, FormulaError,
            ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE


if __name__ == "__main__":
    sys.exit(main())
