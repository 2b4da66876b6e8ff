"""Bundled derivations and their expected verdicts."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..checker import Verdict, check_file
from ..systems import system


@dataclass(frozen=True)
class CorpusEntry:
    file: str
    system: str
    expect: str
    line: int | None = None
    reverse_subsumption: bool = False
    about: str = ""

    @property
    def path(self):
        return corpus_path(self.file)

    def spec(self):
        return system(self.system, reverse_subsumption=self.reverse_subsumption)

    def check(self) -> Verdict:
        return check_file(self.path, self.spec())

    def matches(self, v: Verdict) -> bool:
        if self.expect == "accepted":
            return v.accepted
        return not v.accepted and v.bad_line == self.line


def corpus_path(name: str = ""):
    root = resources.files(__name__)
    return root / name if name else root


def corpus_entries() -> list:
    data = json.loads(corpus_path("manifest.json").read_text(encoding="utf-8"))
    return [CorpusEntry(**e) for e in data["derivations"]]


def run_corpus():
    """(entry, verdict, as documented?) for every bundled derivation."""
    out = []
    for e in corpus_entries():
        v = e.check()
        out.append((e, v, e.matches(v)))
    return out
