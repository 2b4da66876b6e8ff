"""Schema inventories, instantiation, and the derivation checker."""
from .checker import (
    Derivation, DerivationSyntaxError, Justification, Line, Verdict, check_derivation,
    check_file, is_tautology, load_derivation, parse_derivation,
)
from .corpus import CorpusEntry, corpus_entries, corpus_path, run_corpus
from .schemas import REGISTRY, SET_THEORETIC, Schema, SchemaError
from .systems import NAMES, SYSTEMS, SystemSpec, axiom_inventory, instantiate_schema, system

__all__ = [
    "CorpusEntry", "Derivation", "DerivationSyntaxError", "Justification", "Line", "NAMES", "REGISTRY",
    "SET_THEORETIC", "SYSTEMS", "Schema", "SchemaError", "SystemSpec", "Verdict", "axiom_inventory",
    "check_derivation", "check_file", "corpus_entries", "corpus_path", "instantiate_schema",
    "is_tautology", "load_derivation", "parse_derivation", "run_corpus", "system",
]
