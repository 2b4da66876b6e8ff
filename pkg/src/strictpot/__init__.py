"""Bimodal potentialism: formulas, translations, Kripke semantics, proofs and bounded search."""
__version__ = "0.1.0"
