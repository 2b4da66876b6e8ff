"""Bounded model enumeration, countermodel search and property suites."""
from .batch import CLASSICAL, FORCING
from .engine import (
    DEFAULT_FLAGS, Check, CheckResult, ModelFlags, RunStats, SearchBounds, Witness, agree,
    enumerate_models, run_checks, signature_for, space_size, valid,
)
from .suites import (
    CLAIMS, SUITES, CountermodelResult, Record, SuiteReport, check_link_suite, ed_id_instances,
    find_countermodel, is42_countermodel, run_property_suite,
)

__all__ = [
    "CLAIMS", "CLASSICAL", "Check", "CheckResult", "CountermodelResult", "DEFAULT_FLAGS", "FORCING",
    "ModelFlags", "Record", "RunStats", "SUITES", "SearchBounds", "SuiteReport", "Witness", "agree",
    "check_link_suite", "ed_id_instances", "enumerate_models", "find_countermodel", "is42_countermodel",
    "run_checks", "run_property_suite", "signature_for", "space_size", "valid",
]
