"""Catalogue of checked identities, suite runner and report emitters."""
from .catalogue import CATALOGUE, Context, Kind, Outcome, VerificationCase
from .report import emit_report, format_value
from .runner import CaseResult, Config, Report, UsageError, load_config, run_suite, select

__all__ = [
    "CATALOGUE", "Context", "Kind", "Outcome", "VerificationCase",
    "emit_report", "format_value",
    "CaseResult", "Config", "Report", "UsageError", "load_config", "run_suite", "select",
]
