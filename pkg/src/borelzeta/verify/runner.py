"""Run catalogue cases and collect a report."""
from __future__ import annotations

import fnmatch
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from ..bernoulli import default_table, load_cache, save_cache
from .catalogue import CATALOGUE, Context, Kind, VerificationCase


class UsageError(ValueError):
    """Bad filter or configuration; maps to exit code 2."""


@dataclass(frozen=True)
class Config:
    precision_digits: int = 15
    quad_tol: float = 1e-10
    series_terms: int = 200
    bernoulli_cache_path: Optional[str] = None

    def context(self) -> Context:
        return Context(self.precision_digits, self.quad_tol, self.series_terms)

    def snapshot(self) -> dict:
        return asdict(self)


def load_config(path: str | None = None, **overrides) -> Config:
    """Read a flat JSON object; non-None keyword overrides win."""
    values: dict = {}
    if path is not None:
        try:
            values = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(values, dict):
            raise UsageError("config must be a JSON object")
    values.update({k: v for k, v in overrides.items() if v is not None})
    known = set(Config.__dataclass_fields__)
    unknown = set(values) - known
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    try:
        cfg = Config(**values)
        cfg = Config(int(cfg.precision_digits), float(cfg.quad_tol), int(cfg.series_terms),
                     cfg.bernoulli_cache_path)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad config value: {exc}") from exc
    if cfg.precision_digits < 1 or not cfg.quad_tol > 0 or cfg.series_terms < 1:
        raise UsageError("precision_digits, quad_tol and series_terms must be positive")
    return cfg


@dataclass
class CaseResult:
    id: str
    kind: str
    status: str  # pass / fail / reported
    lhs: object
    rhs: object
    abs_error: object
    runtime_ms: float
    note: str = ""


@dataclass
class Report:
    cases: list[CaseResult] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def totals(self) -> dict:
        t = {"pass": 0, "fail": 0, "reported": 0}
        for c in self.cases:
            t[c.status] += 1
        t["count"] = len(self.cases)
        return t

    @property
    def ok(self) -> bool:
        return self.totals["fail"] == 0


def select(pattern: str = "*") -> list[VerificationCase]:
    return [c for c in CATALOGUE if fnmatch.fnmatchcase(c.id, pattern)]


def run_case(case: VerificationCase, ctx: Context) -> CaseResult:
    t0 = time.perf_counter()
    try:
        with ctx.precision():
            o = case.check(ctx)
        lhs, rhs, err, passed, note = o.lhs, o.rhs, o.abs_error, o.passed, o.note
    except Exception as exc:  # a crashing case is a failed case, not a crashed run
        lhs = rhs = err = None
        passed, note = False, f"{type(exc).__name__}: {exc}"
    ms = (time.perf_counter() - t0) * 1000
    if case.kind is Kind.DIAGNOSTIC:
        status = "reported"
    else:
        status = "pass" if passed else "fail"
    return CaseResult(case.id, case.kind.value, status, lhs, rhs, err, ms, note)


def run_suite(pattern: str = "*", config: Config | None = None) -> Report:
    """Run every case whose id matches the glob, in catalogue order."""
    config = config or Config()
    cases = select(pattern)
    if not cases:
        raise UsageError(f"no case matches {pattern!r}")
    cache = config.bernoulli_cache_path
    if cache and Path(cache).exists():
        default_table().seed(load_cache(cache))
    ctx = config.context()
    report = Report([run_case(c, ctx) for c in cases], config.snapshot())
    if cache:
        save_cache(cache)
    return report
