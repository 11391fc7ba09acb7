"""Report serialization: pretty table, JSON and CSV."""
from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from typing import IO, Optional

import mpmath

from .runner import CaseResult, Report

FORMATS = ("pretty", "json", "csv")


def format_value(x) -> Optional[str]:
    """Lossless text: rationals as "num/den", floats in scientific notation."""
    if x is None:
        return None
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (int, Fraction)):
        q = Fraction(x)
        return f"{q.numerator}/{q.denominator}"
    if isinstance(x, float):
        return "%.17e" % x
    if isinstance(x, mpmath.mpf):
        bits = int(x.man).bit_length()
        digits = max(17, mpmath.libmp.prec_to_dps(bits) + 1)
        # exponent bounds that never select fixed-point output
        return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=1, max_fixed=0)
    return str(x)


def _short(x, width: int = 24) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        s = f"{x:.12g}"
    elif isinstance(x, mpmath.mpf):
        s = mpmath.nstr(x, 15)
    elif isinstance(x, Fraction):
        s = str(x)
    else:
        s = str(x)
    return s if len(s) <= width else s[: width - 3] + "..."


def _case_dict(c: CaseResult) -> dict:
    return {
        "id": c.id,
        "kind": c.kind,
        "status": c.status,
        "lhs": format_value(c.lhs),
        "rhs": format_value(c.rhs),
        "abs_error": format_value(c.abs_error),
        "runtime_ms": round(c.runtime_ms, 3),
        "note": c.note,
    }


def to_json(r: Report) -> str:
    doc = {"cases": [_case_dict(c) for c in r.cases], "totals": r.totals, "config": r.config}
    return json.dumps(doc, indent=2) + "\n"


def to_csv(r: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "status", "lhs", "rhs", "abs_error", "runtime_ms"])
    for c in r.cases:
        d = _case_dict(c)
        w.writerow([d["id"], d["status"], d["lhs"] or "", d["rhs"] or "", d["abs_error"] or "",
                    d["runtime_ms"]])
    return buf.getvalue()


def to_pretty(r: Report) -> str:
    header = ("id", "status", "lhs", "rhs", "abs_error", "ms")
    rows = [(c.id, c.status, _short(c.lhs), _short(c.rhs), _short(c.abs_error, 12),
             f"{c.runtime_ms:.1f}") for c in r.cases]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*row) for row in rows]
    for c in r.cases:
        if c.status != "pass" and c.note:
            lines.append(f"  {c.id}: {c.note}")
    t = r.totals
    lines.append(f"{t['count']} cases: {t['pass']} pass, {t['fail']} fail, {t['reported']} reported")
    return "\n".join(lines) + "\n"


def emit_report(r: Report, fmt: str = "pretty", path: Optional[str] = None,
                stream: Optional[IO[str]] = None) -> None:
    """Write the report to ``path``, or to ``stream`` (stdout by default)."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    text = {"pretty": to_pretty, "json": to_json, "csv": to_csv}[fmt](r)
    if path is None:
        (stream or sys.stdout).write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
