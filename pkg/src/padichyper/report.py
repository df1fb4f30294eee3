"""Report records for verification runs and their serializers."""

from __future__ import annotations

import csv
import json
import sys
from dataclasses import dataclass

_FIELDS = ("suite", "p", "case", "lhs", "rhs", "modulus", "status")


@dataclass(frozen=True)
class SuiteReport:
    """One checked (prime, case) pair.

    lhs and rhs are centered integers; modulus is the power of p both were
    reduced by, or 0 when the comparison is between exact integers.
    status is "pass", "fail", or "skip(<reason>)".
    """

    suite: str
    p: int
    case: str
    lhs: int
    rhs: int
    modulus: int
    status: str

    @classmethod
    def check(cls, suite, p, case, lhs, rhs, modulus=0):
        return cls(suite, p, case, lhs, rhs, modulus,
                   "pass" if lhs == rhs else "fail")

    @classmethod
    def skip(cls, suite, p, case, reason):
        return cls(suite, p, case, 0, 0, 0, f"skip({reason})")


def tally(entries) -> tuple[int, int, int]:
    """(pass, fail, skip) counts."""
    np = nf = ns = 0
    for e in entries:
        if e.status == "pass":
            np += 1
        elif e.status == "fail":
            nf += 1
        else:
            ns += 1
    return np, nf, ns


def emit_report(entries, fmt: str = "summary", out=None) -> tuple[int, int, int]:
    """Write entries in the requested format and return the tally.

    json: one object per line, fixed key order.  csv: header plus one row
    per entry.  summary: per-suite counts.
    """
    if out is None:
        out = sys.stdout
    entries = list(entries)
    if fmt == "json":
        for e in entries:
            out.write(json.dumps({k: getattr(e, k) for k in _FIELDS}))
            out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(_FIELDS)
        for e in entries:
            w.writerow([getattr(e, k) for k in _FIELDS])
    elif fmt == "summary":
        per = {}
        for e in entries:
            per.setdefault(e.suite, []).append(e)
        for suite in sorted(per):
            np, nf, ns = tally(per[suite])
            out.write(f"{suite}: pass={np} fail={nf} skip={ns}\n")
        np, nf, ns = tally(entries)
        out.write(f"total: pass={np} fail={nf} skip={ns}\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return tally(entries)
