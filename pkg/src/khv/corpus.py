"""Embedded knot corpus and golden-table verification.

The corpus is a JSON document (``format: khv-corpus``, ``version: 1``)::

    {"format": "khv-corpus", "version": 1, "entries": [
        {"name": "3_1", "pd": "X(4,2,5,1) ...", "components": 1,
         "expected_kh": "q + q^3 + q^5*t^2 + q^9*t^3",
         "expected_vn": ["t^3*x^9 + ...", ...]},      # rows v_0..v_5, optional
        ...]}

Polynomials use the exact-fraction term syntax understood by
:func:`khv.laurent.parse_terms`.  Set ``KHV_CORPUS`` to load another file.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable

from .diagram import Diagram, parse_pd
from .errors import UnknownKnot
from .expansion import TPoly, VnPoly, series_reconstruct, v_n
from .homology import BigradedRanks, homology_ranks
from .polynomials import KhPoly, khovanov_polynomial

TABLE_KNOTS = ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3")
TABLE_ORDERS = 6
FORMAT_VERSION = 1


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    pd: str
    components: int
    expected_kh: KhPoly | None
    expected_vn: tuple[VnPoly, ...] = ()
    note: str = ""

    @property
    def diagram(self) -> Diagram:
        return parse_pd(self.pd)


def _default_path():
    return resources.files("khv").joinpath("data/corpus.json")


@lru_cache(maxsize=4)
def _read(path: str | None) -> dict[str, CorpusEntry]:
    if path is None:
        raw = _default_path().read_text()
    else:
        with open(path) as fh:
            raw = fh.read()
    doc = json.loads(raw)
    if doc.get("format") != "khv-corpus" or doc.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported corpus format {doc.get('format')!r} v{doc.get('version')!r}")
    out = {}
    for rec in doc["entries"]:
        kh = KhPoly.from_text(rec["expected_kh"]) if rec.get("expected_kh") else None
        vn = tuple(VnPoly(VnPoly.from_text(row).terms, n=n) for n, row in enumerate(rec.get("expected_vn", ())))
        out[rec["name"]] = CorpusEntry(rec["name"], rec["pd"], int(rec.get("components", 1)),
                                       kh, vn, rec.get("note", ""))
    return out


def entries() -> dict[str, CorpusEntry]:
    return _read(os.environ.get("KHV_CORPUS") or None)


def load(name: str) -> CorpusEntry:
    table = entries()
    if name not in table:
        raise UnknownKnot(f"unknown knot {name!r}; corpus has {', '.join(sorted(table))}")
    return table[name]


# verification

@dataclass
class RowResult:
    knot: str
    row: str
    passed: bool
    # (j, expected t-column, computed t-column) at the highest mismatching grading
    witness: tuple | None = None

    def describe(self) -> str:
        if self.passed:
            return f"{self.knot:>4} {self.row:<3} ok"
        j, want, got = self.witness
        return f"{self.knot:>4} {self.row:<3} FAIL at j={j}: expected {want}, computed {got}"


@dataclass
class VerifyReport:
    rows: list[RowResult] = field(default_factory=list)
    route_mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.rows)

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def ok(self) -> bool:
        return self.passed == self.total and not self.route_mismatches

    def failures(self) -> list[RowResult]:
        return [r for r in self.rows if not r.passed]

    def summary(self) -> str:
        text = f"{self.passed}/{self.total} rows match"
        if self.route_mismatches:
            text += f"; {len(self.route_mismatches)} closed-form/substitution disagreements"
        return text


def _column(poly, j) -> TPoly:
    return TPoly({(i,): c for (i, jj), c in poly.items() if jj == j})


def first_mismatch(expected, computed):
    """Highest grading ``j`` whose ``t``-columns differ, with both columns."""
    grades = sorted({j for _, j in expected.terms} | {j for _, j in computed.terms}, reverse=True)
    for j in grades:
        want, got = _column(expected, j), _column(computed, j)
        if want != got:
            return j, want, got
    return None


def compare_row(knot: str, row: str, expected, computed) -> RowResult:
    witness = first_mismatch(expected, computed)
    return RowResult(knot, row, witness is None, witness)


def verify_table(
    names=TABLE_KNOTS,
    ranks_fn: Callable[[Diagram], BigradedRanks] = homology_ranks,
    vn_fn: Callable[[BigradedRanks, int], VnPoly] = v_n,
) -> VerifyReport:
    """Recompute Kh and v_0..v_5 for each table knot and compare exactly.

    ``ranks_fn`` and ``vn_fn`` are injectable so that deliberately broken
    pipelines can be shown to fail with a concrete witness.
    """
    report = VerifyReport()
    for name in names:
        entry = load(name)
        ranks = ranks_fn(entry.diagram)
        kh = khovanov_polynomial(ranks)
        report.rows.append(compare_row(name, "Kh", entry.expected_kh, kh))
        substituted = series_reconstruct(kh, len(entry.expected_vn) - 1)
        for n, expected in enumerate(entry.expected_vn):
            computed = vn_fn(ranks, n)
            report.rows.append(compare_row(name, f"v_{n}", expected, computed))
            if computed != substituted[n]:
                report.route_mismatches.append(f"{name} v_{n}")
    return report
