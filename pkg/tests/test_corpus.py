import json
from fractions import Fraction
from math import factorial

import pytest

from khv import corpus
from khv.errors import UnknownKnot
from khv.expansion import VnPoly, v_n
from khv.homology import BigradedRanks, homology_ranks


def test_load_known_and_unknown():
    entry = corpus.load("4_1")
    assert entry.components == 1 and len(entry.diagram) == 4
    with pytest.raises(UnknownKnot) as info:
        corpus.load("9_99")
    assert "9_99" in str(info.value)


def test_table_entries_have_six_rows():
    for name in corpus.TABLE_KNOTS:
        assert len(corpus.load(name).expected_vn) == corpus.TABLE_ORDERS


def test_v0_row_is_kh_with_q_renamed(corpus_entries):
    for name in corpus.TABLE_KNOTS:
        e = corpus_entries[name]
        assert VnPoly(e.expected_kh.terms) == e.expected_vn[0]


def test_verify_table_all_rows():
    report = corpus.verify_table()
    assert report.summary() == "49/49 rows match"
    assert report.ok and not report.route_mismatches


def test_sign_flip_mutation_is_caught():
    def flipped(d):
        return BigradedRanks({(-i, j): r for (i, j), r in homology_ranks(d).items()})

    report = corpus.verify_table(names=("3_1",), ranks_fn=flipped)
    assert not report.ok
    kh_row = report.rows[0]
    assert kh_row.describe().endswith("FAIL at j=9: expected t^3, computed t^-3")
    assert str(kh_row.witness[1]) == "t^3" and str(kh_row.witness[2]) == "t^-3"


def test_missing_factorial_mutation_is_caught():
    def no_factorial(ranks, n):
        return VnPoly({k: c * factorial(n) for k, c in v_n(ranks, n).items()}, n=n)

    report = corpus.verify_table(names=("3_1",), vn_fn=no_factorial)
    fails = report.failures()
    assert [r.row for r in fails] == ["v_2", "v_3", "v_4", "v_5"]
    j, want, got = fails[0].witness
    assert j == 9
    assert str(want) == "81/2*t^3" and str(got) == "81*t^3"
    # the substitution route still agrees with the table, so every broken row is flagged
    assert len(report.route_mismatches) == 4


def test_corpus_override(tmp_path, monkeypatch):
    doc = {"format": "khv-corpus", "version": 1, "entries": [
        {"name": "kink", "pd": "X(1,1,2,2)", "components": 1, "expected_kh": "q + q^-1"}]}
    path = tmp_path / "c.json"
    path.write_text(json.dumps(doc))
    monkeypatch.setenv("KHV_CORPUS", str(path))
    corpus._read.cache_clear()
    try:
        assert list(corpus.entries()) == ["kink"]
        with pytest.raises(UnknownKnot):
            corpus.load("3_1")
    finally:
        monkeypatch.delenv("KHV_CORPUS")
        corpus._read.cache_clear()


def test_bad_format_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format": "khv-corpus", "version": 2, "entries": []}))
    with pytest.raises(ValueError):
        corpus._read(str(path))


def test_expected_vn_rows_exact_fractions():
    row = corpus.load("4_1").expected_vn[3]
    assert row[(2, 5)] == Fraction(125, 6)
    assert row[(-2, -5)] == Fraction(-125, 6)
