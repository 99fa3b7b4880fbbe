"""Report document round-trips and table rendering."""

import json

import pytest

import pcmkit as pk

SMALL = pk.SuiteConfig(trials_per_check=30, orders=(3, 4))


def small_report():
    return pk.run_suite([pk.IndexId.K, pk.IndexId.CCI, pk.IndexId.RE], SMALL)


def test_doc_roundtrip():
    report = small_report()
    doc = pk.report_to_doc(report)
    assert pk.report_to_doc(pk.doc_to_report(doc)) == doc


def test_doc_schema():
    doc = pk.report_to_doc(small_report())
    assert doc["format"] == "pcm-axiom-report"
    assert doc["format_version"] == 1
    assert set(doc["config"]) >= {"seed", "trials_per_check", "orders",
                                  "b_grid", "delta_grid"}
    for token, entry in doc["results"].items():
        assert token in {"K", "CCI", "RE"}
        assert set(entry["documented"]) == {"P1", "P2", "P3", "P4", "P5", "P6"}
        assert set(entry["documented"].values()) <= {"holds", "fails", "open"}
        for prop, verdict in entry["properties"].items():
            assert verdict["status"] in {"ok", "violated", "heuristic", "n/a"}
            assert verdict["trials"] >= 1
            if verdict["status"] == "violated":
                assert verdict["witness"]["matrix"]


def test_dumps_doc_deterministic():
    doc = pk.report_to_doc(small_report())
    a = pk.dumps_doc(doc)
    b = pk.dumps_doc(pk.report_to_doc(small_report()))
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a) == doc


def test_write_and_load_doc(tmp_path):
    path = tmp_path / "report.json"
    doc = pk.report_to_doc(small_report())
    pk.write_doc(doc, path)
    assert pk.load_doc(path) == doc


def test_doc_to_report_rejects_foreign_documents():
    with pytest.raises(ValueError):
        pk.doc_to_report({"format": "something-else", "format_version": 1})
    with pytest.raises(ValueError):
        pk.doc_to_report({"format": "pcm-axiom-report", "format_version": 99})


def test_render_table_has_both_grids():
    report = small_report()
    table = pk.render_table(report)
    assert "empirical" in table
    assert "documented" in table
    assert "witness decides" in table
    for label in ("K", "CCI", "RE"):
        assert label in table
    for prop in ("P1", "P2", "P3", "P4", "P5", "P6"):
        assert prop in table
