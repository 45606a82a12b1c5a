import csv
import io
import json

import pytest

import sympos.verify
from sympos.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, main
from sympos.spaces import Family

from paper_data import TABLE_TRIPLES


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_csv_matches_reference(capsys):
    code, out, _ = run_cli(capsys, "table", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 19
    for row in rows:
        rank, dim, s = TABLE_TRIPLES[row["family"]]
        assert (int(row["rank"]), int(row["dimension"]), int(row["s"])) == \
            (rank, dim, s)
        assert row["match"] == "True"


def test_table_text_and_markdown_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "table")
    code2, out2, _ = run_cli(capsys, "table")
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    code3, md, _ = run_cli(capsys, "table", "--format", "markdown")
    assert code3 == EXIT_OK
    assert md.splitlines()[0].startswith("| family")
    assert len(md.splitlines()) == 21


def test_table_override_hits_exception_instance(capsys):
    code, out, _ = run_cli(capsys, "table", "--format", "json",
                           "--diii-n", "4")
    # DIII n=4 is in the exception ledger: enumeration disagrees with the
    # table column, but matches the corrected column, so exit stays 0.
    assert code == EXIT_OK
    rows = json.loads(out)
    row = next(r for r in rows if r["family"] == "DIII")
    assert row["s"] == 6
    assert row["s_table"] == 3
    assert row["s_corrected"] == 6
    assert row["match"] is False


def test_compute_text_and_detail(capsys):
    code, out, _ = run_cli(capsys, "compute", "EII", "--detail")
    assert code == EXIT_OK
    assert "s = 19" in out
    assert "s_k = 16 19 9 11" in out


def test_compute_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "compute", "AIII", "--p", "3", "--q", "4",
                           "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["family"] == "AIII"
    assert data["s"] == 13
    assert data["r"] == 3
    from sympos.svalue import report_from_dict
    assert report_from_dict(data).s == 13


def test_compute_missing_and_invalid_params(capsys):
    code, _, err = run_cli(capsys, "compute", "AI")
    assert code == EXIT_USAGE
    assert "requires --n" in err
    code, _, err = run_cli(capsys, "compute", "DIII", "--n", "2")
    assert code == EXIT_USAGE
    assert "DIII requires n >= 3" in err


def test_roots_formats(capsys):
    code, out, _ = run_cli(capsys, "roots", "G2")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[-1] == "count: 6"
    assert "3 2" in lines
    code, out, _ = run_cli(capsys, "roots", "F4", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 24
    code, out, _ = run_cli(capsys, "roots", "A3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 6
    assert rows[0]["height"] == "1"


def test_roots_invalid_type(capsys):
    code, _, err = run_cli(capsys, "roots", "H4")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_verify_passes(capsys):
    code, out, err = run_cli(capsys, "verify")
    assert code == EXIT_OK
    summary = json.loads(out)
    assert summary["passed"] is True
    assert {c["name"] for c in summary["checks"]} >= {
        "root_counts", "generator_equivalence", "dimension_law",
        "s_k_oracles", "closed_form_agreement", "discrepancy_scan"}
    assert "PASS s_k_oracles" in err


def test_verify_extended_rank(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-rank", "12")
    assert code == EXIT_OK
    assert json.loads(out)["passed"] is True


def test_verify_negative_control(capsys, monkeypatch):
    corrupted = dict(sympos.verify.S_K_ORACLES)
    corrupted[Family.EVI] = (31, 17, 11, 23)
    monkeypatch.setattr(sympos.verify, "S_K_ORACLES", corrupted)
    code, out, err = run_cli(capsys, "verify")
    assert code == EXIT_VERIFICATION_FAILED
    summary = json.loads(out)
    failing = [c for c in summary["checks"] if not c["passed"]]
    assert [c["name"] for c in failing] == ["s_k_oracles"]
    assert "FAIL s_k_oracles" in err


def test_discrepancies_default_scan(capsys):
    code, out, _ = run_cli(capsys, "discrepancies", "--format", "json")
    assert code == EXIT_OK
    entries = json.loads(out)
    found = {(e["family"], tuple(e["params"])) for e in entries}
    assert found == {("AIII", (2, 2)), ("BDI", (2, 2)), ("BDI", (3, 3)),
                     ("DIII", (4,)), ("DIII", (6,)), ("CII", (2, 2))}


def test_discrepancies_single_family_and_empty(capsys):
    code, out, _ = run_cli(capsys, "discrepancies", "AI", "--range", "2..12")
    assert code == EXIT_OK
    assert out.strip() == "no discrepancies"
    code, _, err = run_cli(capsys, "discrepancies", "--range", "5-9")
    assert code == EXIT_USAGE
    assert "a..b" in err


def test_export_catalog(capsys):
    code, out, _ = run_cli(capsys, "export")
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data) == 19
    assert data[0]["family"] == "AI"


def test_csv_output_is_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "table", "--format", "csv")
    _, out2, _ = run_cli(capsys, "table", "--format", "csv")
    assert out1 == out2
