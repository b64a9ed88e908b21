import csv
import io
import json

import pytest

from weylgrowth.cli import main


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def decode_csv_coeffs(text):
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["index", "coefficient"]
    return [int(value) for key, value in rows[1:] if key.isdigit()]


# ------------------------------------------------------------------- growth

def test_growth_text(capsys):
    code, out = run(capsys, ["growth", "--algebra", "A3", "--order", "99"])
    assert code == 0
    assert "coeffs: 1 3 5 6 5 3 1" in out
    assert "complete: True" in out


def test_growth_json_and_csv_decode_identically(capsys):
    code, js = run(capsys, ["growth", "--algebra", "A3", "--order", "99", "--output", "json"])
    assert code == 0
    payload = json.loads(js)
    assert payload["coeffs"] == [1, 3, 5, 6, 5, 3, 1]
    assert payload["complete"] is True
    code, cs = run(capsys, ["growth", "--algebra", "A3", "--order", "99", "--output", "csv"])
    assert code == 0
    assert decode_csv_coeffs(cs) == payload["coeffs"]


def test_growth_order_zero(capsys):
    code, out = run(capsys, ["growth", "--algebra", "HA3", "--order", "0", "--output", "json"])
    assert code == 0
    assert json.loads(out)["coeffs"] == [1]


def test_growth_repeated_runs_byte_identical(capsys):
    args = ["growth", "--algebra", "HA2", "--order", "8", "--output", "json"]
    _, first = run(capsys, args)
    _, second = run(capsys, args)
    assert first == second


def test_growth_workers_agree(capsys):
    _, one = run(capsys, ["growth", "--algebra", "HA2", "--order", "9", "--output", "json"])
    _, four = run(capsys, ["growth", "--algebra", "HA2", "--order", "9", "--workers", "4", "--output", "json"])
    assert one == four


def test_growth_debug_dedup_flag(capsys):
    _, plain = run(capsys, ["growth", "--algebra", "HA2", "--order", "8", "--output", "json"])
    _, debug = run(capsys, ["growth", "--algebra", "HA2", "--order", "8", "--debug-full-dedup", "--output", "json"])
    assert plain == debug


def test_growth_unknown_algebra_exits_2(capsys):
    code, _ = run(capsys, ["growth", "--algebra", "Z9", "--order", "3"])
    assert code == 2


def test_growth_requires_source():
    with pytest.raises(SystemExit) as exc:
        main(["growth", "--order", "3"])
    assert exc.value.code == 2


def test_growth_from_gcm_file(capsys, tmp_path):
    path = tmp_path / "gcm.json"
    path.write_text(json.dumps({"labels": ["0", "1"], "matrix": [[2, -2], [-2, 2]]}))
    code, out = run(capsys, ["growth", "--gcm-file", str(path), "--order", "5", "--output", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == [1, 2, 2, 2, 2, 2]
    assert payload["algebra"] == "gcm"


def test_growth_bad_gcm_file_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"labels": ["0"], "matrix": [[3]]}))
    code, _ = run(capsys, ["growth", "--gcm-file", str(path), "--order", "2"])
    assert code == 2
    code, _ = run(capsys, ["growth", "--gcm-file", str(tmp_path / "missing.json"), "--order", "2"])
    assert code == 2


# -------------------------------------------------------------- checkpoints

def test_growth_checkpoint_resume(capsys, tmp_path):
    ck = tmp_path / "state.npz"
    run(capsys, ["growth", "--algebra", "HA2", "--order", "6", "--checkpoint", str(ck)])
    assert ck.exists()
    _, resumed = run(capsys, ["growth", "--algebra", "HA2", "--order", "10", "--checkpoint", str(ck)])
    _, fresh = run(capsys, ["growth", "--algebra", "HA2", "--order", "10"])
    assert resumed == fresh


def test_growth_checkpoint_mismatch_exits_4(capsys, tmp_path):
    ck = tmp_path / "state.npz"
    run(capsys, ["growth", "--algebra", "A2", "--order", "2", "--checkpoint", str(ck)])
    code, _ = run(capsys, ["growth", "--algebra", "A3", "--order", "2", "--checkpoint", str(ck)])
    assert code == 4


def test_checkpoint_env_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("WEYLGROWTH_CHECKPOINT_DIR", str(tmp_path))
    run(capsys, ["growth", "--algebra", "A2", "--order", "3", "--checkpoint", "rel.npz"])
    assert (tmp_path / "rel.npz").exists()


# ----------------------------------------------------------------- poincare

def test_poincare_finite(capsys):
    code, out = run(capsys, ["poincare", "--algebra", "D5", "--output", "json"])
    assert code == 0
    coeffs = json.loads(out)["coeffs"]
    assert len(coeffs) == 21 and sum(coeffs) == 1920


def test_poincare_a1(capsys):
    code, out = run(capsys, ["poincare", "--algebra", "A1", "--output", "json"])
    assert code == 0
    assert json.loads(out)["coeffs"] == [1, 1]


def test_poincare_affine(capsys):
    code, out = run(capsys, ["poincare", "--affine", "A1", "--order", "6", "--output", "json"])
    assert code == 0
    assert json.loads(out)["coeffs"] == [1, 2, 2, 2, 2, 2, 2]


def test_poincare_rejects_non_finite(capsys):
    code, _ = run(capsys, ["poincare", "--algebra", "HA2"])
    assert code == 2
    code, _ = run(capsys, ["poincare", "--algebra", "AffA1"])
    assert code == 2
    code, _ = run(capsys, ["poincare", "--affine", "HA2", "--order", "5"])
    assert code == 2


def test_poincare_affine_requires_order(capsys):
    code, _ = run(capsys, ["poincare", "--affine", "A1"])
    assert code == 2


# ---------------------------------------------------------------------- fit

def test_fit_polynomial_verdict(capsys):
    code, out = run(capsys, ["fit", "--algebra", "HA2", "--candidate", "A3",
                             "--order", "24", "--output", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "polynomial"
    assert payload["degree"] == 5
    assert payload["quotient"] == [1, -1, -1, 0, 0, 1]


def test_fit_non_terminating_verdict(capsys):
    code, out = run(capsys, ["fit", "--algebra", "HA3", "--candidate", "A4",
                             "--order", "17", "--output", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "non_terminating"
    assert payload["quotient"] is None
    assert payload["evidence"]


def test_fit_csv_contains_verdict_and_coeffs(capsys):
    code, out = run(capsys, ["fit", "--algebra", "HA2", "--candidate", "A3",
                             "--order", "24", "--output", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    table = {key: value for key, value, *rest in rows[1:] if not key.isdigit()}
    assert table["verdict"] == "polynomial"
    coeffs = [int(v) for k, v in rows[1:] if k.isdigit()]
    assert coeffs == [1, -1, -1, 0, 0, 1]


def test_fit_insufficient_order_exits_2(capsys):
    code, _ = run(capsys, ["fit", "--algebra", "HA2", "--candidate", "D4", "--order", "10"])
    assert code == 2


def test_fit_rejects_non_finite_candidate(capsys):
    code, _ = run(capsys, ["fit", "--algebra", "HA2", "--candidate", "AffA1", "--order", "12"])
    assert code == 2


# ------------------------------------------------------------------ catalog

def test_catalog_lists_families(capsys):
    code, out = run(capsys, ["catalog", "--output", "json"])
    assert code == 0
    names = {row["name"] for row in json.loads(out)}
    assert {"A<n>", "D<n>", "AffA<n>", "HA<n>"} <= names


# ------------------------------------------------------------- verify-paper

def test_verify_paper_quick_gate(capsys):
    code, out = run(capsys, ["verify-paper", "--order", "12", "--output", "json"])
    items = json.loads(out)
    assert code == 0
    statuses = {item["item"]: item["status"] for item in items}
    assert statuses["growth-ha3"] == "pass"
    assert statuses["fit-ha2-a3"] == "pass"
    assert all(status in ("pass", "skip") for status in statuses.values())


def test_verify_paper_csv(capsys):
    code, out = run(capsys, ["verify-paper", "--order", "12", "--output", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["item", "status", "expected", "actual"]
    assert all(row[1] in ("pass", "fail", "skip") for row in rows[1:])
