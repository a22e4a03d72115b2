import json
import shutil
import subprocess
import sys

from conftest import CORPUS
from dimfilter.cli import main
from dimfilter.commands import run_command
from dimfilter.corpus import corpus_run
from dimfilter.session import parse_session

CURATED = CORPUS / "curated"


def session(name):
    return parse_session((CURATED / f"{name}.session").read_text(encoding="utf-8"))


def test_verify_two_planes_report():
    rep = run_command(session("two_planes"), "verify --module A --max-n 2")
    assert rep.exit_code == 0
    assert rep.verdicts == ["agree", "agree", "pass"]
    w = rep.results[1].witness
    assert (w["prime"], w["i"], w["r"]) == ("(x, y, z, w)", 1, 0)


def test_negative_k_exit_1():
    rep = run_command(session("embedded_point"), "dk --module M --k -1")
    assert rep.exit_code == 1
    assert "k must be ≥ 0" in rep.results[0].data["message"]
    assert rep.results[0].data["entity"] == "M (line 5, column 8)"


def test_zero_module_sn_exit_1():
    rep = run_command(session("zero_module"), "sn --module Z --n 1")
    assert rep.exit_code == 1
    assert "zero module" in rep.results[0].data["message"]


def test_unknown_module_and_bad_args():
    s = session("two_planes")
    assert run_command(s, "dim --module Nope").exit_code == 1
    assert run_command(s, "dk --module A").exit_code == 1
    assert run_command(s, "frobnicate").exit_code == 1


def test_json_schema():
    rep = run_command(session("coker_column"), "sn --module C --n 3")
    data = json.loads(rep.to_json())
    assert data["schema"] == 1
    assert set(data) >= {"schema", "command", "ring", "results", "version", "input_digest"}
    r = data["results"][0]
    assert set(r) == {"name", "verdict", "witness", "data", "ms"}
    assert r["verdict"] == "false" and r["ms"] == 0


def test_reports_byte_identical():
    s = session("two_planes")
    a = run_command(s, "dk --module A --k 2").to_json()
    b = run_command(session("two_planes"), "dk --module A --k 2").to_json()
    assert a == b


def test_main_exit_codes(tmp_path, capsys):
    path = str(CURATED / "two_planes.session")
    assert main(["--format", "json", path, "sn", "--module", "A", "--n", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["results"][0]["verdict"] == "false"
    assert main([str(CURATED / "bad_syntax.session"), "dim", "--module", "M"]) == 1
    assert "line 1, column 12" in capsys.readouterr().err
    big = tmp_path / "big.session"
    big.write_text("ring R = QQ[x]\nideal I = (x^20)\n")
    assert main([str(big), "dim", "--module", "M"]) == 2
    assert main([str(tmp_path / "missing.session"), "dim", "--module", "M"]) == 1


def test_empty_corpus_warns(tmp_path):
    rep = corpus_run(tmp_path)
    assert rep.exit_code == 0
    summary = rep.results[-1].data
    assert summary["checks"] == 0 and "warning" in summary


def test_corrupted_sidecar(tmp_path):
    shutil.copy(CURATED / "two_planes.session", tmp_path / "t.session")
    (tmp_path / "t.expect.json").write_text("{not json")
    rep = corpus_run(tmp_path)
    assert rep.exit_code == 1
    assert "t.expect.json" in rep.results[0].data["message"]


def test_missing_sidecar(tmp_path):
    shutil.copy(CURATED / "two_planes.session", tmp_path / "t.session")
    rep = corpus_run(tmp_path)
    assert rep.exit_code == 1
    assert "missing sidecar" in rep.results[0].data["message"]


def test_mismatch_fails(tmp_path):
    shutil.copy(CURATED / "two_planes.session", tmp_path / "t.session")
    (tmp_path / "t.expect.json").write_text(json.dumps(
        {"schema": 1, "expect": [{"command": "sn --module A --n 2", "verdicts": ["true"]}]}))
    rep = corpus_run(tmp_path)
    assert rep.exit_code == 1 and rep.results[0].verdict == "fail"


def test_shipped_corpus_passes():
    rep = corpus_run(CORPUS)
    summary = rep.results[-1].data
    assert rep.exit_code == 0, [r.name for r in rep.results if r.verdict != "pass"]
    assert summary["sessions"] >= 30


def test_parallel_corpus_matches_serial():
    assert corpus_run(CORPUS, jobs=2).to_json() == corpus_run(CORPUS).to_json()


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "dimfilter", "--format", "json",
                          str(CURATED / "embedded_point.session"), "dim", "--module", "M"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0
    assert json.loads(out.stdout)["results"][0]["data"]["dim"] == 1
