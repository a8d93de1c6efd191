"""Command-line driver: exit codes, documents, determinism."""

import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

FIX = resources.files("swcohom.fixtures")


def fixture_path(name):
    return str(FIX.joinpath(name))


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "swcohom.cli", *args],
                          capture_output=True, text=True)


def test_formal_ring_z4(tmp_path):
    out = tmp_path / "z4.json"
    proc = run_cli("formal-ring", "--repdata", fixture_path("z4.json"),
                   "--out", str(out))
    assert proc.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["status"] == "success"
    assert doc["payload"]["relations"] == ["w1(alpha)^2"]
    assert doc["payload"]["eliminated"] == {"w1(beta)": "0"}


def test_missing_file_exits_3():
    proc = run_cli("formal-ring", "--repdata", "/nonexistent/file.json")
    assert proc.returncode == 3
    assert "input error" in proc.stderr


def test_malformed_json_exits_3(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    proc = run_cli("formal-ring", "--repdata", str(bad))
    assert proc.returncode == 3


def test_solve_and_chow_q8(tmp_path):
    pres = tmp_path / "q8_pres.json"
    proc = run_cli("solve", "--repdata", fixture_path("q8.json"),
                   "--cohomology", fixture_path("q8_cohomology.json"),
                   "--out", str(pres))
    assert proc.returncode == 0
    doc = json.loads(pres.read_text())
    assert doc["status"] == "success"
    assert all(g["kind"] == "sw" for g in doc["payload"]["generators"])

    chow = tmp_path / "q8_chow.json"
    proc = run_cli("chow", "--presentation", str(pres), "--out", str(chow))
    assert proc.returncode == 0
    rep = json.loads(chow.read_text())["payload"]
    assert rep["equal"] is True


def test_chow_rejects_unknown_squares(tmp_path):
    """The 16#11 presentation has an adjoined class with unknown squares."""
    pres = tmp_path / "g16_pres.json"
    proc = run_cli("solve", "--repdata", fixture_path("g16_11.json"),
                   "--cohomology", fixture_path("g16_11_cohomology.json"),
                   "--out", str(pres))
    assert proc.returncode == 0
    proc = run_cli("chow", "--presentation", str(pres))
    assert proc.returncode == 3
    assert "unknown" in proc.stderr


def test_cap_truncates_with_warning(tmp_path):
    full = tmp_path / "full.json"
    capped = tmp_path / "capped.json"
    run_cli("formal-ring", "--repdata", fixture_path("q8.json"),
            "--out", str(full))
    proc = run_cli("formal-ring", "--repdata", fixture_path("q8.json"),
                   "--cap", "2", "--out", str(capped))
    assert proc.returncode == 0
    full_doc = json.loads(Path(full).read_text())["payload"]
    cap_doc = json.loads(Path(capped).read_text())
    assert "warning" in cap_doc
    # the degree-2 relation R survives, the degree-3 consequence is gone
    assert any("w1(r2)^2" in r for r in cap_doc["payload"]["relations"])
    assert len(cap_doc["payload"]["groebner_basis"]) < \
        len(full_doc["groebner_basis"])


def test_tiny_budget_exits_2():
    proc = run_cli("solve", "--repdata", fixture_path("g16_11.json"),
                   "--cohomology", fixture_path("g16_11_cohomology.json"),
                   "--budget", "50")
    assert proc.returncode == 2
    assert "budget" in proc.stderr


def test_exhaustive_flag_echoes_counts(tmp_path):
    out = tmp_path / "ex.json"
    proc = run_cli("solve", "--repdata", fixture_path("g16_11.json"),
                   "--cohomology", fixture_path("g16_11_cohomology.json"),
                   "--mode", "exhaustive", "--out", str(out))
    assert proc.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["mode"] == "exhaustive"
    assert doc["stats"]["step3"] == 8


def test_selftest_subset_passes():
    proc = run_cli("selftest", "--only", "formal-ring")
    assert proc.returncode == 0
    assert "self-test passed" in proc.stderr


def test_selftest_names_corrupted_fixture(monkeypatch):
    import swcohom.cli as cli
    import swcohom.repdata as repdata
    real = repdata.load_fixture

    def broken(name):
        doc = real(name)
        if name == "q8.json":
            doc = dict(doc)
            doc["lambda_real"] = []
        return doc

    monkeypatch.setattr(repdata, "load_fixture", broken)

    class Args:
        only = "repdata"
        budget = None

    captured = []
    monkeypatch.setattr(sys.stderr, "write", captured.append)
    rc = cli.cmd_selftest(Args())
    text = "".join(captured)
    assert rc == 1
    assert "FAIL" in text and "q8" in text


def test_env_budget_respected(tmp_path):
    import os
    env = dict(os.environ, SWC_BUDGET="40")
    proc = subprocess.run(
        [sys.executable, "-m", "swcohom.cli", "solve",
         "--repdata", fixture_path("g16_11.json"),
         "--cohomology", fixture_path("g16_11_cohomology.json")],
        capture_output=True, text=True, env=env)
    assert proc.returncode == 2
    assert "budget" in proc.stderr


@pytest.mark.parametrize("name", ("z4", "q8", "g16_11", "z2cubed", "d8"))
def test_determinism_byte_identical(name, tmp_path):
    """Two identical runs emit byte-identical documents, for every command."""
    a1, a2 = tmp_path / "a1.json", tmp_path / "a2.json"
    for out in (a1, a2):
        assert run_cli("formal-ring", "--repdata", fixture_path(name + ".json"),
                       "--out", str(out)).returncode == 0
    assert a1.read_bytes() == a2.read_bytes()

    s1, s2 = tmp_path / "s1.json", tmp_path / "s2.json"
    for out in (s1, s2):
        assert run_cli("solve", "--repdata", fixture_path(name + ".json"),
                       "--cohomology", fixture_path(name + "_cohomology.json"),
                       "--out", str(out)).returncode == 0
    assert s1.read_bytes() == s2.read_bytes()

    if name in ("q8", "z4"):
        c1, c2 = tmp_path / "c1.json", tmp_path / "c2.json"
        for out in (c1, c2):
            assert run_cli("chow", "--presentation", str(s1),
                           "--out", str(out)).returncode == 0
        assert c1.read_bytes() == c2.read_bytes()


def test_budget_failure_is_structured(tmp_path):
    out = tmp_path / "doc.json"
    proc = run_cli("solve", "--repdata", fixture_path("g16_11.json"),
                   "--cohomology", fixture_path("g16_11_cohomology.json"),
                   "--budget", "50", "--out", str(out))
    assert proc.returncode == 2
    doc = json.loads(out.read_text())
    assert doc["status"] == "budget"
    assert "abandoned" in doc["detail"]


def test_frobenius_probe_flag(tmp_path):
    pres = tmp_path / "pres.json"
    run_cli("solve", "--repdata", fixture_path("q8.json"),
            "--cohomology", fixture_path("q8_cohomology.json"),
            "--out", str(pres))
    out = tmp_path / "chow.json"
    proc = run_cli("chow", "--presentation", str(pres),
                   "--probe-f-iso", "1", "--out", str(out))
    assert proc.returncode == 0
    doc = json.loads(out.read_text())["payload"]
    assert doc["frobenius_probe"] == {"n": 1, "holds": True}


def test_human_summary_on_stderr():
    proc = run_cli("solve", "--repdata", fixture_path("q8.json"),
                   "--cohomology", fixture_path("q8_cohomology.json"))
    assert proc.returncode == 0
    assert "solve: success" in proc.stderr


def test_chow_max_q_zero_exits_1(tmp_path):
    pres = tmp_path / "pres.json"
    run_cli("solve", "--repdata", fixture_path("z2cubed.json"),
            "--cohomology", fixture_path("z2cubed_cohomology.json"),
            "--out", str(pres))
    out = tmp_path / "chow.json"
    proc = run_cli("chow", "--presentation", str(pres), "--max-q", "0",
                   "--out", str(out))
    assert proc.returncode == 1
    assert json.loads(out.read_text())["status"] == "unstable-at-max-q"
