import json

import pytest

from theta_forms.cli import main
from theta_forms.serialize import cochain_from_json, gram_to_json
from theta_forms.theta import e8_gram


def test_build_writes_parseable_form(tmp_path):
    out = tmp_path / "f.json"
    rc = main(["build", "--form", "psi-cup", "--p", "2", "--q", "1",
               "--r", "2", "--s", "0", "--out", str(out)])
    assert rc == 0
    c = cochain_from_json(out.read_text())
    assert c.sig.p == 2 and c.sig.r == 2
    assert not c.form.is_zero()


def test_build_is_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["build", "--form", "km-nabla", "--p", "1", "--q", "1",
            "--r", "1", "--s", "1"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_suite_exit_zero(tmp_path, capsys):
    rc = main(["verify", "--suite", "closedness", "--p", "2", "--q", "1", "--r", "1"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["suites"][0]["suite"] == "closedness"


def test_verify_writes_report(tmp_path):
    out = tmp_path / "report.json"
    rc = main(["verify", "--suite", "restriction", "--out", str(out)])
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["passed"] is True


def test_theta_eisenstein(tmp_path, capsys):
    gram = tmp_path / "e8.json"
    gram.write_text(gram_to_json(e8_gram()))
    rc = main(["theta", "--gram", str(gram), "--nmax", "3", "--check", "eisenstein"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "240" in out and "6720" in out


def test_theta_table(tmp_path):
    gram = tmp_path / "a1.json"
    gram.write_text(json.dumps({"dim": 1, "gram": [["2"]]}))
    out = tmp_path / "table.json"
    rc = main(["theta", "--gram", str(gram), "--nmax", "2", "--out", str(out)])
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["rows"][1]["count"] == 2


def test_export_latex(tmp_path, capsys):
    form = tmp_path / "f.json"
    assert main(["build", "--form", "psi-q", "--p", "1", "--q", "1", "--r", "1",
                 "--out", str(form)]) == 0
    rc = main(["export", "--in", str(form), "--format", "latex"])
    assert rc == 0
    assert "\\overline{\\xi}_{1,1}" in capsys.readouterr().out


def test_calibrate_prints_report(capsys):
    rc = main(["calibrate", "--p", "1", "--q", "1", "--r", "1"])
    assert rc == 0
    assert "verified" in capsys.readouterr().out


def test_flag_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["build", "--form", "not-a-form"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_runtime_error_exit_one(tmp_path):
    rc = main(["theta", "--gram", str(tmp_path / "missing.json"), "--nmax", "2"])
    assert rc == 1


def test_thread_cap_env(monkeypatch):
    monkeypatch.setenv("THETA_FORMS_THREADS", "4")
    assert main(["calibrate", "--p", "1", "--q", "1", "--r", "1"]) == 0
    monkeypatch.setenv("THETA_FORMS_THREADS", "zero")
    with pytest.raises(ValueError):
        main(["calibrate", "--p", "1", "--q", "1", "--r", "1"])
