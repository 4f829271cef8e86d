import io
import json
import os
import subprocess
import sys

import pytest

from spectilt.cli import DslError, Session, parse_json, run_command
from spectilt.cli.main import run
from spectilt.cli.session import random_suite
from spectilt.polycore import QQ
from spectilt.ringspec import polynomial_ring

HEADER = "ring R = QQ[x,y];\nprime m = (x, y);\nmodule k = residue m;\nmodule Rx = quotient (x);\n"


def _session(text):
    s = Session()
    s.run_text(text, None, [])
    return s


def _error(text):
    with pytest.raises(DslError) as e:
        _session(text)
    return e.value


def _cli(tmp_path, text, *flags):
    path = tmp_path / "s.st"
    path.write_text(text)
    buf = io.BytesIO()
    code = run([str(path), *flags], out=buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("text, code, line, col", [
    ("ring R = QQ[x,y]\nprime p = (x);", "cli.syntax", 2, 1),
    ("ring R = QQ[x,y];\nmodule M = coker [[x, ]];", "cli.syntax", 2, 23),
    ("ring R = QQ[x,y];\nprime p = (x);\nprime p = (y);", "cli.duplicate_name", 3, 1),
    ("ring R = QQ[x,y];\nfoo p;", "cli.unknown_command", 2, 1),
    (HEADER + "pd k --bogus 1;", "cli.unknown_flag", 5, 1),
    (HEADER + "pd m;", "cli.kind_mismatch", 5, 1),
    (HEADER + "pd Q;", "cli.unknown_name", 5, 1),
    (HEADER + "pd k k;", "cli.arity", 5, 1),
])
def test_dsl_errors_locate_the_problem(text, code, line, col):
    e = _error(text)
    assert (e.code, e.line, e.col) == (code, line, col)
    assert f"line {line}, column {col}" in str(e)


def test_syntax_error_lists_expected_tokens():
    e = _error("ring R = QQ[x,y]\nprime p = (x);")
    assert e.expected == ["';'"]


def test_module_error_code_survives_the_dsl():
    e = _error("ring R = QQ[x,y];\nmodule M = coker [[x, y]] degrees [0];")
    assert e.code == "homalg.shape"
    assert "entry [0][1]" in str(e)


def test_run_command_api():
    s = _session(HEADER)
    rep = run_command(s, "pd k")
    assert rep.status == "ok" and rep.payload["pd"] == 2
    rep = run_command(s, "depth Rx")
    assert rep.payload["depth"] == 1


def test_exit_codes(tmp_path):
    assert _cli(tmp_path, HEADER + "pd k;")[0] == 0
    code, out = _cli(tmp_path, HEADER + "pd k k;", "--json")
    assert code == 2
    last = json.loads(out)["reports"][-1]
    assert last["status"] == "error"
    assert _cli(tmp_path, HEADER + "resolve k --length -1;")[0] == 3
    buf = io.BytesIO()
    assert run([str(tmp_path / "missing.st")], out=buf) == 2
    assert b"cli.io" in buf.getvalue()


def test_command_flag_replaces_file_commands(tmp_path):
    code, out = _cli(tmp_path, HEADER + "pd k;", "-c", "depth k", "-c", "dim Rx", "--json")
    assert code == 0
    reps = parse_json(out)
    assert [r.command for r in reps] == ["depth k", "dim Rx"]


def test_pd_cap_flag(tmp_path):
    text = "ring S = QQ[x,y] / (x^2);\nprime m = (x, y);\nmodule k = residue m;\npd k;"
    code, out = _cli(tmp_path, text, "--pd-cap", "3", "--json")
    assert code == 0
    assert parse_json(out)[-1].payload["pd"] == {"at_least": 3}


def test_stdin_session():
    proc = subprocess.run([sys.executable, "-m", "spectilt.cli.main", "-", "--json"],
                          input=(HEADER + "pd k;").encode(), capture_output=True, check=False)
    assert proc.returncode == 0
    assert parse_json(proc.stdout)[-1].payload["pd"] == 2


def test_random_suite_is_seeded(monkeypatch):
    R = polynomial_ring(QQ, "x,y,z", name="R")
    monkeypatch.setenv("SPECTILT_SEED", "7")
    a = [label for label, _ in random_suite(R, 6)]
    b = [label for label, _ in random_suite(R, 6)]
    monkeypatch.setenv("SPECTILT_SEED", "8")
    c = [label for label, _ in random_suite(R, 6)]
    assert a == b and len(set(a)) == 6
    assert a != c


def test_bad_seed(monkeypatch):
    from spectilt.errors import InputError

    monkeypatch.setenv("SPECTILT_SEED", "abc")
    with pytest.raises(InputError):
        random_suite(polynomial_ring(QQ, "x", name="R"), 1)


def test_text_output_echoes_commands(tmp_path):
    code, out = _cli(tmp_path, HEADER + "pd k;\nbetti k;")
    text = out.decode()
    assert "== pd k ==" in text and "== betti k ==" in text


def test_jobs_must_be_positive(tmp_path):
    assert _cli(tmp_path, HEADER, "--jobs", "0")[0] == 2


@pytest.mark.skipif(os.name != "posix", reason="console script path")
def test_module_entry_point_help():
    proc = subprocess.run([sys.executable, "-m", "spectilt.cli.main", "--help"], capture_output=True, check=False)
    assert proc.returncode == 0 and b"--pd-cap" in proc.stdout
